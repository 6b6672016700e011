#include "gdiff/diffcalc.hpp"

namespace gdiff {

std::vector<std::vector<long>> simplex_points(int dims, int total) {
    std::vector<std::vector<long>> pts;
    if (dims <= 0) {
        pts.push_back({});
        return pts;
    }
    std::vector<long> cur(static_cast<size_t>(dims), 0);
    // grouped by total so the search visits small tuples first
    for (long t = 0; t <= total; ++t) {
        std::function<void(int, long)> fill_exact = [&](int pos, long left) {
            if (pos == dims - 1) {
                cur[static_cast<size_t>(pos)] = left;
                pts.push_back(cur);
                cur[static_cast<size_t>(pos)] = 0;
                return;
            }
            for (long v = 0; v <= left; ++v) {
                cur[static_cast<size_t>(pos)] = v;
                fill_exact(pos + 1, left - v);
            }
            cur[static_cast<size_t>(pos)] = 0;
        };
        fill_exact(0, t);
    }
    return pts;
}

std::optional<std::vector<GroupElement>> find_difference_witness(const FloquetModule& m,
                                                                 const FloquetElement& a,
                                                                 int order, long* checks) {
    if (order < 0) throw std::invalid_argument("difference order must be nonnegative");
    if (checks) ++*checks;
    if (order == 0) {
        if (a.is_zero()) return std::nullopt;
        return std::vector<GroupElement>{};
    }
    if (order == 1) {
        // D^1 a = 0 iff a is fixed by every generator of the lattice
        for (const GroupElement& g : generators(m.group())) {
            if (checks) ++*checks;
            if (m.act(a, g) != a) return std::vector<GroupElement>{g};
        }
        return std::nullopt;
    }
    int d = a.degree();
    if (d <= 0) return std::nullopt;  // constant or zero: every D^k (k >= 1) kills it
    for (const auto& coords : simplex_points(m.rank(), d)) {
        bool zero = std::all_of(coords.begin(), coords.end(), [](long v) { return v == 0; });
        if (zero) continue;
        GroupElement g = make_element(m.group(), coords);
        FloquetElement b = m.sub(m.act(a, g), a);  // degree <= d - 1
        if (auto w = find_difference_witness(m, b, order - 1, checks)) {
            w->insert(w->begin(), std::move(g));
            return w;
        }
    }
    return std::nullopt;
}

PolyCert is_polynomial_like(const FloquetModule& m, const FloquetElement& a, int n) {
    if (n < 0) throw std::invalid_argument("is_polynomial_like: n must be nonnegative");
    PolyCert cert;
    cert.exact = true;
    bool by_degree = a.degree() <= n;
    auto witness = find_difference_witness(m, a, n + 1, &cert.checks);
    if (by_degree == witness.has_value())
        throw std::logic_error("degree test and difference certificate disagree");
    cert.member = by_degree;
    if (witness) cert.witness = std::move(*witness);
    return cert;
}

CheckReport ring_closure_check(const FloquetModule& m, const FloquetElement& a,
                               const FloquetElement& b, int m_ord, int n_ord) {
    CheckReport rep{"ring_closure", true, ""};
    if (m_ord + n_ord < 1) throw std::invalid_argument("ring_closure_check: m + n must be >= 1");
    if (auto w = find_difference_witness(m, a, m_ord)) {
        rep.ok = false;
        rep.detail = "left factor is not killed by D^" + std::to_string(m_ord) + " at " + to_string(*w);
        return rep;
    }
    if (auto w = find_difference_witness(m, b, n_ord)) {
        rep.ok = false;
        rep.detail = "right factor is not killed by D^" + std::to_string(n_ord) + " at " + to_string(*w);
        return rep;
    }
    if (auto w = find_difference_witness(m, m.mul(a, b), m_ord + n_ord - 1)) {
        rep.ok = false;
        rep.detail = "product escapes D^" + std::to_string(m_ord + n_ord - 1) + " at " + to_string(*w);
        return rep;
    }
    return rep;
}

}  // namespace gdiff
