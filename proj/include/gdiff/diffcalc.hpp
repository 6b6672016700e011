#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdiff/gmodule.hpp"
#include "gdiff/group.hpp"
#include "gdiff/rng.hpp"

namespace gdiff {

/// Normalized n-cochain: lazily evaluated map from n-tuples of group elements
/// to module elements, vanishing whenever an argument is the identity. The
/// constructors below produce normalized evaluators by construction.
template <class M>
struct Cochain {
    using Element = typename M::Element;

    int arity = 0;
    M module;
    std::function<Element(const std::vector<GroupElement>&)> eval;

    Element operator()(const std::vector<GroupElement>& tuple) const {
        if (static_cast<int>(tuple.size()) != arity)
            throw std::invalid_argument("cochain applied to a tuple of the wrong arity");
        return eval(tuple);
    }
};

template <class M>
Cochain<M> constant_cochain(const M& m, const typename M::Element& a) {
    return {0, m, [a](const std::vector<GroupElement>&) { return a; }};
}

template <class M>
Cochain<M> zero_cochain(const M& m, int arity) {
    auto z = m.zero();
    return {arity, m, [z](const std::vector<GroupElement>&) { return z; }};
}

/// One difference step: (d c)(g_1,...,g_n) = [c(g_1,...,g_{n-1})]^{g_n} - c(g_1,...,g_{n-1}).
template <class M>
Cochain<M> d_step(const Cochain<M>& c) {
    int n = c.arity + 1;
    M m = c.module;
    auto inner = c.eval;
    return {n, m, [m, inner](const std::vector<GroupElement>& tuple) {
                std::vector<GroupElement> head(tuple.begin(), tuple.end() - 1);
                auto v = inner(head);
                return m.sub(m.act(v, tuple.back()), v);
            }};
}

/// D^n in its recursive form: D^0 = id, D^n = d(D^{n-1}).
template <class M>
Cochain<M> iterated_difference(const M& m, const typename M::Element& a, int n) {
    if (n < 0) throw std::invalid_argument("difference order must be nonnegative");
    Cochain<M> c = constant_cochain(m, a);
    for (int i = 0; i < n; ++i) c = d_step(c);
    return c;
}

namespace detail {

/// Signed multiplicities of the ordered products pi over all 2^n omission
/// subsets. Grouping by the resulting product collapses the sum before any
/// module arithmetic happens; tuples with an identity slot cancel completely.
inline std::map<GroupElement, long> product_weights(const GroupSpec& g,
                                                    const std::vector<GroupElement>& tuple) {
    std::map<GroupElement, long> weights;
    const size_t n = tuple.size();
    std::function<void(size_t, const GroupElement&, long)> walk =
        [&](size_t pos, const GroupElement& prod, long sign) {
            if (pos == n) {
                weights[prod] += sign;
                return;
            }
            walk(pos + 1, multiply(g, prod, tuple[pos]), sign);
            walk(pos + 1, prod, -sign);
        };
    walk(0, identity(g), 1);
    return weights;
}

}  // namespace detail

/// Closed inclusion-exclusion form of [D^n a](g_1,...,g_n):
///   a^{g_1...g_n} + sum_{s=1}^{n-1} (-1)^s sum_{i_1<...<i_s} a^{pi_{i_1..i_s}} + (-1)^n a.
template <class M>
typename M::Element difference_closed(const M& m, const typename M::Element& a,
                                      const std::vector<GroupElement>& tuple) {
    if (tuple.empty()) return a;
    auto weights = detail::product_weights(m.group(), tuple);
    auto r = m.zero();
    for (const auto& [pi, w] : weights) {
        if (w == 0) continue;
        r = m.add(r, m.scale_int(m.act(a, pi), w));
    }
    return r;
}

/// [Delta^n a](g_1,...,g_n) = [D^n a](g_1,...,g_n) - a^{g_1...g_n}.
template <class M>
typename M::Element delta_part(const M& m, const typename M::Element& a,
                               const std::vector<GroupElement>& tuple) {
    if (tuple.empty()) throw std::invalid_argument("delta_part needs arity >= 1");
    auto weights = detail::product_weights(m.group(), tuple);
    GroupElement full = pi_product(m.group(), {}, tuple);
    weights[full] -= 1;
    auto r = m.zero();
    for (const auto& [pi, w] : weights) {
        if (w == 0) continue;
        r = m.add(r, m.scale_int(m.act(a, pi), w));
    }
    return r;
}

/// Coboundary for the trivial left action:
///   [delta c](g_1,...,g_{n+1}) = c(g_2,...,g_{n+1})
///     + sum_{i=1}^{n} (-1)^i c(g_1,...,g_i g_{i+1},...,g_{n+1})
///     + (-1)^{n+1} c(g_1,...,g_n).
/// delta^0 = 0.
template <class M>
Cochain<M> coboundary(const Cochain<M>& c) {
    const int n = c.arity;
    M m = c.module;
    if (n == 0) return zero_cochain(m, 1);
    auto inner = c.eval;
    GroupSpec spec = m.group();
    return {n + 1, m, [m, inner, n, spec](const std::vector<GroupElement>& tuple) {
                std::vector<GroupElement> sub(tuple.begin() + 1, tuple.end());
                auto acc = inner(sub);
                long sign = -1;
                for (int i = 0; i < n; ++i) {
                    sub.assign(tuple.begin(), tuple.end());
                    sub[static_cast<size_t>(i)] =
                        multiply(spec, tuple[static_cast<size_t>(i)], tuple[static_cast<size_t>(i) + 1]);
                    sub.erase(sub.begin() + i + 1);
                    acc = m.add(acc, m.scale_int(inner(sub), sign));
                    sign = -sign;
                }
                sub.assign(tuple.begin(), tuple.end() - 1);
                acc = m.add(acc, m.scale_int(inner(sub), sign));
                return acc;
            }};
}

/// All vectors in Z_+^dims with coordinate sum <= total, ordered by increasing
/// sum, lexicographic within a sum. Includes the zero vector.
std::vector<std::vector<long>> simplex_points(int dims, int total);

/// Membership certificate for the polynomial-like filtration.
struct PolyCert {
    bool member = false;
    bool exact = false;
    std::optional<std::vector<GroupElement>> witness;  // tuple where D^{n+1} a != 0
    long checks = 0;                                   // leaf certifications / sampled tuples
};

struct MembershipError : std::runtime_error {
    MembershipError(int level_, std::vector<GroupElement> witness_, const std::string& what_)
        : std::runtime_error(what_), level(level_), witness(std::move(witness_)) {}
    int level;
    std::vector<GroupElement> witness;
};

/// Searches for a tuple where [D^order a] is nonzero; nullopt is a proof that
/// D^order a = 0. Works slice by slice: D^order a vanishes iff for every g in
/// the rank-r simplex of total height deg(a), the element a^g - a (one degree
/// lower) satisfies D^{order-1}(a^g - a) = 0; the base case is invariance
/// under the generators. Each slice set is unisolvent for the degree of the
/// value polynomials, so the recursion certifies the identity exactly.
std::optional<std::vector<GroupElement>> find_difference_witness(const FloquetModule& m,
                                                                 const FloquetElement& a,
                                                                 int order, long* checks = nullptr);

/// Exact decision for the lattice Floquet algebra: member iff degree(a) <= n,
/// independently certified (or refuted with a witness) through the difference
/// operator itself.
PolyCert is_polynomial_like(const FloquetModule& m, const FloquetElement& a, int n);

/// Sampled decision for black-box module kinds.
template <class M>
PolyCert is_polynomial_like_sampled(const M& m, const typename M::Element& a, int n, Rng& rng,
                                    const SampleParams& p) {
    PolyCert cert;
    cert.exact = false;
    for (int i = 0; i < p.n_rand; ++i) {
        auto tuple = random_tuple(m.group(), rng, n + 1, p.radius);
        ++cert.checks;
        auto v = difference_closed(m, a, tuple);
        if (!m.is_zero(v, rng, p)) {
            cert.member = false;
            cert.witness = std::move(tuple);
            return cert;
        }
    }
    cert.member = true;
    return cert;
}

/// Outcome of one identity check; `detail` carries the first violation.
struct CheckReport {
    std::string name;
    bool ok = true;
    std::string detail;
};

/// D^1(ab)(g) = a^g * [D^1 b](g) + [D^1 a](g) * b, for each supplied g.
template <class M, class Eq>
CheckReport leibniz_check(const M& m, const typename M::Element& a, const typename M::Element& b,
                          const std::vector<GroupElement>& gs, Eq eq) {
    CheckReport rep{"leibniz", true, ""};
    for (const GroupElement& g : gs) {
        std::vector<GroupElement> t{g};
        auto lhs = difference_closed(m, m.mul(a, b), t);
        auto rhs = m.add(m.mul(m.act(a, g), difference_closed(m, b, t)),
                         m.mul(difference_closed(m, a, t), b));
        if (!eq(lhs, rhs)) {
            rep.ok = false;
            rep.detail = "violated at g = " + to_string(g);
            break;
        }
    }
    return rep;
}

/// Certifies D^{m_ord} a = 0, D^{n_ord} b = 0 and then D^{m_ord+n_ord-1}(ab) = 0,
/// all through the exact zero certificate.
CheckReport ring_closure_check(const FloquetModule& m, const FloquetElement& a,
                               const FloquetElement& b, int m_ord, int n_ord);

/// D^n(ab) = a * D^n b for invariant a, on the supplied tuples.
template <class M, class Eq>
CheckReport invariant_linearity_check(const M& m, const typename M::Element& a_inv,
                                      const typename M::Element& b,
                                      const std::vector<std::vector<GroupElement>>& tuples, Eq eq) {
    CheckReport rep{"invariant_linearity", true, ""};
    for (const auto& t : tuples) {
        auto lhs = difference_closed(m, m.mul(a_inv, b), t);
        auto rhs = m.mul(a_inv, difference_closed(m, b, t));
        if (!eq(lhs, rhs)) {
            rep.ok = false;
            rep.detail = "violated at " + to_string(t);
            break;
        }
    }
    return rep;
}

/// [D^{n+1} a](g_1,...,g_{n+1}) = [D^n(a^{g_1})](g_2,...) - [D^n a](g_2,...).
template <class M, class Eq>
CheckReport recursion_identity_check(const M& m, const typename M::Element& a, int n,
                                     const std::vector<std::vector<GroupElement>>& tuples, Eq eq) {
    CheckReport rep{"recursion_identity", true, ""};
    for (const auto& t : tuples) {
        if (static_cast<int>(t.size()) != n + 1)
            throw std::invalid_argument("recursion_identity_check: tuples must have size n+1");
        auto lhs = difference_closed(m, a, t);
        std::vector<GroupElement> tail(t.begin() + 1, t.end());
        auto rhs = m.sub(difference_closed(m, m.act(a, t.front()), tail),
                         difference_closed(m, a, tail));
        if (!eq(lhs, rhs)) {
            rep.ok = false;
            rep.detail = "violated at " + to_string(t);
            break;
        }
    }
    return rep;
}

/// delta^n D^n = -D^{n+1} for odd n, 0 for even n, on the supplied (n+1)-tuples.
template <class M, class Eq>
CheckReport delta_relation_check(const M& m, const typename M::Element& a, int n,
                                 const std::vector<std::vector<GroupElement>>& tuples, Eq eq) {
    CheckReport rep{"delta_relation_n" + std::to_string(n), true, ""};
    auto dn = iterated_difference(m, a, n);
    auto delta_dn = coboundary(dn);
    for (const auto& t : tuples) {
        auto lhs = delta_dn(t);
        auto rhs = (n % 2 == 1) ? m.scale_int(difference_closed(m, a, t), -1) : m.zero();
        if (!eq(lhs, rhs)) {
            rep.ok = false;
            rep.detail = "violated at " + to_string(t);
            break;
        }
    }
    return rep;
}

/// delta(delta c) = 0 on the supplied (arity+2)-tuples.
template <class M, class Eq>
CheckReport delta_delta_check(const Cochain<M>& c,
                              const std::vector<std::vector<GroupElement>>& tuples, Eq eq) {
    CheckReport rep{"delta_delta", true, ""};
    auto dd = coboundary(coboundary(c));
    for (const auto& t : tuples) {
        if (!eq(dd(t), c.module.zero())) {
            rep.ok = false;
            rep.detail = "violated at " + to_string(t);
            break;
        }
    }
    return rep;
}

/// [D^n a](..., e, ...) = 0 for every supplied tuple position.
template <class M, class Eq>
CheckReport normalization_check(const M& m, const typename M::Element& a,
                                const std::vector<std::vector<GroupElement>>& tuples, Eq eq) {
    CheckReport rep{"normalization", true, ""};
    GroupElement e = identity(m.group());
    for (const auto& t : tuples) {
        for (size_t slot = 0; slot < t.size(); ++slot) {
            std::vector<GroupElement> withe = t;
            withe[slot] = e;
            if (!eq(difference_closed(m, a, withe), m.zero())) {
                rep.ok = false;
                rep.detail = "violated at " + to_string(withe);
                return rep;
            }
        }
    }
    return rep;
}

/// Observed symmetry of [D^k a] under argument permutations. A diagnostic,
/// not an assertion: reports the status and a counterexample when asymmetric.
struct SymmetryReport {
    int arity = 0;
    bool symmetric = true;
    std::string counterexample;
};

template <class M, class Eq>
SymmetryReport symmetry_report(const M& m, const typename M::Element& a, int k,
                               const std::vector<std::vector<GroupElement>>& tuples, Eq eq) {
    SymmetryReport rep;
    rep.arity = k;
    for (const auto& t : tuples) {
        if (static_cast<int>(t.size()) != k)
            throw std::invalid_argument("symmetry_report: tuples must have size k");
        auto base = difference_closed(m, a, t);
        std::vector<size_t> perm(t.size());
        std::iota(perm.begin(), perm.end(), 0u);
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<GroupElement> pt(t.size());
            for (size_t i = 0; i < t.size(); ++i) pt[i] = t[perm[i]];
            if (!eq(difference_closed(m, a, pt), base)) {
                rep.symmetric = false;
                rep.counterexample = to_string(t) + " vs " + to_string(pt);
                return rep;
            }
        }
    }
    return rep;
}

}  // namespace gdiff
