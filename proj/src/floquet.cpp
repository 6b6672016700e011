#include "gdiff/floquet.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

namespace gdiff {

namespace {

// arrangements of the multiset {j repeated nu_j times}, e.g. (1,1) -> {(0,1),(1,0)}
std::vector<std::vector<int>> arrangements(const std::vector<unsigned>& nu) {
    std::vector<int> seq;
    for (size_t j = 0; j < nu.size(); ++j)
        for (unsigned c = 0; c < nu[j]; ++c) seq.push_back(static_cast<int>(j));
    std::vector<std::vector<int>> all;
    do {
        all.push_back(seq);
    } while (std::next_permutation(seq.begin(), seq.end()));
    return all;
}

BigInt nu_factorial(const std::vector<unsigned>& nu) {
    BigInt f(1);
    for (unsigned e : nu) f *= factorial(e);
    return f;
}

}  // namespace

BigInt monomial_difference(const std::vector<unsigned>& nu,
                           const std::vector<std::vector<BigInt>>& tuple) {
    unsigned total = 0;
    for (unsigned e : nu) total += e;
    if (tuple.size() != total)
        throw std::invalid_argument("monomial_difference: tuple length must equal |nu|_1");
    for (const auto& g : tuple)
        if (g.size() != nu.size())
            throw std::invalid_argument("monomial_difference: coordinate length mismatch");
    BigInt sum(0);
    for (const auto& arr : arrangements(nu)) {
        BigInt prod(1);
        for (size_t t = 0; t < arr.size() && prod != 0; ++t)
            prod *= tuple[t][static_cast<size_t>(arr[t])];
        sum += prod;
    }
    return nu_factorial(nu) * sum;
}

BigInt monomial_difference(const GroupSpec& g, const std::vector<unsigned>& nu,
                           const std::vector<GroupElement>& tuple) {
    std::vector<std::vector<BigInt>> coords;
    coords.reserve(tuple.size());
    for (const auto& el : tuple) coords.push_back(abelianize(g, el).free_part);
    return monomial_difference(nu, coords);
}

std::vector<std::vector<unsigned>> exponents_of_degree(int rank, int total) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(static_cast<size_t>(rank), 0);
    std::function<void(int, int)> fill = [&](int pos, int left) {
        if (pos == rank - 1) {
            cur[static_cast<size_t>(pos)] = static_cast<unsigned>(left);
            out.push_back(cur);
            cur[static_cast<size_t>(pos)] = 0;
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<size_t>(pos)] = static_cast<unsigned>(v);
            fill(pos + 1, left - v);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    if (rank <= 0) return out;
    fill(0, total);
    return out;
}

std::map<std::vector<unsigned>, FloquetElement> leading_coefficients(const FloquetModule& m,
                                                                     const FloquetElement& p,
                                                                     int n) {
    PolyCert cert = is_polynomial_like(m, p, n);
    if (!cert.member)
        throw MembershipError(n, *cert.witness,
                              "leading_coefficients: D^" + std::to_string(n + 1) +
                                  " is nonzero at " + to_string(*cert.witness));
    std::vector<GroupElement> gens = generators(m.group());
    std::map<std::vector<unsigned>, FloquetElement> out;
    for (const auto& nu : exponents_of_degree(m.rank(), n)) {
        FloquetElement value = m.zero();
        bool first = true;
        for (const auto& arr : arrangements(nu)) {
            std::vector<GroupElement> t;
            t.reserve(arr.size());
            for (int j : arr) t.push_back(gens[static_cast<size_t>(j)]);
            FloquetElement v = difference_closed(m, p, t);
            if (first) {
                value = v;
                first = false;
            } else if (v != value) {
                throw std::logic_error("leading coefficient depends on the arrangement at nu");
            }
        }
        GaussRat inv_fact{Rational(1) / Rational(nu_factorial(nu))};
        FloquetElement coeff = value.scaled(inv_fact);
        if (coeff.is_zero()) continue;
        if (!coeff.is_invariant())
            throw std::logic_error("leading coefficient is not invariant");
        out.emplace(nu, std::move(coeff));
    }
    return out;
}

FloquetDecomposition decompose(const FloquetModule& m, const FloquetElement& p, int n) {
    FloquetDecomposition d;
    d.rank = m.rank();
    PolyCert cert = is_polynomial_like(m, p, n);
    if (!cert.member)
        throw MembershipError(n, *cert.witness,
                              "decompose: D^" + std::to_string(n + 1) + " is nonzero at " +
                                  to_string(*cert.witness));
    FloquetElement cur = p;
    for (int k = n; k >= 1; --k) {
        if (cur.degree() > k) {
            // unreachable with exact arithmetic; report like any membership failure
            PolyCert c2 = is_polynomial_like(m, cur, k);
            throw MembershipError(k, c2.witness.value_or(std::vector<GroupElement>{}),
                                  "decompose: remainder escapes order " + std::to_string(k));
        }
        for (auto& [nu, a] : leading_coefficients(m, cur, k)) {
            cur = m.sub(cur, m.mul(a, FloquetElement::monomial(m.rank(), nu)));
            d.coeff.emplace(nu, std::move(a));
        }
    }
    if (!cur.is_zero()) d.coeff.emplace(std::vector<unsigned>(static_cast<size_t>(m.rank()), 0), cur);
    return d;
}

FloquetElement reconstruct(const FloquetModule& m, const FloquetDecomposition& d) {
    FloquetElement total = m.zero();
    for (const auto& [nu, a] : d.coeff)
        total = m.add(total, m.mul(a, FloquetElement::monomial(m.rank(), nu)));
    return total;
}

NumericDecomposition decompose(const NumericModule& m, const NumericFunction& p, int n, Rng& rng,
                               const SampleParams& params) {
    PolyCert cert = is_polynomial_like_sampled(m, p, n, rng, params);
    if (!cert.member)
        throw MembershipError(n, *cert.witness,
                              "decompose: sampled membership fails at order " + std::to_string(n) +
                                  ", witness " + to_string(*cert.witness));
    NumericDecomposition d;
    d.rank = m.rank();
    std::vector<GroupElement> gens = generators(m.group());
    NumericFunction cur = p;
    for (int k = n; k >= 1; --k) {
        for (const auto& nu : exponents_of_degree(m.rank(), k)) {
            std::vector<int> arr;
            for (size_t j = 0; j < nu.size(); ++j)
                for (unsigned c = 0; c < nu[j]; ++c) arr.push_back(static_cast<int>(j));
            std::vector<GroupElement> t;
            for (int j : arr) t.push_back(gens[static_cast<size_t>(j)]);
            double inv_fact = 1.0 / nu_factorial(nu).get_d();
            NumericFunction dk = difference_closed(m, cur, t);
            auto f = dk.f;
            NumericFunction a{[f, inv_fact](const std::vector<double>& x) { return inv_fact * f(x); }};
            auto af = a.f;
            std::vector<unsigned> nu_copy = nu;
            NumericFunction mono_term{[af, nu_copy](const std::vector<double>& x) {
                std::complex<double> v = af(x);
                for (size_t j = 0; j < nu_copy.size(); ++j)
                    for (unsigned c = 0; c < nu_copy[j]; ++c) v *= x[j];
                return v;
            }};
            cur = m.sub(cur, mono_term);
            d.coeff.emplace(nu, std::move(a));
        }
    }
    d.coeff.emplace(std::vector<unsigned>(static_cast<size_t>(m.rank()), 0), cur);
    return d;
}

std::map<std::vector<long>, std::complex<double>> fourier_fit(const NumericModule& m,
                                                              const NumericFunction& f,
                                                              long cutoff) {
    if (cutoff < 0) throw std::invalid_argument("fourier_fit: cutoff must be nonnegative");
    const int r = m.rank();
    const long grid = 2 * cutoff + 2;  // above Nyquist for the kept modes
    const double tau = 2.0 * std::numbers::pi;

    // sample once over the grid
    std::vector<std::complex<double>> samples;
    std::vector<long> idx(static_cast<size_t>(r), 0);
    std::function<void(int)> sample = [&](int pos) {
        if (pos == r) {
            std::vector<double> x(static_cast<size_t>(r));
            for (int j = 0; j < r; ++j)
                x[static_cast<size_t>(j)] = static_cast<double>(idx[static_cast<size_t>(j)]) / grid;
            samples.push_back(f(x));
            return;
        }
        for (long v = 0; v < grid; ++v) {
            idx[static_cast<size_t>(pos)] = v;
            sample(pos + 1);
        }
    };
    sample(0);

    std::map<std::vector<long>, std::complex<double>> out;
    std::vector<long> k(static_cast<size_t>(r), -cutoff);
    double norm = 1.0;
    for (int j = 0; j < r; ++j) norm /= static_cast<double>(grid);
    while (true) {
        std::complex<double> acc{0.0, 0.0};
        size_t at = 0;
        std::function<void(int, double)> accumulate = [&](int pos, double phase) {
            if (pos == r) {
                acc += samples[at++] * std::polar(1.0, -tau * phase);
                return;
            }
            for (long v = 0; v < grid; ++v)
                accumulate(pos + 1, phase + static_cast<double>(k[static_cast<size_t>(pos)] * v) / grid);
        };
        accumulate(0, 0.0);
        out[k] = norm * acc;
        int j = 0;
        for (; j < r; ++j) {
            if (++k[static_cast<size_t>(j)] <= cutoff) break;
            k[static_cast<size_t>(j)] = -cutoff;
        }
        if (j == r) break;
    }
    return out;
}

NumericFunction fourier_series(const NumericModule& m,
                               const std::map<std::vector<long>, std::complex<double>>& coeffs) {
    const int r = m.rank();
    const double tau = 2.0 * std::numbers::pi;
    auto table = coeffs;
    return {[table, r, tau](const std::vector<double>& x) {
        std::complex<double> acc{0.0, 0.0};
        for (const auto& [k, c] : table) {
            double phase = 0.0;
            for (int j = 0; j < r; ++j) phase += static_cast<double>(k[static_cast<size_t>(j)]) * x[static_cast<size_t>(j)];
            acc += c * std::polar(1.0, tau * phase);
        }
        return acc;
    }};
}

NumericFunction reconstruct(const NumericModule& m, const NumericDecomposition& d) {
    NumericFunction total = m.zero();
    for (const auto& [nu, a] : d.coeff) {
        auto af = a.f;
        std::vector<unsigned> nu_copy = nu;
        NumericFunction term{[af, nu_copy](const std::vector<double>& x) {
            std::complex<double> v = af(x);
            for (size_t j = 0; j < nu_copy.size(); ++j)
                for (unsigned c = 0; c < nu_copy[j]; ++c) v *= x[j];
            return v;
        }};
        total = m.add(total, term);
    }
    return total;
}

}  // namespace gdiff
