#pragma once

#include <vector>

#include "gdiff/gmodule.hpp"
#include "gdiff/rng.hpp"

namespace gdiff::testing {

inline std::vector<unsigned> random_exponent(Rng& rng, int rank, int total) {
    std::vector<unsigned> nu(static_cast<size_t>(rank), 0);
    for (int i = 0; i < total; ++i) ++nu[static_cast<size_t>(rng.uniform(0, rank - 1))];
    return nu;
}

inline GaussRat random_coeff(Rng& rng, bool allow_imag = true) {
    long p = rng.uniform(-4, 4);
    if (p == 0) p = 1;
    long q = rng.uniform(1, 3);
    Rational re(p, q);
    re.canonicalize();
    Rational im(0);
    if (allow_imag && rng.uniform(0, 2) == 0) {
        im = Rational(rng.uniform(-3, 3), rng.uniform(1, 2));
        im.canonicalize();
    }
    return {re, im};
}

/// Random canonical element with degree exactly `deg` (when deg >= 0) and at
/// most `max_terms` stored terms.
inline FloquetElement random_floquet(Rng& rng, int rank, int deg, int max_terms = 5) {
    while (true) {
        FloquetElement e(rank);
        int terms = static_cast<int>(rng.uniform(1, max_terms));
        for (int t = 0; t < terms; ++t) {
            std::vector<long> k(static_cast<size_t>(rank));
            for (auto& ki : k) ki = rng.uniform(-2, 2);
            int total = deg < 0 ? 0 : static_cast<int>(rng.uniform(0, deg));
            e.add_term(std::move(k), random_exponent(rng, rank, total), random_coeff(rng));
        }
        if (deg >= 0 && e.degree() != deg) {
            std::vector<long> k(static_cast<size_t>(rank));
            for (auto& ki : k) ki = rng.uniform(-2, 2);
            e.add_term(std::move(k), random_exponent(rng, rank, deg), random_coeff(rng));
        }
        if (deg < 0 || e.degree() == deg) return e;
    }
}

}  // namespace gdiff::testing
