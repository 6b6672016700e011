#pragma once

#include <map>
#include <vector>

#include "gdiff/diffcalc.hpp"
#include "gdiff/gmodule.hpp"

namespace gdiff {

/// [D^n (x^nu)](g_1,...,g_n) for |nu|_1 = n: the sum over all permutations of
/// the coordinate picks, equivalently nu! times the sum over arrangements of
/// the multiset {j repeated nu_j times}. Exact integer value.
BigInt monomial_difference(const std::vector<unsigned>& nu,
                           const std::vector<std::vector<BigInt>>& tuple);
BigInt monomial_difference(const GroupSpec& g, const std::vector<unsigned>& nu,
                           const std::vector<GroupElement>& tuple);

/// All exponent vectors nu in Z_+^r with |nu|_1 = total (deterministic order).
std::vector<std::vector<unsigned>> exponents_of_degree(int rank, int total);

/// Exact decomposition p = sum_nu a_nu(x) x^nu with invariant coefficients.
struct FloquetDecomposition {
    int rank = 0;
    std::map<std::vector<unsigned>, FloquetElement> coeff;  // canonical: no zero coefficients
};

/// Top-layer coefficients a_nu = (1/nu!) [D^n p](e_{i_1},...,e_{i_n}) for
/// |nu|_1 = n. Verifies arrangement independence and invariance (both exact);
/// rejects non-members with their witness.
std::map<std::vector<unsigned>, FloquetElement> leading_coefficients(const FloquetModule& m,
                                                                     const FloquetElement& p,
                                                                     int n);

/// Peels the top degree with leading_coefficients, subtracts, recurses down to
/// the invariant remainder. reconstruct(decompose(p, n)) == p exactly.
FloquetDecomposition decompose(const FloquetModule& m, const FloquetElement& p, int n);

FloquetElement reconstruct(const FloquetModule& m, const FloquetDecomposition& d);

/// Black-box analog: coefficients are closures built from shifted evaluations
/// of p; round-trips within sampling tolerance.
struct NumericDecomposition {
    int rank = 0;
    std::map<std::vector<unsigned>, NumericFunction> coeff;
};

NumericDecomposition decompose(const NumericModule& m, const NumericFunction& p, int n, Rng& rng,
                               const SampleParams& params);

NumericFunction reconstruct(const NumericModule& m, const NumericDecomposition& d);

/// Truncated Fourier fit of a 1-periodic black-box function: coefficients for
/// all |k|_inf <= cutoff, sampled on a uniform grid fine enough to separate
/// the kept modes. Export helper for sampled decomposition coefficients.
std::map<std::vector<long>, std::complex<double>> fourier_fit(const NumericModule& m,
                                                              const NumericFunction& f,
                                                              long cutoff);

/// Evaluator for a fitted coefficient table.
NumericFunction fourier_series(const NumericModule& m,
                               const std::map<std::vector<long>, std::complex<double>>& coeffs);

}  // namespace gdiff
