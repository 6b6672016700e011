#pragma once

#include <map>
#include <vector>

#include "gdiff/linalg.hpp"
#include "gdiff/rational.hpp"

namespace gdiff {

/// Finite-difference operator on functions over Z^r with N-periodic rational
/// coefficients: (Du)(x) = sum_o c_o(x mod N) u(x + o). Coefficient tables are
/// stored row-major over (Z/N)^r, first coordinate slowest.
struct StencilOperator {
    int rank = 0;
    long period = 1;
    std::map<std::vector<long>, std::vector<Rational>> stencil;  // offset -> table

    long cells() const;
    void validate() const;
};

/// u(x) = sum_nu a_nu(x mod N) x^nu with rational N-periodic tables.
struct PolyAnsatz {
    int rank = 0;
    long period = 1;
    std::map<std::vector<unsigned>, std::vector<Rational>> coeff;  // nu -> table

    int degree() const;
    bool is_zero() const;
    void prune();  // drop all-zero tables
    Rational eval(const std::vector<long>& x) const;
};

/// Exact application; output degree never exceeds input degree.
PolyAnsatz apply(const StencilOperator& D, const PolyAnsatz& u);

/// u(x + t) re-expanded as a PolyAnsatz (same period).
PolyAnsatz translate(const PolyAnsatz& u, const std::vector<long>& t);

/// The same operator presented with period 2N.
StencilOperator double_period(const StencilOperator& D);

struct KernelResult {
    int dim = 0;
    std::vector<PolyAnsatz> basis;  // reduced echelon parametrization, canonical
    long unknowns = 0;
    long equations = 0;
};

/// Exact basis of { u : Du = 0, deg u <= max_degree }: assembles the linear
/// system in the unknowns a_nu(j) ordered by (|nu|_1, nu lex, cell) and solves
/// it by exact rational elimination.
KernelResult polynomial_kernel(const StencilOperator& D, int max_degree);

/// Membership of u in the span of a computed kernel basis, decided exactly.
bool in_kernel_span(const KernelResult& kernel, const PolyAnsatz& u);

struct BoundReport {
    int n = 0;
    long s = 0;                // dim of the degree-0 kernel
    std::vector<long> dims;    // kernel dimension for each k = 0..n
    long bound = 0;            // s * C(n+r, r)
    long slack = 0;
    bool ok = false;           // dims monotone and within the bound
};

BoundReport check_bound(const StencilOperator& D, int n);

}  // namespace gdiff
