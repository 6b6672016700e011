#pragma once

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gdiff/group.hpp"
#include "gdiff/rational.hpp"
#include "gdiff/rng.hpp"

namespace gdiff {

/// Key of one term e^{2 pi i k.x} * x^nu.
struct FourierKey {
    std::vector<long> k;        // Fourier index, length = rank
    std::vector<unsigned> nu;   // monomial exponent, length = rank

    bool operator==(const FourierKey&) const = default;
    bool operator<(const FourierKey& o) const {
        if (nu != o.nu) return nu < o.nu;
        return k < o.k;
    }
};

/// Exact element of the algebra spanned by e^{2 pi i k.x} x^nu over Q(i),
/// with the lattice Z^r acting by translation. The action is exact because
/// k.g is an integer for every lattice vector g, so the exponential factor is
/// fixed and only the monomial part shifts binomially.
///
/// Canonical form: no stored zero coefficients. The zero element has degree -1.
class FloquetElement {
public:
    FloquetElement() = default;
    explicit FloquetElement(int rank) : rank_(rank) {}

    static FloquetElement zero(int rank) { return FloquetElement(rank); }
    static FloquetElement constant(int rank, GaussRat c);
    /// c * x^nu
    static FloquetElement monomial(int rank, std::vector<unsigned> nu, GaussRat c = GaussRat(1));
    /// c * e^{2 pi i k.x}
    static FloquetElement harmonic(int rank, std::vector<long> k, GaussRat c = GaussRat(1));
    /// c * e^{2 pi i k.x} x^nu
    static FloquetElement term(int rank, std::vector<long> k, std::vector<unsigned> nu, GaussRat c);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    /// Max |nu|_1 over stored terms; -1 for the zero element.
    int degree() const;
    /// Exact invariance test: every stored exponent vanishes.
    bool is_invariant() const;
    const std::map<FourierKey, GaussRat>& terms() const { return terms_; }

    void add_term(std::vector<long> k, std::vector<unsigned> nu, const GaussRat& c);

    FloquetElement operator+(const FloquetElement& o) const;
    FloquetElement operator-(const FloquetElement& o) const;
    FloquetElement operator-() const;
    FloquetElement operator*(const FloquetElement& o) const;
    FloquetElement scaled(const GaussRat& c) const;

    /// Translation by a lattice vector: x -> x + g, expanded binomially.
    FloquetElement shifted(const std::vector<BigInt>& g) const;

    std::complex<double> eval(const std::vector<double>& x) const;

    bool operator==(const FloquetElement& o) const {
        return rank_ == o.rank_ && terms_ == o.terms_;
    }
    bool operator!=(const FloquetElement& o) const { return !(*this == o); }

    std::string str() const;

private:
    int rank_ = 0;
    std::map<FourierKey, GaussRat> terms_;
};

/// The lattice Z^r acting on the exact Floquet algebra. Exact arithmetic
/// throughout; every operation is a pure function of its arguments.
class FloquetModule {
public:
    using Element = FloquetElement;

    explicit FloquetModule(int rank)
        : rank_(rank), spec_(GroupSpec::free_abelian(rank)) {}

    int rank() const { return rank_; }
    const GroupSpec& group() const { return spec_; }

    Element act(const Element& a, const GroupElement& g) const;
    Element add(const Element& a, const Element& b) const { return check(a), check(b), a + b; }
    Element sub(const Element& a, const Element& b) const { return check(a), check(b), a - b; }
    Element neg(const Element& a) const { return -a; }
    Element zero() const { return Element::zero(rank_); }
    Element scale_int(const Element& a, long c) const { return a.scaled(GaussRat(c)); }
    Element scale(const Element& a, const GaussRat& c) const { return a.scaled(c); }
    Element mul(const Element& a, const Element& b) const { return check(a), check(b), a * b; }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }

private:
    void check(const Element& a) const;
    int rank_;
    GroupSpec spec_;
};

/// Black-box complex-valued function on R^r; the lattice Z^r acts by
/// translation. Deterministic evaluator, compared only by sampling.
struct NumericFunction {
    std::function<std::complex<double>(const std::vector<double>&)> f;

    std::complex<double> operator()(const std::vector<double>& x) const { return f(x); }
};

class NumericModule {
public:
    using Element = NumericFunction;

    explicit NumericModule(int rank)
        : rank_(rank), spec_(GroupSpec::free_abelian(rank)) {}

    int rank() const { return rank_; }
    const GroupSpec& group() const { return spec_; }

    Element act(const Element& a, const GroupElement& g) const;
    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element zero() const;
    Element scale_int(const Element& a, long c) const;
    Element mul(const Element& a, const Element& b) const;

    std::vector<double> sample_point(Rng& rng) const;
    double max_abs(const Element& a, Rng& rng, const SampleParams& p) const;
    bool is_zero(const Element& a, Rng& rng, const SampleParams& p) const {
        return max_abs(a, rng, p) < p.tol;
    }
    bool equal(const Element& a, const Element& b, Rng& rng, const SampleParams& p) const {
        return is_zero(sub(a, b), rng, p);
    }

private:
    int rank_;
    GroupSpec spec_;
};

/// Black-box Q(i)-valued function on a (possibly non-abelian) group, with the
/// right translation action (a^g)(h) = a(g*h). Values are exact; the function
/// itself is compared by sampling its (infinite) domain.
struct GroupFunction {
    std::function<GaussRat(const GroupElement&)> f;

    GaussRat operator()(const GroupElement& h) const { return f(h); }
};

class GroupFnModule {
public:
    using Element = GroupFunction;

    explicit GroupFnModule(GroupSpec spec) : spec_(std::move(spec)) { spec_.validate(); }

    const GroupSpec& group() const { return spec_; }

    Element act(const Element& a, const GroupElement& g) const;
    Element add(const Element& a, const Element& b) const;
    Element sub(const Element& a, const Element& b) const;
    Element neg(const Element& a) const;
    Element zero() const;
    Element scale_int(const Element& a, long c) const;

    bool is_zero(const Element& a, Rng& rng, const SampleParams& p) const;
    bool equal(const Element& a, const Element& b, Rng& rng, const SampleParams& p) const {
        return is_zero(sub(a, b), rng, p);
    }

private:
    GroupSpec spec_;
};

/// u(h) = sum_i weight_i * abelianize(h).free_part[i]; satisfies
/// u(g*h) = u(h) + u(g) exactly. Torsion weights must vanish (a homomorphism
/// to Q kills finite order); a nonzero one is an argument error.
GroupFunction additive_function(const GroupSpec& g, const std::vector<Rational>& free_weights,
                                const std::vector<Rational>& torsion_weights = {});

/// Invariance certificate. `exact` distinguishes a proof (Floquet term
/// inspection plus generator sweep) from a sampled verdict.
struct InvarianceCert {
    bool invariant = false;
    bool exact = false;
    std::optional<GroupElement> witness;  // g with a^g != a when not invariant
};

InvarianceCert is_invariant(const FloquetModule& m, const FloquetElement& a);
InvarianceCert is_invariant(const NumericModule& m, const NumericFunction& a, Rng& rng,
                            const SampleParams& p);
InvarianceCert is_invariant(const GroupFnModule& m, const GroupFunction& a, Rng& rng,
                            const SampleParams& p);

}  // namespace gdiff
