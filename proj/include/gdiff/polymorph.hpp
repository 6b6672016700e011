#pragma once

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gdiff/diffcalc.hpp"
#include "gdiff/gmodule.hpp"
#include "gdiff/group.hpp"
#include "gdiff/linalg.hpp"
#include "gdiff/rational.hpp"

namespace gdiff {

/// Element of an abstract coefficient space F^s (exact rationals).
struct ScalarVec {
    std::vector<Rational> v;

    bool operator==(const ScalarVec&) const = default;
    bool is_zero() const {
        for (const auto& q : v)
            if (q != 0) return false;
        return true;
    }
};

/// Minimal value-space operations a polymorphism tensor entry must support.
template <class B>
struct BOps;

template <>
struct BOps<GaussRat> {
    static GaussRat zero(const GaussRat&) { return GaussRat(0); }
    static GaussRat add(const GaussRat& a, const GaussRat& b) { return a + b; }
    static GaussRat scale(const GaussRat& a, const BigInt& c) { return c * a; }
    static bool is_zero(const GaussRat& a) { return a.is_zero(); }
};

template <>
struct BOps<ScalarVec> {
    static ScalarVec zero(const ScalarVec& like) {
        return {std::vector<Rational>(like.v.size(), Rational(0))};
    }
    static ScalarVec add(const ScalarVec& a, const ScalarVec& b) {
        ScalarVec r = a;
        for (size_t i = 0; i < r.v.size(); ++i) r.v[i] += b.v[i];
        return r;
    }
    static ScalarVec scale(const ScalarVec& a, const BigInt& c) {
        ScalarVec r = a;
        Rational q(c);
        for (auto& x : r.v) x *= q;
        return r;
    }
    static bool is_zero(const ScalarVec& a) { return a.is_zero(); }
};

template <>
struct BOps<FloquetElement> {
    static FloquetElement zero(const FloquetElement& like) {
        return FloquetElement::zero(like.rank());
    }
    static FloquetElement add(const FloquetElement& a, const FloquetElement& b) { return a + b; }
    static FloquetElement scale(const FloquetElement& a, const BigInt& c) {
        return a.scaled(GaussRat(Rational(c)));
    }
    static bool is_zero(const FloquetElement& a) { return a.is_zero(); }
};

/// B-valued n-morphism of G, stored as the dense tensor of its values on
/// tuples of free generators. Evaluation factors through the abelianization:
///   L(g_1,...,g_n) = sum_{i_1..i_n} gt_1[i_1] ... gt_n[i_n] * b_{i_1..i_n},
/// so arguments with zero free part (torsion, commutators) contribute nothing.
template <class B>
class Polymorphism {
public:
    Polymorphism(GroupSpec spec, int arity, B zero_proto)
        : spec_(std::move(spec)), arity_(arity), proto_(std::move(zero_proto)) {
        if (arity < 0) throw std::invalid_argument("polymorphism arity must be >= 0");
        size_t size = 1;
        for (int i = 0; i < arity_; ++i) size *= static_cast<size_t>(rank());
        values_.assign(size, BOps<B>::zero(proto_));
    }

    int arity() const { return arity_; }
    int rank() const { return spec_.abelian_rank(); }
    const GroupSpec& group() const { return spec_; }
    const std::vector<B>& values() const { return values_; }

    size_t flat_index(const std::vector<int>& idx) const {
        if (static_cast<int>(idx.size()) != arity_)
            throw std::invalid_argument("tensor index has wrong length");
        size_t f = 0;
        for (int i : idx) {
            if (i < 0 || i >= rank()) throw std::invalid_argument("tensor index out of range");
            f = f * static_cast<size_t>(rank()) + static_cast<size_t>(i);
        }
        return f;
    }

    B& at(const std::vector<int>& idx) { return values_[flat_index(idx)]; }
    const B& at(const std::vector<int>& idx) const { return values_[flat_index(idx)]; }

    B eval(const std::vector<GroupElement>& args) const {
        if (static_cast<int>(args.size()) != arity_)
            throw std::invalid_argument("polymorphism applied to tuple of wrong arity");
        std::vector<std::vector<BigInt>> coords;
        coords.reserve(args.size());
        for (const auto& g : args) coords.push_back(abelianize(spec_, g).free_part);
        B acc = BOps<B>::zero(proto_);
        std::vector<int> idx(static_cast<size_t>(arity_), 0);
        accumulate(coords, 0, BigInt(1), idx, acc);
        return acc;
    }

    bool is_zero() const {
        for (const auto& b : values_)
            if (!BOps<B>::is_zero(b)) return false;
        return true;
    }

    bool is_symmetric() const {
        std::vector<int> idx(static_cast<size_t>(arity_), 0);
        return symmetric_from(idx, 0);
    }

private:
    void accumulate(const std::vector<std::vector<BigInt>>& coords, int slot, const BigInt& mult,
                    std::vector<int>& idx, B& acc) const {
        if (mult == 0) return;
        if (slot == arity_) {
            const B& b = values_[flat_index(idx)];
            if (!BOps<B>::is_zero(b)) acc = BOps<B>::add(acc, BOps<B>::scale(b, mult));
            return;
        }
        for (int i = 0; i < rank(); ++i) {
            idx[static_cast<size_t>(slot)] = i;
            accumulate(coords, slot + 1, mult * coords[static_cast<size_t>(slot)][static_cast<size_t>(i)],
                       idx, acc);
        }
    }

    bool symmetric_from(std::vector<int>& idx, int slot) const {
        if (slot == arity_) {
            // compare against the sorted representative
            std::vector<int> rep = idx;
            std::sort(rep.begin(), rep.end());
            return values_[flat_index(idx)] == values_[flat_index(rep)];
        }
        for (int i = 0; i < rank(); ++i) {
            idx[static_cast<size_t>(slot)] = i;
            if (!symmetric_from(idx, slot + 1)) return false;
        }
        return true;
    }

    GroupSpec spec_;
    int arity_;
    B proto_;
    std::vector<B> values_;
};

/// Checked wrapper for a form whose value tensor is permutation invariant.
template <class B>
class SymmetricPolymorphism {
public:
    explicit SymmetricPolymorphism(Polymorphism<B> base) : base_(std::move(base)) {
        if (!base_.is_symmetric())
            throw std::invalid_argument("tensor is not symmetric under index permutations");
    }
    const Polymorphism<B>& form() const { return base_; }
    B eval(const std::vector<GroupElement>& args) const { return base_.eval(args); }

private:
    Polymorphism<B> base_;
};

long dim_polymorphisms(int n, int r, int s);            // s * r^n
long dim_symmetric_polymorphisms(int n, int r, int s);  // s * C(n+r-1, r-1)
long pn_dimension_bound(int n, int r, int s);           // s * C(n+r, r)
long pn_telescoped_bound(int n, int r, int s);          // s * sum_{k<=n} r^k

/// The s*r^n indicator forms: one basis vector of F^s placed on one generator
/// index tuple.
std::vector<Polymorphism<ScalarVec>> indicator_basis(int n, int r, int s);

/// Dimension of the symmetric subspace computed as unknowns minus the exact
/// rank of the transposition constraints on the value tensor.
long brute_force_dim_symmetric(int n, int r, int s);

/// Dimension of the full polymorphism space computed from the additivity
/// constraint system over the box {x in Z_+^r : |x|_1 <= 2}. Dense exact
/// elimination where affordable; the same elimination done structurally
/// (substitute forced values, then verify every constraint against the
/// reduced forms) above that. Throws std::logic_error if the system is
/// inconsistent with the tensor parametrization.
long brute_force_dim_polymorphisms(int n, int r, int s);

/// D^n a packaged as a polymorphism, with its post-verification results.
template <class B>
struct DifferencePolymorphism {
    Polymorphism<B> tensor;
    bool symmetric = false;       // exact symmetry of the value tensor
    long multilinearity_checks = 0;
};

/// Floquet case: entries are invariant elements, everything exact. Throws
/// MembershipError when a is not polynomial-like of order n.
DifferencePolymorphism<FloquetElement> polymorphism_from_difference(const FloquetModule& m,
                                                                    const FloquetElement& a, int n,
                                                                    Rng& rng);

/// Black-box group functions: sampled membership and invariance, exact values.
DifferencePolymorphism<GaussRat> polymorphism_from_difference(const GroupFnModule& m,
                                                              const GroupFunction& a, int n,
                                                              Rng& rng, const SampleParams& p);

/// Real-multilinear extension of a scalar-valued form on a free lattice.
/// Agrees with eval on integer points; rejects torsion and non-abelian groups.
std::function<std::complex<double>(const std::vector<std::vector<double>>&)> real_extension(
    const Polymorphism<GaussRat>& L);
std::function<std::vector<double>(const std::vector<std::vector<double>>&)> real_extension(
    const Polymorphism<ScalarVec>& L);

}  // namespace gdiff
