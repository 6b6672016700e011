#pragma once

#include <string>
#include <vector>

#include "gdiff/rational.hpp"
#include "gdiff/rng.hpp"

namespace gdiff {

enum class GroupKind { FreeAbelian, FinGenAbelian, HeisenbergZ };

/// Description of a finitely generated group with exact element arithmetic.
///
/// FreeAbelian(r)            : Z^r.
/// FinGenAbelian(r, moduli)  : Z^r x Z/m_1 x ... x Z/m_t, each m_i >= 2.
/// HeisenbergZ               : integer triples (a,b,c) with
///                             (a,b,c)*(a',b',c') = (a+a', b+b', c+c'+a*b');
///                             abelianization Z^2, no torsion.
struct GroupSpec {
    GroupKind kind = GroupKind::FreeAbelian;
    int rank = 0;               // free rank of the abelianization
    std::vector<long> torsion;  // moduli, FinGenAbelian only

    static GroupSpec free_abelian(int r);
    static GroupSpec fin_gen_abelian(int r, std::vector<long> moduli);
    static GroupSpec heisenberg();

    int abelian_rank() const { return rank; }
    bool is_abelian() const { return kind != GroupKind::HeisenbergZ; }
    void validate() const;  // throws std::invalid_argument on a malformed spec

    bool operator==(const GroupSpec&) const = default;
};

/// Group element. Abelian kinds: `coords` is the free part (length rank) and
/// `torsion` the reduced residues. HeisenbergZ: coords = (a, b, c), no torsion.
struct GroupElement {
    std::vector<BigInt> coords;
    std::vector<long> torsion;

    bool operator==(const GroupElement& o) const;
    bool operator!=(const GroupElement& o) const { return !(*this == o); }
    bool operator<(const GroupElement& o) const;  // total order, used as a map key
};

/// Image in the abelianization G/[G,G].
struct AbelianizedCoords {
    std::vector<BigInt> free_part;
    std::vector<long> torsion_part;

    bool operator==(const AbelianizedCoords&) const = default;
};

GroupElement identity(const GroupSpec& g);
bool is_identity(const GroupSpec& g, const GroupElement& a);
bool element_belongs(const GroupSpec& g, const GroupElement& a);

/// Convenience constructor from small integers; torsion entries are reduced.
GroupElement make_element(const GroupSpec& g, const std::vector<long>& coords,
                          const std::vector<long>& torsion = {});

GroupElement multiply(const GroupSpec& g, const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupSpec& g, const GroupElement& a);
GroupElement commutator(const GroupSpec& g, const GroupElement& a, const GroupElement& b);
AbelianizedCoords abelianize(const GroupSpec& g, const GroupElement& a);

/// Ordered product of the tuple entries whose (1-based) positions are NOT in
/// `omitted`; the empty product is the identity. `omitted` must be strictly
/// increasing inside 1..tuple.size().
GroupElement pi_product(const GroupSpec& g, const std::vector<int>& omitted,
                        const std::vector<GroupElement>& tuple);

/// Standard generating set: basis vectors for the free part, one generator per
/// torsion factor; x = (1,0,0) and y = (0,1,0) for HeisenbergZ.
std::vector<GroupElement> generators(const GroupSpec& g);

GroupElement random_element(const GroupSpec& g, Rng& rng, long radius);
std::vector<GroupElement> random_tuple(const GroupSpec& g, Rng& rng, int n, long radius);

std::string to_string(const GroupElement& a);
std::string to_string(const std::vector<GroupElement>& tuple);

}  // namespace gdiff
