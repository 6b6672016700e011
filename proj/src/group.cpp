#include "gdiff/group.hpp"

#include <algorithm>
#include <stdexcept>

namespace gdiff {

GroupSpec GroupSpec::free_abelian(int r) {
    GroupSpec g;
    g.kind = GroupKind::FreeAbelian;
    g.rank = r;
    g.validate();
    return g;
}

GroupSpec GroupSpec::fin_gen_abelian(int r, std::vector<long> moduli) {
    GroupSpec g;
    g.kind = GroupKind::FinGenAbelian;
    g.rank = r;
    g.torsion = std::move(moduli);
    g.validate();
    return g;
}

GroupSpec GroupSpec::heisenberg() {
    GroupSpec g;
    g.kind = GroupKind::HeisenbergZ;
    g.rank = 2;
    g.validate();
    return g;
}

void GroupSpec::validate() const {
    if (rank < 0) throw std::invalid_argument("group rank must be nonnegative");
    for (long m : torsion)
        if (m < 2) throw std::invalid_argument("torsion moduli must be >= 2");
    switch (kind) {
        case GroupKind::FreeAbelian:
            if (!torsion.empty())
                throw std::invalid_argument("free abelian group cannot carry torsion");
            break;
        case GroupKind::FinGenAbelian:
            break;
        case GroupKind::HeisenbergZ:
            if (rank != 2 || !torsion.empty())
                throw std::invalid_argument("HeisenbergZ has abelianization Z^2, no torsion");
            break;
    }
}

bool GroupElement::operator==(const GroupElement& o) const {
    return coords == o.coords && torsion == o.torsion;
}

bool GroupElement::operator<(const GroupElement& o) const {
    if (coords.size() != o.coords.size()) return coords.size() < o.coords.size();
    for (size_t i = 0; i < coords.size(); ++i) {
        int c = cmp(coords[i], o.coords[i]);
        if (c != 0) return c < 0;
    }
    return torsion < o.torsion;
}

namespace {

size_t coord_count(const GroupSpec& g) {
    return g.kind == GroupKind::HeisenbergZ ? 3u : static_cast<size_t>(g.rank);
}

long reduce_mod(long v, long m) {
    long r = v % m;
    return r < 0 ? r + m : r;
}

void check_element(const GroupSpec& g, const GroupElement& a, const char* where) {
    if (!element_belongs(g, a))
        throw std::invalid_argument(std::string(where) + ": element does not belong to the group");
}

}  // namespace

GroupElement identity(const GroupSpec& g) {
    GroupElement e;
    e.coords.assign(coord_count(g), BigInt(0));
    e.torsion.assign(g.torsion.size(), 0);
    return e;
}

bool is_identity(const GroupSpec& g, const GroupElement& a) { return a == identity(g); }

bool element_belongs(const GroupSpec& g, const GroupElement& a) {
    if (a.coords.size() != coord_count(g) || a.torsion.size() != g.torsion.size()) return false;
    for (size_t i = 0; i < a.torsion.size(); ++i)
        if (a.torsion[i] < 0 || a.torsion[i] >= g.torsion[i]) return false;
    return true;
}

GroupElement make_element(const GroupSpec& g, const std::vector<long>& coords,
                          const std::vector<long>& torsion) {
    if (coords.size() != coord_count(g))
        throw std::invalid_argument("make_element: wrong number of coordinates");
    GroupElement a;
    a.coords.reserve(coords.size());
    for (long c : coords) a.coords.emplace_back(c);
    if (torsion.empty()) {
        a.torsion.assign(g.torsion.size(), 0);
    } else {
        if (torsion.size() != g.torsion.size())
            throw std::invalid_argument("make_element: wrong number of torsion residues");
        a.torsion.resize(torsion.size());
        for (size_t i = 0; i < torsion.size(); ++i) a.torsion[i] = reduce_mod(torsion[i], g.torsion[i]);
    }
    return a;
}

GroupElement multiply(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
    check_element(g, a, "multiply");
    check_element(g, b, "multiply");
    GroupElement r;
    r.coords.resize(a.coords.size());
    for (size_t i = 0; i < a.coords.size(); ++i) r.coords[i] = a.coords[i] + b.coords[i];
    if (g.kind == GroupKind::HeisenbergZ) r.coords[2] += a.coords[0] * b.coords[1];
    r.torsion.resize(a.torsion.size());
    for (size_t i = 0; i < a.torsion.size(); ++i)
        r.torsion[i] = reduce_mod(a.torsion[i] + b.torsion[i], g.torsion[i]);
    return r;
}

GroupElement inverse(const GroupSpec& g, const GroupElement& a) {
    check_element(g, a, "inverse");
    GroupElement r;
    r.coords.resize(a.coords.size());
    for (size_t i = 0; i < a.coords.size(); ++i) r.coords[i] = -a.coords[i];
    if (g.kind == GroupKind::HeisenbergZ) r.coords[2] = a.coords[0] * a.coords[1] - a.coords[2];
    r.torsion.resize(a.torsion.size());
    for (size_t i = 0; i < a.torsion.size(); ++i)
        r.torsion[i] = a.torsion[i] == 0 ? 0 : g.torsion[i] - a.torsion[i];
    return r;
}

GroupElement commutator(const GroupSpec& g, const GroupElement& a, const GroupElement& b) {
    GroupElement ab = multiply(g, a, b);
    GroupElement ai = inverse(g, a);
    GroupElement bi = inverse(g, b);
    return multiply(g, multiply(g, ab, ai), bi);
}

AbelianizedCoords abelianize(const GroupSpec& g, const GroupElement& a) {
    check_element(g, a, "abelianize");
    AbelianizedCoords r;
    if (g.kind == GroupKind::HeisenbergZ) {
        r.free_part = {a.coords[0], a.coords[1]};
    } else {
        r.free_part = a.coords;
        r.torsion_part = a.torsion;
    }
    return r;
}

GroupElement pi_product(const GroupSpec& g, const std::vector<int>& omitted,
                        const std::vector<GroupElement>& tuple) {
    const int n = static_cast<int>(tuple.size());
    int prev = 0;
    for (int idx : omitted) {
        if (idx <= prev || idx > n)
            throw std::invalid_argument("pi_product: indices must be strictly increasing in 1..n");
        prev = idx;
    }
    GroupElement r = identity(g);
    size_t next_skip = 0;
    for (int i = 1; i <= n; ++i) {
        if (next_skip < omitted.size() && omitted[next_skip] == i) {
            ++next_skip;
            continue;
        }
        r = multiply(g, r, tuple[static_cast<size_t>(i - 1)]);
    }
    return r;
}

std::vector<GroupElement> generators(const GroupSpec& g) {
    std::vector<GroupElement> gens;
    const size_t nfree = g.kind == GroupKind::HeisenbergZ ? 2u : static_cast<size_t>(g.rank);
    for (size_t i = 0; i < nfree; ++i) {
        GroupElement e = identity(g);
        e.coords[i] = 1;
        gens.push_back(std::move(e));
    }
    for (size_t t = 0; t < g.torsion.size(); ++t) {
        GroupElement e = identity(g);
        e.torsion[t] = 1;
        gens.push_back(std::move(e));
    }
    return gens;
}

GroupElement random_element(const GroupSpec& g, Rng& rng, long radius) {
    GroupElement a = identity(g);
    for (auto& c : a.coords) c = rng.uniform(-radius, radius);
    for (size_t i = 0; i < a.torsion.size(); ++i) a.torsion[i] = rng.uniform(0, g.torsion[i] - 1);
    return a;
}

std::vector<GroupElement> random_tuple(const GroupSpec& g, Rng& rng, int n, long radius) {
    std::vector<GroupElement> t;
    t.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) t.push_back(random_element(g, rng, radius));
    return t;
}

std::string to_string(const GroupElement& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.coords.size(); ++i) {
        if (i) s += ",";
        s += a.coords[i].get_str();
    }
    if (!a.torsion.empty()) {
        s += ";";
        for (size_t i = 0; i < a.torsion.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(a.torsion[i]);
        }
    }
    s += ")";
    return s;
}

std::string to_string(const std::vector<GroupElement>& tuple) {
    std::string s = "[";
    for (size_t i = 0; i < tuple.size(); ++i) {
        if (i) s += ",";
        s += to_string(tuple[i]);
    }
    s += "]";
    return s;
}

}  // namespace gdiff
