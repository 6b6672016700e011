#include "gdiff/polymorph.hpp"

#include <map>

namespace gdiff {

long dim_polymorphisms(int n, int r, int s) {
    long d = s;
    for (int i = 0; i < n; ++i) d *= r;
    return d;
}

long dim_symmetric_polymorphisms(int n, int r, int s) {
    if (r == 0) return n == 0 ? s : 0;
    BigInt b = binomial(static_cast<unsigned long>(n + r - 1), static_cast<unsigned long>(r - 1));
    return s * b.get_si();
}

long pn_dimension_bound(int n, int r, int s) {
    BigInt b = binomial(static_cast<unsigned long>(n + r), static_cast<unsigned long>(r));
    return s * b.get_si();
}

long pn_telescoped_bound(int n, int r, int s) {
    long total = 0;
    long pw = 1;
    for (int k = 0; k <= n; ++k) {
        total += pw;
        pw *= r;
    }
    return s * total;
}

namespace {

size_t int_pow(size_t base, int e) {
    size_t r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

std::vector<int> unflatten(size_t flat, int arity, int r) {
    std::vector<int> idx(static_cast<size_t>(arity), 0);
    for (int i = arity - 1; i >= 0; --i) {
        idx[static_cast<size_t>(i)] = static_cast<int>(flat % static_cast<size_t>(r));
        flat /= static_cast<size_t>(r);
    }
    return idx;
}

}  // namespace

std::vector<Polymorphism<ScalarVec>> indicator_basis(int n, int r, int s) {
    GroupSpec spec = GroupSpec::free_abelian(r);
    ScalarVec proto{std::vector<Rational>(static_cast<size_t>(s), Rational(0))};
    std::vector<Polymorphism<ScalarVec>> basis;
    const size_t tuples = int_pow(static_cast<size_t>(r), n);
    for (size_t flat = 0; flat < tuples; ++flat) {
        for (int i = 0; i < s; ++i) {
            Polymorphism<ScalarVec> L(spec, n, proto);
            ScalarVec e = proto;
            e.v[static_cast<size_t>(i)] = 1;
            L.at(unflatten(flat, n, r)) = e;
            basis.push_back(std::move(L));
        }
    }
    return basis;
}

long brute_force_dim_symmetric(int n, int r, int s) {
    const size_t tuples = int_pow(static_cast<size_t>(r), n);
    const size_t unknowns = tuples * static_cast<size_t>(s);
    QMatrix rows;
    for (size_t flat = 0; flat < tuples; ++flat) {
        std::vector<int> idx = unflatten(flat, n, r);
        for (int pos = 0; pos + 1 < n; ++pos) {
            std::vector<int> swapped = idx;
            std::swap(swapped[static_cast<size_t>(pos)], swapped[static_cast<size_t>(pos) + 1]);
            size_t other = 0;
            for (int v : swapped) other = other * static_cast<size_t>(r) + static_cast<size_t>(v);
            if (other <= flat) continue;  // dedupe and skip fixed tuples
            for (int i = 0; i < s; ++i) {
                QRow row(unknowns, Rational(0));
                row[flat * static_cast<size_t>(s) + static_cast<size_t>(i)] = 1;
                row[other * static_cast<size_t>(s) + static_cast<size_t>(i)] = -1;
                rows.push_back(std::move(row));
            }
        }
    }
    int rank = rref_in_place(rows);
    return static_cast<long>(unknowns) - rank;
}

namespace {

// additive expansion of a box element into generators: list of (generator, weight)
std::vector<std::pair<int, long>> slot_expansion(const std::vector<long>& w) {
    std::vector<std::pair<int, long>> e;
    for (size_t j = 0; j < w.size(); ++j)
        if (w[j] != 0) e.emplace_back(static_cast<int>(j), w[j]);
    return e;
}

struct BoxSystem {
    std::vector<std::vector<long>> box;  // elements of Z_+^r with |x|_1 <= 2
    // unordered decomposition pairs (u, v) with u + v in the box; (0,0) pins
    // the value at a zero slot
    std::vector<std::pair<size_t, size_t>> pairs;
    std::map<std::vector<long>, size_t> index;

    explicit BoxSystem(int r) {
        box = simplex_points(r, 2);
        for (size_t i = 0; i < box.size(); ++i) index[box[i]] = i;
        std::vector<long> zero(static_cast<size_t>(r), 0);
        pairs.emplace_back(index[zero], index[zero]);
        for (size_t i = 0; i < box.size(); ++i) {
            if (box[i] == zero) continue;
            for (size_t j = i; j < box.size(); ++j) {
                if (box[j] == zero) continue;
                std::vector<long> sum(box[i]);
                for (size_t k = 0; k < sum.size(); ++k) sum[k] += box[j][k];
                if (index.count(sum)) pairs.emplace_back(i, j);
            }
        }
    }
};

long dense_box_dimension(int n, int r, const BoxSystem& sys) {
    const size_t nbox = sys.box.size();
    const size_t unknowns = int_pow(nbox, n);
    const size_t contexts = int_pow(nbox, n - 1);
    std::vector<long> zero(static_cast<size_t>(r), 0);
    size_t zero_idx = sys.index.at(zero);

    QMatrix rows;
    std::vector<size_t> ctx(static_cast<size_t>(n > 0 ? n - 1 : 0));
    for (size_t c = 0; c < contexts; ++c) {
        size_t rem = c;
        for (int i = n - 2; i >= 0; --i) {
            ctx[static_cast<size_t>(i)] = rem % nbox;
            rem /= nbox;
        }
        for (int slot = 0; slot < n; ++slot) {
            auto flat_with = [&](size_t at_slot) {
                size_t f = 0;
                int cpos = 0;
                for (int t = 0; t < n; ++t)
                    f = f * nbox + (t == slot ? at_slot : ctx[static_cast<size_t>(cpos++)]);
                return f;
            };
            for (const auto& [ui, vi] : sys.pairs) {
                std::vector<long> sum(sys.box[ui]);
                for (size_t k = 0; k < sum.size(); ++k) sum[k] += sys.box[vi][k];
                size_t wi = (ui == zero_idx && vi == zero_idx) ? zero_idx : sys.index.at(sum);
                QRow row(unknowns, Rational(0));
                row[flat_with(wi)] += 1;
                row[flat_with(ui)] -= 1;
                row[flat_with(vi)] -= 1;
                bool nonzero = false;
                for (const auto& q : row) nonzero = nonzero || q != 0;
                if (nonzero) rows.push_back(std::move(row));
            }
        }
    }
    int rank = rref_in_place(rows);
    return static_cast<long>(unknowns) - rank;
}

long structural_box_dimension(int n, int r, const BoxSystem& sys) {
    const size_t nbox = sys.box.size();
    const size_t tuples = int_pow(nbox, n);
    const size_t gen_tuples = int_pow(static_cast<size_t>(r), n);

    // reduce every box tuple to its integer combination of generator tuples
    std::vector<std::map<size_t, long>> reduced(tuples);
    std::vector<size_t> slots(static_cast<size_t>(n));
    for (size_t flat = 0; flat < tuples; ++flat) {
        size_t rem = flat;
        for (int i = n - 1; i >= 0; --i) {
            slots[static_cast<size_t>(i)] = rem % nbox;
            rem /= nbox;
        }
        std::map<size_t, long> combo;
        std::function<void(int, size_t, long)> expand = [&](int slot, size_t gen_flat, long coeff) {
            if (slot == n) {
                combo[gen_flat] += coeff;
                return;
            }
            for (const auto& [j, w] : slot_expansion(sys.box[slots[static_cast<size_t>(slot)]]))
                expand(slot + 1, gen_flat * static_cast<size_t>(r) + static_cast<size_t>(j), coeff * w);
        };
        expand(0, 0, 1);
        std::erase_if(combo, [](const auto& kv) { return kv.second == 0; });
        reduced[flat] = std::move(combo);
    }

    // every additivity constraint must hold on the reduced forms
    const size_t contexts = int_pow(nbox, n - 1);
    std::vector<size_t> ctx(static_cast<size_t>(n - 1));
    for (size_t c = 0; c < contexts; ++c) {
        size_t rem = c;
        for (int i = n - 2; i >= 0; --i) {
            ctx[static_cast<size_t>(i)] = rem % nbox;
            rem /= nbox;
        }
        for (int slot = 0; slot < n; ++slot) {
            auto flat_with = [&](size_t at_slot) {
                size_t f = 0;
                int cpos = 0;
                for (int t = 0; t < n; ++t)
                    f = f * nbox + (t == slot ? at_slot : ctx[static_cast<size_t>(cpos++)]);
                return f;
            };
            for (const auto& [ui, vi] : sys.pairs) {
                std::vector<long> sum(sys.box[ui]);
                for (size_t k = 0; k < sum.size(); ++k) sum[k] += sys.box[vi][k];
                std::map<size_t, long> lhs = reduced[flat_with(sys.index.at(sum))];
                for (const auto& [g, w] : reduced[flat_with(ui)]) lhs[g] -= w;
                for (const auto& [g, w] : reduced[flat_with(vi)]) lhs[g] -= w;
                for (const auto& [g, w] : lhs)
                    if (w != 0)
                        throw std::logic_error(
                            "box additivity system is inconsistent with the tensor parametrization");
            }
        }
    }
    return static_cast<long>(gen_tuples);
}

}  // namespace

long brute_force_dim_polymorphisms(int n, int r, int s) {
    if (n == 0) return s;
    BoxSystem sys(r);
    const size_t per_block = int_pow(sys.box.size(), n);
    long dim1 = per_block <= 250 ? dense_box_dimension(n, r, sys)
                                 : structural_box_dimension(n, r, sys);
    return s * dim1;
}

namespace {

template <class M, class Entry, class EntryOf, class CrossCheck>
DifferencePolymorphism<Entry> tensor_from_difference(const M& m, const typename M::Element& a,
                                                     int n, Rng& rng, Entry proto,
                                                     EntryOf entry_of, CrossCheck cross_check) {
    const GroupSpec& spec = m.group();
    const int r = spec.abelian_rank();
    std::vector<GroupElement> gens = generators(spec);
    gens.resize(static_cast<size_t>(r));  // free generators only

    DifferencePolymorphism<Entry> out{Polymorphism<Entry>(spec, n, proto), false, 0};
    const size_t tuples = int_pow(static_cast<size_t>(r), n);
    for (size_t flat = 0; flat < tuples; ++flat) {
        std::vector<int> idx = unflatten(flat, n, r);
        std::vector<GroupElement> t;
        t.reserve(static_cast<size_t>(n));
        for (int i : idx) t.push_back(gens[static_cast<size_t>(i)]);
        out.tensor.at(idx) = entry_of(difference_closed(m, a, t), t);
    }
    out.symmetric = out.tensor.is_symmetric();

    // multilinearity against the difference operator itself
    for (int i = 0; i < 16; ++i) {
        auto t = random_tuple(spec, rng, n, 3);
        ++out.multilinearity_checks;
        cross_check(out.tensor.eval(t), t);
    }
    return out;
}

}  // namespace

DifferencePolymorphism<FloquetElement> polymorphism_from_difference(const FloquetModule& m,
                                                                    const FloquetElement& a, int n,
                                                                    Rng& rng) {
    PolyCert cert = is_polynomial_like(m, a, n);
    if (!cert.member)
        throw MembershipError(n, *cert.witness,
                              "element is not polynomial-like of order " + std::to_string(n) +
                                  "; D^" + std::to_string(n + 1) + " is nonzero at " +
                                  to_string(*cert.witness));
    auto entry_of = [&](FloquetElement v, const std::vector<GroupElement>& t) {
        if (!v.is_invariant())
            throw std::logic_error("difference value is not invariant at " + to_string(t));
        return v;
    };
    auto cross = [&](const FloquetElement& lhs, const std::vector<GroupElement>& t) {
        if (lhs != difference_closed(m, a, t))
            throw std::logic_error("multilinearity postcheck failed at " + to_string(t));
    };
    return tensor_from_difference(m, a, n, rng, FloquetElement::zero(m.rank()), entry_of, cross);
}

DifferencePolymorphism<GaussRat> polymorphism_from_difference(const GroupFnModule& m,
                                                              const GroupFunction& a, int n,
                                                              Rng& rng, const SampleParams& p) {
    PolyCert cert = is_polynomial_like_sampled(m, a, n, rng, p);
    if (!cert.member)
        throw MembershipError(n, *cert.witness,
                              "element fails the sampled membership test at order " +
                                  std::to_string(n) + "; witness " + to_string(*cert.witness));
    GroupElement e = identity(m.group());
    auto entry_of = [&](const GroupFunction& v, const std::vector<GroupElement>& t) {
        InvarianceCert inv = is_invariant(m, v, rng, p);
        if (!inv.invariant)
            throw MembershipError(n, t, "difference value is not invariant at " + to_string(t));
        return v(e);
    };
    auto cross = [&](const GaussRat& lhs, const std::vector<GroupElement>& t) {
        GroupFunction direct = difference_closed(m, a, t);
        GaussRat at_e = direct(e);
        GaussRat at_rand = direct(random_element(m.group(), rng, p.radius));
        if (lhs != at_e || at_e != at_rand)
            throw MembershipError(n, t, "multilinearity postcheck failed at " + to_string(t));
    };
    return tensor_from_difference(m, a, n, rng, GaussRat(0), entry_of, cross);
}

namespace {

void require_free_lattice(const GroupSpec& spec) {
    if (spec.kind != GroupKind::FreeAbelian)
        throw std::invalid_argument("real extension is defined over free lattices only");
}

}  // namespace

std::function<std::complex<double>(const std::vector<std::vector<double>>&)> real_extension(
    const Polymorphism<GaussRat>& L) {
    require_free_lattice(L.group());
    const int n = L.arity();
    const int r = L.rank();
    std::vector<std::complex<double>> vals;
    for (const auto& b : L.values()) vals.emplace_back(b.re.get_d(), b.im.get_d());
    return [n, r, vals](const std::vector<std::vector<double>>& vs) {
        if (static_cast<int>(vs.size()) != n)
            throw std::invalid_argument("wrong number of vector arguments");
        std::complex<double> acc{0.0, 0.0};
        const size_t tuples = vals.size();
        for (size_t flat = 0; flat < tuples; ++flat) {
            double mult = 1.0;
            size_t rem = flat;
            for (int t = n - 1; t >= 0; --t) {
                mult *= vs[static_cast<size_t>(t)][rem % static_cast<size_t>(r)];
                rem /= static_cast<size_t>(r);
            }
            acc += mult * vals[flat];
        }
        return acc;
    };
}

std::function<std::vector<double>(const std::vector<std::vector<double>>&)> real_extension(
    const Polymorphism<ScalarVec>& L) {
    require_free_lattice(L.group());
    const int n = L.arity();
    const int r = L.rank();
    std::vector<std::vector<double>> vals;
    for (const auto& b : L.values()) {
        std::vector<double> v;
        for (const auto& q : b.v) v.push_back(q.get_d());
        vals.push_back(std::move(v));
    }
    const size_t s = vals.empty() ? 0 : vals[0].size();
    return [n, r, s, vals](const std::vector<std::vector<double>>& vs) {
        if (static_cast<int>(vs.size()) != n)
            throw std::invalid_argument("wrong number of vector arguments");
        std::vector<double> acc(s, 0.0);
        for (size_t flat = 0; flat < vals.size(); ++flat) {
            double mult = 1.0;
            size_t rem = flat;
            for (int t = n - 1; t >= 0; --t) {
                mult *= vs[static_cast<size_t>(t)][rem % static_cast<size_t>(r)];
                rem /= static_cast<size_t>(r);
            }
            for (size_t i = 0; i < s; ++i) acc[i] += mult * vals[flat][i];
        }
        return acc;
    };
}

}  // namespace gdiff
