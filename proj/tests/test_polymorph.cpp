#include <doctest.h>

#include <cmath>

#include "gdiff/polymorph.hpp"
#include "helpers.hpp"

using namespace gdiff;
using gdiff::testing::random_floquet;

namespace {

Polymorphism<GaussRat> scalar_form(const GroupSpec& spec, int arity) {
    return Polymorphism<GaussRat>(spec, arity, GaussRat(0));
}

}  // namespace

TEST_CASE("evaluation via abelianized coordinates") {
    GroupSpec g2 = GroupSpec::free_abelian(2);
    auto L = scalar_form(g2, 1);
    L.at({0}) = GaussRat(5);
    L.at({1}) = GaussRat(7);
    CHECK(L.eval({make_element(g2, {2, -1})}) == GaussRat(3));
    CHECK(L.eval({identity(g2)}).is_zero());

    // vanishing on commutator arguments over the heisenberg group
    GroupSpec h = GroupSpec::heisenberg();
    auto Lh = scalar_form(h, 2);
    Rng rng(5);
    for (int i = 0; i < 4; ++i) Lh.at({static_cast<int>(i / 2), static_cast<int>(i % 2)}) = GaussRat(rng.uniform(1, 9));
    for (int i = 0; i < 20; ++i) {
        GroupElement a = random_element(h, rng, 3);
        GroupElement b = random_element(h, rng, 3);
        GroupElement c = commutator(h, a, b);
        CHECK(Lh.eval({c, random_element(h, rng, 3)}).is_zero());
        // and the evaluation factors through the abelianization
        GroupElement gc = multiply(h, a, c);
        CHECK(Lh.eval({gc, b}) == Lh.eval({a, b}));
    }
}

TEST_CASE("additivity in every slot") {
    GroupSpec g = GroupSpec::free_abelian(3);
    Rng rng(9);
    auto L = scalar_form(g, 2);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) L.at({i, j}) = GaussRat(rng.uniform(-5, 5));
    for (int rep = 0; rep < 30; ++rep) {
        GroupElement u = random_element(g, rng, 4);
        GroupElement v = random_element(g, rng, 4);
        GroupElement w = random_element(g, rng, 4);
        CHECK(L.eval({multiply(g, u, v), w}) == L.eval({u, w}) + L.eval({v, w}));
        CHECK(L.eval({w, multiply(g, u, v)}) == L.eval({w, u}) + L.eval({w, v}));
    }
}

TEST_CASE("torsion arguments vanish") {
    GroupSpec g = GroupSpec::fin_gen_abelian(2, {3});
    auto L = scalar_form(g, 1);
    L.at({0}) = GaussRat(2);
    L.at({1}) = GaussRat(-1);
    GroupElement t = make_element(g, {0, 0}, {2});
    CHECK(L.eval({t}).is_zero());
    GroupElement mixed = make_element(g, {4, 1}, {2});
    CHECK(L.eval({mixed}) == GaussRat(7));
}

TEST_CASE("indicator basis counts and reconstruction") {
    CHECK(indicator_basis(1, 2, 1).size() == 2);
    CHECK(indicator_basis(2, 2, 1).size() == 4);
    CHECK(indicator_basis(3, 2, 2).size() == 16);

    GroupSpec g = GroupSpec::free_abelian(2);
    Rng rng(31);
    ScalarVec proto{std::vector<Rational>(2, Rational(0))};
    Polymorphism<ScalarVec> L(g, 2, proto);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            L.at({i, j}) = ScalarVec{{Rational(rng.uniform(-9, 9)), Rational(rng.uniform(-9, 9))}};

    // L = sum a_I^i ell_I^i with the coefficients read off the tensor
    auto basis = indicator_basis(2, 2, 2);
    Polymorphism<ScalarVec> sum(g, 2, proto);
    size_t pos = 0;
    for (int flat = 0; flat < 4; ++flat) {
        std::vector<int> idx = {flat / 2, flat % 2};
        for (int i = 0; i < 2; ++i, ++pos) {
            const Rational& coeff = L.at(idx).v[static_cast<size_t>(i)];
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b)
                    for (int s = 0; s < 2; ++s)
                        sum.at({a, b}).v[static_cast<size_t>(s)] +=
                            coeff * basis[pos].at({a, b}).v[static_cast<size_t>(s)];
        }
    }
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) CHECK(sum.at({a, b}) == L.at({a, b}));
    for (int rep = 0; rep < 10; ++rep) {
        auto t = random_tuple(g, rng, 2, 3);
        CHECK(sum.eval(t) == L.eval(t));
    }
}

TEST_CASE("dimension formulas") {
    CHECK(dim_polymorphisms(2, 2, 1) == 4);
    CHECK(dim_symmetric_polymorphisms(2, 2, 1) == 3);
    CHECK(dim_polymorphisms(1, 3, 2) == 6);
    CHECK(dim_symmetric_polymorphisms(1, 3, 2) == 6);
    CHECK(dim_symmetric_polymorphisms(3, 2, 2) == 8);
    CHECK(pn_dimension_bound(0, 3, 4) == 4);
    CHECK(pn_dimension_bound(2, 2, 1) == 6);
    CHECK(pn_dimension_bound(3, 1, 1) == 4);
    CHECK(pn_telescoped_bound(2, 2, 1) == 7);  // 1 + 2 + 4
}

TEST_CASE("brute-force ranks match the formulas") {
    for (int n = 1; n <= 3; ++n)
        for (int r = 1; r <= 3; ++r)
            for (int s = 1; s <= 2; ++s) {
                CAPTURE(n);
                CAPTURE(r);
                CAPTURE(s);
                CHECK(brute_force_dim_symmetric(n, r, s) == dim_symmetric_polymorphisms(n, r, s));
                if (n <= 2 || r <= 2)
                    CHECK(brute_force_dim_polymorphisms(n, r, s) == dim_polymorphisms(n, r, s));
            }
    // the large structural case
    CHECK(brute_force_dim_polymorphisms(3, 3, 1) == 27);
}

TEST_CASE("difference tensor of x1 x2") {
    FloquetModule m(2);
    Rng rng(3);
    FloquetElement p = FloquetElement::monomial(2, {1, 1});
    auto out = polymorphism_from_difference(m, p, 2, rng);
    FloquetElement one = FloquetElement::constant(2, GaussRat(1));
    CHECK(out.tensor.at({0, 1}) == one);
    CHECK(out.tensor.at({1, 0}) == one);
    CHECK(out.tensor.at({0, 0}).is_zero());
    CHECK(out.tensor.at({1, 1}).is_zero());
    CHECK(out.symmetric);
}

TEST_CASE("difference tensor keeps invariant coefficients") {
    FloquetModule m(1);
    Rng rng(4);
    FloquetElement p = FloquetElement::term(1, {1}, {1}, GaussRat(1));  // e(1) * x
    auto out = polymorphism_from_difference(m, p, 1, rng);
    CHECK(out.tensor.at({0}) == FloquetElement::harmonic(1, {1}));
}

TEST_CASE("exactness: the tensor vanishes precisely below the top degree") {
    Rng rng(6);
    for (int rep = 0; rep < 25; ++rep) {
        int r = static_cast<int>(rng.uniform(1, 3));
        int n = static_cast<int>(rng.uniform(1, 3));
        FloquetModule m(r);
        int d = static_cast<int>(rng.uniform(0, n));
        FloquetElement a = random_floquet(rng, r, d);
        auto out = polymorphism_from_difference(m, a, n, rng);
        CHECK(out.tensor.is_zero() == (d <= n - 1));
    }
}

TEST_CASE("precondition violations carry a witness") {
    FloquetModule m(1);
    Rng rng(8);
    FloquetElement x2 = FloquetElement::monomial(1, {2});
    CHECK_THROWS_AS(polymorphism_from_difference(m, x2, 1, rng), MembershipError);
    try {
        polymorphism_from_difference(m, x2, 1, rng);
    } catch (const MembershipError& e) {
        CHECK(e.level == 1);
        CHECK(e.witness.size() == 2);
        CHECK_FALSE(difference_closed(m, x2, e.witness).is_zero());
    }
}

TEST_CASE("heisenberg difference tensor") {
    GroupFnModule m(GroupSpec::heisenberg());
    GroupFunction u{[](const GroupElement& g) { return GaussRat(Rational(g.coords[2])); }};
    Rng rng(10);
    SampleParams p;
    auto out = polymorphism_from_difference(m, u, 2, rng, p);
    CHECK(out.tensor.at({0, 1}) == GaussRat(1));
    CHECK(out.tensor.at({1, 0}) == GaussRat(0));
    CHECK(out.tensor.at({0, 0}) == GaussRat(0));
    CHECK(out.tensor.at({1, 1}) == GaussRat(0));
    CHECK_FALSE(out.symmetric);
    // commutator arguments vanish both through the tensor and directly
    GroupElement c = commutator(m.group(), make_element(m.group(), {1, 0, 0}),
                                make_element(m.group(), {0, 1, 0}));
    GroupElement other = random_element(m.group(), rng, 3);
    CHECK(out.tensor.eval({c, other}).is_zero());
    CHECK(difference_closed(m, u, {c, other})(identity(m.group())).is_zero());
}

TEST_CASE("polymorphisms are cocycles") {
    FloquetModule m(2);
    Rng rng(12);
    Polymorphism<FloquetElement> L(m.group(), 2, m.zero());
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            L.at({i, j}) = FloquetElement::harmonic(2, {rng.uniform(-1, 1), rng.uniform(-1, 1)})
                               .scaled(GaussRat(rng.uniform(1, 3)));
    Cochain<FloquetModule> c{2, m, [&L](const std::vector<GroupElement>& t) { return L.eval(t); }};
    auto dc = coboundary(c);
    for (int i = 0; i < 10; ++i) CHECK(dc(random_tuple(m.group(), rng, 3, 3)).is_zero());
}

TEST_CASE("real extension") {
    GroupSpec g = GroupSpec::free_abelian(2);
    auto L = scalar_form(g, 1);
    L.at({0}) = GaussRat(5);
    L.at({1}) = GaussRat(7);
    auto ext = real_extension(L);
    CHECK(ext({{0.5, 0.0}}).real() == doctest::Approx(2.5).epsilon(1e-14));
    // restriction to the lattice agrees with eval exactly
    Rng rng(14);
    for (int i = 0; i < 10; ++i) {
        GroupElement a = random_element(g, rng, 4);
        auto v = ext({{a.coords[0].get_d(), a.coords[1].get_d()}});
        GaussRat exact = L.eval({a});
        CHECK(v.real() == doctest::Approx(exact.re.get_d()).epsilon(1e-12));
    }
    // bilinearity of a rank-2 extension
    auto L2 = scalar_form(g, 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) L2.at({i, j}) = GaussRat(rng.uniform(-4, 4));
    auto ext2 = real_extension(L2);
    for (int i = 0; i < 10; ++i) {
        std::vector<double> u = {rng.uniform_real(-2, 2), rng.uniform_real(-2, 2)};
        std::vector<double> v = {rng.uniform_real(-2, 2), rng.uniform_real(-2, 2)};
        std::vector<double> w = {u[0] + v[0], u[1] + v[1]};
        std::vector<double> z = {rng.uniform_real(-2, 2), rng.uniform_real(-2, 2)};
        auto lhs = ext2({w, z});
        auto rhs = ext2({u, z}) + ext2({v, z});
        CHECK(std::abs(lhs - rhs) < 1e-12);
    }
    // unsupported groups are rejected
    auto Lh = scalar_form(GroupSpec::heisenberg(), 1);
    CHECK_THROWS_AS(real_extension(Lh), std::invalid_argument);
    auto Lt = scalar_form(GroupSpec::fin_gen_abelian(1, {2}), 1);
    CHECK_THROWS_AS(real_extension(Lt), std::invalid_argument);
}

TEST_CASE("symmetric wrapper validates the tensor") {
    GroupSpec g = GroupSpec::free_abelian(2);
    auto L = scalar_form(g, 2);
    L.at({0, 1}) = GaussRat(2);
    CHECK_THROWS_AS((SymmetricPolymorphism<GaussRat>{L}), std::invalid_argument);
    L.at({1, 0}) = GaussRat(2);
    SymmetricPolymorphism<GaussRat> S(L);
    Rng rng(44);
    auto a = random_element(g, rng, 3);
    auto b = random_element(g, rng, 3);
    CHECK(S.eval({a, b}) == S.eval({b, a}));
}
