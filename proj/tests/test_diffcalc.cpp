#include <doctest.h>

#include "gdiff/diffcalc.hpp"
#include "helpers.hpp"

using namespace gdiff;
using gdiff::testing::random_floquet;

namespace {

FloquetElement xe(int rank, int var, unsigned e) {
    std::vector<unsigned> nu(static_cast<size_t>(rank), 0);
    nu[static_cast<size_t>(var)] = e;
    return FloquetElement::monomial(rank, nu);
}

auto exact_eq = [](const FloquetElement& a, const FloquetElement& b) { return a == b; };

GroupFunction heis_c() {
    return {[](const GroupElement& g) { return GaussRat(Rational(g.coords[2])); }};
}

}  // namespace

TEST_CASE("one-step difference") {
    FloquetModule m(1);
    // invariant element: d of its constant cochain vanishes
    auto c = constant_cochain(m, FloquetElement::harmonic(1, {2}));
    auto dc = d_step(c);
    Rng rng(1);
    for (int i = 0; i < 10; ++i)
        CHECK(dc({random_element(m.group(), rng, 4)}).is_zero());

    // [D^1 a](g) = a^g - a; for a = x this is the constant g
    FloquetElement x = xe(1, 0, 1);
    auto d1 = iterated_difference(m, x, 1);
    CHECK(d1({make_element(m.group(), {5})}) == FloquetElement::constant(1, GaussRat(5)));
    GroupElement g = make_element(m.group(), {3});
    CHECK(d1({g}) == m.sub(m.act(x, g), x));
}

TEST_CASE("iterated difference basics") {
    FloquetModule m(1);
    FloquetElement x2 = xe(1, 0, 2);
    auto d0 = iterated_difference(m, x2, 0);
    CHECK(d0({}) == x2);

    // [D^2 x^2](g,h) = 2gh
    auto d2 = iterated_difference(m, x2, 2);
    auto v = d2({make_element(m.group(), {3}), make_element(m.group(), {5})});
    CHECK(v == FloquetElement::constant(1, GaussRat(30)));

    // matches the hand expansion (x+g+h)^2 - (x+g)^2 - (x+h)^2 + x^2
    GroupElement g = make_element(m.group(), {2});
    GroupElement h = make_element(m.group(), {-7});
    FloquetElement manual = m.sub(
        m.sub(m.add(m.act(x2, multiply(m.group(), g, h)), x2), m.act(x2, g)), m.act(x2, h));
    CHECK(d2({g, h}) == manual);
    CHECK(difference_closed(m, x2, {g, h}) == manual);
}

TEST_CASE("closed form equals recursive form") {
    Rng rng(42);
    for (int r = 1; r <= 3; ++r) {
        FloquetModule m(r);
        for (int n = 1; n <= 4; ++n) {
            for (int rep = 0; rep < 8; ++rep) {
                FloquetElement a = random_floquet(rng, r, static_cast<int>(rng.uniform(0, 3)));
                auto tuple = random_tuple(m.group(), rng, n, 2);
                auto rec = iterated_difference(m, a, n)(tuple);
                CHECK(rec == difference_closed(m, a, tuple));
            }
        }
    }
}

TEST_CASE("normalization kills identity slots") {
    FloquetModule m(2);
    Rng rng(7);
    for (int n = 1; n <= 4; ++n) {
        FloquetElement a = random_floquet(rng, 2, 3);
        auto tuple = random_tuple(m.group(), rng, n, 2);
        tuple[static_cast<size_t>(rng.uniform(0, n - 1))] = identity(m.group());
        CHECK(difference_closed(m, a, tuple).is_zero());
        CHECK(iterated_difference(m, a, n)(tuple).is_zero());
    }
}

TEST_CASE("delta part") {
    FloquetModule m(1);
    Rng arng(3);
    FloquetElement a = random_floquet(arng, 1, 2);
    // n = 1: only the s = 1 term survives: Delta^1 a = -a
    GroupElement g = make_element(m.group(), {4});
    CHECK(delta_part(m, a, {g}) == m.neg(a));
    // Delta^n a + a^{g_1...g_n} = D^n a
    Rng rng(8);
    for (int n = 1; n <= 4; ++n) {
        auto tuple = random_tuple(m.group(), rng, n, 3);
        auto full = pi_product(m.group(), {}, tuple);
        CHECK(m.add(delta_part(m, a, tuple), m.act(a, full)) == difference_closed(m, a, tuple));
    }
    // symmetric in the arguments over an abelian group
    auto tuple = random_tuple(m.group(), rng, 3, 3);
    std::vector<GroupElement> perm = {tuple[2], tuple[0], tuple[1]};
    CHECK(delta_part(m, a, tuple) == delta_part(m, a, perm));
}

TEST_CASE("heisenberg c-coordinate difference calculus") {
    GroupFnModule m(GroupSpec::heisenberg());
    GroupFunction u = heis_c();
    Rng rng(19);
    SampleParams p;
    // [D^2 u](g1,g2) is the constant a(g1) * b(g2)
    for (int i = 0; i < 30; ++i) {
        GroupElement g1 = random_element(m.group(), rng, 4);
        GroupElement g2 = random_element(m.group(), rng, 4);
        GroupFunction v = difference_closed(m, u, {g1, g2});
        GaussRat expect{Rational(g1.coords[0] * g2.coords[1])};
        CHECK(v(identity(m.group())) == expect);
        CHECK(v(random_element(m.group(), rng, 4)) == expect);
    }
    // D^3 u = 0, sampled with exact values
    auto cert = is_polynomial_like_sampled(m, u, 2, rng, p);
    CHECK(cert.member);
    CHECK_FALSE(cert.exact);
    // closed and recursive forms agree over the non-abelian group too
    for (int n = 1; n <= 3; ++n) {
        for (int i = 0; i < 5; ++i) {
            auto t = random_tuple(m.group(), rng, n, 3);
            GroupElement probe = random_element(m.group(), rng, 3);
            GroupFunction rec = iterated_difference(m, u, n)(t);
            GroupFunction clo = difference_closed(m, u, t);
            CHECK(rec(probe) == clo(probe));
            CHECK(rec(identity(m.group())) == clo(identity(m.group())));
        }
    }
    // recursion identity on the same function
    std::vector<std::vector<GroupElement>> tuples;
    for (int i = 0; i < 10; ++i) tuples.push_back(random_tuple(m.group(), rng, 2, 3));
    GroupElement probe = random_element(m.group(), rng, 3);
    auto eq = [&](const GroupFunction& a, const GroupFunction& b) {
        return a(identity(m.group())) == b(identity(m.group())) && a(probe) == b(probe);
    };
    CHECK(recursion_identity_check(m, u, 1, tuples, eq).ok);
}

TEST_CASE("coboundary") {
    FloquetModule m(1);
    // delta^0 = 0
    Rng crng(4);
    auto c0 = constant_cochain(m, random_floquet(crng, 1, 2));
    auto d0 = coboundary(c0);
    Rng rng(12);
    CHECK(d0({random_element(m.group(), rng, 4)}).is_zero());

    // a 1-homomorphism is a 1-cocycle
    Cochain<FloquetModule> hom{1, m, [&m](const std::vector<GroupElement>& t) {
                                   return FloquetElement::constant(1, GaussRat(Rational(t[0].coords[0] * 3)));
                               }};
    auto dhom = coboundary(hom);
    for (int i = 0; i < 10; ++i)
        CHECK(dhom(random_tuple(m.group(), rng, 2, 4)).is_zero());

    // delta(delta c) = 0 for a generic normalized cochain
    FloquetElement b1 = random_floquet(rng, 1, 2);
    FloquetElement b2 = random_floquet(rng, 1, 2);
    Cochain<FloquetModule> c{2, m, [&m, b1, b2](const std::vector<GroupElement>& t) {
                                 return m.mul(m.sub(m.act(b1, t[0]), b1), m.sub(m.act(b2, t[1]), b2));
                             }};
    std::vector<std::vector<GroupElement>> tuples;
    for (int i = 0; i < 6; ++i) tuples.push_back(random_tuple(m.group(), rng, 4, 2));
    CHECK(delta_delta_check(c, tuples, exact_eq).ok);
}

TEST_CASE("polynomial-like membership, exact") {
    FloquetModule m(1);
    FloquetElement a = FloquetElement::term(1, {1}, {1}, GaussRat(1)) +
                       FloquetElement::constant(1, GaussRat(3));
    auto cert = is_polynomial_like(m, a, 1);
    CHECK(cert.member);
    CHECK(cert.exact);
    CHECK_FALSE(cert.witness.has_value());

    FloquetElement x2 = xe(1, 0, 2);
    auto bad = is_polynomial_like(m, x2, 1);
    CHECK_FALSE(bad.member);
    REQUIRE(bad.witness.has_value());
    std::vector<GroupElement> expected = {make_element(m.group(), {1}), make_element(m.group(), {1})};
    CHECK(*bad.witness == expected);
    // the witness value through the closed form: D^2 x^2 (1,1) = 2
    CHECK(difference_closed(m, x2, *bad.witness) == FloquetElement::constant(1, GaussRat(2)));
}

TEST_CASE("filtration and invariance of membership") {
    Rng rng(55);
    for (int r = 1; r <= 2; ++r) {
        FloquetModule m(r);
        for (int rep = 0; rep < 10; ++rep) {
            int d = static_cast<int>(rng.uniform(0, 3));
            FloquetElement a = random_floquet(rng, r, d);
            CHECK(is_polynomial_like(m, a, d).member);
            CHECK(is_polynomial_like(m, a, d + 1).member);  // filtration
            if (d > 0) CHECK_FALSE(is_polynomial_like(m, a, d - 1).member);
            // P_n is invariant under the action
            for (const auto& g : generators(m.group()))
                CHECK(is_polynomial_like(m, m.act(a, g), d).member);
        }
    }
}

TEST_CASE("values of D^n on P_n are invariant") {
    FloquetModule m(2);
    Rng rng(77);
    for (int rep = 0; rep < 10; ++rep) {
        int n = static_cast<int>(rng.uniform(1, 3));
        FloquetElement a = random_floquet(rng, 2, n);
        auto tuple = random_tuple(m.group(), rng, n, 3);
        CHECK(difference_closed(m, a, tuple).is_invariant());
    }
}

TEST_CASE("leibniz formula") {
    FloquetModule m(1);
    FloquetElement x = xe(1, 0, 1);
    GroupElement one = make_element(m.group(), {1});
    // D^1(x*x)(1) = (x+1)*1 + 1*x = 2x+1
    auto lhs = difference_closed(m, m.mul(x, x), {one});
    CHECK(lhs == m.add(xe(1, 0, 1).scaled(GaussRat(2)), FloquetElement::constant(1, GaussRat(1))));
    CHECK(leibniz_check(m, x, x, {one}, exact_eq).ok);

    Rng rng(13);
    for (int rep = 0; rep < 20; ++rep) {
        FloquetElement a = random_floquet(rng, 1, static_cast<int>(rng.uniform(0, 3)));
        FloquetElement b = random_floquet(rng, 1, static_cast<int>(rng.uniform(0, 3)));
        CHECK(leibniz_check(m, a, b, random_tuple(m.group(), rng, 5, 4), exact_eq).ok);
    }
}

TEST_CASE("ring closure certificates") {
    FloquetModule m(1);
    Rng rng(21);
    // deg <= 1 and deg <= 2 factors: D^4 of the product vanishes
    FloquetElement a = random_floquet(rng, 1, 1);
    FloquetElement b = random_floquet(rng, 1, 2);
    CHECK(ring_closure_check(m, a, b, 2, 3).ok);
    // a failing case reports the escaping witness
    auto rep = ring_closure_check(m, b, b, 2, 3);
    CHECK_FALSE(rep.ok);
    CHECK(rep.detail.find("left factor") != std::string::npos);
}

TEST_CASE("A^G-linearity of D^n") {
    FloquetModule m(1);
    Rng rng(31);
    FloquetElement inv = FloquetElement::harmonic(1, {1});
    FloquetElement b = random_floquet(rng, 1, 2);
    std::vector<std::vector<GroupElement>> tuples;
    for (int n = 1; n <= 3; ++n) tuples.push_back(random_tuple(m.group(), rng, n, 3));
    for (const auto& t : tuples)
        CHECK(invariant_linearity_check(m, inv, b, {t}, exact_eq).ok);
}

TEST_CASE("recursion identity") {
    FloquetModule m(1);
    FloquetElement x2 = xe(1, 0, 2);
    // n = 1 at (1,2): both sides equal the constant 4
    GroupElement g1 = make_element(m.group(), {1});
    GroupElement g2 = make_element(m.group(), {2});
    auto lhs = difference_closed(m, x2, {g1, g2});
    CHECK(lhs == FloquetElement::constant(1, GaussRat(4)));
    CHECK(recursion_identity_check(m, x2, 1, {{g1, g2}}, exact_eq).ok);

    Rng rng(61);
    FloquetModule m2(2);
    for (int n = 0; n <= 3; ++n) {
        FloquetElement a = random_floquet(rng, 2, 3);
        std::vector<std::vector<GroupElement>> tuples;
        for (int i = 0; i < 5; ++i) tuples.push_back(random_tuple(m2.group(), rng, n + 1, 3));
        CHECK(recursion_identity_check(m2, a, n, tuples, exact_eq).ok);
    }
}

TEST_CASE("coboundary of D^n") {
    FloquetModule m(1);
    Rng rng(71);
    for (int n = 1; n <= 4; ++n) {
        FloquetElement a = random_floquet(rng, 1, 3);
        std::vector<std::vector<GroupElement>> tuples;
        for (int i = 0; i < 4; ++i) tuples.push_back(random_tuple(m.group(), rng, n + 1, 2));
        CHECK(delta_relation_check(m, a, n, tuples, exact_eq).ok);
    }
    // on P_n the n-th difference is an n-cocycle
    for (int n = 1; n <= 3; ++n) {
        FloquetElement a = random_floquet(rng, 1, n);
        auto dn = iterated_difference(m, a, n);
        auto delta_dn = coboundary(dn);
        for (int i = 0; i < 4; ++i)
            CHECK(delta_dn(random_tuple(m.group(), rng, n + 1, 2)).is_zero());
    }
}

TEST_CASE("symmetry: asserted for abelian, reported for heisenberg") {
    FloquetModule m(2);
    Rng rng(81);
    for (int rep = 0; rep < 5; ++rep) {
        int n = static_cast<int>(rng.uniform(1, 3));
        FloquetElement a = random_floquet(rng, 2, n);
        for (int k = 1; k <= n + 1; ++k) {
            std::vector<std::vector<GroupElement>> tuples;
            for (int i = 0; i < 3; ++i) tuples.push_back(random_tuple(m.group(), rng, k, 2));
            CHECK(symmetry_report(m, a, k, tuples, exact_eq).symmetric);
        }
    }

    GroupFnModule hm(GroupSpec::heisenberg());
    GroupFunction u = heis_c();
    GroupElement x = make_element(hm.group(), {1, 0, 0});
    GroupElement y = make_element(hm.group(), {0, 1, 0});
    GroupElement e = identity(hm.group());
    // D^2 u (x, y) = 1 but D^2 u (y, x) = 0: genuinely asymmetric
    CHECK(difference_closed(hm, u, {x, y})(e) == GaussRat(1));
    CHECK(difference_closed(hm, u, {y, x})(e) == GaussRat(0));
    auto eq = [&](const GroupFunction& a, const GroupFunction& b) { return a(e) == b(e); };
    auto rep = symmetry_report(hm, u, 2, {{x, y}}, eq);
    CHECK(rep.arity == 2);
    CHECK_FALSE(rep.symmetric);
    CHECK_FALSE(rep.counterexample.empty());
}

TEST_CASE("sampled membership returns counterexamples") {
    NumericModule m(1);
    Rng rng(91);
    SampleParams p;
    NumericFunction sq{[](const std::vector<double>& x) {
        return std::complex<double>(x[0] * x[0], 0.0);
    }};
    auto good = is_polynomial_like_sampled(m, sq, 2, rng, p);
    CHECK(good.member);
    auto bad = is_polynomial_like_sampled(m, sq, 1, rng, p);
    CHECK_FALSE(bad.member);
    CHECK(bad.witness.has_value());
}

TEST_CASE("simplex point enumeration") {
    auto pts = simplex_points(2, 2);
    REQUIRE(pts.size() == 6);  // C(2+2,2)
    CHECK(pts.front() == std::vector<long>{0, 0});
    // ordered by total
    CHECK(pts[1] == std::vector<long>{0, 1});
    CHECK(pts[2] == std::vector<long>{1, 0});
    CHECK(pts.back() == std::vector<long>{2, 0});
}
