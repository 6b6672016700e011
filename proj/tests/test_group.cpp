#include <doctest.h>

#include "gdiff/group.hpp"

using namespace gdiff;

namespace {

std::vector<GroupElement> ball(const GroupSpec& g, long radius) {
    std::vector<GroupElement> all;
    size_t nc = identity(g).coords.size();
    std::vector<long> cur(nc, -radius);
    while (true) {
        if (g.torsion.empty()) {
            all.push_back(make_element(g, cur));
        } else {
            std::vector<long> t(g.torsion.size(), 0);
            bool more = true;
            while (more) {
                all.push_back(make_element(g, cur, t));
                more = false;
                for (size_t i = 0; i < t.size(); ++i) {
                    if (++t[i] < g.torsion[i]) {
                        more = true;
                        break;
                    }
                    t[i] = 0;
                }
            }
        }
        size_t i = 0;
        for (; i < nc; ++i) {
            if (++cur[i] <= radius) break;
            cur[i] = -radius;
        }
        if (i == nc) break;
    }
    return all;
}

}  // namespace

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(GroupSpec::free_abelian(-1), std::invalid_argument);
    CHECK_THROWS_AS(GroupSpec::fin_gen_abelian(1, {1}), std::invalid_argument);
    CHECK(GroupSpec::heisenberg().abelian_rank() == 2);
    CHECK_FALSE(GroupSpec::heisenberg().is_abelian());
    CHECK(GroupSpec::free_abelian(0).rank == 0);
}

TEST_CASE("free abelian product is componentwise") {
    GroupSpec g = GroupSpec::free_abelian(2);
    CHECK(multiply(g, make_element(g, {1, 0}), make_element(g, {0, 1})) == make_element(g, {1, 1}));
}

TEST_CASE("heisenberg product and non-commutativity") {
    GroupSpec h = GroupSpec::heisenberg();
    GroupElement x = make_element(h, {1, 0, 0});
    GroupElement y = make_element(h, {0, 1, 0});
    CHECK(multiply(h, x, y) == make_element(h, {1, 1, 1}));
    CHECK(multiply(h, y, x) == make_element(h, {1, 1, 0}));
    CHECK(multiply(h, x, y) != multiply(h, y, x));
}

TEST_CASE("commutators") {
    GroupSpec g = GroupSpec::free_abelian(3);
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        GroupElement a = random_element(g, rng, 5);
        GroupElement b = random_element(g, rng, 5);
        CHECK(is_identity(g, commutator(g, a, b)));
    }
    GroupSpec h = GroupSpec::heisenberg();
    GroupElement x = make_element(h, {1, 0, 0});
    GroupElement y = make_element(h, {0, 1, 0});
    CHECK(commutator(h, x, y) == make_element(h, {0, 0, 1}));
    GroupElement a = random_element(h, rng, 4);
    CHECK(is_identity(h, commutator(h, a, a)));
}

TEST_CASE("abelianization") {
    GroupSpec g = GroupSpec::free_abelian(2);
    GroupElement a = make_element(g, {4, -7});
    CHECK(abelianize(g, a).free_part == a.coords);

    GroupSpec h = GroupSpec::heisenberg();
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        GroupElement u = random_element(h, rng, 4);
        GroupElement v = random_element(h, rng, 4);
        auto lhs = abelianize(h, multiply(h, u, v));
        auto rhs = abelianize(h, u);
        auto rv = abelianize(h, v);
        for (size_t j = 0; j < rhs.free_part.size(); ++j) rhs.free_part[j] += rv.free_part[j];
        CHECK(lhs == rhs);
        auto c = abelianize(h, commutator(h, u, v));
        CHECK(c.free_part == std::vector<BigInt>{0, 0});
    }
    GroupElement triple = make_element(h, {3, -1, 9});
    CHECK(abelianize(h, triple).free_part == std::vector<BigInt>{3, -1});
}

TEST_CASE("group laws on small balls") {
    std::vector<GroupSpec> specs = {GroupSpec::free_abelian(1), GroupSpec::free_abelian(2),
                                    GroupSpec::fin_gen_abelian(1, {2, 3})};
    for (const auto& g : specs) {
        auto all = ball(g, 3);
        GroupElement e = identity(g);
        for (const auto& a : all) {
            CHECK(multiply(g, a, e) == a);
            CHECK(multiply(g, e, a) == a);
            CHECK(is_identity(g, multiply(g, a, inverse(g, a))));
            CHECK(is_identity(g, multiply(g, inverse(g, a), a)));
        }
        // commutativity and associativity on a subsample of triples
        Rng rng(3);
        for (int i = 0; i < 400; ++i) {
            const auto& a = all[rng.next() % all.size()];
            const auto& b = all[rng.next() % all.size()];
            const auto& c = all[rng.next() % all.size()];
            CHECK(multiply(g, a, b) == multiply(g, b, a));
            CHECK(multiply(g, multiply(g, a, b), c) == multiply(g, a, multiply(g, b, c)));
        }
    }

    GroupSpec h = GroupSpec::heisenberg();
    auto all = ball(h, 2);
    GroupElement e = identity(h);
    for (const auto& a : all) {
        CHECK(multiply(h, a, e) == a);
        CHECK(multiply(h, e, a) == a);
        CHECK(is_identity(h, multiply(h, a, inverse(h, a))));
        CHECK(is_identity(h, multiply(h, inverse(h, a), a)));
    }
    Rng rng(5);
    for (int i = 0; i < 3000; ++i) {
        GroupElement a = random_element(h, rng, 3);
        GroupElement b = random_element(h, rng, 3);
        GroupElement c = random_element(h, rng, 3);
        CHECK(multiply(h, multiply(h, a, b), c) == multiply(h, a, multiply(h, b, c)));
    }
}

TEST_CASE("mismatched spec is a structural error") {
    GroupSpec g2 = GroupSpec::free_abelian(2);
    GroupSpec g3 = GroupSpec::free_abelian(3);
    GroupElement a = make_element(g3, {1, 2, 3});
    CHECK_THROWS_AS(multiply(g2, a, a), std::invalid_argument);
}

TEST_CASE("pi_product") {
    GroupSpec g = GroupSpec::free_abelian(1);
    std::vector<GroupElement> t = {make_element(g, {1}), make_element(g, {2}), make_element(g, {4})};
    CHECK(is_identity(g, pi_product(g, {1, 2, 3}, t)));
    CHECK(pi_product(g, {2}, t) == make_element(g, {5}));
    CHECK(pi_product(g, {}, t) == make_element(g, {7}));

    GroupSpec h = GroupSpec::heisenberg();
    std::vector<GroupElement> ht = {make_element(h, {1, 0, 0}), make_element(h, {5, 5, 5}),
                                    make_element(h, {0, 1, 0})};
    CHECK(pi_product(h, {2}, ht) == make_element(h, {1, 1, 1}));

    CHECK_THROWS_AS(pi_product(g, {2, 2}, t), std::invalid_argument);
    CHECK_THROWS_AS(pi_product(g, {0}, t), std::invalid_argument);
    CHECK_THROWS_AS(pi_product(g, {4}, t), std::invalid_argument);
}

TEST_CASE("generators and torsion reduction") {
    GroupSpec g = GroupSpec::fin_gen_abelian(2, {3});
    auto gens = generators(g);
    REQUIRE(gens.size() == 3);
    CHECK(gens[0] == make_element(g, {1, 0}));
    CHECK(gens[2].torsion == std::vector<long>{1});
    GroupElement t = make_element(g, {0, 0}, {5});
    CHECK(t.torsion == std::vector<long>{2});
    GroupElement t2 = multiply(g, t, t);
    CHECK(t2.torsion == std::vector<long>{1});
    CHECK(is_identity(g, multiply(g, t2, t)));
}
