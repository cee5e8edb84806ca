#include <doctest.h>

#include <array>
#include <numeric>
#include <set>

#include "test_util.hpp"
#include "zerosum/group.hpp"

using namespace zerosum;
using testutil::el;

TEST_SUITE("group") {

TEST_CASE("group spec fields") {
    GroupSpec G({2, 2, 6});
    CHECK(G.exponent() == 6);
    CHECK(G.cardinality() == 24);
    CHECK(G.enumerable());
    CHECK_THROWS_AS(GroupSpec({}), InvalidGroup);
    CHECK_THROWS_AS(GroupSpec({2, 1}), InvalidGroup);
    GroupSpec big({64, 64});
    CHECK_FALSE(big.enumerable());
    CHECK_THROWS_AS(enumerate_automorphisms(big), CapExceeded);
    CHECK_THROWS_AS(enumerate_bases(big, {64, 64}), CapExceeded);
}

TEST_CASE("combine") {
    GroupSpec G({2, 2, 4});
    CHECK(combine(G, el({1, 0, 1}), el({0, 1, 3})) == el({1, 1, 0}));
    CHECK(combine(G, el({0, 0, 0}), el({1, 1, 2}), -1) == el({1, 1, 2}));
    CHECK(combine(GroupSpec({6}), el({0}), el({1}), 7) == el({1}));
    CHECK_THROWS_AS(combine(G, el({1, 0}), el({0, 1, 3})), ArityMismatch);
    CHECK_THROWS_AS(combine(G, el({2, 0, 0}), el({0, 1, 3})), ArityMismatch);
}

TEST_CASE("order_of") {
    CHECK(order_of(GroupSpec({2, 2, 4}), el({0, 0, 1})) == 4);
    CHECK(order_of(GroupSpec({2, 2, 4}), el({1, 0, 2})) == 2);
    CHECK(order_of(GroupSpec({2, 2, 6}), el({0, 1, 2})) == 6);
}

TEST_CASE("arithmetic laws hold exhaustively on small groups") {
    for (const auto& orders : std::vector<std::vector<int>>{{2, 2, 4}, {3, 6}, {8}, {2, 2, 2, 2}, {4, 4}, {2, 2, 6}}) {
        GroupSpec G(orders);
        oracle::Group O{orders};
        CAPTURE(G.to_string());
        for (int a = 0; a < G.size(); ++a) {
            const auto ga = G.element(a);
            CHECK(G.index_of(ga) == a);
            CHECK(G.exponent() % order_of(G, ga) == 0);
            CHECK(order_of(G, ga) == O.order(ga.residues));
            CHECK(combine(G, ga, ga, G.exponent()) == ga);
            CHECK(combine(G, G.zero_element(), ga) == ga);
            for (int b = 0; b < G.size(); ++b) {
                const auto gb = G.element(b);
                CHECK(combine(G, ga, gb).residues == O.add(ga.residues, gb.residues));
                CHECK(combine(G, ga, gb) == combine(G, gb, ga));
            }
        }
    }
}

TEST_CASE("normalize_orders and the C2 + C2 + C2n shape") {
    CHECK(normalize_orders({2, 2, 6}) == std::vector<int>{2, 2, 6});
    CHECK(normalize_orders({6, 2, 2}) == std::vector<int>{2, 2, 6});
    CHECK(normalize_orders({2, 2, 2, 3}) == std::vector<int>{2, 2, 6});
    CHECK(normalize_orders({4, 6}) == std::vector<int>{2, 12});
    CHECK(c2c2c2n_parameter(GroupSpec({2, 2, 4})) == 2);
    CHECK(c2c2c2n_parameter(GroupSpec({2, 2, 2})) == 1);
    CHECK(c2c2c2n_parameter(GroupSpec({3, 2, 2, 2})) == 3);
    CHECK_FALSE(c2c2c2n_parameter(GroupSpec({2, 4})).has_value());
    CHECK_FALSE(c2c2c2n_parameter(GroupSpec({2, 2, 2, 2})).has_value());
}

TEST_CASE("enumerate_bases matches brute force over all tuples") {
    struct Case {
        std::vector<int> orders, profile;
    };
    for (const auto& c : std::vector<Case>{{{2, 2, 4}, {2, 2, 4}},
                                           {{2, 2, 2}, {2, 2, 2}},
                                           {{2, 2, 6}, {2, 2, 6}},
                                           {{2, 4}, {2, 4}},
                                           {{6}, {6}},
                                           {{2, 2, 4}, {4, 4, 4}},
                                           {{2, 2, 4}, {2, 4, 2}}}) {
        GroupSpec G(c.orders);
        CAPTURE(G.to_string());
        const auto expected = oracle::bases_by_brute_force(oracle::Group{c.orders}, c.profile);
        const auto bases = enumerate_bases(G, c.profile);
        REQUIRE(bases.size() == expected.size());
        for (std::size_t i = 0; i < bases.size(); ++i) {
            std::vector<oracle::Elem> got;
            for (const auto& g : bases[i].generators) got.push_back(g.residues);
            CHECK(got == expected[i]);  // both lexicographic
            CHECK(bases[i].declared_orders == c.profile);
            CHECK(is_basis(G, bases[i]));
        }
    }
    const auto one = enumerate_bases(GroupSpec({2}), {2});
    REQUIRE(one.size() == 1);
    CHECK(one[0].generators[0] == el({1}));
    CHECK(enumerate_bases(GroupSpec({2, 2, 4}), {4, 4, 4}).empty());
}

TEST_CASE("bases span the group") {
    GroupSpec G({2, 2, 6});
    const auto bases = enumerate_bases(G, {2, 2, 6});
    for (std::size_t k = 0; k < bases.size(); k += 17) {
        std::set<GroupElement> span;
        for (long a = 0; a < 2; ++a)
            for (long b = 0; b < 2; ++b)
                for (long c = 0; c < 6; ++c) {
                    const std::array<long, 3> coeff{a, b, c};
                    span.insert(basis_combination(G, bases[k], coeff));
                }
        CHECK(span.size() == 24);
    }
    Basis bad{{el({1, 0, 0}), el({1, 0, 0}), el({0, 0, 1})}, {2, 2, 6}};
    CHECK_FALSE(is_basis(G, bad));
    Basis wrong_order{{el({1, 0, 0}), el({0, 1, 0}), el({0, 0, 2})}, {2, 2, 6}};
    CHECK_FALSE(is_basis(G, wrong_order));
}

TEST_CASE("automorphism counts against permutation search") {
    for (const auto& orders : std::vector<std::vector<int>>{{2, 2, 2}, {3}, {2, 4}, {8}, {7}, {6}}) {
        GroupSpec G(orders);
        CAPTURE(G.to_string());
        const auto brute = oracle::automorphisms_by_permutation(oracle::Group{orders});
        const auto autos = enumerate_automorphisms(G);
        CHECK(autos.size() == brute.size());
        std::set<std::vector<oracle::Elem>> a, b;
        for (const auto& phi : autos) {
            std::vector<oracle::Elem> img;
            for (int i = 0; i < G.size(); ++i) img.push_back(G.element(phi[i]).residues);
            a.insert(img);
        }
        for (const auto& phi : brute) {
            std::vector<oracle::Elem> img;
            for (const auto& [x, y] : phi) img.push_back(y);
            b.insert(img);
        }
        CHECK(a == b);
    }
    CHECK(enumerate_automorphisms(GroupSpec({2, 2, 2})).size() == 168);
    CHECK(enumerate_automorphisms(GroupSpec({3})).size() == 2);
}

TEST_CASE("automorphism tables are homomorphisms, identity first, closed under composition") {
    for (const auto& orders : std::vector<std::vector<int>>{{2, 2, 4}, {2, 2, 6}, {3, 3}}) {
        GroupSpec G(orders);
        const auto autos = enumerate_automorphisms(G);
        CAPTURE(G.to_string());
        std::vector<int> id(G.size());
        std::iota(id.begin(), id.end(), 0);
        CHECK(autos.front() == id);
        std::set<Automorphism> all(autos.begin(), autos.end());
        CHECK(all.size() == autos.size());
        for (std::size_t k = 0; k < autos.size(); ++k) {
            const auto& phi = autos[k];
            CHECK(phi[0] == 0);
            for (int a = 0; a < G.size(); ++a)
                for (int b = 0; b < G.size(); ++b) REQUIRE(phi[G.add(a, b)] == G.add(phi[a], phi[b]));
            const auto& psi = autos[(k * 7 + 3) % autos.size()];
            Automorphism comp(G.size()), inv(G.size());
            for (int a = 0; a < G.size(); ++a) {
                comp[a] = phi[psi[a]];
                inv[phi[a]] = a;
            }
            CHECK(all.count(comp));
            CHECK(all.count(inv));
        }
    }
}

TEST_CASE("canonical split") {
    SUBCASE("[2,2,4]") {
        GroupSpec G({2, 2, 4});
        const auto sd = canonical_split(G);
        CHECK(sd.subgroup_elements == std::vector<GroupElement>{el({0, 0, 0}), el({0, 0, 2})});
        CHECK(sd.quotient_spec.cardinality() == 8);
    }
    SUBCASE("[2,2,2]") {
        GroupSpec G({2, 2, 2});
        const auto sd = canonical_split(G);
        CHECK(sd.subgroup_elements.size() == 1);
        CHECK(sd.quotient_spec.cardinality() == 8);
        std::set<int> images(sd.projection.begin(), sd.projection.end());
        CHECK(images.size() == 8);
    }
    SUBCASE("[2,2,6]") {
        GroupSpec G({2, 2, 6});
        const auto sd = canonical_split(G);
        CHECK(sd.subgroup_elements == std::vector<GroupElement>{el({0, 0, 0}), el({0, 0, 2}), el({0, 0, 4})});
    }
    SUBCASE("unsupported shape") { CHECK_THROWS_AS(canonical_split(GroupSpec({4, 4})), UnsupportedShape); }
    SUBCASE("homomorphism with kernel H") {
        for (const auto& orders :
             std::vector<std::vector<int>>{{2, 2, 2}, {2, 2, 4}, {2, 2, 6}, {2, 2, 8}, {6, 2, 2}, {2, 2, 2, 3}}) {
            GroupSpec G(orders);
            CAPTURE(G.to_string());
            const auto sd = canonical_split(G);
            const auto n = *c2c2c2n_parameter(G);
            CHECK(static_cast<int>(sd.subgroup_elements.size()) == n);
            CHECK(sd.quotient_spec.cardinality() == 8);
            CHECK(normalize_orders(sd.quotient_spec.orders()) == std::vector<int>{2, 2, 2});
            const auto& Q = sd.quotient_spec;
            std::vector<GroupElement> kernel;
            for (int a = 0; a < G.size(); ++a) {
                if (sd.projection[a] == 0) kernel.push_back(G.element(a));
                for (int b = 0; b < G.size(); ++b)
                    REQUIRE(sd.projection[G.add(a, b)] == Q.add(sd.projection[a], sd.projection[b]));
            }
            CHECK(kernel == sd.subgroup_elements);
        }
    }
    SUBCASE("general split by a given subgroup") {
        GroupSpec G({4, 4});
        const auto sd = canonical_split(G, {el({2, 0})});
        CHECK(sd.subgroup_elements.size() == 2);
        CHECK(sd.quotient_spec.cardinality() == 8);
        CHECK(normalize_orders(sd.quotient_spec.orders()) == std::vector<int>{2, 4});
        for (int a = 0; a < G.size(); ++a)
            for (int b = 0; b < G.size(); ++b)
                REQUIRE(sd.projection[G.add(a, b)] ==
                        sd.quotient_spec.add(sd.projection[a], sd.projection[b]));
    }
}

}
