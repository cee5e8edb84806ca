#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "zerosum/engine.hpp"
#include "zerosum/families.hpp"
#include "zerosum/search.hpp"

using namespace zerosum;
using testutil::el;

namespace {

std::set<int> oracle_lengths(const LengthSet& L, int exp, int max_len) {
    std::set<int> out;
    for (int l = 1; l <= max_len; ++l) {
        if (L.kind() == LengthSet::Kind::any) out.insert(l);
        if (L.kind() == LengthSet::Kind::up_to_exponent && l <= exp) out.insert(l);
        if (L.kind() == LengthSet::Kind::exact_exponent && l == exp) out.insert(l);
        if (L.kind() == LengthSet::Kind::interval && *L.values().begin() <= l && l <= *L.values().rbegin())
            out.insert(l);
    }
    return out;
}

}  // namespace

TEST_SUITE("search") {

TEST_CASE("equivalence modes") {
    GroupSpec G({2, 2, 4});
    CHECK(EquivalenceMode::translation_legal(LengthSet::exact_exponent(), G));
    CHECK_FALSE(EquivalenceMode::translation_legal(LengthSet::short_lengths(), G));
    CHECK_FALSE(EquivalenceMode::translation_legal(LengthSet::any(), G));
    CHECK(EquivalenceMode::translation_legal(LengthSet::explicit_set({4, 8}), G));
    CHECK_THROWS_AS(EquivalenceMode::automorphism_and_translation(LengthSet::short_lengths(), G),
                    PreconditionViolation);
    CHECK(EquivalenceMode::strongest(LengthSet::exact_exponent(), G).translations());
    CHECK_FALSE(EquivalenceMode::strongest(LengthSet::short_lengths(), G).translations());
    CHECK_THROWS_AS(search_zero_sum_free(G, LengthSet::any(), EquivalenceMode::automorphism_and_translation(
                                                                   LengthSet::exact_exponent(), G)),
                    PreconditionViolation);
}

TEST_CASE("canonical_form") {
    GroupSpec G({2, 2, 2});
    const auto affine = EquivalenceMode::automorphism_and_translation(LengthSet::exact_exponent(), G);
    const Sequence zeros(G, {{G.zero_element(), 3}});
    CHECK(canonical_form(zeros, EquivalenceMode::automorphism()) == zeros);
    CHECK(canonical_form(zeros, affine) == zeros);
    CHECK(canonical_form(Sequence(G, {{el({1, 1, 0}), 3}}), affine) == zeros);
}

TEST_CASE("canonical form is constant on orbits and idempotent") {
    for (const auto& orders : std::vector<std::vector<int>>{{2, 2, 4}, {2, 2, 6}, {9}}) {
        GroupSpec G(orders);
        const auto autos = enumerate_automorphisms(G);
        const auto affine = EquivalenceMode::automorphism_and_translation(LengthSet::exact_exponent(), G);
        std::mt19937_64 rng(21);
        for (int t = 0; t < 40; ++t) {
            const Sequence S = testutil::random_sequence(G, 1 + static_cast<int>(rng() % 9), rng);
            const Sequence c = canonical_form(S, EquivalenceMode::automorphism());
            const Sequence ca = canonical_form(S, affine);
            CHECK(canonical_form(c, EquivalenceMode::automorphism()) == c);
            CHECK(canonical_form(ca, affine) == ca);
            for (const auto& phi : autos) {
                std::vector<int> img;
                for (int x : S.flat_indices()) img.push_back(phi[x]);
                const Sequence PS = Sequence::from_indices(G, img);
                REQUIRE(canonical_form(PS, EquivalenceMode::automorphism()) == c);
                const auto h = G.element(static_cast<int>(rng() % G.size()));
                REQUIRE(canonical_form(translate(PS, h), affine) == ca);
            }
        }
    }
}

TEST_CASE("constants") {
    CHECK(compute_s_L(GroupSpec({2, 2, 2}), LengthSet::interval(1, 3)).value == 5);
    CHECK(compute_s_L(GroupSpec({2, 2, 4}), LengthSet::short_lengths()).value == 8);
    CHECK(compute_s_L(GroupSpec({2, 2, 4}), LengthSet::exact_exponent()).value == 11);
    const auto d = davenport_constant(GroupSpec({2, 2, 4}));
    CHECK(d.value == 6);
    CHECK(d.lengths_agree);
    CHECK(davenport_constant(GroupSpec({2, 2, 2})).value == 4);
    for (int n = 2; n <= 12; ++n) {
        const auto r = davenport_constant(GroupSpec({n}));
        CHECK(r.value == n);
        CHECK(r.max_minimal_zero_sum_length == n);
    }
}

TEST_CASE("certificate properties") {
    for (const auto& orders : std::vector<std::vector<int>>{{2, 2, 4}, {3, 3}, {2, 6}}) {
        GroupSpec G(orders);
        for (const auto& L : {LengthSet::any(), LengthSet::short_lengths(), LengthSet::exact_exponent()}) {
            const auto r = compute_s_L(G, L);
            CHECK(r.certificate.length() == r.value - 1);
            CHECK_FALSE(has_zero_sum(r.certificate, L));
            CHECK(r.extremal_count_up_to_symmetry >= 1);
        }
        const long D = davenport_constant(G).value;
        const long eta = compute_s_L(G, LengthSet::short_lengths()).value;
        const long s = compute_s_L(G, LengthSet::exact_exponent()).value;
        CHECK(D <= eta);
        CHECK(eta <= s);
    }
}

TEST_CASE("enumerate_extremal examples") {
    GroupSpec G({2, 2, 2});
    const auto eta = enumerate_extremal(G, LengthSet::short_lengths(), EquivalenceMode::automorphism());
    REQUIRE(eta.size() == 1);
    CHECK(eta[0] == Sequence::from_indices(G, {1, 2, 3, 4, 5, 6, 7}));
    const auto s = enumerate_extremal(G, LengthSet::exact_exponent(),
                                      EquivalenceMode::automorphism_and_translation(LengthSet::exact_exponent(), G));
    REQUIRE(s.size() == 1);
    CHECK(s[0] == Sequence::from_indices(G, {0, 1, 2, 3, 4, 5, 6, 7}));

    GroupSpec H({2, 2, 4});
    const Classifier cl(H, Problem::eta_extremal);
    for (const auto& S : enumerate_extremal(H, LengthSet::short_lengths(), EquivalenceMode::automorphism())) {
        CHECK_FALSE(cl.classify(S).empty());
    }
}

TEST_CASE("enumerate_max_minimal_zero_sum examples") {
    const auto c4 = enumerate_max_minimal_zero_sum(GroupSpec({4}));
    REQUIRE(c4.size() == 1);
    CHECK(c4[0] == Sequence(GroupSpec({4}), {{el({1}), 4}}));
    for (int n : {1, 2}) {
        GroupSpec G({2, 2, 2 * n});
        const Classifier cl(G, Problem::davenport_max);
        for (const auto& S : enumerate_max_minimal_zero_sum(G)) {
            CHECK(is_minimal_zero_sum(S));
            CHECK_FALSE(cl.classify(S).empty());
        }
    }
}

TEST_CASE("enumeration is complete and duplicate-free on micro groups") {
    // Naive filter over all multisets, grouped into orbits with automorphisms
    // found by permutation search.
    for (const auto& orders : std::vector<std::vector<int>>{{2, 2, 2}, {8}, {2, 4}, {7}, {6}}) {
        GroupSpec G(orders);
        oracle::Group O{orders};
        const auto autos = oracle::automorphisms_by_permutation(O);
        const int exp = static_cast<int>(G.exponent());
        for (const auto& L : {LengthSet::any(), LengthSet::short_lengths(), LengthSet::exact_exponent(),
                              LengthSet::interval(1, 3)}) {
            const bool affine = L.kind() == LengthSet::Kind::exact_exponent;
            const auto mode = affine ? EquivalenceMode::automorphism_and_translation(L, G)
                                     : EquivalenceMode::automorphism();
            for (int len = 1; len <= 6; ++len) {
                CAPTURE(G.to_string());
                CAPTURE(L.to_string());
                CAPTURE(len);
                std::set<oracle::Multiset> orbits;
                const auto lens = oracle_lengths(L, exp, len);
                oracle::for_each_multiset(O.elements(), len, [&](const oracle::Multiset& M) {
                    if (!oracle::zero_sum(O, M, lens)) orbits.insert(oracle::orbit_key(O, autos, M, affine));
                });
                const auto reps = enumerate_zero_sum_free(G, L, mode, len);
                std::set<oracle::Multiset> hit;
                for (const auto& S : reps) {
                    const auto M = testutil::to_multiset(S);
                    CHECK_FALSE(oracle::zero_sum(O, M, lens));
                    hit.insert(oracle::orbit_key(O, autos, M, affine));
                }
                CHECK(reps.size() == hit.size());
                CHECK(hit == orbits);
            }
        }
    }
}

TEST_CASE("extremal sequences are sound under the brute-force oracle") {
    for (int n : {1, 2}) {
        GroupSpec G({2, 2, 2 * n});
        for (const auto& L : {LengthSet::short_lengths(), LengthSet::exact_exponent()}) {
            for (const auto& S : enumerate_extremal(G, L, EquivalenceMode::strongest(L, G))) {
                CHECK_FALSE(has_zero_sum(S, L));
                CHECK(brute_sigma_L(S, L).count(G.zero_element()) == 0);
            }
        }
    }
}

TEST_CASE("budget exhaustion and resume") {
    GroupSpec G({2, 2, 6});
    const auto L = LengthSet::exact_exponent();
    const auto full = compute_s_L(G, L);
    SearchOptions small;
    small.node_budget = 1500;
    SearchCheckpoint cp;
    long bound = 0;
    try {
        compute_s_L(G, L, small);
        FAIL("budget should be exhausted");
    } catch (const BudgetExceeded& e) {
        bound = e.lower_bound();
        cp = e.checkpoint();
    }
    CHECK(bound >= 1);
    CHECK(bound <= full.value);
    SearchOptions resume;
    resume.resume = cp;
    const auto resumed = compute_s_L(G, L, resume);
    CHECK(resumed.value == full.value);
    CHECK(resumed.extremal_count_up_to_symmetry == full.extremal_count_up_to_symmetry);
    CHECK(resumed.classes_by_length == full.classes_by_length);

    SearchOptions capped;
    capped.max_length = 10;
    CHECK_THROWS_AS(compute_s_L(G, L, capped), BudgetExceeded);
}

TEST_CASE("parallel search gives the same classes") {
    GroupSpec G({2, 2, 6});
    SearchOptions par;
    par.jobs = 4;
    for (const auto& L : {LengthSet::short_lengths(), LengthSet::exact_exponent()}) {
        const auto mode = EquivalenceMode::strongest(L, G);
        const auto a = search_zero_sum_free(G, L, mode);
        const auto b = search_zero_sum_free(G, L, mode, par);
        CHECK(a.longest_reps == b.longest_reps);
        CHECK(a.classes_by_length == b.classes_by_length);
        CHECK(a.nodes == b.nodes);
    }
}

}
