#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "zerosum/json_io.hpp"

using namespace zerosum;
using testutil::el;

TEST_SUITE("json") {

TEST_CASE("sequence documents") {
    GroupSpec G({2, 2, 4});
    const Sequence S(G, {{el({1, 1, 0}), 2}, {el({0, 0, 1}), 3}});
    CHECK(to_json(S).dump() == R"({"group":[2,2,4],"elements":[[[0,0,1],3],[[1,1,0],2]]})");
    CHECK(sequence_from_json(to_json(S)) == S);
    CHECK(to_json(Sequence(G)).dump() == R"({"group":[2,2,4],"elements":[]})");

    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        GroupSpec H(t % 2 ? std::vector<int>{3, 9} : std::vector<int>{2, 2, 6});
        const Sequence R = testutil::random_sequence(H, static_cast<int>(rng() % 15), rng);
        const std::string text = to_json(R).dump();
        CHECK(sequence_from_json(parse_json(text)) == R);
        CHECK(to_json(sequence_from_json(parse_json(text))).dump() == text);
    }
}

TEST_CASE("witness documents") {
    GroupSpec G({2, 2, 4});
    const std::string text =
        R"({"label":"s3","basis":[[1,0,0],[0,1,0],[0,0,1]],)"
        R"("params":{"alpha":1,"beta":0,"gamma":0,"d":[[0,0,0],[0,0,0],[0,0,0],[0,1,0],[1,0,0]]},)"
        R"("translation":[1,0,2]})";
    const FamilyWitness w = witness_from_json(G, parse_json(text));
    CHECK(w.label == FamilyLabel::s3);
    CHECK(w.basis.declared_orders == std::vector<int>{2, 2, 4});
    CHECK(w.int_param("alpha") == 1);
    CHECK(w.element_param("d").size() == 5);
    CHECK(w.translation == el({1, 0, 2}));
    CHECK(to_json(w).dump() == text);
    CHECK(generate(w, G).length() == 10);

    for (auto l : {FamilyLabel::D1, FamilyLabel::eta3, FamilyLabel::s1})
        for (const auto& v : family_witnesses(GroupSpec({2, 2, 6}), l))
            CHECK(witness_from_json(GroupSpec({2, 2, 6}), to_json(v)) == v);
}

TEST_CASE("checkpoint documents") {
    SearchCheckpoint cp;
    cp.completed_tasks = {0, 3, 4};
    cp.longest = 7;
    cp.longest_reps = {{1, 2, 3}};
    cp.collected = {};
    cp.classes_by_length = {1, 4, 9};
    cp.nodes = 12345;
    const auto back = checkpoint_from_json(parse_json(to_json(cp).dump()));
    CHECK(back.completed_tasks == cp.completed_tasks);
    CHECK(back.longest == cp.longest);
    CHECK(back.longest_reps == cp.longest_reps);
    CHECK(back.classes_by_length == cp.classes_by_length);
    CHECK(back.nodes == cp.nodes);
}

TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_json("{\"group\":"), FormatError);
    CHECK_THROWS_AS(sequence_from_json(parse_json(R"({"group":[2,2]})")), FormatError);
    CHECK_THROWS_AS(sequence_from_json(parse_json(R"({"group":[2,2],"elements":[[[0,1],0]]})")), FormatError);
    CHECK_THROWS_AS(sequence_from_json(parse_json(R"({"group":[2,2],"elements":[[[0,1]]]})")), FormatError);
    CHECK_THROWS_AS(sequence_from_json(parse_json(R"({"group":[2,2],"elements":[[[0,"a"],1]]})")), FormatError);
    CHECK_THROWS_AS(sequence_from_json(parse_json(R"({"group":[2,2],"elements":[[[0,2],1]]})")), ArityMismatch);
    CHECK_THROWS_AS(witness_from_json(GroupSpec({2, 2, 4}), parse_json(R"({"label":"s1"})")), FormatError);
    CHECK(parse_group("2,2,4") == GroupSpec({2, 2, 4}));
    CHECK_THROWS_AS(parse_group("2,,4"), InvalidGroup);
    CHECK_THROWS_AS(parse_group("2,x"), InvalidGroup);
    CHECK_THROWS_AS(parse_group(""), InvalidGroup);
}

}
