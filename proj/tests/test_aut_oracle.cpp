#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hellylab/errors.hpp"
#include "hellylab/oracle.hpp"

using namespace hellylab;

TEST_CASE("king oracle neighborhoods") {
    auto o = king_oracle(2);
    auto n = o.neighbors({0, 0});
    CHECK(n.size() == 8);
    auto o3 = king_oracle(3);
    CHECK(o3.neighbors({1, -2, 5}).size() == 26);
}

TEST_CASE("tree oracle neighborhoods") {
    auto o = tree_oracle(3);
    CHECK(o.neighbors({}).size() == 3);       // root
    CHECK(o.neighbors({0}).size() == 3);      // parent + two children
    CHECK(o.neighbors({0, 1}).size() == 3);
}

TEST_CASE("oracle distances match the sup metric on king graphs") {
    auto o = king_oracle(2);
    CHECK(oracle_distance(o, {0, 0}, {3, 1}, 8) == 3);
    CHECK(oracle_distance(o, {0, 0}, {-2, -2}, 8) == 2);
    CHECK(oracle_distance(o, {0, 0}, {0, 0}, 8) == 0);
    CHECK(!oracle_distance(o, {0, 0}, {30, 0}, 5).has_value());
}

TEST_CASE("oracle distances on the regular tree") {
    auto o = tree_oracle(3);
    CHECK(oracle_distance(o, {}, {0, 1, 1}, 8) == 3);
    CHECK(oracle_distance(o, {0}, {1}, 8) == 2);  // through the root
}

TEST_CASE("king map parsing") {
    auto m = parse_king_map("x2+1,x1", 2);
    GraphOracle::Vertex v{4, 7};
    CHECK(m.forward(v) == GraphOracle::Vertex{8, 4});
    CHECK(m.backward(m.forward(v)) == v);

    CHECK_THROWS_AS(parse_king_map("x1,x1", 2), InputError);
    CHECK_THROWS_AS(parse_king_map("x1", 2), InputError);
    CHECK_THROWS_AS(parse_king_map("x3,x1", 2), InputError);
    CHECK_THROWS_AS(parse_king_map("y1,x2", 2), InputError);
}

TEST_CASE("identity has certified translation length 0") {
    auto o = king_oracle(2);
    auto m = parse_king_map("x1,x2", 2);
    auto r = translation_length(o, m, 2, 6, 8);
    CHECK(r.certified);
    CHECK(r.length == 0);
}

TEST_CASE("unit translation has certified length 1") {
    auto o = king_oracle(2);
    auto m = parse_king_map("x1+1,x2", 2);
    auto r = translation_length(o, m, 2, 8, 12);
    CHECK(r.certified);
    CHECK(r.period == 1);
    CHECK(r.length == 1);
    for (int k = 1; k <= 8; ++k) CHECK(r.orbit_distances[k - 1] == k);
}

TEST_CASE("shift-with-bump on Z^2 has certified length 1/2 with period 2") {
    auto o = king_oracle(2);
    auto m = parse_king_map("x2+1,x1", 2);
    auto r = translation_length(o, m, 2, 12, 12);
    CHECK(r.certified);
    CHECK(r.period == 2);
    CHECK(r.increment == 1);
    CHECK(r.length == Rat(1, 2));
    for (int k = 1; k <= 12; ++k) CHECK(r.orbit_distances[k - 1] == (k + 1) / 2);
}

TEST_CASE("shift-with-bump on Z^3 has certified length 1/3 with period 3") {
    auto o = king_oracle(3);
    auto m = parse_king_map("x2+1,x3,x1", 3);
    auto r = translation_length(o, m, 3, 12, 12);
    CHECK(r.certified);
    CHECK(r.period == 3);
    CHECK(r.increment == 1);
    CHECK(r.length == Rat(1, 3));
}

TEST_CASE("window exhaustion leaves an uncertified estimate") {
    auto o = king_oracle(2);
    auto m = parse_king_map("x1+9,x2", 2);
    auto r = translation_length(o, m, 2, 4, 4);
    CHECK(r.window_exhausted);
    CHECK(!r.certified);
}

TEST_CASE("tree translation along a two-generator axis") {
    auto o = tree_oracle(3);
    auto m = parse_tree_map("01", 3);
    CHECK(m.backward(m.forward({2, 0, 1})) == GraphOracle::Vertex{2, 0, 1});
    auto r = translation_length(o, m, 1, 8, 10);
    CHECK(r.certified);
    CHECK(r.period == 1);
    CHECK(r.length == 2);
}

TEST_CASE("a single tree generator acts elliptically") {
    auto o = tree_oracle(3);
    auto m = parse_tree_map("0", 3);
    auto r = translation_length(o, m, 1, 8, 10);
    CHECK(r.certified);
    CHECK(r.length == 0);
    CHECK(r.orbit_distances[0] == 1);  // the odd powers move the basepoint
}

TEST_CASE("tree map validation") {
    CHECK_THROWS_AS(parse_tree_map("03", 3), InputError);
    CHECK_THROWS_AS(parse_tree_map("", 3), InputError);
    CHECK_THROWS_AS(parse_tree_map("ab", 3), InputError);
}
