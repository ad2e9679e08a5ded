#include <doctest.h>

#include <random>

#include "greedy/decide.hpp"
#include "greedy/generators.hpp"

using namespace greedy;

TEST_CASE("star family") {
    for (int m = 1; m <= 5; ++m) CHECK(decide(make_star(m)).verdict == Verdict::Yes);
    for (int m = 6; m <= 8; ++m) {
        Decision d = decide(make_star(m));
        CHECK(d.verdict == Verdict::No);
        CHECK(d.rule.find("degree") != std::string::npos);
    }
}

TEST_CASE("paths and tiny trees") {
    CHECK(decide(make_path(1)).verdict == Verdict::Yes);
    CHECK(decide(make_path(2)).verdict == Verdict::Yes);
    CHECK(decide(make_path(9)).verdict == Verdict::Yes);
}

TEST_CASE("two degree-5 nodes reject immediately") {
    Tree t;
    t.add_edge("u", "v");
    for (int i = 0; i < 4; ++i) {
        t.add_edge("u", "a" + std::to_string(i));
        t.add_edge("v", "b" + std::to_string(i));
    }
    Decision d = decide(t);
    CHECK(d.verdict == Verdict::No);
    CHECK(d.rule.find("degree 5") != std::string::npos);
    auto counts = tuple_negative_certificate(t);
    REQUIRE(counts.has_value());
    CHECK(counts->n5 == 2);
    CHECK(counts->score() >= 6);
}

TEST_CASE("complete binary tree on 31 nodes") {
    Tree t = make_complete_binary(31);
    CHECK(decide(t).verdict == Verdict::No);
    auto counts = tuple_negative_certificate(t);
    REQUIRE(counts.has_value());
    CHECK(counts->n3 >= 6);
}

TEST_CASE("paths have no tuples") {
    CHECK(!tuple_negative_certificate(make_path(12)).has_value());
}

TEST_CASE("five-crab sums") {
    CHECK(decide(make_five_crab({0, 0, 0, 0, 0})).verdict == Verdict::Yes);
    for (int k = 0; k <= 3; ++k)
        CHECK(decide(make_five_crab({0, 0, 1, 1, k})).verdict == Verdict::Yes);
    CHECK(decide(make_five_crab({0, 1, 1, 1, 1})).verdict == Verdict::No);
    CHECK(decide(make_five_crab({0, 0, 1, 2, 2})).verdict == Verdict::No);
    CHECK(decide(make_five_crab({0, 0, 2, 2, 2})).verdict == Verdict::No);
}

TEST_CASE("degree-5 hub trees from the wheel table") {
    // K_{1,5}: five 180 bounds, the 4x180 row
    Decision d = decide(make_star(5));
    CHECK(d.verdict == Verdict::Yes);
    REQUIRE(d.wheel.has_value());
    CHECK(d.wheel->verdict == WheelVerdict::Yes);

    // {180,105,105,105,60}: LP infeasible everywhere
    Tree bad = make_degree5_tree({180 * 16, 105 * 16, 105 * 16, 105 * 16, 60 * 16});
    Decision db = decide(bad);
    CHECK(db.verdict == Verdict::No);
    REQUIRE(db.wheel.has_value());
    CHECK(db.wheel->lemma == "LP infeasible for all orderings");

    // {180,120,105,93.75,60}: numeric yes
    Tree good = make_degree5_tree({180 * 16, 120 * 16, 105 * 16, 1500, 60 * 16});
    Decision dg = decide(good);
    CHECK(dg.verdict == Verdict::Yes);
    REQUIRE(dg.wheel.has_value());
    REQUIRE(dg.wheel->assignment.has_value());
    CHECK(dg.wheel->assignment->eps >= 1e-6);
    CHECK(std::abs(dg.wheel->assignment->omega) <= 1e-9);

    // {180,120,120,120,30}: uncertain
    Tree open_case = make_degree5_tree({180 * 16, 120 * 16, 120 * 16, 120 * 16, 30 * 16});
    Decision du = decide(open_case);
    CHECK(du.verdict == Verdict::Uncertain);
}

TEST_CASE("degree-5 node with a closed subtree is rejected") {
    Tree t = make_star(5);
    // turn subtree at x1 into three sibling triples (case VII below x1)
    for (int j = 0; j < 3; ++j) {
        std::string m = "m" + std::to_string(j);
        t.add_edge("x1", m);
        t.add_edge(m, m + "a");
        t.add_edge(m, m + "b");
    }
    Decision d = decide(t);
    CHECK(d.verdict == Verdict::No);
    CHECK(d.rule.find("closed subtree") != std::string::npos);
}

TEST_CASE("negative certificate implies decide says no") {
    std::mt19937 rng(77);
    int with_cert = 0;
    for (int it = 0; it < 300; ++it) {
        Tree t = random_tree(14, 5, rng);
        auto c = tuple_negative_certificate(t);
        if (c) {
            ++with_cert;
            CHECK(decide(t).verdict == Verdict::No);
        }
    }
    CHECK(with_cert > 0);
}

TEST_CASE("binary characterization basics") {
    CHECK(binary_tree_characterize(make_path(6)).verdict == Verdict::Yes);
    CHECK(binary_tree_characterize(make_star(3)).verdict == Verdict::Yes);
    auto cbt = binary_tree_characterize(make_complete_binary(31));
    CHECK(cbt.verdict == Verdict::No);
    CHECK(cbt.n3 >= 6);
    auto good_crab = binary_tree_characterize(make_five_crab({0, 0, 0, 0, 0}));
    CHECK(good_crab.verdict == Verdict::Yes);
    auto mixed = binary_tree_characterize(make_five_crab({0, 0, 1, 1, 3}));
    CHECK(mixed.verdict == Verdict::Yes);
    if (mixed.crab.found) {
        CHECK(mixed.crab.subtree_orders == std::vector<int>{0, 0, 1, 1, 3});
    }
    CHECK(binary_tree_characterize(make_five_crab({0, 1, 1, 1, 1})).verdict == Verdict::No);
    CHECK(binary_tree_characterize(make_five_crab({0, 0, 1, 2, 2})).verdict == Verdict::No);
}

TEST_CASE("oracle agreement on random binary trees") {
    std::mt19937 rng(123);
    for (int it = 0; it < 150; ++it) {
        Tree t = random_tree(6 + (int)(rng() % 13), 3, rng);
        CHECK(binary_tree_characterize(t).verdict == decide(t).verdict);
    }
}

TEST_CASE("subdivision invariance of decide") {
    std::mt19937 rng(321);
    for (int it = 0; it < 60; ++it) {
        Tree t = random_tree(5 + (int)(rng() % 8), 5, rng);
        Verdict v = decide(t).verdict;
        CHECK(decide(subdivide_all_edges(t)).verdict == v);
    }
    // also on the named families
    CHECK(decide(subdivide_all_edges(make_five_crab({0, 1, 1, 1, 1}))).verdict == Verdict::No);
    CHECK(decide(subdivide_all_edges(make_star(5))).verdict == Verdict::Yes);
}

TEST_CASE("decide ignores node naming") {
    // same tree, different id ordering, same verdict and rule class
    Tree a = parse_tree("r x\nr y\nr z\nx p\np q");
    Tree b = parse_tree("q p\np x\nx r\nr y\nr z");
    CHECK(decide(a).verdict == decide(b).verdict);
}
