#include <doctest.h>

#include <random>

#include "greedy/generators.hpp"
#include "greedy/opening_angle.hpp"

using namespace greedy;

namespace {

RootedSubtree rooted_at_leaf(const Tree& t, const std::string& leaf) {
    int r = t.index_of(leaf);
    REQUIRE(r >= 0);
    REQUIRE(t.degree(r) == 1);
    return {t, r, t.neighbors(r)[0]};
}

Tree random_subdivision(const Tree& t, std::mt19937& rng, int rounds) {
    Tree cur = t;
    for (int i = 0; i < rounds; ++i) {
        auto edges = cur.edges();
        auto [u, v] = edges[std::uniform_int_distribution<size_t>(0, edges.size() - 1)(rng)];
        cur = subdivide_edge(cur, u, v, "rs" + std::to_string(i) + "_" + std::to_string(rng() % 1000000));
    }
    return cur;
}

}  // namespace

TEST_CASE("paths carry exact 180") {
    for (int n : {2, 3, 7}) {
        Tree t = make_path(n);
        CHECK(get_open_angle(rooted_at_leaf(t, "p0")) == AngleBound::path());
    }
    Tree one;
    one.add_node("a");
    one.add_node("b");
    one.add_edge("a", "b");
    RootedSubtree s{one, 0, 1};
    CHECK(get_open_angle(s) == AngleBound::path());
}

TEST_CASE("Q_k bound is exactly 90 + 30/2^k") {
    for (int k = 0; k <= 8; ++k) {
        Tree q = make_caterpillar(k);
        AngleBound b = get_open_angle(rooted_at_leaf(q, "b0"));
        CHECK(b.kind == BoundKind::StrictSupremum);
        CHECK(b.value == caterpillar_bound(k));
    }
}

TEST_CASE("Q_k bound survives subdivision") {
    std::mt19937 rng(5);
    for (int k = 0; k <= 4; ++k) {
        Tree q = make_caterpillar(k);
        for (int rep = 0; rep < 5; ++rep) {
            Tree sub = random_subdivision(q, rng, 6);
            CHECK(get_open_angle(rooted_at_leaf(sub, "b0")).value == caterpillar_bound(k));
        }
    }
}

TEST_CASE("two sibling triples combine by case IV to 60") {
    // root r0 - v; v has two K_{1,3} children hanging below.
    Tree t = parse_tree(
        "r0 v\n"
        "v a\na a1\na a2\na a3\n"
        "v b\nb b1\nb b2\nb b3\n");
    // each triple contributes 120-, wait: subtree at a: a1..a3 leaves ->
    // star bound at a uses degree 4 (three leaves + v) -> 60. Use 2-leaf
    // triples instead:
    Tree u = parse_tree(
        "r0 v\n"
        "v a\na a1\na a2\n"
        "v b\nb b1\nb b2\n");
    AngleBound bound = get_open_angle(rooted_at_leaf(u, "r0"));
    CHECK(bound == AngleBound::sup(Rat(60)));
    (void)t;
}

TEST_CASE("degree-5 below the root closes the angle") {
    Tree t = make_star(5);  // center degree 5
    Tree with_root = t;
    with_root.add_edge("x1", "rr");
    CHECK(get_open_angle(rooted_at_leaf(with_root, "rr")).is_closed());
}

TEST_CASE("degree >= 6 below the root closes the angle") {
    Tree t = make_star(6);
    t.add_edge("x1", "rr");
    CHECK(get_open_angle(rooted_at_leaf(t, "rr")).is_closed());
}

TEST_CASE("case II.i chain: Q0 under an extra degree-3 node gives 105") {
    // Q1 rooted at b0 == a Q0 subtree one combine step below: 105-.
    Tree q1 = make_caterpillar(1);
    CHECK(get_open_angle(rooted_at_leaf(q1, "b0")).value == Rat(105));
}

TEST_CASE("subdivision invariance on random subtrees") {
    std::mt19937 rng(17);
    int done = 0;
    while (done < 120) {
        Tree t = random_tree(11, 4, rng);
        // pick a leaf as the root
        std::string leaf;
        for (int v = 0; v < t.node_count(); ++v)
            if (t.degree(v) == 1) {
                leaf = t.id_of(v);
                break;
            }
        AngleBound base = get_open_angle(rooted_at_leaf(t, leaf));
        Tree sub = random_subdivision(t, rng, 4);
        AngleBound after = get_open_angle(rooted_at_leaf(sub, leaf));
        CHECK(base.value == after.value);
        CHECK(base.kind == after.kind);
        ++done;
    }
}

TEST_CASE("annotation trace visits every node exactly once on open subtrees") {
    Tree q3 = make_caterpillar(3);
    auto ann = get_open_angle_annotated(rooted_at_leaf(q3, "b0"));
    CHECK((int)ann.trace.size() == q3.node_count() - 1);
}

TEST_CASE("caterpillar order detection") {
    for (int k = 0; k <= 5; ++k) {
        Tree q = make_caterpillar(k);
        auto got = caterpillar_order(rooted_at_leaf(q, "b0"));
        REQUIRE(got.has_value());
        CHECK(*got == k);
        // consistency with the computed bound
        CHECK(get_open_angle(rooted_at_leaf(q, "b0")).value == caterpillar_bound(*got));
    }
    std::mt19937 rng(23);
    for (int k = 0; k <= 3; ++k) {
        Tree sub = random_subdivision(make_caterpillar(k), rng, 7);
        auto got = caterpillar_order(rooted_at_leaf(sub, "b0"));
        REQUIRE(got.has_value());
        CHECK(*got == k);
    }
    // two sibling triples are not a caterpillar
    Tree u = parse_tree("r0 v\nv a\na a1\na a2\nv b\nb b1\nb b2\n");
    CHECK(!caterpillar_order(rooted_at_leaf(u, "r0")).has_value());
    // a path is not a caterpillar
    CHECK(!caterpillar_order(rooted_at_leaf(make_path(5), "p0")).has_value());
}
