#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "greedy/generators.hpp"
#include "greedy/tree.hpp"

using namespace greedy;

TEST_CASE("parse basic path") {
    Tree t = parse_tree("a b\nb c");
    CHECK(t.node_count() == 3);
    CHECK(t.edge_count() == 2);
    CHECK(t.is_path());
}

TEST_CASE("parse K_1,6 is fine, rejection happens later") {
    std::string text;
    for (int i = 1; i <= 6; ++i) text += "r x" + std::to_string(i) + "\n";
    Tree t = parse_tree(text);
    CHECK(t.max_degree() == 6);
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_AS(parse_tree("a b\nb a"), ParseError);
    try {
        parse_tree("a b\nb a");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
    }
    CHECK_THROWS_AS(parse_tree("a a"), ParseError);
    CHECK_THROWS_AS(parse_tree("a b\nc d"), ParseError);   // disconnected
    CHECK_THROWS_AS(parse_tree("a b\nb c\nc a"), ParseError);  // cycle
    CHECK_THROWS_AS(parse_tree("# nothing\n\n"), ParseError);
}

TEST_CASE("comments and blank lines ignored") {
    Tree t = parse_tree("# a tree\na b # trailing\n\n  b c\n");
    CHECK(t.node_count() == 3);
}

TEST_CASE("serialize sorts edges lexicographically") {
    Tree t = parse_tree("zz a\na mm");
    CHECK(serialize_tree(t) == "a mm\na zz\n");
}

TEST_CASE("parse-serialize-parse identity") {
    std::mt19937 rng(7);
    for (int it = 0; it < 50; ++it) {
        Tree t = random_tree(12, 5, rng);
        Tree u = parse_tree(serialize_tree(t));
        CHECK(serialize_tree(u) == serialize_tree(t));
        CHECK(canonical_form(u) == canonical_form(t));
    }
}

TEST_CASE("contract path to edge") {
    Tree t = parse_tree("a b\nb c\nc d");
    Tree c = contract_degree2(t);
    CHECK(c.node_count() == 2);
    CHECK(c.has_node("a"));
    CHECK(c.has_node("d"));
}

TEST_CASE("contract subdivided K_1,3 back to K_1,3") {
    Tree t = parse_tree("r m1\nm1 x\nr m2\nm2 y\nr m3\nm3 z");
    Tree c = contract_degree2(t);
    CHECK(canonical_form(c) == canonical_form(make_star(3)));
}

TEST_CASE("contract subdivision of Q1 back to Q1") {
    Tree q1 = make_caterpillar(1);
    Tree sub = subdivide_all_edges(q1);
    CHECK(canonical_form(contract_degree2(sub)) == canonical_form(q1));
}

TEST_CASE("contraction is idempotent and keeps degrees >= 3") {
    std::mt19937 rng(3);
    for (int it = 0; it < 100; ++it) {
        Tree t = random_tree(14, 6, rng);
        Tree c1 = contract_degree2(t);
        Tree c2 = contract_degree2(c1);
        CHECK(serialize_tree(c1) == serialize_tree(c2));
        std::multiset<int> before, after;
        for (int v = 0; v < t.node_count(); ++v)
            if (t.degree(v) >= 3) before.insert(t.degree(v));
        for (int v = 0; v < c1.node_count(); ++v)
            if (c1.degree(v) >= 3) after.insert(c1.degree(v));
        CHECK(before == after);
    }
}

TEST_CASE("split_at_edge overlaps exactly in the edge") {
    Tree t = parse_tree("a b\nb c");
    auto [left, right] = split_at_edge(t, "b", "c");
    // T_b + bc rooted at c has nodes {a,b,c}; T_c + bc rooted at b has {b,c}.
    CHECK(left.tree.node_count() == 3);
    CHECK(left.root_id() == "c");
    CHECK(right.tree.node_count() == 2);
    CHECK(right.root_id() == "b");
    CHECK_THROWS(split_at_edge(t, "a", "c"));
}

TEST_CASE("split halves re-merge to the original tree") {
    std::mt19937 rng(11);
    for (int it = 0; it < 40; ++it) {
        Tree t = random_tree(10, 5, rng);
        auto edges = t.edges();
        auto [u, v] = edges[it % edges.size()];
        auto [a, b] = split_at_edge(t, t.id_of(u), t.id_of(v));
        std::set<std::string> merged;
        for (int x = 0; x < a.tree.node_count(); ++x) merged.insert(a.tree.id_of(x));
        size_t na = merged.size();
        for (int x = 0; x < b.tree.node_count(); ++x) merged.insert(b.tree.id_of(x));
        CHECK((int)merged.size() == t.node_count());
        CHECK(na + b.tree.node_count() == merged.size() + 2);  // overlap is {u, v}
        std::set<std::string> edge_set;
        auto collect = [&](const Tree& tt) {
            for (auto [x, y] : tt.edges()) {
                std::string ex = tt.id_of(x), ey = tt.id_of(y);
                if (ey < ex) std::swap(ex, ey);
                edge_set.insert(ex + "|" + ey);
            }
        };
        collect(a.tree);
        collect(b.tree);
        CHECK((int)edge_set.size() == t.edge_count());
    }
}

TEST_CASE("enumerate_trees small counts") {
    CHECK(enumerate_trees(3, 3).size() == 1);
    CHECK(enumerate_trees(4, 6).size() == 2);
    // Full free-tree counts with no effective degree bound.
    std::map<int, size_t> expect{{1, 1}, {2, 1}, {3, 1}, {4, 2}, {5, 3}, {6, 6}, {8, 23}};
    for (auto [n, cnt] : expect) CHECK(enumerate_trees(n, 19).size() == cnt);
}

TEST_CASE("enumerate_trees n=7 equals Pruefer brute force") {
    // Independent oracle: all labeled trees on 7 nodes via Pruefer
    // sequences, counted up to isomorphism.
    std::set<std::string> canon;
    int n = 7;
    std::vector<int> seq(n - 2, 0);
    while (true) {
        // decode
        std::vector<int> degree(n, 1);
        for (int s : seq) ++degree[s];
        Tree t;
        for (int v = 0; v < n; ++v) t.add_node("v" + std::to_string(v));
        std::set<int> leaves;
        std::vector<int> deg = degree;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1) leaves.insert(v);
        std::vector<int> sq(seq.begin(), seq.end());
        for (int s : sq) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            t.add_edge_idx(leaf, s);
            if (--deg[s] == 1) leaves.insert(s);
            deg[leaf] = 0;
        }
        auto it = leaves.begin();
        int a = *it++;
        int b = *it;
        t.add_edge_idx(a, b);
        canon.insert(canonical_form(t));
        // next sequence
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    CHECK(canon.size() == 11);
    auto mine = enumerate_trees(7, 6);
    std::set<std::string> mine_canon;
    for (auto& t : mine) mine_canon.insert(canonical_form(t));
    CHECK(mine_canon == canon);
    CHECK(mine.size() == mine_canon.size());  // no duplicates
}

TEST_CASE("enumerate respects the degree bound") {
    for (auto& t : enumerate_trees(8, 3)) CHECK(t.max_degree() <= 3);
    // stars need max degree n-1
    auto t7 = enumerate_trees(7, 5);
    CHECK(t7.size() == 10);  // 11 free trees minus the star K_{1,6}
}

TEST_CASE("caterpillar and five-crab builders have the advertised shape") {
    Tree q0 = make_caterpillar(0);
    CHECK(canonical_form(q0) == canonical_form(make_star(3)));  // Q0 = K_{1,3}
    Tree crab = make_five_crab({0, 0, 0, 0, 0});
    CHECK(crab.max_degree() == 3);
    // three hubs plus five caterpillars whose b0 is absorbed by the hub
    CHECK(crab.node_count() == 3 + 5 * 3);
}
