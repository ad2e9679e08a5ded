#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "greedy/tree.hpp"

namespace greedy {

// Small builders used all over the tests and the CLI demos.
Tree make_path(int n);                       // p0 - p1 - ... - p_{n-1}
Tree make_star(int leaves);                  // K_{1,leaves}, center "r"
Tree make_complete_binary(int nodes);        // nodes = 2^k - 1
// Caterpillar Q_k rooted at "b0": spine b0..b_{k+2}, leaf c_i at b_i for
// i = 1..k+1. Ids are prefixed so several copies can coexist in one tree.
Tree make_caterpillar(int order, const std::string& prefix = "");
// Five-crab: hubs a0 - e0 - c0; Q_{orders[0]}, Q_{orders[1]} hang at a0,
// Q_{orders[2]}, Q_{orders[3]} at c0 and Q_{orders[4]} at e0.
Tree make_five_crab(const std::vector<int>& orders);
// Degree-5 hub "r" with five subtrees realizing the given opening-angle
// bounds: 180 -> path, 120 -> triple, 60 -> quadruple, 90 + 30/2^k -> Q_k,
// 30 -> two Q_1 merged (case IV). Only those values are supported.
Tree make_degree5_tree(const std::vector<int>& numerator16ths);

// Attaches t (all ids prefixed) to `host` by an edge host_node - prefixed
// root of t.
void attach(Tree& host, const std::string& host_node, const Tree& t,
            const std::string& t_root, const std::string& prefix);

// Uniformly random labeled tree on n nodes with a degree cap (rejection on
// random attachment). Deterministic for a fixed seed.
Tree random_tree(int n, int max_degree, std::mt19937& rng);

// All non-isomorphic trees with n nodes and maximum degree at most
// max_degree, in a deterministic order. n <= 20.
std::vector<Tree> enumerate_trees(int n, int max_degree);

}  // namespace greedy
