#pragma once

#include <optional>
#include <string>
#include <vector>

#include "greedy/angle.hpp"
#include "greedy/opening_angle.hpp"
#include "greedy/tree.hpp"
#include "greedy/wheel.hpp"

namespace greedy {

enum class Verdict { Yes, No, Uncertain };

const char* verdict_name(Verdict v);

// Recognition result with a machine-checkable certificate. For Yes on trees
// with at least three nodes the hub and its subtree bounds are filled in;
// they drive the embedder.
struct Decision {
    Verdict verdict = Verdict::Uncertain;
    std::string rule;  // fired lemma / certificate description

    // No-certificates (whichever applies):
    std::string degree_violation_node;  // degree >= 6, or second degree-5 node
    std::string sum_violation_node;     // angle-sum failure location
    std::vector<AngleBound> sum_bounds; // bounds at that node
    std::string closed_edge_u, closed_edge_v;  // two closed angles at an edge

    // Yes-certificates / embedding support:
    std::string hub;                    // node all subtrees hang from
    std::vector<std::string> hub_neighbors;
    std::vector<AngleBound> hub_bounds; // bound per neighbor subtree
    std::optional<WheelDecision> wheel; // present when a wheel instance was solved

    std::vector<AngleTraceEntry> trace; // bottom-up annotation, for --explain
};

// Algorithm 1 / Algorithm 2 plus the degree-based rejections.
Decision decide(const Tree& t);

// Counts of pairwise independent irreducible k-tuples with
// n3 + 2 n4 + 3 n5 >= 6, when such a family exists (then no greedy drawing
// exists). Brute-force search; intended for trees up to a few dozen nodes.
struct TupleCounts {
    int n3 = 0, n4 = 0, n5 = 0;
    int score() const { return n3 + 2 * n4 + 3 * n5; }
};
std::optional<TupleCounts> tuple_negative_certificate(const Tree& t);

// Largest number of pairwise independent irreducible triples, capped at
// `cap` (the search stops once cap is reached).
int max_independent_triples(const Tree& t, int cap);

// Forbidden-subgraph characterization for trees with maximum degree 3:
// yes iff n3 <= 4 or the five-crab subtree orders match {0,0,0,*,*} or
// {0,0,1,1,*}. Cross-check oracle for decide().
struct CrabClassification {
    bool found = false;
    std::vector<int> subtree_orders;  // sorted ascending when found
};
struct BinaryCharacterization {
    Verdict verdict = Verdict::Uncertain;
    int n3 = 0;  // capped at 6
    CrabClassification crab;
};
BinaryCharacterization binary_tree_characterize(const Tree& t);

}  // namespace greedy
