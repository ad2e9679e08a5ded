#pragma once

#include <optional>
#include <string>
#include <vector>

#include "greedy/angle.hpp"
#include "greedy/tree.hpp"

namespace greedy {

// One processed node of the bottom-up sweep, for explanation output.
struct AngleTraceEntry {
    std::string node;
    std::string rule;  // "leaf", "star", a combine-case name, or "deg5"
    AngleBound bound;
};

struct AngleAnnotation {
    AngleBound result;
    std::vector<AngleTraceEntry> trace;  // in processing order
    // Per-node bounds keyed by node id (only nodes that were processed).
    std::vector<std::pair<std::string, AngleBound>> per_node;
};

// Tight upper bound on the opening angle of any greedy drawing of `sub`
// (the bottom-up sweep over the rooted subtree). Returns NoOpenAngle when a
// degree-5 (or larger) node occurs below the root or a closed combine row
// fires. Linear in the subtree size.
AngleBound get_open_angle(const RootedSubtree& sub);
AngleAnnotation get_open_angle_annotated(const RootedSubtree& sub);

// The order k with contract_degree2(sub) isomorphic as a rooted tree to the
// caterpillar Q_k, if any. Requires maximum degree 3.
std::optional<int> caterpillar_order(const RootedSubtree& sub);

// 90 + 30/2^k degrees, the bound carried by an order-k caterpillar.
Rat caterpillar_bound(int k);

}  // namespace greedy
