#pragma once

#include <string>
#include <vector>

#include "greedy/rational.hpp"

namespace greedy {

// Opening-angle bound of a rooted subtree. Non-trivial subtrees only ever
// get strict suprema; exact 180 is reserved for paths; closed angles carry
// value 0.
enum class BoundKind { ExactlyAchievable, StrictSupremum, NoOpenAngle };

struct AngleBound {
    Rat value;  // degrees
    BoundKind kind = BoundKind::NoOpenAngle;

    static AngleBound path() { return {Rat(180), BoundKind::ExactlyAchievable}; }
    static AngleBound sup(Rat v) { return {std::move(v), BoundKind::StrictSupremum}; }
    static AngleBound closed() { return {Rat(0), BoundKind::NoOpenAngle}; }

    bool is_path() const { return kind == BoundKind::ExactlyAchievable; }
    bool is_closed() const { return kind == BoundKind::NoOpenAngle; }
    bool open() const { return kind != BoundKind::NoOpenAngle; }
    bool in_90_120() const { return open() && value > 90 && value <= 120; }
    bool in_0_60() const { return open() && value > 0 && value <= 60; }

    bool operator==(const AngleBound& o) const { return value == o.value && kind == o.kind; }

    // "105⁻", "180", "closed"
    std::string str() const;
};

enum class CaseLabel { I, II_i, II_ii, III, IV, V, VI, VII };

const char* case_name(CaseLabel c);

// One row of the combine table: one to three child bounds below a node, the
// remaining edge leading up to the root.
struct CombineCase {
    CaseLabel label;
    std::vector<AngleBound> inputs;  // paths (180, exact) first, then by value desc
};

// Picks the applicable row for the given child bounds. `nontrivial` are the
// bounds of the non-path children, `path_children` counts children that are
// plain paths. Inputs that fit no open row come back as VI or VII, never as
// an exception. Must not be called with zero non-trivial children (a pure
// star of paths is handled by pure_path_star_bound).
CombineCase classify_case(std::vector<AngleBound> nontrivial, int path_children);

// Tight bound of the combined subtree for the selected row. Strict supremum
// for rows I..V, closed for VI and VII.
AngleBound combine(const CombineCase& c);

// Node whose children are all paths: 180 - (degree-2)*60 for degree <= 4.
// Degree-5 stars are the wheel solver's business and are rejected here.
AngleBound pure_path_star_bound(int node_degree);

// Exact test  sum(values) > threshold. All bounds must be open; strict
// comparison matches the algorithms' use of suprema.
bool sum_exceeds(const std::vector<AngleBound>& bounds, const Rat& threshold_degrees);

Rat bounds_sum(const std::vector<AngleBound>& bounds);

}  // namespace greedy
