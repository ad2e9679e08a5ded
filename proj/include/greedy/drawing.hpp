#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "greedy/tree.hpp"

namespace greedy {

struct Vec2 {
    double x = 0, y = 0;
    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double cross(Vec2 o) const { return x * o.y - y * o.x; }
    double norm() const { return std::hypot(x, y); }
    Vec2 normalized() const {
        double n = norm();
        return n == 0 ? Vec2{0, 0} : Vec2{x / n, y / n};
    }
    Vec2 rotated(double deg) const {
        double rad = deg * 3.14159265358979323846 / 180.0;
        double c = std::cos(rad), s = std::sin(rad);
        return {c * x - s * y, s * x + c * y};
    }
};

// Signed ccw angle from a to b in degrees, in (-180, 180].
double signed_angle(Vec2 a, Vec2 b);

// Straight-line drawing: one point per node of the source tree.
struct Drawing {
    Tree tree;
    std::vector<Vec2> pos;  // indexed like tree nodes

    Vec2 at(int v) const { return pos[v]; }
};

// Text format "id x y", 17 significant digits, bit-exact round trip.
std::string serialize_drawing(const Drawing& d);
// Needs the tree for the topology; every tree node must appear.
Drawing parse_drawing(const std::string& text, const Tree& t);

struct VerifyOptions {
    bool parallel = true;
    // Strict slack demanded relative to the local edge length.
    double relative_slack = 1e-9;
    size_t max_violations = 100;
};

struct Violation {
    std::string s, t, u;  // pair (s,t) with next hop u, or edge (s,t)=(u,v), node u=w
    double slack = 0;
};

struct VerifyReport {
    bool greedy_pairwise = false;
    bool greedy_bisector = false;
    double worst_margin = 0;  // min slack over all checks
    std::vector<Violation> pairwise_violations;
    std::vector<Violation> bisector_violations;
    bool ok() const { return greedy_pairwise && greedy_bisector; }
};

// Pairwise criterion: for every ordered pair (s,t) the neighbor of s on the
// tree path towards t is strictly closer to t. Bisector criterion: for every
// edge uv and every node w on u's side, |wu| < |wv|. The two coincide by
// the bisector lemma; both are computed independently.
VerifyReport verify_drawing(const Drawing& d, const VerifyOptions& opt = {});

// Opening angle of the drawn rooted subtree measured from the extremal edge
// directions: 180 - (spread of edge directions around the root direction).
// Negative values mean no open angle.
double measured_opening_angle(const Drawing& d, int root, int anchor);

struct SvgOptions {
    bool bisectors = false;
    bool labels = true;
    double node_radius = 4.0;
};
std::string export_svg(const Drawing& d, const SvgOptions& opt = {});

}  // namespace greedy
