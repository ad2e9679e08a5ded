#pragma once

#include <optional>
#include <string>
#include <vector>

#include "greedy/rational.hpp"

namespace greedy {

// Membership instance for the wheel-polygon problem: n angle bounds,
// sorted descending. Valid entries lie in (0,60] u (90,120] u {180}.
struct WheelInstance {
    int n = 0;
    std::vector<Rat> phis;  // sorted descending

    static WheelInstance make(std::vector<Rat> phis);  // validates and sorts
    Rat sum() const;
    Rat angle_sum_threshold() const { return Rat((n - 2) * 180); }
};

// Candidate solution of the angle-assignment problem for one cyclic
// ordering. Corner i has interior angle beta[i] + gamma[i+1], bounded by
// phis[ordering[i]]; triangle i at the hub spans alpha[i].
struct WheelAssignment {
    std::vector<int> ordering;  // corner -> phi index
    std::vector<double> alpha, beta, gamma;  // degrees
    double eps = 0;    // smallest strict margin over the linear constraints
    double omega = 0;  // sin-product residual

    int n() const { return (int)ordering.size(); }
    double interior_angle(int corner) const;  // beta[i] + gamma[i+1]
};

struct SimplexPoint {
    std::vector<double> beta, gamma;  // degrees
    std::vector<int> tau;             // corner -> phi index
};

// prod sin(beta) - prod sin(gamma); inputs in degrees.
double evaluate_omega(const std::vector<double>& beta, const std::vector<double>& gamma);
double evaluate_omega(const SimplexPoint& p);

struct AssignmentReport {
    bool ok = false;
    bool linear_ok = false;        // all inequalities with strict margin eps > 0
    bool sums_ok = false;          // alpha+beta+gamma = 180, sum alpha = 360 (1e-9 deg)
    bool wheel_ok = false;         // |omega| <= 1e-9
    bool closure_ok = false;       // polygon closes within 1e-7 relative
    bool star_ok = false;          // |r v_i| < |v_{i-1} v_i| strictly
    bool convex_ok = false;
    double omega = 0;
    double closure_residual = 0;   // relative
    double min_linear_margin = 0;  // degrees
    double min_star_margin = 0;    // absolute, spoke length scale 1
    std::vector<std::string> failures;
};

AssignmentReport verify_assignment(const WheelInstance& inst, const WheelAssignment& a);

struct LpRelaxationReport {
    // One entry per distinct cyclic ordering (up to rotation and
    // reflection of the value sequence), lexicographically ordered.
    std::vector<std::vector<int>> orderings;
    std::vector<bool> feasible;       // eps > 0 achievable without the wheel condition
    std::vector<Rat> max_eps;         // exact LP optimum per ordering
    bool any_feasible = false;
};

// Exact rational LP feasibility of the relaxation (drop the wheel
// condition) for every cyclic ordering. If nothing is feasible the
// instance is certainly not realizable.
LpRelaxationReport lp_relaxation_feasible(const WheelInstance& inst);

// Deterministic numeric search for a full solution on one ordering:
// exact LP corner points seed an omega sign change, then bisection along
// the segment. Absence of a result proves nothing.
std::optional<WheelAssignment> numeric_search(const WheelInstance& inst,
                                              const std::vector<int>& ordering);

struct Sufficient1x180Report {
    bool condition_i = false;   // 14 phi1 + 12 phi2 + 8 phi3 + 15 phi4 > 4500
    bool omega_negative = false;
    bool p1_in_simplex = false; // diagnostic; the sum equality fails when x = phi4
    double omega_p1 = 0;
    SimplexPoint p1;
    bool holds() const { return condition_i && omega_negative; }
};

// Sufficient condition for {180, phi1..phi4} with phi4 <= 60. Failure of
// the condition decides nothing.
Sufficient1x180Report sufficient_1x180(const Rat& phi1, const Rat& phi2, const Rat& phi3,
                                       const Rat& phi4);

enum class WheelVerdict { Yes, No, Uncertain };

struct WheelDecision {
    WheelVerdict verdict = WheelVerdict::Uncertain;
    std::string lemma;                      // fired rule, for No/Yes certificates
    std::optional<WheelAssignment> assignment;  // present for Yes when constructible
    std::vector<std::string> attempts;      // for Uncertain
    LpRelaxationReport lp;                  // filled when the LP stage ran
};

// The full decision ladder: angle-sum test, the closed-form membership
// rows, the 1x180 sufficient condition, exact LP relaxation, numeric
// search. Verdicts are deterministic and invariant under permuting phis.
WheelDecision decide_membership(const WheelInstance& inst);

}  // namespace greedy
