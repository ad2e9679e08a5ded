#pragma once

#include <vector>

#include "greedy/rational.hpp"

namespace greedy {

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rat objective;          // valid when Optimal
    std::vector<Rat> point; // optimal vertex, valid when Optimal
};

// Maximizes c.x subject to A x <= b, x >= 0, exactly over the rationals.
// Two-phase dense simplex with Bland's rule; sizes here are tiny (a dozen
// variables, a few dozen rows), so no effort is spent on sparsity.
LpResult solve_lp(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                  const std::vector<Rat>& c);

}  // namespace greedy
