#pragma once

#include <cstddef>
#include <vector>

namespace ballpark {

// Small dense linear programs: minimize c.x subject to mixed <= / ==
// rows, all variables free. Solved by a two-phase tableau simplex with
// Bland's lowest-index rule, which keeps results deterministic.
enum class LpRowKind { LessEqual, Equal };

struct LpRow {
    std::vector<double> coeffs;
    LpRowKind kind = LpRowKind::LessEqual;
    double rhs = 0.0;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    std::vector<double> x;
    double objective = 0.0;
};

LpResult solve_lp(const std::vector<double>& objective, const std::vector<LpRow>& rows);

// Phase-1 only: any point satisfying the rows, or Infeasible.
LpResult lp_feasible_point(std::size_t num_vars, const std::vector<LpRow>& rows);

}  // namespace ballpark
