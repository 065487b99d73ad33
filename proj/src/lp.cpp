#include "ballpark/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ballpark {

namespace {

// Tableau simplex on the standard form produced below. Free variables are
// split x = u - v; <= rows get a slack; rows are sign-flipped so every
// right-hand side is nonnegative, and each row gets an artificial for a
// trivially feasible phase-1 start.
struct Tableau {
    std::size_t rows = 0;
    std::size_t cols = 0;               // structural + slack + artificial
    std::vector<double> a;              // rows x cols
    std::vector<double> b;              // rhs, >= 0 at start
    std::vector<std::size_t> basis;     // basic column per row

    double& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    void pivot(std::size_t pr, std::size_t pc) {
        const double pv = at(pr, pc);
        for (std::size_t j = 0; j < cols; ++j) at(pr, j) /= pv;
        b[pr] /= pv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == pr) continue;
            const double f = at(i, pc);
            if (f == 0.0) continue;
            for (std::size_t j = 0; j < cols; ++j) at(i, j) -= f * at(pr, j);
            b[i] -= f * b[pr];
        }
        basis[pr] = pc;
    }

    // Minimize cost over the current basis; Bland's rule on both choices.
    // Returns false when unbounded.
    bool run(const std::vector<double>& cost, std::size_t usable_cols) {
        const double tol = 1e-10;
        for (std::size_t iter = 0; iter < 20000; ++iter) {
            // Reduced costs: z_j = c_j - c_B . B^-1 A_j.
            std::vector<double> y(rows);
            for (std::size_t i = 0; i < rows; ++i) y[i] = cost[basis[i]];
            std::size_t enter = usable_cols;
            for (std::size_t j = 0; j < usable_cols; ++j) {
                double r = cost[j];
                for (std::size_t i = 0; i < rows; ++i) r -= y[i] * at(i, j);
                if (r < -tol) { enter = j; break; }  // lowest index
            }
            if (enter == usable_cols) return true;  // optimal
            std::size_t leave = rows;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < rows; ++i) {
                if (at(i, enter) > tol) {
                    const double ratio = b[i] / at(i, enter);
                    if (ratio < best_ratio - 1e-12 ||
                        (ratio < best_ratio + 1e-12 &&
                         (leave == rows || basis[i] < basis[leave]))) {
                        best_ratio = ratio;
                        leave = i;
                    }
                }
            }
            if (leave == rows) return false;  // unbounded
            pivot(leave, enter);
        }
        return true;  // iteration cap: accept current basis
    }
};

}  // namespace

LpResult solve_lp(const std::vector<double>& objective, const std::vector<LpRow>& rows) {
    const std::size_t n = objective.size();
    const std::size_t m = rows.size();

    std::size_t slack_count = 0;
    for (const LpRow& r : rows)
        if (r.kind == LpRowKind::LessEqual) ++slack_count;

    const std::size_t struct_cols = 2 * n;            // u - v split
    const std::size_t slack0 = struct_cols;
    const std::size_t art0 = slack0 + slack_count;
    Tableau t;
    t.rows = m;
    t.cols = art0 + m;
    t.a.assign(t.rows * t.cols, 0.0);
    t.b.assign(m, 0.0);
    t.basis.assign(m, 0);

    std::size_t slack_idx = 0;
    for (std::size_t i = 0; i < m; ++i) {
        const LpRow& r = rows[i];
        const double sign = r.rhs < 0.0 ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n && j < r.coeffs.size(); ++j) {
            t.at(i, 2 * j) = sign * r.coeffs[j];
            t.at(i, 2 * j + 1) = -sign * r.coeffs[j];
        }
        t.b[i] = sign * r.rhs;
        if (r.kind == LpRowKind::LessEqual) {
            t.at(i, slack0 + slack_idx) = sign;
            ++slack_idx;
        }
        t.at(i, art0 + i) = 1.0;
        t.basis[i] = art0 + i;
    }

    // Phase 1: drive the artificials out.
    std::vector<double> phase1(t.cols, 0.0);
    for (std::size_t i = 0; i < m; ++i) phase1[art0 + i] = 1.0;
    t.run(phase1, t.cols);

    double infeas = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] >= art0) infeas += t.b[i];
    if (infeas > 1e-8) return {LpStatus::Infeasible, {}, 0.0};

    // Pivot leftover (degenerate) artificials out where possible.
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < art0) continue;
        for (std::size_t j = 0; j < art0; ++j) {
            if (std::abs(t.at(i, j)) > 1e-9) {
                t.pivot(i, j);
                break;
            }
        }
    }

    // Phase 2 over the structural + slack columns only.
    std::vector<double> phase2(t.cols, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        phase2[2 * j] = objective[j];
        phase2[2 * j + 1] = -objective[j];
    }
    // Rows still carrying an artificial basic variable are degenerate
    // equalities; freeze them by pricing those columns prohibitively.
    for (std::size_t j = art0; j < t.cols; ++j) phase2[j] = 0.0;
    if (!t.run(phase2, art0)) return {LpStatus::Unbounded, {}, 0.0};

    LpResult out;
    out.status = LpStatus::Optimal;
    out.x.assign(n, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        if (t.basis[i] < struct_cols) {
            const std::size_t j = t.basis[i] / 2;
            out.x[j] += (t.basis[i] % 2 == 0 ? 1.0 : -1.0) * t.b[i];
        }
    }
    out.objective = 0.0;
    for (std::size_t j = 0; j < n; ++j) out.objective += objective[j] * out.x[j];
    return out;
}

LpResult lp_feasible_point(std::size_t num_vars, const std::vector<LpRow>& rows) {
    return solve_lp(std::vector<double>(num_vars, 0.0), rows);
}

}  // namespace ballpark
