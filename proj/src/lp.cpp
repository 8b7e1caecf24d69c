#include "tropiball/lp.hpp"

#include <algorithm>
#include <cmath>

namespace tropiball {

namespace {

constexpr Scalar kPivotTol = 1e-9;
constexpr Scalar kPhase1Tol = 1e-7;

struct Tableau {
    int m = 0;        // rows
    int n = 0;        // columns (excluding rhs)
    std::vector<std::vector<Scalar>> t; // m x (n+1), last column is rhs
    std::vector<Scalar> red;            // reduced costs, size n
    std::vector<int> basis;             // basic variable per row

    void pivot(int row, int col) {
        const Scalar piv = t[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        auto& prow = t[static_cast<std::size_t>(row)];
        for (Scalar& x : prow) x /= piv;
        for (int i = 0; i < m; ++i) {
            if (i == row) continue;
            auto& r = t[static_cast<std::size_t>(i)];
            const Scalar f = r[static_cast<std::size_t>(col)];
            if (f == 0.0) continue;
            for (int j = 0; j <= n; ++j) {
                r[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
            }
        }
        const Scalar f = red[static_cast<std::size_t>(col)];
        if (f != 0.0) {
            for (int j = 0; j < n; ++j) {
                red[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
            }
            objShift += f * prow[static_cast<std::size_t>(n)];
        }
        basis[static_cast<std::size_t>(row)] = col;
    }

    // Runs Bland-rule simplex on the current reduced costs (maximization).
    // Returns false when an unbounded ray is detected.
    bool iterate() {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < n; ++j) {
                if (red[static_cast<std::size_t>(j)] > kPivotTol) { enter = j; break; }
            }
            if (enter < 0) return true;

            int leave = -1;
            Scalar bestRatio = 0.0;
            for (int i = 0; i < m; ++i) {
                const Scalar a = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(enter)];
                if (a <= kPivotTol) continue;
                const Scalar ratio = t[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)] / a;
                if (leave < 0 || ratio < bestRatio ||
                    (ratio == bestRatio &&
                     basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                    leave = i;
                    bestRatio = ratio;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }

    void set_objective(const std::vector<Scalar>& cost) {
        // red_j = c_j - c_B . column_j ; objShift = c_B . rhs
        red.assign(static_cast<std::size_t>(n), 0.0);
        objShift = 0.0;
        for (int j = 0; j < n; ++j) red[static_cast<std::size_t>(j)] = cost[static_cast<std::size_t>(j)];
        for (int i = 0; i < m; ++i) {
            const Scalar cb = cost[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])];
            if (cb == 0.0) continue;
            const auto& row = t[static_cast<std::size_t>(i)];
            for (int j = 0; j < n; ++j) {
                red[static_cast<std::size_t>(j)] -= cb * row[static_cast<std::size_t>(j)];
            }
            objShift += cb * row[static_cast<std::size_t>(n)];
        }
    }

    Scalar objShift = 0.0;
};

} // namespace

LpSolution lp_solve(const LpProblem& prob) {
    const int n = prob.n;
    // Free variables are split as z = zp - zn; equalities become paired
    // inequalities. Column layout: zp(0..n-1), zn(n..2n-1), slack per row,
    // then one artificial per negative-rhs row.
    std::vector<LpRow> rows = prob.less_equal;
    for (const LpRow& e : prob.equal) {
        rows.push_back(e);
        LpRow neg;
        neg.a.resize(e.a.size());
        for (std::size_t k = 0; k < e.a.size(); ++k) neg.a[k] = -e.a[k];
        neg.b = -e.b;
        rows.push_back(neg);
    }

    const int m = static_cast<int>(rows.size());
    int nart = 0;
    for (const LpRow& r : rows) {
        if (r.b < 0.0) ++nart;
    }
    const int ncols = 2 * n + m + nart;

    Tableau tb;
    tb.m = m;
    tb.n = ncols;
    tb.t.assign(static_cast<std::size_t>(m), std::vector<Scalar>(static_cast<std::size_t>(ncols) + 1, 0.0));
    tb.basis.assign(static_cast<std::size_t>(m), -1);

    int art = 2 * n + m;
    for (int i = 0; i < m; ++i) {
        auto& row = tb.t[static_cast<std::size_t>(i)];
        const Scalar sign = rows[static_cast<std::size_t>(i)].b < 0.0 ? -1.0 : 1.0;
        for (int j = 0; j < n; ++j) {
            const Scalar a = rows[static_cast<std::size_t>(i)].a[static_cast<std::size_t>(j)];
            row[static_cast<std::size_t>(j)] = sign * a;
            row[static_cast<std::size_t>(n + j)] = -sign * a;
        }
        row[static_cast<std::size_t>(2 * n + i)] = sign; // slack
        row[static_cast<std::size_t>(ncols)] = sign * rows[static_cast<std::size_t>(i)].b;
        if (sign < 0.0) {
            row[static_cast<std::size_t>(art)] = 1.0;
            tb.basis[static_cast<std::size_t>(i)] = art;
            ++art;
        } else {
            tb.basis[static_cast<std::size_t>(i)] = 2 * n + i;
        }
    }

    LpSolution sol;

    if (nart > 0) {
        std::vector<Scalar> phase1(static_cast<std::size_t>(ncols), 0.0);
        for (int j = 2 * n + m; j < ncols; ++j) phase1[static_cast<std::size_t>(j)] = -1.0;
        tb.set_objective(phase1);
        tb.iterate(); // bounded: objective <= 0
        if (tb.objShift < -kPhase1Tol) {
            sol.status = LpStatus::Infeasible;
            return sol;
        }
        // Drive leftover artificials out of the basis; drop redundant rows.
        for (int i = 0; i < tb.m; ++i) {
            if (tb.basis[static_cast<std::size_t>(i)] < 2 * n + m) continue;
            int col = -1;
            for (int j = 0; j < 2 * n + m; ++j) {
                if (std::fabs(tb.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) > kPivotTol) {
                    col = j;
                    break;
                }
            }
            if (col >= 0) {
                tb.pivot(i, col);
            } else {
                tb.t.erase(tb.t.begin() + i);
                tb.basis.erase(tb.basis.begin() + i);
                --tb.m;
                --i;
            }
        }
        // Freeze artificial columns at zero.
        for (auto& row : tb.t) {
            for (int j = 2 * n + m; j < ncols; ++j) row[static_cast<std::size_t>(j)] = 0.0;
        }
    }

    std::vector<Scalar> phase2(static_cast<std::size_t>(ncols), 0.0);
    for (int j = 0; j < n; ++j) {
        phase2[static_cast<std::size_t>(j)] = prob.objective[static_cast<std::size_t>(j)];
        phase2[static_cast<std::size_t>(n + j)] = -prob.objective[static_cast<std::size_t>(j)];
    }
    tb.set_objective(phase2);
    if (!tb.iterate()) {
        sol.status = LpStatus::Unbounded;
        return sol;
    }

    std::vector<Scalar> full(static_cast<std::size_t>(ncols), 0.0);
    for (int i = 0; i < tb.m; ++i) {
        full[static_cast<std::size_t>(tb.basis[static_cast<std::size_t>(i)])] =
            tb.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(tb.n)];
    }
    sol.status = LpStatus::Optimal;
    sol.z.resize(static_cast<std::size_t>(n));
    sol.value = 0.0;
    for (int j = 0; j < n; ++j) {
        sol.z[static_cast<std::size_t>(j)] =
            full[static_cast<std::size_t>(j)] - full[static_cast<std::size_t>(n + j)];
        sol.value += prob.objective[static_cast<std::size_t>(j)] * sol.z[static_cast<std::size_t>(j)];
    }
    return sol;
}

} // namespace tropiball
