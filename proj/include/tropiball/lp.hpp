#pragma once

// Small dense linear programs in inequality form. Problems solved here have at
// most a few hundred rows and ~20 variables, so a two-phase tableau simplex
// with Bland's rule is used: deterministic, no external dependencies.

#include <vector>

#include "tropiball/core.hpp"

namespace tropiball {

struct LpRow {
    std::vector<Scalar> a;
    Scalar b;
};

struct LpProblem {
    int n = 0;                       // number of (free) variables
    std::vector<Scalar> objective;   // maximize objective . z
    std::vector<LpRow> less_equal;   // a . z <= b
    std::vector<LpRow> equal;        // a . z == b
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    std::vector<Scalar> z;
    Scalar value = 0.0;
};

LpSolution lp_solve(const LpProblem& prob);

} // namespace tropiball
