// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace sphdir::optim {

/// Per-coordinate bounds; use -inf/+inf for unbounded sides.
struct BoxSpec {
    std::vector<double> lower;
    std::vector<double> upper;

    static BoxSpec lower_only(std::vector<double> lo);
    static BoxSpec unbounded(std::size_t n);
};

enum class Termination {
    gradient_tol,        // projected-gradient inf-norm <= gtol
    step_tol,            // accepted step shorter than step_tol
    max_iter,            // iteration budget exhausted
    line_search_failure  // no Armijo point after max backtracks
};

const char* termination_name(Termination t);

struct OptimReport {
    std::vector<double> minimizer;
    double objective_value = 0.0;
    double gradient_inf_norm = 0.0;  // projected gradient at the minimizer
    long iterations = 0;
    bool converged = false;
    Termination termination_reason = Termination::max_iter;
    std::vector<double> objective_trace;  // value at each accepted iterate
};

struct OptimOptions {
    int memory = 10;          // L-BFGS pairs; 0 means steepest descent
    double gtol = 1e-8;       // projected-gradient inf-norm tolerance
    double step_tol = 1e-8;   // ||x_{t+1} - x_t|| tolerance
    long max_iter = 500;
    int max_backtracks = 40;  // line-search trial budget per iteration
    double armijo_c1 = 1e-4;  // sufficient-decrease constant
    double wolfe_c2 = 0.9;    // curvature constant for interior steps
};

/// Objective callback: returns f(x) and fills grad (resized by caller).
using Objective =
    std::function<double(const std::vector<double>&, std::vector<double>&)>;

/// Projected-gradient L-BFGS for box constraints: two-loop recursion on the
/// free direction, projection onto the box, Armijo backtracking on the
/// projected step. Iterates never leave the box.
OptimReport minimize(const Objective& objective, std::vector<double> start,
                     const BoxSpec& box, const OptimOptions& options = {});

}  // namespace sphdir::optim
