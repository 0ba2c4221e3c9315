// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "sphdir/optim.hpp"

using namespace sphdir::optim;

namespace {

// f(x) = (x - 3)^2
double shifted_quadratic(const std::vector<double>& x,
                         std::vector<double>& g) {
    g[0] = 2.0 * (x[0] - 3.0);
    return (x[0] - 3.0) * (x[0] - 3.0);
}

// f(x) = (x + 5)^2; unconstrained minimum outside the box [0, 10]
double bound_quadratic(const std::vector<double>& x, std::vector<double>& g) {
    g[0] = 2.0 * (x[0] + 5.0);
    return (x[0] + 5.0) * (x[0] + 5.0);
}

double rosenbrock(const std::vector<double>& x, std::vector<double>& g) {
    const double a = 1.0 - x[0];
    const double b = x[1] - x[0] * x[0];
    g[0] = -2.0 * a - 400.0 * x[0] * b;
    g[1] = 200.0 * b;
    return a * a + 100.0 * b * b;
}

BoxSpec box1(double lo, double hi) {
    BoxSpec b;
    b.lower = {lo};
    b.upper = {hi};
    return b;
}

}  // namespace

TEST_CASE("convex quadratic with interior minimum") {
    const OptimReport r = minimize(shifted_quadratic, {0.0}, box1(0.0, 10.0));
    CHECK(r.converged);
    CHECK(std::fabs(r.minimizer[0] - 3.0) <= 1e-8);
    CHECK(r.gradient_inf_norm <= 1e-7);
}

TEST_CASE("constrained optimum parks on the active bound") {
    const OptimReport r = minimize(bound_quadratic, {4.0}, box1(0.0, 10.0));
    CHECK(r.converged);
    CHECK(r.minimizer[0] == 0.0);
}

TEST_CASE("Rosenbrock inside a box") {
    BoxSpec box;
    box.lower = {-2.0, -2.0};
    box.upper = {2.0, 2.0};
    const OptimReport r = minimize(rosenbrock, {-1.2, 1.0}, box);
    CHECK(r.converged);
    CHECK(std::fabs(r.minimizer[0] - 1.0) <= 1e-5);
    CHECK(std::fabs(r.minimizer[1] - 1.0) <= 1e-5);
}

TEST_CASE("memory 0 degrades to steepest descent and still converges") {
    OptimOptions opt;
    opt.memory = 0;
    opt.max_iter = 2000;
    const OptimReport r1 =
        minimize(shifted_quadratic, {0.0}, box1(0.0, 10.0), opt);
    CHECK(r1.converged);
    CHECK(std::fabs(r1.minimizer[0] - 3.0) <= 1e-8);
    const OptimReport r2 =
        minimize(bound_quadratic, {4.0}, box1(0.0, 10.0), opt);
    CHECK(r2.converged);
    CHECK(r2.minimizer[0] == 0.0);
}

TEST_CASE("accepted iterates decrease the objective monotonically") {
    BoxSpec box;
    box.lower = {-2.0, -2.0};
    box.upper = {2.0, 2.0};
    const OptimReport r = minimize(rosenbrock, {-1.2, 1.0}, box);
    REQUIRE(r.objective_trace.size() >= 2);
    for (std::size_t i = 1; i < r.objective_trace.size(); ++i)
        CHECK(r.objective_trace[i] <=
              r.objective_trace[i - 1] + 1e-12 * (1.0 + r.objective_trace[0]));
}

TEST_CASE("iterates never leave the box") {
    bool violated = false;
    Objective watched = [&](const std::vector<double>& x,
                            std::vector<double>& g) {
        if (x[0] < 0.0 || x[0] > 10.0) violated = true;
        return bound_quadratic(x, g);
    };
    minimize(watched, {4.0}, box1(0.0, 10.0));
    CHECK_FALSE(violated);
}

TEST_CASE("start outside the box is projected in first") {
    const OptimReport r = minimize(shifted_quadratic, {-7.0}, box1(0.0, 10.0));
    CHECK(r.converged);
    CHECK(std::fabs(r.minimizer[0] - 3.0) <= 1e-8);
}

TEST_CASE("iteration cap reported as max_iter") {
    OptimOptions opt;
    opt.max_iter = 2;
    opt.gtol = 1e-16;
    opt.step_tol = 1e-16;
    const OptimReport r = minimize(rosenbrock, {-1.2, 1.0},
                                   [] {
                                       BoxSpec b;
                                       b.lower = {-2.0, -2.0};
                                       b.upper = {2.0, 2.0};
                                       return b;
                                   }(),
                                   opt);
    CHECK_FALSE(r.converged);
    CHECK(r.termination_reason == Termination::max_iter);
    CHECK(r.iterations == 2);
}

TEST_CASE("invalid inputs are rejected") {
    BoxSpec bad;
    bad.lower = {1.0};
    bad.upper = {1.0};
    CHECK_THROWS_AS(minimize(shifted_quadratic, {0.5}, bad),
                    std::invalid_argument);
    Objective nan_objective = [](const std::vector<double>&,
                                 std::vector<double>& g) {
        g[0] = 0.0;
        return std::numeric_limits<double>::quiet_NaN();
    };
    CHECK_THROWS_AS(minimize(nan_objective, {0.5}, box1(0.0, 1.0)),
                    std::invalid_argument);
}
