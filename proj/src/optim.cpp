// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#include "sphdir/optim.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <stdexcept>

namespace sphdir::optim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void project(std::vector<double>& x, const BoxSpec& box) {
    for (std::size_t i = 0; i < x.size(); ++i)
        x[i] = std::min(std::max(x[i], box.lower[i]), box.upper[i]);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

/// inf-norm of x - P(x - g), the first-order optimality measure on a box.
double projected_gradient_norm(const std::vector<double>& x,
                               const std::vector<double>& g,
                               const BoxSpec& box) {
    double m = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double stepped =
            std::min(std::max(x[i] - g[i], box.lower[i]), box.upper[i]);
        m = std::max(m, std::fabs(x[i] - stepped));
    }
    return m;
}

struct Pair {
    std::vector<double> s, y;
    double rho;
};

}  // namespace

BoxSpec BoxSpec::lower_only(std::vector<double> lo) {
    BoxSpec b;
    b.upper.assign(lo.size(), kInf);
    b.lower = std::move(lo);
    return b;
}

BoxSpec BoxSpec::unbounded(std::size_t n) {
    BoxSpec b;
    b.lower.assign(n, -kInf);
    b.upper.assign(n, kInf);
    return b;
}

const char* termination_name(Termination t) {
    switch (t) {
        case Termination::gradient_tol: return "gradient_tol";
        case Termination::step_tol: return "step_tol";
        case Termination::max_iter: return "max_iter";
        case Termination::line_search_failure: return "line_search_failure";
    }
    return "unknown";
}

OptimReport minimize(const Objective& objective, std::vector<double> start,
                     const BoxSpec& box, const OptimOptions& options) {
    const std::size_t n = start.size();
    if (box.lower.size() != n || box.upper.size() != n)
        throw std::invalid_argument("box dimension does not match start");
    for (std::size_t i = 0; i < n; ++i)
        if (!(box.lower[i] < box.upper[i]))
            throw std::invalid_argument("box requires lower < upper");
    project(start, box);

    std::vector<double> x = std::move(start);
    std::vector<double> g(n), g_next(n);
    double f = objective(x, g);
    if (!std::isfinite(f))
        throw std::invalid_argument("objective not finite at start");

    OptimReport report;
    report.objective_trace.push_back(f);
    std::deque<Pair> pairs;
    int rejected_pairs = 0;

    long iter = 0;
    for (; iter < options.max_iter; ++iter) {
        const double pg = projected_gradient_norm(x, g, box);
        if (pg <= options.gtol) {
            report.converged = true;
            report.termination_reason = Termination::gradient_tol;
            break;
        }

        // Two-loop recursion for d = -H g; empty history (or memory 0)
        // degrades to steepest descent.
        std::vector<double> d(n);
        for (std::size_t i = 0; i < n; ++i) d[i] = -g[i];
        if (!pairs.empty()) {
            std::vector<double> alpha_coef(pairs.size());
            for (std::size_t k = pairs.size(); k-- > 0;) {
                alpha_coef[k] = pairs[k].rho * dot(pairs[k].s, d);
                for (std::size_t i = 0; i < n; ++i)
                    d[i] -= alpha_coef[k] * pairs[k].y[i];
            }
            const Pair& last = pairs.back();
            const double gamma = dot(last.s, last.y) / dot(last.y, last.y);
            for (double& v : d) v *= gamma;
            for (std::size_t k = 0; k < pairs.size(); ++k) {
                const double beta = pairs[k].rho * dot(pairs[k].y, d);
                for (std::size_t i = 0; i < n; ++i)
                    d[i] += (alpha_coef[k] - beta) * pairs[k].s[i];
            }
            if (dot(d, g) >= 0.0)  // not a descent direction; reset
                for (std::size_t i = 0; i < n; ++i) d[i] = -g[i];
        }

        // Line search on the projected ray x(t) = P(x + t d): bisection
        // bracketing for the weak Wolfe conditions [Lewis & Overton,
        // Math. Prog. 141 (2013)]. Sufficient decrease is measured on the
        // projected step and carries a small absolute slack so steps near
        // the rounding floor of f still pass; the curvature condition
        // applies only while the trial stays inside the box, which keeps
        // s^T y > 0 for the stored pairs. Armijo alone would let a stale
        // curvature history feed microscopic always-accepted steps.
        const double slack = 1e-15 * (1.0 + std::fabs(f));
        const double dg = dot(d, g);
        double t = 1.0, t_lo = 0.0, t_hi = kInf;
        bool accepted = false, have_decrease = false;
        std::vector<double> x_next(n), step(n), x_dec(n), g_dec(n), step_dec(n);
        double f_next = 0.0, f_dec = 0.0;
        for (int trial = 0; trial <= options.max_backtracks; ++trial) {
            bool bent = false;
            for (std::size_t i = 0; i < n; ++i) {
                const double raw = x[i] + t * d[i];
                x_next[i] = std::min(std::max(raw, box.lower[i]), box.upper[i]);
                bent = bent || x_next[i] != raw;
            }
            for (std::size_t i = 0; i < n; ++i) step[i] = x_next[i] - x[i];
            const double gs = dot(g, step);
            f_next = objective(x_next, g_next);
            if (!(std::isfinite(f_next) &&
                  f_next <= f + options.armijo_c1 * std::min(gs, 0.0) + slack)) {
                t_hi = t;  // too long: no sufficient decrease
            } else if (!bent && dot(g_next, d) < options.wolfe_c2 * dg) {
                // decreased, but the slope is still as steep: too short
                x_dec = x_next;
                g_dec = g_next;
                step_dec = step;
                f_dec = f_next;
                have_decrease = true;
                t_lo = t;
            } else {
                accepted = true;
                break;
            }
            t = t_hi < kInf ? 0.5 * (t_lo + t_hi) : 2.0 * t;
        }
        if (!accepted && have_decrease) {
            // budget exhausted with decrease in hand but sustained steep
            // slope (e.g. an objective unbounded below): keep the decrease
            x_next = x_dec;
            g_next = g_dec;
            step = step_dec;
            f_next = f_dec;
            accepted = true;
        }
        if (!accepted) {
            report.termination_reason = Termination::line_search_failure;
            break;
        }

        const double step_norm = norm2(step);
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = g_next[i] - g[i];
        const double sy = dot(step, y);
        if (options.memory > 0) {
            if (sy > 1e-12 * step_norm * norm2(y)) {
                pairs.push_back({step, std::move(y), 1.0 / sy});
                if (pairs.size() > static_cast<std::size_t>(options.memory))
                    pairs.pop_front();
                rejected_pairs = 0;
            } else if (++rejected_pairs >= 3) {
                // Steps bent by the box skip the curvature condition, so a
                // run of them can leave the history stale; start it over.
                pairs.clear();
                rejected_pairs = 0;
            }
        }

        x = x_next;
        f = f_next;
        g = g_next;
        report.objective_trace.push_back(f);

        if (step_norm < options.step_tol) {
            report.converged = true;
            report.termination_reason = Termination::step_tol;
            ++iter;
            break;
        }
    }

    report.minimizer = std::move(x);
    report.objective_value = f;
    report.gradient_inf_norm = projected_gradient_norm(report.minimizer, g, box);
    report.iterations = iter;
    if (!report.converged && iter >= options.max_iter)
        report.termination_reason = Termination::max_iter;
    return report;
}

}  // namespace sphdir::optim
