// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#include "sphdir/estimation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "sphdir/specfun.hpp"

namespace sphdir {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

/// Solve log(Gamma(a+1/2)/Gamma(a)) = rhs for a > 0. The left side is
/// monotone increasing, so a bracket around the asymptotic guess
/// a ~ exp(2 rhs) (from the large-a limit ratio ~ sqrt(a)) expands
/// geometrically and bisection in log space finishes the job.
double solve_half_ratio(double rhs, double guess) {
    auto g = [rhs](double a) {
        return specfun::log_gamma_ratio(a, 0.5) - rhs;
    };
    double lo = std::max(guess, 1e-12);
    double hi = lo;
    int expand = 0;
    while (g(lo) > 0.0) {
        lo *= 0.25;
        if (lo < 1e-14 || ++expand > 80)
            throw std::runtime_error(
                "moment equation bracket failure: no root above " +
                std::to_string(lo));
    }
    expand = 0;
    while (g(hi) < 0.0) {
        hi *= 4.0;
        if (hi > 1e14 || ++expand > 80)
            throw std::runtime_error(
                "moment equation bracket failure: no root below " +
                std::to_string(hi));
    }
    double tlo = std::log(lo), thi = std::log(hi);
    for (int it = 0; it < 200 && thi - tlo > 1e-16; ++it) {
        const double tmid = 0.5 * (tlo + thi);
        (g(std::exp(tmid)) < 0.0 ? tlo : thi) = tmid;
    }
    return std::exp(0.5 * (tlo + thi));
}

FitResult mom_solve(const std::vector<double>& m1, const std::vector<double>& m2,
                    const FitOptions& options) {
    const std::size_t p = m1.size();
    if (p < 2 || m2.size() != p)
        throw std::invalid_argument("moment vectors must share length >= 2");
    std::size_t anchor = 0;
    if (options.mom_anchor_largest)
        for (std::size_t k = 1; k < p; ++k)
            if (m1[k] > m1[anchor]) anchor = k;
    if (!(m1[anchor] > 0.0 && m1[anchor] < 1.0))
        throw std::invalid_argument("first moment must lie in (0, 1), got " +
                                    std::to_string(m1[anchor]));
    double m2_sum = 0.0;
    for (double v : m2) {
        if (!(v > 0.0 && v < 1.0))
            throw std::invalid_argument("second moments must lie in (0, 1)");
        m2_sum += v;
    }
    if (std::fabs(m2_sum - 1.0) > 1e-6)
        throw std::invalid_argument("second moments must sum to 1, got " +
                                    std::to_string(m2_sum));

    double rest = 0.0;  // fraction of alpha0 carried by non-anchor coords
    for (std::size_t k = 0; k < p; ++k)
        if (k != anchor) rest += m2[k];

    const double log_m1 = std::log(m1[anchor]);
    double alpha0 = static_cast<double>(p);  // start at alpha = (1,...,1)
    double root = std::exp(2.0 * log_m1);    // refreshed after first solve
    long iter = 0;
    bool converged = false;
    double criterion = 0.0;
    while (iter < options.mom_max_iter) {
        ++iter;
        const double rhs = log_m1 + specfun::log_gamma_ratio(alpha0, 0.5);
        root = solve_half_ratio(rhs, root > 0.0 ? root : 1.0);
        const double alpha0_next = root + alpha0 * rest;
        criterion = std::fabs(alpha0_next - alpha0) / alpha0_next;
        alpha0 = alpha0_next;
        if (criterion < options.mom_tol) {
            converged = true;
            break;
        }
    }

    std::vector<double> alpha(p);
    for (std::size_t k = 0; k < p; ++k)
        alpha[k] = alpha0 * (k == anchor ? 1.0 - rest : m2[k]);
    FitResult result{AlphaVector(std::move(alpha)), FitMethod::mom, iter,
                     converged, criterion, std::nullopt, {}};
    if (anchor != 0)
        result.notes.push_back("first-moment equation anchored at coordinate " +
                               std::to_string(anchor + 1));
    if (!converged)
        result.notes.push_back("fixed point not converged after " +
                               std::to_string(iter) + " iterations");
    return result;
}

}  // namespace

const char* fit_method_name(FitMethod m) {
    return m == FitMethod::mom ? "mom" : "mle";
}

double neg_log_likelihood(const AlphaVector& alpha, const SampleMatrix& data) {
    if (alpha.dim() != data.dim())
        throw std::invalid_argument("alpha dimension does not match data");
    if (!data.suffstats_finite())
        throw std::domain_error(
            "log sufficient statistics are not finite (zero coordinates in "
            "the data); apply the log-shift ingestion transform first");
    const std::size_t p = alpha.dim();
    const double n = static_cast<double>(data.n());
    double value = -n * static_cast<double>(p - 1) * kLn2 -
                   n * specfun::log_gamma(alpha.alpha0());
    for (std::size_t k = 0; k < p; ++k)
        value += n * specfun::log_gamma(alpha[k]) -
                 (2.0 * alpha[k] - 1.0) * data.suffstats()[k];
    return value;
}

std::vector<double> nll_gradient(const AlphaVector& alpha,
                                 const SampleMatrix& data) {
    if (alpha.dim() != data.dim())
        throw std::invalid_argument("alpha dimension does not match data");
    if (!data.suffstats_finite())
        throw std::domain_error(
            "log sufficient statistics are not finite (zero coordinates in "
            "the data); apply the log-shift ingestion transform first");
    const std::size_t p = alpha.dim();
    const double n = static_cast<double>(data.n());
    const double psi0 = specfun::digamma(alpha.alpha0());
    std::vector<double> grad(p);
    for (std::size_t k = 0; k < p; ++k)
        grad[k] = n * (specfun::digamma(alpha[k]) - psi0) -
                  2.0 * data.suffstats()[k];
    return grad;
}

FitResult fit_mle(const SampleMatrix& data,
                  const std::optional<AlphaVector>& start,
                  const FitOptions& options) {
    if (!data.suffstats_finite())
        throw std::domain_error(
            "log sufficient statistics are not finite (zero coordinates in "
            "the data); apply the log-shift ingestion transform first");
    const std::size_t p = data.dim();
    const double n = static_cast<double>(data.n());

    // Per-observation objective: tolerances then apply to the stationarity
    // residual psi(alpha_k) - psi(alpha0) - 2 S_k / n itself.
    std::vector<double> s_over_n(p);
    for (std::size_t k = 0; k < p; ++k)
        s_over_n[k] = data.suffstats()[k] / n;
    optim::Objective objective = [p, &s_over_n](const std::vector<double>& a,
                                                std::vector<double>& grad) {
        double a0 = 0.0;
        for (double v : a) a0 += v;
        double f = -static_cast<double>(p - 1) * kLn2 - specfun::log_gamma(a0);
        const double psi0 = specfun::digamma(a0);
        for (std::size_t k = 0; k < p; ++k) {
            f += specfun::log_gamma(a[k]) - (2.0 * a[k] - 1.0) * s_over_n[k];
            grad[k] = specfun::digamma(a[k]) - psi0 - 2.0 * s_over_n[k];
        }
        return f;
    };

    optim::OptimOptions opt;
    opt.memory = options.memory;
    opt.gtol = options.gtol;
    opt.step_tol = options.step_tol;
    opt.max_iter = options.max_iter;
    const optim::BoxSpec box =
        optim::BoxSpec::lower_only(std::vector<double>(p, options.eps_lower));

    std::vector<double> x0(p, 1.0);
    if (start) {
        if (start->dim() != p)
            throw std::invalid_argument("start dimension does not match data");
        x0 = start->values();
    }

    FitResult result{AlphaVector(std::vector<double>(p, 1.0)), FitMethod::mle,
                     0, false, 0.0, std::nullopt, {}};
    if (data.n() < p)
        result.notes.push_back("fewer observations than dimensions; "
                               "recovery is not guaranteed");

    optim::OptimReport report = optim::minimize(objective, x0, box, opt);
    result.iterations = report.iterations;
    if (!report.converged && !start) {
        // The documented fallback: restart from the method-of-moments
        // estimate when the default start stalls.
        try {
            FitResult mom = fit_mom(data, options);
            optim::OptimReport retry =
                optim::minimize(objective, mom.alpha_hat.values(), box, opt);
            result.iterations += retry.iterations;
            if (retry.objective_value <= report.objective_value)
                report = std::move(retry);
            result.notes.push_back(
                "restarted from the method-of-moments estimate");
        } catch (const std::exception& e) {
            result.notes.push_back(std::string("restart unavailable: ") +
                                   e.what());
        }
    }

    result.converged = report.converged;
    result.final_criterion = report.gradient_inf_norm;
    for (std::size_t k = 0; k < p; ++k)
        if (report.minimizer[k] <= options.eps_lower * (1.0 + 1e-9))
            result.notes.push_back("alpha[" + std::to_string(k + 1) +
                                   "] is at the lower bound");
    result.alpha_hat = AlphaVector(std::move(report.minimizer));
    return result;
}

FitResult fit_mom(const SampleMatrix& data, const FitOptions& options) {
    return mom_solve(data.moments1(), data.moments2(), options);
}

FitResult fit_mom_from_moments(const std::vector<double>& m1,
                               const std::vector<double>& m2,
                               const FitOptions& options) {
    return mom_solve(m1, m2, options);
}

double norm_error_pct(const AlphaVector& estimate, const AlphaVector& truth) {
    if (estimate.dim() != truth.dim())
        throw std::invalid_argument("estimate and truth dimensions differ");
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < truth.dim(); ++k) {
        const double d = estimate[k] - truth[k];
        num += d * d;
        den += truth[k] * truth[k];
    }
    return 100.0 * std::sqrt(num / den);
}

}  // namespace sphdir
