// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#include "sphdir/sdd.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "sphdir/specfun.hpp"

namespace sphdir {

namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kLnPi = 1.14472988584940017414;

void check_dims(const SpherePoint& x, const AlphaVector& alpha) {
    if (x.dim() != alpha.dim())
        throw std::invalid_argument("point dimension " +
                                    std::to_string(x.dim()) +
                                    " does not match alpha dimension " +
                                    std::to_string(alpha.dim()));
}

}  // namespace

double log_normalizer(const AlphaVector& alpha) {
    const std::size_t p = alpha.dim();
    double lg_sum = 0.0;
    for (std::size_t i = 0; i < p; ++i) lg_sum += specfun::log_gamma(alpha[i]);
    return static_cast<double>(p - 1) * kLn2 +
           specfun::log_gamma(alpha.alpha0()) - lg_sum;
}

double log_density(const SpherePoint& x, const AlphaVector& alpha) {
    check_dims(x, alpha);
    const std::size_t p = alpha.dim();
    // Boundary: a zero coordinate kills the density when its exponent is
    // positive and blows it up when negative. The divergent case is an error.
    bool vanishes = false;
    for (std::size_t i = 0; i < p; ++i) {
        if (x[i] != 0.0) continue;
        const double e = 2.0 * alpha[i] - 1.0;
        if (e < 0.0)
            throw std::domain_error(
                "density diverges: x[" + std::to_string(i) +
                "] = 0 with alpha[" + std::to_string(i) + "] < 1/2");
        if (e > 0.0) vanishes = true;
    }
    if (vanishes) return -std::numeric_limits<double>::infinity();
    double kernel = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
        if (x[i] == 0.0) continue;  // exponent exactly 0 here
        kernel += (2.0 * alpha[i] - 1.0) * std::log(x[i]);
    }
    return log_normalizer(alpha) + kernel;
}

double density(const SpherePoint& x, const AlphaVector& alpha) {
    return std::exp(log_density(x, alpha));
}

MomentSummary moments(const AlphaVector& alpha) {
    const std::size_t p = alpha.dim();
    const double lg0 = specfun::log_gamma_ratio(alpha.alpha0(), 0.5);
    MomentSummary m;
    m.mean.resize(p);
    m.second_raw.resize(p);
    m.mu.resize(p);
    m.mu0 = std::exp(lg0);
    for (std::size_t i = 0; i < p; ++i) {
        const double lgi = specfun::log_gamma_ratio(alpha[i], 0.5);
        m.mu[i] = std::exp(lgi);
        m.mean[i] = std::exp(lgi - lg0);
        m.second_raw[i] = alpha[i] / alpha.alpha0();
    }
    double norm2 = 0.0;
    for (double v : m.mean) norm2 += v * v;
    m.resultant_length = std::sqrt(norm2);  // |mu|/mu0 since mean = mu/mu0
    m.mean_direction.resize(p);
    for (std::size_t i = 0; i < p; ++i)
        m.mean_direction[i] = m.mean[i] / m.resultant_length;
    return m;
}

SymMatrix covariance(const AlphaVector& alpha) {
    const std::size_t p = alpha.dim();
    const MomentSummary m = moments(alpha);
    const double a0 = alpha.alpha0();
    const double off = 1.0 / a0 - 1.0 / (m.mu0 * m.mu0);
    SymMatrix s(p);
    for (std::size_t i = 0; i < p; ++i) {
        s(i, i) = alpha[i] / a0 - m.mean[i] * m.mean[i];
        for (std::size_t j = i + 1; j < p; ++j)
            s(i, j) = s(j, i) = m.mu[i] * m.mu[j] * off;
    }
    return s;
}

SymMatrix covariance_rank_one_form(const AlphaVector& alpha) {
    const std::size_t p = alpha.dim();
    const MomentSummary m = moments(alpha);
    const double a0 = alpha.alpha0();
    const double c = 1.0 / (m.mu0 * m.mu0) - 1.0 / a0;
    SymMatrix s(p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            double v = -c * m.mu[i] * m.mu[j];
            if (i == j) v += (alpha[i] - m.mu[i] * m.mu[i]) / a0;
            s(i, j) = v;
        }
    return s;
}

SymMatrix covariance_mean_direction_form(const AlphaVector& alpha) {
    const std::size_t p = alpha.dim();
    const MomentSummary m = moments(alpha);
    const double a0 = alpha.alpha0();
    const double c2 = m.resultant_length * m.resultant_length;
    SymMatrix s(p);
    for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j) {
            double v = -c2 * m.mean_direction[i] * m.mean_direction[j];
            if (i == j)
                v += alpha[i] / a0;
            else
                v += m.mu[i] * m.mu[j] / a0;  // cancels diag(mu^2) off-diagonal
            s(i, j) = v;
        }
    return s;
}

SpherePoint mode(const AlphaVector& alpha) {
    const std::size_t p = alpha.dim();
    for (std::size_t i = 0; i < p; ++i)
        if (alpha[i] <= 0.5)
            throw std::domain_error(
                "mode undefined: requires every alpha_i > 1/2");
    const double denom = 2.0 * alpha.alpha0() - static_cast<double>(p);
    std::vector<double> x(p);
    for (std::size_t i = 0; i < p; ++i)
        x[i] = std::sqrt((2.0 * alpha[i] - 1.0) / denom);
    return SpherePoint(std::move(x));
}

bool is_uniform(const AlphaVector& alpha) {
    for (std::size_t i = 0; i < alpha.dim(); ++i)
        if (alpha[i] != 0.5) return false;
    return true;
}

double uniform_log_density(std::size_t p) {
    if (p < 2) throw std::invalid_argument("dimension must be >= 2");
    const double half_p = 0.5 * static_cast<double>(p);
    return static_cast<double>(p - 1) * kLn2 + specfun::log_gamma(half_p) -
           half_p * kLnPi;
}

}  // namespace sphdir
