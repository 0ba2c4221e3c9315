// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "sphdir/types.hpp"

namespace sphdir {

/// Exact moment set of a spherical-Dirichlet distribution.
struct MomentSummary {
    std::vector<double> mean;        // E(x_i)
    std::vector<double> second_raw;  // E(x_i^2) = alpha_i / alpha0
    std::vector<double> mu;          // Gamma(alpha_i + 1/2) / Gamma(alpha_i)
    double mu0;                      // Gamma(alpha0 + 1/2) / Gamma(alpha0)
    double resultant_length;         // C = |mu| / mu0, in (0, 1)
    std::vector<double> mean_direction;  // mu / |mu|, unit norm
};

/// Log of the normalizing constant 2^(p-1) Gamma(alpha0) / prod Gamma(alpha_i).
double log_normalizer(const AlphaVector& alpha);

/// Log density at a point on the positive orthant of the unit sphere.
/// Returns -inf when some x_i = 0 with alpha_i > 1/2; throws
/// std::domain_error when some x_i = 0 with alpha_i < 1/2 (the density
/// diverges there).
double log_density(const SpherePoint& x, const AlphaVector& alpha);

/// exp(log_density); 0 at boundary zeros with alpha_i > 1/2.
double density(const SpherePoint& x, const AlphaVector& alpha);

/// Mean vector, second raw moments, resultant length and mean direction,
/// all via log-gamma ratios (no large-argument cancellation).
MomentSummary moments(const AlphaVector& alpha);

/// Covariance matrix, entrywise:
///   Sigma_ii = alpha_i/alpha0 - (mu_i/mu0)^2
///   Sigma_ij = mu_i mu_j (1/alpha0 - 1/mu0^2),  i != j.
SymMatrix covariance(const AlphaVector& alpha);

/// Same matrix as diag(alpha - mu^2)/alpha0 - (1/mu0^2 - 1/alpha0) mu mu^T.
SymMatrix covariance_rank_one_form(const AlphaVector& alpha);

/// Same matrix in resultant form:
///   diag(alpha)/alpha0 - C^2 mbar mbar^T - (diag(mu^2) - mu mu^T)/alpha0
/// with mbar the mean direction.
SymMatrix covariance_mean_direction_form(const AlphaVector& alpha);

/// Interior mode x_i = sqrt((2 alpha_i - 1) / (2 alpha0 - p)). Defined only
/// when every alpha_i > 1/2; throws std::domain_error otherwise.
SpherePoint mode(const AlphaVector& alpha);

/// True when every alpha_i == 1/2, i.e. the distribution is uniform on the
/// orthant.
bool is_uniform(const AlphaVector& alpha);

/// Log density of the uniform case: (p-1) ln 2 + ln Gamma(p/2) - (p/2) ln pi.
double uniform_log_density(std::size_t p);

}  // namespace sphdir
