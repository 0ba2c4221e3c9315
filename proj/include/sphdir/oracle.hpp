// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "sphdir/types.hpp"

namespace sphdir::oracle {

/// Default angular resolutions sized so normalization integrals reach
/// 1e-8 (p=2) / 1e-6 (p=3) even with the worst endpoint behavior the
/// tests exercise (exponents down to 0.2).
inline constexpr std::size_t kDefaultRes2 = 10000;
inline constexpr std::size_t kDefaultRes3 = 800;

/// Deterministic surface-measure grid on the positive orthant of the unit
/// sphere, p in {2, 3}. Gauss-Legendre nodes are interior to (0, pi/2), so
/// integrable endpoint singularities are never evaluated.
///   p=2: x = (cos t, sin t),                       weight = w_t
///   p=3: x = (sin t cos u, sin t sin u, cos t),    weight = w_t w_u sin t
struct QuadratureGrid {
    std::size_t dim = 0;
    std::size_t resolution = 0;       // nodes per angle
    std::vector<double> coords;       // node_count * dim
    std::vector<double> log_coords;   // ln of each coordinate (all > 0)
    std::vector<double> angles;       // node_count * (dim - 1)
    std::vector<double> weights;      // node_count

    std::size_t node_count() const { return weights.size(); }
};

QuadratureGrid make_grid(std::size_t p, std::size_t resolution);

/// Gauss-Legendre nodes and weights on (-1, 1).
void gauss_legendre(std::size_t n, std::vector<double>& nodes,
                    std::vector<double>& weights);

/// Pairwise (cascade) sum: deterministic and accurate independent of order
/// of magnitude spread.
double pairwise_sum(const double* v, std::size_t n);

/// Sum of the grid weights; equals the orthant surface area pi/2.
double weight_sum(const QuadratureGrid& grid);

/// Quadrature of the density over the orthant; approximately 1.
double integrate_density(const AlphaVector& alpha, const QuadratureGrid& grid);

/// Quadrature of prod_i x_i^exponents[i] against the density; matches the
/// closed-form moment expressions.
double integrate_moment(const AlphaVector& alpha, const QuadratureGrid& grid,
                        const std::vector<double>& exponents);

/// Density argmax over the grid nodes, refined by per-angle ternary search
/// to about 1e-6 in the coordinates. Requires every alpha_i > 1/2.
SpherePoint grid_argmax(const AlphaVector& alpha, const QuadratureGrid& grid);

}  // namespace sphdir::oracle
