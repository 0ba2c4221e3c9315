// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#include "sphdir/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sphdir/sdd.hpp"

namespace sphdir::oracle {

namespace {

constexpr double kPi = 3.14159265358979323846;

/// Log of the density kernel (normalizer excluded) at angles, p = 2.
double log_kernel2(const AlphaVector& alpha, double t) {
    return (2.0 * alpha[0] - 1.0) * std::log(std::cos(t)) +
           (2.0 * alpha[1] - 1.0) * std::log(std::sin(t));
}

/// Log kernel at angles, p = 3: x = (sin t cos u, sin t sin u, cos t).
double log_kernel3(const AlphaVector& alpha, double t, double u) {
    return (2.0 * alpha[0] - 1.0) * std::log(std::sin(t) * std::cos(u)) +
           (2.0 * alpha[1] - 1.0) * std::log(std::sin(t) * std::sin(u)) +
           (2.0 * alpha[2] - 1.0) * std::log(std::cos(t));
}

/// Ternary search for the maximum of a unimodal function on [lo, hi].
template <typename F>
double ternary_max(F f, double lo, double hi) {
    for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (f(m1) < f(m2))
            lo = m1;
        else
            hi = m2;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

void gauss_legendre(std::size_t n, std::vector<double>& nodes,
                    std::vector<double>& weights) {
    if (n < 2) throw std::invalid_argument("need at least 2 nodes");
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const std::size_t half = (n + 1) / 2;
    for (std::size_t i = 0; i < half; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(kPi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p_prev = 1.0, p_cur = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double p_next =
                    ((2.0 * k - 1.0) * x * p_cur - (k - 1.0) * p_prev) / k;
                p_prev = p_cur;
                p_cur = p_next;
            }
            pp = static_cast<double>(n) * (x * p_cur - p_prev) /
                 (x * x - 1.0);
            const double dx = -p_cur / pp;
            x += dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

QuadratureGrid make_grid(std::size_t p, std::size_t resolution) {
    if (p != 2 && p != 3)
        throw std::invalid_argument("quadrature grids support p = 2 or 3");
    std::vector<double> gl_nodes, gl_weights;
    gauss_legendre(resolution, gl_nodes, gl_weights);
    // Affine map from (-1, 1) onto the open angle interval (0, pi/2).
    const double scale = kPi / 4.0;
    std::vector<double> angle(resolution), w(resolution);
    for (std::size_t i = 0; i < resolution; ++i) {
        angle[i] = scale * (gl_nodes[i] + 1.0);
        w[i] = scale * gl_weights[i];
    }

    QuadratureGrid grid;
    grid.dim = p;
    grid.resolution = resolution;
    if (p == 2) {
        grid.coords.resize(resolution * 2);
        grid.angles.resize(resolution);
        grid.weights.resize(resolution);
        for (std::size_t i = 0; i < resolution; ++i) {
            grid.coords[2 * i] = std::cos(angle[i]);
            grid.coords[2 * i + 1] = std::sin(angle[i]);
            grid.angles[i] = angle[i];
            grid.weights[i] = w[i];
        }
    } else {
        const std::size_t m = resolution * resolution;
        grid.coords.resize(m * 3);
        grid.angles.resize(m * 2);
        grid.weights.resize(m);
        std::size_t node = 0;
        for (std::size_t i = 0; i < resolution; ++i) {
            const double t = angle[i];
            const double st = std::sin(t), ct = std::cos(t);
            for (std::size_t j = 0; j < resolution; ++j, ++node) {
                const double u = angle[j];
                grid.coords[3 * node] = st * std::cos(u);
                grid.coords[3 * node + 1] = st * std::sin(u);
                grid.coords[3 * node + 2] = ct;
                grid.angles[2 * node] = t;
                grid.angles[2 * node + 1] = u;
                grid.weights[node] = w[i] * w[j] * st;  // surface element
            }
        }
    }
    grid.log_coords.resize(grid.coords.size());
    for (std::size_t i = 0; i < grid.coords.size(); ++i)
        grid.log_coords[i] = std::log(grid.coords[i]);
    return grid;
}

double pairwise_sum(const double* v, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(v, half) + pairwise_sum(v + half, n - half);
}

double weight_sum(const QuadratureGrid& grid) {
    return pairwise_sum(grid.weights.data(), grid.weights.size());
}

double integrate_moment(const AlphaVector& alpha, const QuadratureGrid& grid,
                        const std::vector<double>& exponents) {
    const std::size_t p = grid.dim;
    if (alpha.dim() != p)
        throw std::invalid_argument("alpha dimension does not match grid");
    if (exponents.size() != p)
        throw std::invalid_argument("exponent vector length does not match");
    std::vector<double> e(p);
    for (std::size_t i = 0; i < p; ++i)
        e[i] = 2.0 * alpha[i] - 1.0 + exponents[i];
    const double log_c = log_normalizer(alpha);

    const std::size_t m = grid.node_count();
    std::vector<double> terms(m);
    for (std::size_t node = 0; node < m; ++node) {
        const double* lx = grid.log_coords.data() + node * p;
        double s = log_c;
        for (std::size_t i = 0; i < p; ++i) s += e[i] * lx[i];
        terms[node] = grid.weights[node] * std::exp(s);
    }
    return pairwise_sum(terms.data(), m);
}

double integrate_density(const AlphaVector& alpha, const QuadratureGrid& grid) {
    return integrate_moment(alpha, grid, std::vector<double>(grid.dim, 0.0));
}

SpherePoint grid_argmax(const AlphaVector& alpha, const QuadratureGrid& grid) {
    const std::size_t p = grid.dim;
    if (alpha.dim() != p)
        throw std::invalid_argument("alpha dimension does not match grid");
    for (std::size_t i = 0; i < p; ++i)
        if (alpha[i] <= 0.5)
            throw std::domain_error(
                "argmax search requires every alpha_i > 1/2");

    // Coarse pass over the nodes (the normalizer is a shared constant, so
    // only the kernel matters).
    std::vector<double> e(p);
    for (std::size_t i = 0; i < p; ++i) e[i] = 2.0 * alpha[i] - 1.0;
    const std::size_t m = grid.node_count();
    std::size_t best = 0;
    double best_val = -std::numeric_limits<double>::infinity();
    for (std::size_t node = 0; node < m; ++node) {
        const double* lx = grid.log_coords.data() + node * p;
        double s = 0.0;
        for (std::size_t i = 0; i < p; ++i) s += e[i] * lx[i];
        if (s > best_val) {
            best_val = s;
            best = node;
        }
    }

    // Refine within the surrounding cells; the kernel is unimodal per angle
    // in the all-interior case required above.
    const double spacing = 0.5 * kPi / static_cast<double>(grid.resolution);
    const double margin = 2.0 * spacing;
    auto clamp_angle = [](double a) {
        return std::min(std::max(a, 1e-9), 0.5 * kPi - 1e-9);
    };
    if (p == 2) {
        const double t0 = grid.angles[best];
        const double t = ternary_max(
            [&](double a) { return log_kernel2(alpha, a); },
            clamp_angle(t0 - margin), clamp_angle(t0 + margin));
        return SpherePoint::normalized({std::cos(t), std::sin(t)});
    }
    double t = grid.angles[2 * best];
    double u = grid.angles[2 * best + 1];
    for (int round = 0; round < 60; ++round) {
        const double t_prev = t, u_prev = u;
        t = ternary_max([&](double a) { return log_kernel3(alpha, a, u); },
                        clamp_angle(t - margin), clamp_angle(t + margin));
        u = ternary_max([&](double a) { return log_kernel3(alpha, t, a); },
                        clamp_angle(u - margin), clamp_angle(u + margin));
        if (std::fabs(t - t_prev) < 1e-12 && std::fabs(u - u_prev) < 1e-12)
            break;
    }
    return SpherePoint::normalized(
        {std::sin(t) * std::cos(u), std::sin(t) * std::sin(u), std::cos(t)});
}

}  // namespace sphdir::oracle
