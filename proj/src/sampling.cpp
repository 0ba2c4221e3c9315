// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#include "sphdir/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace sphdir {

// Marsaglia & Tsang (2000), "A simple method for generating gamma variables".
double sample_gamma(double shape, RandomSource& source) {
    if (!(shape > 0.0)) throw std::domain_error("gamma shape must be positive");
    if (shape < 1.0) {
        const double boost =
            std::pow(source.uniform(), 1.0 / shape);
        return sample_gamma(shape + 1.0, source) * boost;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = source.normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = source.uniform();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
        if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
    }
}

std::vector<double> sample_dirichlet(const AlphaVector& alpha,
                                     RandomSource& source) {
    const std::size_t p = alpha.dim();
    std::vector<double> z(p);
    double sum = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
        z[i] = sample_gamma(alpha[i], source);
        sum += z[i];
    }
    for (double& v : z) v /= sum;
    return z;
}

SampleMatrix sample_sdd(const AlphaVector& alpha, std::size_t n,
                        RandomSource& source) {
    if (n < 1) throw std::invalid_argument("sample count must be >= 1");
    const std::size_t p = alpha.dim();
    std::vector<double> data(n * p);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> z = sample_dirichlet(alpha, source);
        double norm2 = 0.0;
        for (std::size_t k = 0; k < p; ++k) {
            const double x = std::sqrt(z[k]);
            data[i * p + k] = x;
            norm2 += x * x;
        }
        // The square roots of a simplex point are unit-norm up to rounding;
        // scale out that rounding so rows hold to 1e-12.
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t k = 0; k < p; ++k) data[i * p + k] *= inv;
    }
    return SampleMatrix(std::move(data), p);
}

}  // namespace sphdir
