// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#include "sphdir/types.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace sphdir {

AlphaVector::AlphaVector(std::vector<double> alpha) : alpha_(std::move(alpha)) {
    if (alpha_.size() < 2)
        throw std::invalid_argument("alpha must have dimension >= 2");
    double sum = 0.0;
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
        const double a = alpha_[i];
        if (!(a > 0.0) || !std::isfinite(a))
            throw std::invalid_argument("alpha[" + std::to_string(i) +
                                        "] must be positive and finite");
        sum += a;
    }
    alpha0_ = sum;
}

SpherePoint::SpherePoint(std::vector<double> x) : x_(std::move(x)) {
    if (x_.size() < 2)
        throw std::invalid_argument("sphere point must have dimension >= 2");
    double norm2 = 0.0;
    for (std::size_t i = 0; i < x_.size(); ++i) {
        const double v = x_[i];
        if (!(v >= 0.0) || !std::isfinite(v))
            throw std::invalid_argument("coordinate " + std::to_string(i) +
                                        " must be nonnegative and finite");
        norm2 += v * v;
    }
    if (std::fabs(norm2 - 1.0) > kNormTol)
        throw std::invalid_argument("point is off the unit sphere: |x|^2 = " +
                                    std::to_string(norm2));
}

SpherePoint SpherePoint::normalized(std::vector<double> x) {
    double norm2 = 0.0;
    for (double v : x) norm2 += v * v;
    if (!(norm2 > 0.0) || !std::isfinite(norm2))
        throw std::invalid_argument("cannot normalize a zero or non-finite vector");
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& v : x) v *= inv;
    return SpherePoint(std::move(x));
}

double SymMatrix::trace() const {
    double t = 0.0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double SymMatrix::max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::fabs(v));
    return m;
}

double smallest_eigenvalue(const SymMatrix& m) {
    const std::size_t n = m.dim();
    SymMatrix a = m;
    // Cyclic Jacobi: rotate away the largest off-diagonal entries until the
    // matrix is numerically diagonal.
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
        if (off < 1e-30) break;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::fabs(a(p, q)) < 1e-300) continue;
                const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::fabs(theta) +
                                  std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = s * apk + c * aqk;
                }
            }
        }
    }
    double lo = a(0, 0);
    for (std::size_t i = 1; i < n; ++i) lo = std::min(lo, a(i, i));
    return lo;
}

}  // namespace sphdir
