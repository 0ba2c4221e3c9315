// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace sphdir {

/// Concentration parameter vector alpha in (0, inf)^p, p >= 2, with the
/// cached sum alpha0. Immutable after construction.
class AlphaVector {
public:
    explicit AlphaVector(std::vector<double> alpha);

    std::size_t dim() const { return alpha_.size(); }
    double operator[](std::size_t i) const { return alpha_[i]; }
    double alpha0() const { return alpha0_; }
    const std::vector<double>& values() const { return alpha_; }

private:
    std::vector<double> alpha_;
    double alpha0_;
};

/// A point on the positive orthant of the unit sphere: all coordinates
/// nonnegative, |sum x_i^2 - 1| <= kNormTol. Construction never rescales;
/// use normalized() when the caller explicitly wants that.
class SpherePoint {
public:
    static constexpr double kNormTol = 1e-10;

    explicit SpherePoint(std::vector<double> x);

    /// Rescale a nonnegative vector onto the unit sphere. The one place
    /// where renormalization happens, by explicit request.
    static SpherePoint normalized(std::vector<double> x);

    std::size_t dim() const { return x_.size(); }
    double operator[](std::size_t i) const { return x_[i]; }
    const std::vector<double>& values() const { return x_; }

private:
    std::vector<double> x_;
};

/// Dense symmetric matrix, full row-major storage.
class SymMatrix {
public:
    explicit SymMatrix(std::size_t n) : n_(n), a_(n * n, 0.0) {}

    std::size_t dim() const { return n_; }
    double& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    double operator()(std::size_t i, std::size_t j) const {
        return a_[i * n_ + j];
    }

    double trace() const;
    double max_abs() const;

private:
    std::size_t n_;
    std::vector<double> a_;
};

/// Smallest eigenvalue of a symmetric matrix, by cyclic Jacobi sweeps.
double smallest_eigenvalue(const SymMatrix& m);

}  // namespace sphdir
