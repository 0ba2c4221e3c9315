// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#include "sphdir/sample_matrix.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "sphdir/types.hpp"

namespace sphdir {

SampleMatrix::SampleMatrix(std::vector<double> data, std::size_t p)
    : data_(std::move(data)), p_(p) {
    if (p_ < 2) throw std::invalid_argument("dimension must be >= 2");
    if (data_.empty() || data_.size() % p_ != 0)
        throw std::invalid_argument("data size is not a multiple of dimension");
    n_ = data_.size() / p_;

    suffstats_.assign(p_, 0.0);
    moments1_.assign(p_, 0.0);
    moments2_.assign(p_, 0.0);
    std::vector<bool> column_has_zero(p_, false);

    for (std::size_t i = 0; i < n_; ++i) {
        const double* r = row(i);
        double norm2 = 0.0;
        for (std::size_t k = 0; k < p_; ++k) {
            const double v = r[k];
            if (!(v >= 0.0) || !std::isfinite(v))
                throw std::invalid_argument(
                    "row " + std::to_string(i) + ": coordinate " +
                    std::to_string(k) + " must be nonnegative and finite");
            norm2 += v * v;
            moments1_[k] += v;
            moments2_[k] += v * v;
            if (v == 0.0)
                column_has_zero[k] = true;
            else
                suffstats_[k] += std::log(v);
        }
        if (std::fabs(norm2 - 1.0) > SpherePoint::kNormTol)
            throw std::invalid_argument("row " + std::to_string(i) +
                                        " is off the unit sphere: |x|^2 = " +
                                        std::to_string(norm2));
    }
    const double inv_n = 1.0 / static_cast<double>(n_);
    suffstats_finite_ = true;
    for (std::size_t k = 0; k < p_; ++k) {
        moments1_[k] *= inv_n;
        moments2_[k] *= inv_n;
        if (column_has_zero[k]) {
            suffstats_[k] = -std::numeric_limits<double>::infinity();
            suffstats_finite_ = false;
        }
    }
}

}  // namespace sphdir
