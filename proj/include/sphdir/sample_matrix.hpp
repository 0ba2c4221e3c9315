// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

namespace sphdir {

/// n observations on the positive orthant of the unit sphere, stored
/// row-major, with the sufficient statistics cached at construction:
///   suffstats[k] = sum_i ln x_{ik}     (-inf when some x_{ik} = 0)
///   moments1[k]  = (1/n) sum_i x_{ik}
///   moments2[k]  = (1/n) sum_i x_{ik}^2   (sums to 1 across k)
/// Every row must satisfy the SpherePoint invariants.
class SampleMatrix {
public:
    SampleMatrix(std::vector<double> data, std::size_t p);

    std::size_t n() const { return n_; }
    std::size_t dim() const { return p_; }
    double operator()(std::size_t i, std::size_t k) const {
        return data_[i * p_ + k];
    }
    const double* row(std::size_t i) const { return data_.data() + i * p_; }
    const std::vector<double>& data() const { return data_; }

    const std::vector<double>& suffstats() const { return suffstats_; }
    const std::vector<double>& moments1() const { return moments1_; }
    const std::vector<double>& moments2() const { return moments2_; }
    /// False when any entry is zero, i.e. the log sufficient statistics are
    /// not finite and the likelihood is undefined.
    bool suffstats_finite() const { return suffstats_finite_; }

private:
    std::vector<double> data_;
    std::size_t n_;
    std::size_t p_;
    std::vector<double> suffstats_;
    std::vector<double> moments1_;
    std::vector<double> moments2_;
    bool suffstats_finite_;
};

}  // namespace sphdir
