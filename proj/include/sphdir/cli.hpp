// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "sphdir/csv.hpp"
#include "sphdir/estimation.hpp"
#include "sphdir/sample_matrix.hpp"

namespace sphdir::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitConvergence = 4;

/// Unreadable/malformed input, rows off the sphere, zero coordinates
/// without the transform, unwritable outputs.
struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A fit failed to converge or a moment-equation bracket failed.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Transform { none, log_shift };
enum class Method { mom, mle, both };

/// Tolerance and algorithm knobs surfaced as CLI flags.
struct FitControls {
    double eps_lower = 1e-6;
    double gtol = 1e-8;
    double step_tol = 1e-8;
    long max_iter = 500;
    double mom_tol = 1e-13;
    long mom_max_iter = 200000;
    bool mom_anchor_largest = false;

    FitOptions to_fit_options() const;
};

struct SimulateConfig {
    std::vector<double> alpha;
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::string output_path;  // empty: write CSV to stdout
    std::string json_path;
};

struct FitConfig {
    std::string input_path;
    Method method = Method::both;
    Transform transform = Transform::none;
    double shift = 1.10;          // the c in ln(c + x)
    std::vector<double> truth;    // optional true alpha for error reporting
    FitControls controls;
    std::string json_path;
};

struct DescribeConfig {
    std::vector<double> alpha;
    std::string json_path;
};

struct DensityGridConfig {
    std::vector<double> alpha;
    std::size_t grid_n = 100;  // nodes per angle
    std::string output_path;   // empty: write CSV to stdout
    std::string json_path;
};

struct Table1Config {
    std::uint64_t seed = 1;
    std::size_t n = 10000;
    FitControls controls;
    std::string json_path;
};

/// Turn a raw table into unit-norm observations. Transform::none requires
/// rows already on the sphere with no zero coordinates; Transform::log_shift
/// maps counts v to ln(shift + v) and normalizes each row to unit length.
SampleMatrix ingest(const csv::Table& table, Transform transform,
                    double shift);

// Each command writes its report to `out`, errors to `err`, and returns a
// process exit code.
int cmd_simulate(const SimulateConfig& cfg, std::ostream& out,
                 std::ostream& err);
int cmd_fit(const FitConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_describe(const DescribeConfig& cfg, std::ostream& out,
                 std::ostream& err);
int cmd_density_grid(const DensityGridConfig& cfg, std::ostream& out,
                     std::ostream& err);
int cmd_reproduce_table1(const Table1Config& cfg, std::ostream& out,
                         std::ostream& err);

}  // namespace sphdir::cli
