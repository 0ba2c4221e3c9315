// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace sphdir::csv {

/// Numeric rectangular table. `values` is row-major, rows() * cols.
struct Table {
    std::vector<std::string> header;  // empty when the input had none
    std::vector<double> values;
    std::size_t cols = 0;

    std::size_t rows() const { return cols == 0 ? 0 : values.size() / cols; }
};

/// Parse comma-separated numeric rows. Lines starting with '#' and blank
/// lines are skipped; a non-numeric first row is taken as the header. All
/// rows must have the same column count. Throws std::runtime_error with the
/// offending line number on malformed input.
Table read_table(std::istream& in);
Table read_table_file(const std::string& path);

/// One double as decimal text with 17 significant digits (lossless
/// round-trip for IEEE doubles).
std::string format_double(double v);

/// Write a header row (if nonempty) and the matrix at 17 significant digits.
void write_matrix(std::ostream& out, const std::vector<std::string>& header,
                  const double* data, std::size_t rows, std::size_t cols);

}  // namespace sphdir::csv
