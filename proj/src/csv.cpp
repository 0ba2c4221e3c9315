// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#include "sphdir/csv.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace sphdir::csv {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(trim(line.substr(start)));
            break;
        }
        fields.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
    return fields;
}

bool parse_double(const std::string& s, double& out) {
    if (s.empty()) return false;
    char* end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

}  // namespace

Table read_table(std::istream& in) {
    Table table;
    std::string line;
    std::size_t line_no = 0;
    bool saw_data = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty() || t[0] == '#') continue;
        std::vector<std::string> fields = split_fields(t);

        if (!saw_data && table.header.empty()) {
            // A first row that does not parse as numbers is the header.
            double v;
            bool numeric = true;
            for (const auto& f : fields)
                if (!parse_double(f, v)) {
                    numeric = false;
                    break;
                }
            if (!numeric) {
                table.header = std::move(fields);
                table.cols = table.header.size();
                continue;
            }
        }

        if (table.cols == 0) table.cols = fields.size();
        if (fields.size() != table.cols)
            throw std::runtime_error(
                "line " + std::to_string(line_no) + ": expected " +
                std::to_string(table.cols) + " columns, got " +
                std::to_string(fields.size()));
        for (const auto& f : fields) {
            double v;
            if (!parse_double(f, v))
                throw std::runtime_error("line " + std::to_string(line_no) +
                                         ": cannot parse '" + f +
                                         "' as a number");
            table.values.push_back(v);
        }
        saw_data = true;
    }
    if (!saw_data) throw std::runtime_error("no data rows found");
    return table;
}

Table read_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_table(in);
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_matrix(std::ostream& out, const std::vector<std::string>& header,
                  const double* data, std::size_t rows, std::size_t cols) {
    if (!header.empty()) {
        for (std::size_t k = 0; k < header.size(); ++k) {
            if (k) out << ',';
            out << header[k];
        }
        out << '\n';
    }
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < cols; ++k) {
            if (k) out << ',';
            out << format_double(data[i * cols + k]);
        }
        out << '\n';
    }
}

}  // namespace sphdir::csv
