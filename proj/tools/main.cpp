// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line driver: simulate / fit / describe / density-grid /
// reproduce-table1. Exit codes: 0 success, 2 usage, 3 data, 4 convergence.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sphdir/cli.hpp"

namespace {

std::vector<double> parse_reals(const std::string& text,
                                const std::string& flag) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const std::string field =
            text.substr(start, comma == std::string::npos ? std::string::npos
                                                          : comma - start);
        char* end = nullptr;
        const double v = std::strtod(field.c_str(), &end);
        if (field.empty() || end != field.c_str() + field.size())
            throw std::invalid_argument(flag + ": cannot parse '" + field +
                                        "' as a number");
        values.push_back(v);
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return values;
}

void add_fit_controls(CLI::App* cmd, sphdir::cli::FitControls& c) {
    cmd->add_option("--eps", c.eps_lower,
                    "Lower bound kept on every alpha_k during MLE");
    cmd->add_option("--gtol", c.gtol,
                    "MLE projected-gradient infinity-norm tolerance");
    cmd->add_option("--step-tol", c.step_tol, "MLE step-norm tolerance");
    cmd->add_option("--max-iter", c.max_iter, "MLE iteration cap");
    cmd->add_option("--mom-tol", c.mom_tol,
                    "MOM relative change tolerance on alpha0");
    cmd->add_option("--mom-max-iter", c.mom_max_iter, "MOM iteration cap");
    cmd->add_flag("--mom-anchor-largest", c.mom_anchor_largest,
                  "Anchor the first-moment equation at the coordinate with "
                  "the largest sample mean (default: coordinate 1)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Spherical-Dirichlet distribution toolkit: exact "
        "density/moments/mode, sampling, and MOM/MLE estimation on the "
        "positive orthant of the unit hypersphere"};
    app.require_subcommand(1);

    std::string sim_alpha, fit_truth, desc_alpha, grid_alpha;
    sphdir::cli::SimulateConfig sim;
    sphdir::cli::FitConfig fit;
    std::string fit_method = "both", fit_transform = "none";
    sphdir::cli::DescribeConfig desc;
    sphdir::cli::DensityGridConfig grid;
    sphdir::cli::Table1Config table1;

    CLI::App* c_sim = app.add_subcommand(
        "simulate", "Draw n unit-norm observations and write them as CSV");
    c_sim->add_option("--alpha", sim_alpha, "Concentration vector, e.g. 2,2,2")
        ->required();
    c_sim->add_option("--n", sim.n, "Number of draws")
        ->required()
        ->check(CLI::PositiveNumber);
    c_sim->add_option("--seed", sim.seed, "RNG seed")->required();
    c_sim->add_option("--out", sim.output_path,
                      "Output CSV path (default: stdout)");
    c_sim->add_option("--json", sim.json_path, "Machine-readable summary path");

    CLI::App* c_fit = app.add_subcommand(
        "fit", "Estimate alpha from a CSV of observations");
    c_fit->add_option("--input", fit.input_path, "Input CSV path")->required();
    c_fit->add_option("--method", fit_method, "mom | mle | both")
        ->check(CLI::IsMember({"mom", "mle", "both"}));
    c_fit->add_option("--transform", fit_transform,
                      "none: rows are already unit-norm; log-shift: rows are "
                      "raw counts, mapped by ln(shift + v) then normalized")
        ->check(CLI::IsMember({"none", "log-shift"}));
    c_fit->add_option("--shift", fit.shift, "Shift c in ln(c + v)");
    c_fit->add_option("--truth", fit_truth,
                      "True alpha for error reporting, e.g. 2,2,2");
    c_fit->add_option("--json", fit.json_path, "Machine-readable result path");
    add_fit_controls(c_fit, fit.controls);

    CLI::App* c_desc = app.add_subcommand(
        "describe", "Print closed-form summaries for a parameter vector");
    c_desc->add_option("--alpha", desc_alpha, "Concentration vector")
        ->required();
    c_desc->add_option("--json", desc.json_path,
                       "Machine-readable summary path");

    CLI::App* c_grid = app.add_subcommand(
        "density-grid",
        "Tabulate the density over an angular grid (p = 2 or 3)");
    c_grid->add_option("--alpha", grid_alpha, "Concentration vector")
        ->required();
    c_grid->add_option("--grid-n", grid.grid_n, "Nodes per angle")
        ->check(CLI::PositiveNumber);
    c_grid->add_option("--out", grid.output_path,
                       "Output CSV path (default: stdout)");
    c_grid->add_option("--json", grid.json_path,
                       "Machine-readable summary path");

    CLI::App* c_t1 = app.add_subcommand(
        "reproduce-table1",
        "Run the four simulation scenarios (n draws each) through MOM and "
        "MLE and report recovery errors");
    c_t1->add_option("--seed", table1.seed, "Base RNG seed (scenario s uses "
                     "seed + s)");
    c_t1->add_option("--n", table1.n, "Draws per scenario")
        ->check(CLI::PositiveNumber);
    c_t1->add_option("--json", table1.json_path,
                     "Machine-readable result path");
    add_fit_controls(c_t1, table1.controls);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return sphdir::cli::kExitUsage;
    }

    try {
        if (c_sim->parsed()) {
            sim.alpha = parse_reals(sim_alpha, "--alpha");
            return sphdir::cli::cmd_simulate(sim, std::cout, std::cerr);
        }
        if (c_fit->parsed()) {
            fit.method = fit_method == "mom"   ? sphdir::cli::Method::mom
                         : fit_method == "mle" ? sphdir::cli::Method::mle
                                               : sphdir::cli::Method::both;
            fit.transform = fit_transform == "none"
                                ? sphdir::cli::Transform::none
                                : sphdir::cli::Transform::log_shift;
            if (!fit_truth.empty())
                fit.truth = parse_reals(fit_truth, "--truth");
            return sphdir::cli::cmd_fit(fit, std::cout, std::cerr);
        }
        if (c_desc->parsed()) {
            desc.alpha = parse_reals(desc_alpha, "--alpha");
            return sphdir::cli::cmd_describe(desc, std::cout, std::cerr);
        }
        if (c_grid->parsed()) {
            grid.alpha = parse_reals(grid_alpha, "--alpha");
            return sphdir::cli::cmd_density_grid(grid, std::cout, std::cerr);
        }
        if (c_t1->parsed())
            return sphdir::cli::cmd_reproduce_table1(table1, std::cout,
                                                     std::cerr);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return sphdir::cli::kExitUsage;
    }
    return sphdir::cli::kExitUsage;
}
