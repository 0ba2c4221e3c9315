// Copyright 2026 the sphdir authors
// SPDX-License-Identifier: Apache-2.0
#include "sphdir/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "sphdir/oracle.hpp"
#include "sphdir/rng.hpp"
#include "sphdir/sampling.hpp"
#include "sphdir/sdd.hpp"

namespace sphdir::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr double kPi = 3.14159265358979323846;

std::string join_alpha(const std::vector<double>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += csv::format_double(v[i]);
    }
    return s;
}

std::string join_notes(const std::vector<std::string>& notes) {
    std::string s;
    for (std::size_t i = 0; i < notes.size(); ++i) {
        if (i) s += "; ";
        s += notes[i];
    }
    return s;
}

void write_json_file(const json& doc, const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) throw DataError("cannot write '" + path + "'");
    out << doc.dump(2) << '\n';
}

/// Maps thrown errors onto the documented exit codes.
int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const DataError& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConvergence;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
}

void print_fit(std::ostream& out, const FitResult& r) {
    out << "method = " << fit_method_name(r.method) << '\n';
    out << "alpha_hat = " << join_alpha(r.alpha_hat.values()) << '\n';
    out << "iterations = " << r.iterations << '\n';
    out << "converged = " << (r.converged ? "yes" : "no") << '\n';
    out << "final_criterion = " << csv::format_double(r.final_criterion)
        << '\n';
    if (r.norm_error_vs_truth)
        out << "norm_error_pct = " << csv::format_double(*r.norm_error_vs_truth)
            << '\n';
    for (const auto& note : r.notes) out << "note: " << note << '\n';
}

void fit_to_json(json& doc, const std::string& prefix, const FitResult& r) {
    for (std::size_t k = 0; k < r.alpha_hat.dim(); ++k)
        doc[prefix + ".alpha_hat." + std::to_string(k + 1)] = r.alpha_hat[k];
    doc[prefix + ".iterations"] = r.iterations;
    doc[prefix + ".converged"] = r.converged;
    doc[prefix + ".final_criterion"] = r.final_criterion;
    if (r.norm_error_vs_truth)
        doc[prefix + ".norm_error_pct"] = *r.norm_error_vs_truth;
    if (!r.notes.empty()) doc[prefix + ".notes"] = join_notes(r.notes);
}

FitResult run_fit(FitMethod method, const SampleMatrix& data,
                  const FitOptions& options) {
    try {
        return method == FitMethod::mom ? fit_mom(data, options)
                                        : fit_mle(data, std::nullopt, options);
    } catch (const std::runtime_error& e) {
        throw ConvergenceError(e.what());
    }
}

}  // namespace

FitOptions FitControls::to_fit_options() const {
    FitOptions o;
    o.eps_lower = eps_lower;
    o.gtol = gtol;
    o.step_tol = step_tol;
    o.max_iter = max_iter;
    o.mom_tol = mom_tol;
    o.mom_max_iter = mom_max_iter;
    o.mom_anchor_largest = mom_anchor_largest;
    return o;
}

SampleMatrix ingest(const csv::Table& table, Transform transform,
                    double shift) {
    if (table.cols < 2) throw DataError("need at least 2 columns");
    if (table.rows() == 0) throw DataError("no data rows found");
    if (transform == Transform::none) {
        for (double v : table.values)
            if (v == 0.0)
                throw DataError(
                    "zero coordinate in the data; the likelihood needs "
                    "strictly positive entries -- ingest raw counts with "
                    "--transform log-shift instead");
        try {
            return SampleMatrix(table.values, table.cols);
        } catch (const std::invalid_argument& e) {
            throw DataError(e.what());
        }
    }
    if (!(shift > 0.0)) throw std::invalid_argument("shift must be positive");
    std::vector<double> data;
    data.reserve(table.values.size());
    for (double v : table.values) {
        if (!(v >= 0.0))
            throw DataError("raw counts must be nonnegative, got " +
                            csv::format_double(v));
        data.push_back(std::log(shift + v));
    }
    const std::size_t p = table.cols;
    for (std::size_t i = 0; i < data.size(); i += p) {
        double norm2 = 0.0;
        for (std::size_t k = 0; k < p; ++k) norm2 += data[i + k] * data[i + k];
        const double inv = 1.0 / std::sqrt(norm2);
        for (std::size_t k = 0; k < p; ++k) data[i + k] *= inv;
    }
    try {
        return SampleMatrix(std::move(data), p);
    } catch (const std::invalid_argument& e) {
        throw DataError(std::string("after log-shift transform: ") + e.what());
    }
}

int cmd_simulate(const SimulateConfig& cfg, std::ostream& out,
                 std::ostream& err) {
    return guarded(err, [&] {
        const AlphaVector alpha(cfg.alpha);
        if (cfg.n < 1) throw std::invalid_argument("n must be >= 1");
        RandomSource source(cfg.seed);
        const SampleMatrix sample = sample_sdd(alpha, cfg.n, source);

        std::vector<std::string> header(alpha.dim());
        for (std::size_t k = 0; k < alpha.dim(); ++k)
            header[k] = "x" + std::to_string(k + 1);

        auto write_csv = [&](std::ostream& os) {
            os << "# spherical-Dirichlet sample: alpha = "
               << join_alpha(cfg.alpha) << ", n = " << cfg.n
               << ", seed = " << cfg.seed << '\n';
            csv::write_matrix(os, header, sample.data().data(), sample.n(),
                              sample.dim());
        };
        if (cfg.output_path.empty()) {
            write_csv(out);
        } else {
            std::ofstream os(cfg.output_path);
            if (!os) throw DataError("cannot write '" + cfg.output_path + "'");
            write_csv(os);
            out << "wrote " << cfg.n << " rows to " << cfg.output_path << '\n';
        }

        json doc;
        doc["command"] = "simulate";
        doc["alpha"] = join_alpha(cfg.alpha);
        doc["n"] = cfg.n;
        doc["p"] = alpha.dim();
        doc["seed"] = cfg.seed;
        if (!cfg.output_path.empty()) doc["output"] = cfg.output_path;
        write_json_file(doc, cfg.json_path);
        return kExitOk;
    });
}

int cmd_fit(const FitConfig& cfg, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        csv::Table table;
        try {
            table = csv::read_table_file(cfg.input_path);
        } catch (const std::runtime_error& e) {
            throw DataError(cfg.input_path + ": " + e.what());
        }
        const SampleMatrix data = ingest(table, cfg.transform, cfg.shift);
        const FitOptions options = cfg.controls.to_fit_options();

        std::optional<AlphaVector> truth;
        if (!cfg.truth.empty()) {
            truth.emplace(cfg.truth);
            if (truth->dim() != data.dim())
                throw std::invalid_argument(
                    "--truth dimension does not match the data");
        }

        out << "n = " << data.n() << ", p = " << data.dim() << '\n';

        json doc;
        doc["command"] = "fit";
        doc["input"] = cfg.input_path;
        doc["n"] = data.n();
        doc["p"] = data.dim();
        doc["transform"] =
            cfg.transform == Transform::none ? "none" : "log-shift";
        if (cfg.transform == Transform::log_shift) doc["shift"] = cfg.shift;

        bool all_converged = true;
        auto one = [&](FitMethod method) {
            FitResult r = run_fit(method, data, options);
            if (truth) r.norm_error_vs_truth = norm_error_pct(r.alpha_hat, *truth);
            out << '\n';
            print_fit(out, r);
            fit_to_json(doc, fit_method_name(method), r);
            all_converged = all_converged && r.converged;
        };
        if (cfg.method != Method::mle) one(FitMethod::mom);
        if (cfg.method != Method::mom) one(FitMethod::mle);

        write_json_file(doc, cfg.json_path);
        if (!all_converged) {
            err << "error: fit did not converge\n";
            return kExitConvergence;
        }
        return kExitOk;
    });
}

int cmd_describe(const DescribeConfig& cfg, std::ostream& out,
                 std::ostream& err) {
    return guarded(err, [&] {
        const AlphaVector alpha(cfg.alpha);
        const std::size_t p = alpha.dim();
        const MomentSummary m = moments(alpha);
        const SymMatrix cov = covariance(alpha);
        const bool uniform = is_uniform(alpha);

        json doc;
        doc["command"] = "describe";
        doc["alpha"] = join_alpha(cfg.alpha);
        doc["p"] = p;
        doc["alpha0"] = alpha.alpha0();

        out << "p = " << p << ", alpha0 = " << csv::format_double(alpha.alpha0())
            << '\n';
        out << "mean = " << join_alpha(m.mean) << '\n';
        out << "second_raw = " << join_alpha(m.second_raw) << '\n';
        out << "mu = " << join_alpha(m.mu) << '\n';
        out << "mu0 = " << csv::format_double(m.mu0) << '\n';
        out << "resultant_length = " << csv::format_double(m.resultant_length)
            << '\n';
        out << "mean_direction = " << join_alpha(m.mean_direction) << '\n';
        for (std::size_t k = 0; k < p; ++k) {
            doc["mean." + std::to_string(k + 1)] = m.mean[k];
            doc["second_raw." + std::to_string(k + 1)] = m.second_raw[k];
            doc["mu." + std::to_string(k + 1)] = m.mu[k];
            doc["mean_direction." + std::to_string(k + 1)] = m.mean_direction[k];
        }
        doc["mu0"] = m.mu0;
        doc["resultant_length"] = m.resultant_length;

        bool mode_defined = true;
        for (std::size_t k = 0; k < p; ++k)
            if (alpha[k] <= 0.5) mode_defined = false;
        doc["mode_defined"] = mode_defined;
        if (mode_defined) {
            const SpherePoint mo = mode(alpha);
            out << "mode = " << join_alpha(mo.values()) << '\n';
            for (std::size_t k = 0; k < p; ++k)
                doc["mode." + std::to_string(k + 1)] = mo[k];
        } else {
            out << "mode = undefined (requires every alpha_i > 1/2)\n";
        }

        out << "covariance:\n";
        for (std::size_t i = 0; i < p; ++i) {
            out << " ";
            for (std::size_t j = 0; j < p; ++j) {
                out << ' ' << csv::format_double(cov(i, j));
                doc["cov." + std::to_string(i + 1) + "." +
                    std::to_string(j + 1)] = cov(i, j);
            }
            out << '\n';
        }
        const double lam = smallest_eigenvalue(cov);
        out << "cov_trace = " << csv::format_double(cov.trace()) << '\n';
        out << "cov_smallest_eigenvalue = " << csv::format_double(lam) << '\n';
        doc["cov_trace"] = cov.trace();
        doc["cov_smallest_eigenvalue"] = lam;

        out << "log_normalizer = " << csv::format_double(log_normalizer(alpha))
            << '\n';
        doc["log_normalizer"] = log_normalizer(alpha);
        out << "uniform = " << (uniform ? "yes" : "no") << '\n';
        doc["uniform"] = uniform;
        if (uniform) {
            const double c = std::exp(uniform_log_density(p));
            out << "density_constant = " << csv::format_double(c) << '\n';
            doc["density_constant"] = c;
        }

        write_json_file(doc, cfg.json_path);
        return kExitOk;
    });
}

int cmd_density_grid(const DensityGridConfig& cfg, std::ostream& out,
                     std::ostream& err) {
    return guarded(err, [&] {
        const AlphaVector alpha(cfg.alpha);
        const std::size_t p = alpha.dim();
        if (p != 2 && p != 3)
            throw std::invalid_argument("density grids support p = 2 or 3");
        if (cfg.grid_n < 2) throw std::invalid_argument("grid must be >= 2");
        const std::size_t n = cfg.grid_n;
        const double h = 0.5 * kPi / static_cast<double>(n);

        double best_density = -1.0;
        std::vector<double> best_angles;
        std::ostringstream body;
        std::size_t rows = 0;

        auto emit = [&](const std::vector<double>& angles,
                        const std::vector<double>& coords) {
            const double f =
                density(SpherePoint::normalized(coords), alpha);
            for (double a : angles) body << csv::format_double(a) << ',';
            for (double c : coords) body << csv::format_double(c) << ',';
            body << csv::format_double(f) << '\n';
            ++rows;
            if (f > best_density) {
                best_density = f;
                best_angles = angles;
            }
        };

        if (p == 2) {
            for (std::size_t i = 0; i < n; ++i) {
                const double t = (static_cast<double>(i) + 0.5) * h;
                emit({t}, {std::cos(t), std::sin(t)});
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                const double t = (static_cast<double>(i) + 0.5) * h;
                for (std::size_t j = 0; j < n; ++j) {
                    const double u = (static_cast<double>(j) + 0.5) * h;
                    emit({t, u}, {std::sin(t) * std::cos(u),
                                  std::sin(t) * std::sin(u), std::cos(t)});
                }
            }
        }

        std::string header = p == 2 ? "theta" : "theta,phi";
        for (std::size_t k = 1; k <= p; ++k)
            header += ",x" + std::to_string(k);
        header += ",density";

        auto write_csv = [&](std::ostream& os) {
            os << "# density grid: alpha = " << join_alpha(cfg.alpha)
               << ", nodes per angle = " << n << '\n';
            os << header << '\n' << body.str();
        };
        if (cfg.output_path.empty()) {
            write_csv(out);
        } else {
            std::ofstream os(cfg.output_path);
            if (!os) throw DataError("cannot write '" + cfg.output_path + "'");
            write_csv(os);
            out << "wrote " << rows << " rows to " << cfg.output_path << '\n';
        }

        json doc;
        doc["command"] = "density-grid";
        doc["alpha"] = join_alpha(cfg.alpha);
        doc["p"] = p;
        doc["rows"] = rows;
        doc["argmax.theta"] = best_angles[0];
        if (p == 3) doc["argmax.phi"] = best_angles[1];
        doc["argmax.density"] = best_density;
        write_json_file(doc, cfg.json_path);
        return kExitOk;
    });
}

int cmd_reproduce_table1(const Table1Config& cfg, std::ostream& out,
                         std::ostream& err) {
    return guarded(err, [&] {
        const std::vector<std::vector<double>> scenarios = {
            {2.0, 2.0, 2.0}, {5.0, 15.0, 2.0}, {0.5, 0.5, 2.0}, {2.0, 2.0, 10.0}};
        const FitOptions options = cfg.controls.to_fit_options();

        json doc;
        doc["command"] = "reproduce-table1";
        doc["seed"] = cfg.seed;
        doc["n"] = cfg.n;

        char line[160];
        out << "scenario  alpha_true      method  iterations  alpha_hat"
               "                        error_pct\n";
        bool ok = true;
        int mle_better = 0;
        for (std::size_t s = 0; s < scenarios.size(); ++s) {
            const AlphaVector truth(scenarios[s]);
            RandomSource source(cfg.seed + s);
            const SampleMatrix data = sample_sdd(truth, cfg.n, source);
            double errors[2] = {0.0, 0.0};
            for (FitMethod method : {FitMethod::mom, FitMethod::mle}) {
                FitResult r = run_fit(method, data, options);
                r.norm_error_vs_truth = norm_error_pct(r.alpha_hat, truth);
                const std::string prefix =
                    "scenario" + std::to_string(s + 1) + "." +
                    fit_method_name(method);
                fit_to_json(doc, prefix, r);

                std::string true_s, hat_s;
                for (std::size_t k = 0; k < truth.dim(); ++k) {
                    char buf[32];
                    std::snprintf(buf, sizeof(buf), "%g", truth[k]);
                    true_s += (k ? "," : "") + std::string(buf);
                    std::snprintf(buf, sizeof(buf), "%.4f", r.alpha_hat[k]);
                    hat_s += (k ? "," : "") + std::string(buf);
                }
                std::snprintf(line, sizeof(line),
                              "%-9zu %-15s %-7s %-11ld %-32s %.2f\n", s + 1,
                              true_s.c_str(), fit_method_name(method),
                              r.iterations, hat_s.c_str(),
                              *r.norm_error_vs_truth);
                out << line;

                errors[method == FitMethod::mle] = *r.norm_error_vs_truth;
                ok = ok && r.converged && *r.norm_error_vs_truth <= 5.0;
                if (method == FitMethod::mle && r.iterations > 100) {
                    ok = false;
                    err << "error: MLE iteration count " << r.iterations
                        << " exceeds 100 in scenario " << s + 1 << '\n';
                }
            }
            if (errors[1] <= errors[0]) ++mle_better;
        }
        out << "MLE error at or below MOM error in " << mle_better
            << " of 4 scenarios\n";
        doc["mle_better_count"] = mle_better;
        doc["all_within_5pct"] = ok;
        write_json_file(doc, cfg.json_path);
        if (!ok) {
            err << "error: a fit failed its recovery bound\n";
            return kExitConvergence;
        }
        return kExitOk;
    });
}

}  // namespace sphdir::cli
