// Copyright 2026 The cwsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// witness-sim: command-line front end for the classical witness simulator.
//
//   witness-sim run          [options]   one witness experiment (JSON or CSV record)
//   witness-sim sweep-q      [options]   W_est / q_est table over a grid of q
//   witness-sim sweep-gamma  [options]   same over a grid of gamma/sigma
//   witness-sim efficiency   [options]   true and measured efficiencies over gamma/sigma
//
// Settings come from defaults, then --config (key = value text or JSON), then
// flags, then the WITNESS_SEED environment variable. Exit status: 0 success,
// 1 configuration error, 2 degenerate statistics in some emitted record.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cwsim/config.hpp"
#include "cwsim/protocol.hpp"
#include "cwsim/report.hpp"

namespace {

using namespace cwsim;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitDegenerate = 2;

struct Options {
    std::string config_path;
    std::optional<std::string> q, model, scheme, gamma_over_sigma, n, seed, batch_policy, threads;
    std::string out;
    std::string manifest;
    std::string format;
    std::optional<std::string> grid;
};

void add_common(CLI::App *cmd, Options &o, std::string_view default_format) {
    cmd->add_option("--config", o.config_path, "Configuration file (key = value lines or JSON)");
    cmd->add_option("--q", o.q, "Singlet weight q in [0, 1]");
    cmd->add_option("--model", o.model, "Mixture model: discrete | gaussian");
    cmd->add_option("--scheme", o.scheme, "Measurement scheme: local | joint");
    cmd->add_option("--gamma-over-sigma", o.gamma_over_sigma, "Detection threshold as a multiple of sigma");
    cmd->add_option("--n", o.n, "Realizations per batch (integer or 2^k)");
    cmd->add_option("--seed", o.seed, "Master seed (WITNESS_SEED overrides)");
    cmd->add_option("--batch-policy", o.batch_policy, "per-basis | per-count");
    cmd->add_option("--threads", o.threads, "OpenMP threads, 0 = runtime default");
    cmd->add_option("--out", o.out, "Output path (default: stdout)");
    cmd->add_option("--manifest", o.manifest, "Manifest path (default: <out>.manifest.json when --out is set)");
    o.format = std::string(default_format);
    cmd->add_option("--format", o.format, "Output format: csv | json")->check(CLI::IsMember({"csv", "json"}));
}

RunConfig resolve_config(const Options &o) {
    RunConfig cfg;
    if (!o.config_path.empty()) {
        cfg = load_config(o.config_path, cfg);
    }
    const std::pair<const char *, const std::optional<std::string> *> flags[] = {
        {"q", &o.q},
        {"model", &o.model},
        {"scheme", &o.scheme},
        {"gamma_over_sigma", &o.gamma_over_sigma},
        {"n", &o.n},
        {"seed", &o.seed},
        {"batch_policy", &o.batch_policy},
        {"threads", &o.threads},
    };
    for (const auto &[key, value] : flags) {
        if (*value) {
            cfg.set(key, **value);
        }
    }
    if (const char *env = std::getenv("WITNESS_SEED"); env != nullptr && *env != '\0') {
        cfg.seed = parse_count(env, "WITNESS_SEED");
    }
    return cfg;
}

void write_output(const std::string &path, const std::string &payload) {
    if (path.empty()) {
        std::cout << payload;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ConfigError("out", "cannot write '" + path + "'");
    }
    out << payload;
}

void write_manifest(const Options &o, std::string_view command, const RunConfig &cfg,
                    const std::vector<const WitnessResult *> &results, double seconds) {
    std::string path = o.manifest;
    if (path.empty() && !o.out.empty()) {
        path = o.out + ".manifest.json";
    }
    if (path.empty()) {
        return;
    }
    write_output(path, make_manifest(command, cfg, results, utc_timestamp(), seconds).dump(2) + "\n");
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

int cmd_run(const Options &o) {
    const auto start = std::chrono::steady_clock::now();
    const RunConfig cfg = resolve_config(o);
    const WitnessResult result = run_witness_experiment(cfg.to_experiment());

    std::string payload;
    if (o.format == "csv") {
        payload = std::string(kSweepCsvHeader) + "\n" + sweep_csv_row(cfg.q, result) + "\n";
    } else {
        payload = result_to_json(result).dump(2) + "\n";
    }
    write_output(o.out, payload);
    write_manifest(o, "run", cfg, {&result}, elapsed_since(start));
    return has_degenerate_statistics(result.flags) ? kExitDegenerate : kExitOk;
}

enum class SweepKind { Q, Gamma, Efficiency };

int cmd_sweep(const Options &o, SweepKind kind) {
    const auto start = std::chrono::steady_clock::now();
    const RunConfig cfg = resolve_config(o);
    const ExperimentConfig base = cfg.to_experiment();

    std::string grid_text = o.grid.value_or("");
    if (!o.grid) {
        switch (kind) {
            case SweepKind::Q:
                grid_text = "0,0.2,0.33333333333333331,0.4,0.6,0.8,1";
                break;
            case SweepKind::Gamma:
                grid_text = "0.5:1.25:0.05";
                break;
            case SweepKind::Efficiency:
                grid_text = "0.5:1.3:0.05";
                break;
        }
    }
    const std::vector<double> grid = parse_grid(grid_text, "grid");
    for (double v : grid) {
        if (kind == SweepKind::Q && !(v >= 0.0 && v <= 1.0)) {
            throw ConfigError("grid", "q values must lie in [0, 1]");
        }
        if (kind != SweepKind::Q && !(v > 0.0)) {
            throw ConfigError("grid", "gamma/sigma values must be positive");
        }
    }
    if (kind == SweepKind::Efficiency && base.scheme != Scheme::Local) {
        throw ConfigError("scheme", "efficiency analysis requires the local scheme");
    }

    const SweepResult sweep = kind == SweepKind::Q ? sweep_q(base, grid) : sweep_gamma(base, grid);

    std::string payload;
    if (o.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const SweepRow &row : sweep.rows) {
            nlohmann::json j = result_to_json(row.result);
            j["param"] = row.value;
            if (!row.error.empty()) {
                j["error"] = row.error;
            }
            rows.push_back(std::move(j));
        }
        payload = nlohmann::json{{"parameter", sweep.parameter}, {"rows", rows}}.dump(2) + "\n";
    } else if (kind == SweepKind::Efficiency) {
        payload = efficiency_csv(sweep);
    } else {
        payload = sweep_csv(sweep);
    }
    write_output(o.out, payload);

    std::vector<const WitnessResult *> results;
    bool degenerate = false;
    for (const SweepRow &row : sweep.rows) {
        results.push_back(&row.result);
        degenerate = degenerate || has_degenerate_statistics(row.result.flags);
    }
    const char *name = kind == SweepKind::Q ? "sweep-q" : kind == SweepKind::Gamma ? "sweep-gamma" : "efficiency";
    write_manifest(o, name, cfg, results, elapsed_since(start));
    return degenerate ? kExitDegenerate : kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Monte Carlo simulator of a classical entanglement-witness experiment"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    Options run_opts, sq_opts, sg_opts, eff_opts;
    CLI::App *run = app.add_subcommand("run", "Run one witness experiment");
    add_common(run, run_opts, "json");

    CLI::App *sq = app.add_subcommand("sweep-q", "Sweep the singlet weight q");
    add_common(sq, sq_opts, "csv");
    sq->add_option("--grid", sq_opts.grid, "q values: 'a,b,c' or 'start:stop:step'");

    CLI::App *sg = app.add_subcommand("sweep-gamma", "Sweep the detection threshold gamma/sigma");
    add_common(sg, sg_opts, "csv");
    sg->add_option("--grid", sg_opts.grid, "gamma/sigma values: 'a,b,c' or 'start:stop:step'");

    CLI::App *eff = app.add_subcommand("efficiency", "Detector efficiencies versus gamma/sigma");
    add_common(eff, eff_opts, "csv");
    eff->add_option("--grid", eff_opts.grid, "gamma/sigma values: 'a,b,c' or 'start:stop:step'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (run->parsed()) {
            return cmd_run(run_opts);
        }
        if (sq->parsed()) {
            return cmd_sweep(sq_opts, SweepKind::Q);
        }
        if (sg->parsed()) {
            return cmd_sweep(sg_opts, SweepKind::Gamma);
        }
        return cmd_sweep(eff_opts, SweepKind::Efficiency);
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument &e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
}
