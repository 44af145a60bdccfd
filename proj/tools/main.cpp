// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pave/glb.hpp"
#include "pave/parser.hpp"
#include "pave/problems.hpp"
#include "pave/report.hpp"

namespace {

// Smallest z >= 1 with l^z >= P.
int ceil_log(int l, int P) {
    int z = 1;
    long long power = l;
    while (power < P) {
        power *= l;
        ++z;
    }
    return z;
}

pave::Problem load_problem(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon != std::string::npos) {
        std::string kind = spec.substr(0, colon);
        std::string rest = spec.substr(colon + 1);
        if (kind == "builtin") return pave::builtin_problem(rest);
        if (kind == "file") return pave::parse_problem_file(rest);
    }
    throw std::invalid_argument("problem must be builtin:<name> or file:<path>, got '" +
                                spec + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parapave: parallel branch-and-prune solver computing "
                 "eps-pavings of numerical constraint systems"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "Solve a problem and report the paving");
    std::string problem_spec;
    double eps = 0.0;
    int workers = 1;
    double slice_ms = 1.0;
    int steal_w = 0;
    int lifeline_l = 2;
    int lifeline_z = 0;
    std::uint64_t seed = 1;
    std::string backend = "threads";
    std::string stats_csv, paving_path;
    int config = 0;

    solve->add_option("problem", problem_spec,
                      "builtin:<name> (eco[(k)], disks, sphere-plane[(d)]) or file:<path>")
        ->required();
    solve->add_option("--eps", eps, "target paving precision")->required();
    solve->add_option("--workers", workers, "number of workers P")
        ->capture_default_str();
    auto* slice_opt =
        solve->add_option("--slice-ms", slice_ms,
                          "min milliseconds of pruning between load-balancing points")
            ->capture_default_str();
    auto* w_opt = solve->add_option("--steal-w", steal_w,
                                    "random steal attempts before lifelines")
                      ->capture_default_str();
    auto* l_opt = solve->add_option("--lifeline-l", lifeline_l,
                                    "lifeline hyper-cube side l")
                      ->capture_default_str();
    auto* z_opt = solve->add_option("--lifeline-z", lifeline_z,
                                    "lifeline hyper-cube dims z (default ceil(log_l P))");
    solve->add_option("--seed", seed, "RNG seed for victim selection")
        ->capture_default_str();
    solve->add_option("--backend", backend, "threads | sim")
        ->capture_default_str()
        ->check(CLI::IsMember({"threads", "sim"}));
    solve->add_option("--stats-csv", stats_csv, "write per-worker stats CSV here");
    solve->add_option("--paving", paving_path, "write the paving here");
    auto* cfg_opt =
        solve->add_option("--config", config,
                          "preset 1-7: (1) 1ms,l=2,w=0 (2) 1ms,l=2,w=1 (3) 1ms,l=2,w=z "
                          "(4) 1ms,l=P,w=0 (5) 1ms,l=P,w=z (6) 100ms,l=2,w=0 "
                          "(7) 100ms,l=2,w=z, with z=ceil(log_l P)")
            ->check(CLI::Range(1, 7));
    cfg_opt->excludes(slice_opt)->excludes(w_opt)->excludes(l_opt)->excludes(z_opt);

    CLI11_PARSE(app, argc, argv);

    try {
        pave::Problem prob = load_problem(problem_spec);
        if (eps <= 0.0) throw std::invalid_argument("--eps must be positive");
        if (workers < 1) throw std::invalid_argument("--workers must be at least 1");

        pave::GlbConfig cfg;
        cfg.workers = workers;
        cfg.seed = seed;
        cfg.backend = backend == "sim" ? pave::Backend::Sim : pave::Backend::Threads;
        if (config != 0) {
            cfg.slice_seconds = config >= 6 ? 0.1 : 0.001;
            cfg.lifeline_side = (config == 4 || config == 5) ? std::max(workers, 2) : 2;
            cfg.lifeline_dims = ceil_log(cfg.lifeline_side, workers);
            cfg.random_steals = (config == 2)                               ? 1
                                : (config == 3 || config == 5 || config == 7)
                                    ? cfg.lifeline_dims
                                    : 0;
        } else {
            if (slice_ms <= 0.0)
                throw std::invalid_argument("--slice-ms must be positive");
            cfg.slice_seconds = slice_ms / 1000.0;
            cfg.lifeline_side = lifeline_l;
            cfg.lifeline_dims =
                z_opt->count() ? lifeline_z : ceil_log(lifeline_l, workers);
            cfg.random_steals = steal_w;
        }

        pave::RunReport report;
        report.problem = prob.name;
        report.eps = eps;
        report.config = cfg;
        report.result = pave::run_workers(prob, eps, cfg);

        std::cout << pave::summary_text(report);
        if (!stats_csv.empty()) pave::write_stats_csv(report, stats_csv);
        if (!paving_path.empty()) pave::write_paving(report.result, paving_path);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
