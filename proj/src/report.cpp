// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#include "pave/report.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace pave {

namespace {

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return std::string(buf);
}

}  // namespace

double mean_active_ratio(const RunResult& r) {
    double sum = 0.0;
    int counted = 0;
    for (const WorkerStats& w : r.workers) {
        double total = w.active_seconds + w.idle_seconds + w.distribute_seconds;
        if (total <= 0.0) continue;
        sum += w.active_seconds / total;
        ++counted;
    }
    return counted ? sum / counted : 0.0;
}

std::string summary_text(const RunReport& r) {
    const GlbConfig& c = r.config;
    std::string s;
    s += "problem:           " + r.problem + "\n";
    s += "eps:               " + fmt("%g", r.eps) + "\n";
    s += std::string("backend:           ") +
         (c.backend == Backend::Sim ? "sim (virtual time)" : "threads") + "\n";
    s += "config:            P=" + std::to_string(c.workers) +
         " slice=" + fmt("%g", c.slice_seconds) + "s w=" +
         std::to_string(c.random_steals) + " l=" +
         std::to_string(c.lifeline_side) + " z=" +
         std::to_string(c.lifeline_dims) + " seed=" + std::to_string(c.seed) +
         "\n";
    s += "wall time:         " + fmt("%.3f", r.result.wall_seconds) + " s\n";
    s += "precise boxes:     " + std::to_string(r.result.total_precise) + "\n";
    s += "inner boxes:       " + std::to_string(r.result.total_inner) + "\n";
    s += "branches:          " + std::to_string(r.result.total_branches) + "\n";
    s += "prune calls:       " + std::to_string(r.result.total_prune_calls) + "\n";
    s += "mean active ratio: " + fmt("%.1f", 100.0 * mean_active_ratio(r.result)) +
         "%\n";
    s += "worker  active_s  idle_s  distrib_s      sent  received  attempts  "
         "successes    prunes  branches\n";
    for (std::size_t i = 0; i < r.result.workers.size(); ++i) {
        const WorkerStats& w = r.result.workers[i];
        const SearchStats& st = r.result.search[i];
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "%6zu  %8.3f  %6.3f  %9.3f  %8lld  %8lld  %8lld  %9lld  "
                      "%8lld  %8lld\n",
                      i, w.active_seconds, w.idle_seconds, w.distribute_seconds,
                      static_cast<long long>(w.sent_boxes),
                      static_cast<long long>(w.received_boxes),
                      static_cast<long long>(w.steal_attempts),
                      static_cast<long long>(w.steal_successes),
                      static_cast<long long>(st.prune_calls),
                      static_cast<long long>(st.branch_count));
        s += buf;
    }
    if (!r.result.per_depth.empty()) {
        int lo = r.result.per_depth.begin()->first;
        int hi = r.result.per_depth.rbegin()->first;
        int peak_depth = lo;
        std::int64_t peak = 0;
        for (const auto& [d, n] : r.result.per_depth)
            if (n > peak) {
                peak = n;
                peak_depth = d;
            }
        s += "depth histogram:   depths " + std::to_string(lo) + ".." +
             std::to_string(hi) + ", peak " + std::to_string(peak) +
             " paths at depth " + std::to_string(peak_depth) + "\n";
    }
    return s;
}

void write_stats_csv(const RunReport& r, std::ostream& os) {
    os << "worker_id,active_s,idle_s,distribute_s,sent_boxes,received_boxes,"
          "prune_calls,branches\n";
    for (std::size_t i = 0; i < r.result.workers.size(); ++i) {
        const WorkerStats& w = r.result.workers[i];
        const SearchStats& st = r.result.search[i];
        char buf[240];
        std::snprintf(buf, sizeof buf, "%zu,%.6f,%.6f,%.6f,%lld,%lld,%lld,%lld\n",
                      i, w.active_seconds, w.idle_seconds, w.distribute_seconds,
                      static_cast<long long>(w.sent_boxes),
                      static_cast<long long>(w.received_boxes),
                      static_cast<long long>(st.prune_calls),
                      static_cast<long long>(st.branch_count));
        os << buf;
    }
    os << "\ndepth,path_count\n";
    for (const auto& [depth, count] : r.result.per_depth)
        os << depth << ',' << count << '\n';
}

void write_stats_csv(const RunReport& r, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_stats_csv(r, os);
    os.flush();
    if (!os) throw std::runtime_error("error writing '" + path + "'");
}

void write_paving(const RunResult& r, std::ostream& os) {
    for (const std::string& line : r.box_lines()) os << line << '\n';
}

void write_paving(const RunResult& r, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_paving(r, os);
    os.flush();
    if (!os) throw std::runtime_error("error writing '" + path + "'");
}

}  // namespace pave
