// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>

#include "pave/glb.hpp"

namespace pave {

// Everything one solver run produced, for reporting.
struct RunReport {
    std::string problem;
    double eps = 0.0;
    GlbConfig config;
    RunResult result;
};

// Fraction of a worker's accounted time spent pruning rather than idling
// or distributing; mean over workers that did any work at all.
double mean_active_ratio(const RunResult& r);

// Human-readable run summary (problem, config, counts, per-worker table).
std::string summary_text(const RunReport& r);

// CSV with per-worker rows:
//   worker_id,active_s,idle_s,distribute_s,sent_boxes,received_boxes,
//   prune_calls,branches
// followed by a blank line and a per-depth section: depth,path_count.
void write_stats_csv(const RunReport& r, std::ostream& os);
void write_stats_csv(const RunReport& r, const std::string& path);

// Paving export, one box per line: tag P (precise) or I (inner), then one
// tab-separated "[lo,hi]" field per variable.
void write_paving(const RunResult& r, std::ostream& os);
void write_paving(const RunResult& r, const std::string& path);

}  // namespace pave
