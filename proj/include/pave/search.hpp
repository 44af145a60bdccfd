// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <vector>

#include "pave/box.hpp"
#include "pave/contractor.hpp"
#include "pave/expr.hpp"

namespace pave {

struct WorkItem {
    Box box;
    int depth = 0;  // bisections from the root; drives round-robin branching
};

// The computed eps-approximation of the solution set: precise boxes (width
// <= eps, undecided) and inner boxes (UniqueSolution or InnerVerified).
struct Paving {
    std::vector<Box> precise;
    std::vector<Box> inner;
};

struct SearchStats {
    std::int64_t branch_count = 0;
    std::int64_t prune_calls = 0;
    double prune_seconds = 0.0;
    double active_seconds = 0.0;           // time spent inside process_slice
    std::map<int, std::int64_t> per_depth; // nodes visited, keyed by depth
};

// FIFO branch-and-prune work queue, owned by one worker at a time. split()
// and merge() exchange work between queues without affecting the union of
// results: the explored tree depends only on (problem, eps, root box).
class TaskQueue {
public:
    TaskQueue(const Problem& p, double eps) : prob_(&p), eps_(eps) {}

    bool empty() const { return q_.empty(); }
    std::size_t size() const { return q_.size(); }
    void push(WorkItem item) { q_.push_back(std::move(item)); }

    // One extract/prune/classify/branch iteration; returns true iff work
    // remains afterwards.
    bool process_step();

    // Runs process_step until at least min_seconds of wall time elapsed or
    // the queue drained; returns true iff work remains.
    bool process_slice(double min_seconds);

    // Removes and returns every second item (the 2nd, 4th, ...), keeping the
    // rest in order: an interleaved half spanning similar tree regions.
    std::vector<WorkItem> split();

    // Appends loot at the back, preserving order.
    void merge(std::vector<WorkItem> loot);

    const Paving& paving() const { return pav_; }
    Paving& paving() { return pav_; }
    const SearchStats& stats() const { return st_; }
    const Problem& problem() const { return *prob_; }
    double eps() const { return eps_; }

private:
    const Problem* prob_;
    double eps_;
    std::deque<WorkItem> q_;
    Paving pav_;
    SearchStats st_;
};

struct SequentialResult {
    Paving paving;
    SearchStats stats;
};

// Runs branch and prune to completion on one queue. Deterministic: the
// paving is a pure function of (p, eps).
SequentialResult solve_sequential(const Problem& p, double eps);

}  // namespace pave
