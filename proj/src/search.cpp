// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#include "pave/search.hpp"

#include <chrono>

namespace pave {

namespace {
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}
}  // namespace

bool TaskQueue::process_step() {
    if (q_.empty()) return false;
    WorkItem item = std::move(q_.front());
    q_.pop_front();
    ++st_.per_depth[item.depth];

    auto t0 = Clock::now();
    PruneOutcome out = prune(*prob_, item.box, eps_);
    ++st_.prune_calls;
    st_.prune_seconds += seconds_since(t0);

    switch (out.cert) {
        case Certificate::EmptyProof:
            break;
        case Certificate::UniqueSolution:
        case Certificate::InnerVerified:
            pav_.inner.push_back(std::move(out.box));
            break;
        case Certificate::Undecided: {
            if (max_width(out.box) <= eps_) {
                pav_.precise.push_back(std::move(out.box));
                break;
            }
            const int n = prob_->n();
            int v = item.depth % n;
            int tried = 0;
            while (tried < n && !is_splittable(out.box[v])) {
                v = (v + 1) % n;
                ++tried;
            }
            if (tried == n) {
                // Nothing left to bisect at float resolution; keep the box
                // rather than loop forever.
                pav_.precise.push_back(std::move(out.box));
                break;
            }
            auto [left, right] = bisect(out.box, v);
            ++st_.branch_count;
            q_.push_back({std::move(left), item.depth + 1});
            q_.push_back({std::move(right), item.depth + 1});
            break;
        }
    }
    return !q_.empty();
}

bool TaskQueue::process_slice(double min_seconds) {
    auto t0 = Clock::now();
    bool more = !q_.empty();
    while (more) {
        more = process_step();
        if (seconds_since(t0) >= min_seconds) break;
    }
    st_.active_seconds += seconds_since(t0);
    return more;
}

std::vector<WorkItem> TaskQueue::split() {
    if (q_.size() < 2) return {};
    std::vector<WorkItem> loot;
    loot.reserve(q_.size() / 2);
    std::deque<WorkItem> keep;
    std::size_t i = 0;
    for (auto& item : q_) {
        if (i++ % 2 == 1)
            loot.push_back(std::move(item));
        else
            keep.push_back(std::move(item));
    }
    q_.swap(keep);
    return loot;
}

void TaskQueue::merge(std::vector<WorkItem> loot) {
    for (auto& item : loot) q_.push_back(std::move(item));
}

SequentialResult solve_sequential(const Problem& p, double eps) {
    TaskQueue q(p, eps);
    q.push({p.domain, 0});
    while (q.process_step()) {
    }
    return {q.paving(), q.stats()};
}

}  // namespace pave
