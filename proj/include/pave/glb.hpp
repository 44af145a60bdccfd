// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <deque>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pave/search.hpp"

namespace pave {

// Builds the hyper-cube lifeline graph over workers 0..P-1: each id is read
// as z digits base l, and each outgoing edge increments one digit by 1 mod l.
// Targets >= P are redirected by further increments of the same digit; an
// edge whose digit cycles back is dropped. Requires l >= 2, z >= 1 and
// l^z >= P. The graph is strongly connected with diameter <= z*(l-1).
std::vector<std::vector<int>> init_lifelines(int P, int l, int z);

enum class Backend {
    Threads,  // one OS thread per worker, real clocks
    Sim,      // deterministic single-threaded simulation, virtual clock
};

struct GlbConfig {
    int workers = 1;               // P
    double slice_seconds = 0.001;  // n: min work between distribute points
    int random_steals = 0;         // w: blocking random steal attempts
    int lifeline_side = 2;         // l: base of the lifeline hyper-cube
    int lifeline_dims = 1;         // z: digits of the lifeline hyper-cube
    std::uint64_t seed = 1;
    Backend backend = Backend::Threads;
    // Sim watchdog: abort if a run exceeds this many 1ms ticks (0 = off).
    std::int64_t sim_tick_limit = 200'000'000;
};

struct WorkerStats {
    double active_seconds = 0.0;      // pruning work
    double idle_seconds = 0.0;        // blocked on steals / dormant
    double distribute_seconds = 0.0;  // serving thieves
    std::int64_t sent_boxes = 0;
    std::int64_t received_boxes = 0;
    std::int64_t steal_attempts = 0;  // random + lifeline requests sent
    std::int64_t steal_successes = 0; // loot messages received
};

struct RunResult {
    std::vector<Paving> pavings;           // per worker
    std::vector<SearchStats> search;       // per worker
    std::vector<WorkerStats> workers;      // per worker
    double wall_seconds = 0.0;             // virtual time under Backend::Sim
    std::int64_t total_precise = 0;
    std::int64_t total_inner = 0;
    std::int64_t total_branches = 0;
    std::int64_t total_prune_calls = 0;
    std::map<int, std::int64_t> per_depth; // merged over workers

    // All output boxes of every worker, one normalized line per box,
    // unordered ("P\t..." precise, "I\t..." inner). Sorted by the caller
    // when comparing runs as multisets.
    std::vector<std::string> box_lines() const;
};

// Termination detection: the root work item carries the unit credit 2^0;
// every loot message carries half of one of the sender's credits, and
// workers return all held credits here whenever their queue drains. The
// pool is a binary counter over negative powers of two; it sums to one
// exactly when every queue is empty and no loot is in flight.
class CreditPool {
public:
    void add(int exponent);
    bool full() const { return !bits_.empty() && bits_[0] != 0; }

private:
    std::vector<std::uint8_t> bits_;  // bits_[e] set <=> 2^-e in the pool
};

namespace detail {

enum class MsgType {
    StealRequest,  // thief asks for work (lifeline flag distinguishes kinds)
    Loot,          // work items + one credit; lifeline flag echoes the request
    NoWork,        // negative answer to a *random* steal request only
};

struct Envelope {
    MsgType type = MsgType::NoWork;
    int from = -1;
    bool lifeline = false;
    std::vector<WorkItem> items;
    std::vector<int> credits;  // exponents of attached dyadic credits
};

using Outbox = std::vector<std::pair<int, Envelope>>;

// Backend-independent worker protocol state machine. The drivers own the
// transport (mailboxes or simulated queues) and the clock; every protocol
// rule lives here so both backends behave identically.
struct WorkerCore {
    int id = 0;
    int P = 1;
    int random_steals = 0;
    TaskQueue queue;
    std::vector<int> lifelines;          // outgoing edge targets
    std::vector<std::uint8_t> activated; // one flag per outgoing edge
    std::deque<std::pair<int, bool>> pending;  // (thief, is_lifeline), FIFO
    std::multiset<int> credits;          // exponents of held credits
    std::mt19937_64 rng;
    WorkerStats stats;
    int waiting_victim = -1;             // blocking random steal in flight
    int phase1_remaining = 0;

    WorkerCore(int id_, int P_, const GlbConfig& cfg, const Problem& p,
               double eps, const std::vector<int>& edges);

    // Applies one incoming message. Returns true iff it delivered work.
    bool on_message(Envelope e, Outbox& out);

    // Serves pending thieves: loot while the queue can still be halved,
    // NoWork to remaining random thieves, lifeline thieves stay pending.
    void distribute(Outbox& out);

    // Entering the idle protocol: answer pending random thieves NoWork and
    // surrender every held credit (the driver moves them to the pool).
    void enter_idle(Outbox& out, std::vector<int>& credits_out);

    // Sends the next blocking random steal request; false when phase 1 is
    // exhausted (or P == 1). Sets waiting_victim on success.
    bool phase1_next(Outbox& out);

    // Fires every not-yet-activated lifeline edge (non-blocking).
    void phase2(Outbox& out);
};

}  // namespace detail

// Runs parallel branch and prune over cfg.workers workers; the root box is
// p.domain seeded at worker 0. Throws std::invalid_argument on a bad
// lifeline shape and std::runtime_error if the sim watchdog trips.
RunResult run_workers(const Problem& p, double eps, const GlbConfig& cfg);

}  // namespace pave
