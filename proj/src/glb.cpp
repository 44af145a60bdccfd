// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#include "pave/glb.hpp"

#include <atomic>
#include <cassert>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace pave {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Halves one held credit: keeps one half, returns the exponent of the other.
int take_half_credit(std::multiset<int>& credits) {
    assert(!credits.empty() && "sending loot without a credit to attach");
    auto it = credits.begin();  // most valuable credit splits most evenly
    int e = *it;
    credits.erase(it);
    credits.insert(e + 1);
    return e + 1;
}

}  // namespace

void CreditPool::add(int exponent) {
    assert(exponent >= 0);
    if (static_cast<int>(bits_.size()) <= exponent)
        bits_.resize(static_cast<std::size_t>(exponent) + 1, 0);
    int e = exponent;
    while (e > 0 && bits_[e]) {
        bits_[e] = 0;  // 2^-e + 2^-e = 2^-(e-1): carry toward the unit
        --e;
    }
    assert(bits_[e] == 0 && "credit total exceeded one");
    bits_[e] = 1;
}

std::vector<std::string> RunResult::box_lines() const {
    auto render = [](char tag, const Box& b) {
        std::string s(1, tag);
        for (std::size_t i = 0; i < b.size(); ++i) {
            s += '\t';
            s += to_string(b[i]);
        }
        return s;
    };
    std::vector<std::string> lines;
    for (const Paving& pv : pavings) {
        for (const Box& b : pv.precise) lines.push_back(render('P', b));
        for (const Box& b : pv.inner) lines.push_back(render('I', b));
    }
    return lines;
}

namespace detail {

WorkerCore::WorkerCore(int id_, int P_, const GlbConfig& cfg, const Problem& p,
                       double eps, const std::vector<int>& edges)
    : id(id_),
      P(P_),
      random_steals(cfg.random_steals),
      queue(p, eps),
      lifelines(edges),
      activated(edges.size(), 0),
      rng(splitmix64(cfg.seed ^ static_cast<std::uint64_t>(id_))) {}

bool WorkerCore::on_message(Envelope e, Outbox& out) {
    switch (e.type) {
    case MsgType::StealRequest:
        if (queue.empty() && !e.lifeline) {
            Envelope no;
            no.type = MsgType::NoWork;
            no.from = id;
            out.emplace_back(e.from, std::move(no));
        } else {
            // Lifeline requests are never refused: they wait here until this
            // worker has work to share (or the whole run terminates).
            pending.emplace_back(e.from, e.lifeline);
        }
        return false;
    case MsgType::Loot:
        for (int c : e.credits) credits.insert(c);
        stats.received_boxes += static_cast<std::int64_t>(e.items.size());
        stats.steal_successes += 1;
        if (e.lifeline) {
            for (std::size_t j = 0; j < lifelines.size(); ++j)
                if (lifelines[j] == e.from) activated[j] = 0;
        }
        if (e.from == waiting_victim) waiting_victim = -1;
        queue.merge(std::move(e.items));
        return true;
    case MsgType::NoWork:
        // Answers the blocking random steal; stale answers from earlier
        // rounds are ignored (loot, by contrast, is always merged).
        if (e.from == waiting_victim) waiting_victim = -1;
        return false;
    }
    return false;
}

void WorkerCore::distribute(Outbox& out) {
    std::deque<std::pair<int, bool>> keep;
    while (!pending.empty()) {
        auto [thief, via_lifeline] = pending.front();
        pending.pop_front();
        if (queue.size() >= 2) {
            Envelope loot;
            loot.type = MsgType::Loot;
            loot.from = id;
            loot.lifeline = via_lifeline;
            loot.items = queue.split();
            loot.credits.push_back(take_half_credit(credits));
            stats.sent_boxes += static_cast<std::int64_t>(loot.items.size());
            out.emplace_back(thief, std::move(loot));
        } else if (!via_lifeline) {
            Envelope no;
            no.type = MsgType::NoWork;
            no.from = id;
            out.emplace_back(thief, std::move(no));
        } else {
            keep.emplace_back(thief, via_lifeline);
        }
    }
    pending.swap(keep);
}

void WorkerCore::enter_idle(Outbox& out, std::vector<int>& credits_out) {
    std::deque<std::pair<int, bool>> keep;
    for (auto& [thief, via_lifeline] : pending) {
        if (via_lifeline) {
            keep.emplace_back(thief, via_lifeline);
        } else {
            Envelope no;
            no.type = MsgType::NoWork;
            no.from = id;
            out.emplace_back(thief, std::move(no));
        }
    }
    pending.swap(keep);
    credits_out.assign(credits.begin(), credits.end());
    credits.clear();
    phase1_remaining = (P >= 2) ? random_steals : 0;
    waiting_victim = -1;
}

bool WorkerCore::phase1_next(Outbox& out) {
    if (phase1_remaining <= 0 || P < 2) return false;
    --phase1_remaining;
    std::uniform_int_distribution<int> dist(0, P - 2);
    int victim = dist(rng);
    if (victim >= id) ++victim;  // uniform over all workers except self
    Envelope req;
    req.type = MsgType::StealRequest;
    req.from = id;
    req.lifeline = false;
    out.emplace_back(victim, std::move(req));
    waiting_victim = victim;
    stats.steal_attempts += 1;
    return true;
}

void WorkerCore::phase2(Outbox& out) {
    for (std::size_t j = 0; j < lifelines.size(); ++j) {
        if (activated[j]) continue;
        activated[j] = 1;  // reset only when this edge delivers loot
        Envelope req;
        req.type = MsgType::StealRequest;
        req.from = id;
        req.lifeline = true;
        out.emplace_back(lifelines[j], std::move(req));
        stats.steal_attempts += 1;
    }
}

}  // namespace detail

namespace {

using detail::Envelope;
using detail::Outbox;
using detail::WorkerCore;

std::vector<std::unique_ptr<WorkerCore>> make_cores(
    const Problem& p, double eps, const GlbConfig& cfg,
    const std::vector<std::vector<int>>& graph) {
    std::vector<std::unique_ptr<WorkerCore>> cores;
    cores.reserve(static_cast<std::size_t>(cfg.workers));
    for (int i = 0; i < cfg.workers; ++i)
        cores.push_back(std::make_unique<WorkerCore>(i, cfg.workers, cfg, p,
                                                     eps, graph[i]));
    cores[0]->queue.push(WorkItem{p.domain, 0});
    cores[0]->credits.insert(0);  // the unit credit 2^0
    return cores;
}

RunResult assemble(std::vector<std::unique_ptr<WorkerCore>>& cores,
                   double wall_seconds) {
    RunResult r;
    r.wall_seconds = wall_seconds;
    for (auto& c : cores) {
        r.total_precise += static_cast<std::int64_t>(c->queue.paving().precise.size());
        r.total_inner += static_cast<std::int64_t>(c->queue.paving().inner.size());
        r.total_branches += c->queue.stats().branch_count;
        r.total_prune_calls += c->queue.stats().prune_calls;
        for (const auto& [depth, count] : c->queue.stats().per_depth)
            r.per_depth[depth] += count;
        r.search.push_back(c->queue.stats());
        r.pavings.push_back(std::move(c->queue.paving()));
        r.workers.push_back(c->stats);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Threads backend
// ---------------------------------------------------------------------------

struct Mailbox {
    std::mutex mu;
    std::condition_variable cv;
    std::deque<Envelope> box;
};

struct ThreadsShared {
    std::vector<Mailbox> mail;
    std::mutex pool_mu;
    CreditPool pool;
    std::atomic<bool> stop{false};

    explicit ThreadsShared(int P) : mail(static_cast<std::size_t>(P)) {}

    void send(int to, Envelope e) {
        auto& m = mail[static_cast<std::size_t>(to)];
        {
            std::lock_guard<std::mutex> lk(m.mu);
            m.box.push_back(std::move(e));
        }
        m.cv.notify_one();
    }

    void flush(Outbox& out) {
        for (auto& [to, env] : out) send(to, std::move(env));
        out.clear();
    }

    void return_credits(std::vector<int>& credits) {
        if (credits.empty()) return;
        bool full = false;
        {
            std::lock_guard<std::mutex> lk(pool_mu);
            for (int e : credits) pool.add(e);
            full = pool.full();
        }
        credits.clear();
        if (full) broadcast_stop();
    }

    void broadcast_stop() {
        stop.store(true);
        // Locking each mailbox guarantees no waiter is between its predicate
        // check and the wait when the notification fires.
        for (auto& m : mail) {
            std::lock_guard<std::mutex> lk(m.mu);
            m.cv.notify_all();
        }
    }
};

void thread_worker(WorkerCore& w, ThreadsShared& sh, double slice_seconds) {
    using clock = std::chrono::steady_clock;
    auto secs = [](clock::duration d) {
        return std::chrono::duration<double>(d).count();
    };
    Outbox out;
    Mailbox& my = sh.mail[static_cast<std::size_t>(w.id)];

    // Moves every queued message out of the mailbox and applies it; returns
    // true iff any message delivered work.
    auto drain = [&]() {
        std::deque<Envelope> batch;
        {
            std::lock_guard<std::mutex> lk(my.mu);
            batch.swap(my.box);
        }
        bool got = false;
        for (auto& e : batch)
            if (w.on_message(std::move(e), out)) got = true;
        sh.flush(out);
        return got;
    };

    for (;;) {
        if (sh.stop.load()) break;
        drain();
        if (!w.queue.empty()) {
            w.queue.process_slice(slice_seconds);
            auto t0 = clock::now();
            drain();  // pick up requests that arrived during the slice
            w.distribute(out);
            sh.flush(out);
            w.stats.distribute_seconds += secs(clock::now() - t0);
            continue;
        }

        // Idle protocol. Surrender credits first: from here on any work this
        // worker obtains arrives as loot with its own credit attached.
        std::vector<int> credits;
        w.enter_idle(out, credits);
        sh.flush(out);
        sh.return_credits(credits);

        // Phase 1: up to `random_steals` blocking random steal attempts.
        bool got_work = false;
        while (!sh.stop.load() && !got_work && w.phase1_next(out)) {
            sh.flush(out);
            auto t0 = clock::now();
            std::unique_lock<std::mutex> lk(my.mu);
            while (!sh.stop.load()) {
                if (!my.box.empty()) {
                    std::deque<Envelope> batch;
                    batch.swap(my.box);
                    lk.unlock();
                    for (auto& e : batch)
                        if (w.on_message(std::move(e), out)) got_work = true;
                    sh.flush(out);
                    lk.lock();
                    if (got_work || w.waiting_victim == -1) break;
                    continue;
                }
                my.cv.wait(lk);
            }
            lk.unlock();
            w.stats.idle_seconds += secs(clock::now() - t0);
        }
        if (got_work || sh.stop.load()) continue;

        // Phase 2: activate the remaining lifelines, then sleep until loot
        // or global termination arrives.
        w.phase2(out);
        sh.flush(out);
        auto t0 = clock::now();
        std::unique_lock<std::mutex> lk(my.mu);
        while (!sh.stop.load() && w.queue.empty()) {
            if (!my.box.empty()) {
                std::deque<Envelope> batch;
                batch.swap(my.box);
                lk.unlock();
                for (auto& e : batch) w.on_message(std::move(e), out);
                sh.flush(out);
                lk.lock();
                continue;
            }
            my.cv.wait(lk);
        }
        lk.unlock();
        w.stats.idle_seconds += secs(clock::now() - t0);
    }
}

RunResult run_threads(const Problem& p, double eps, const GlbConfig& cfg,
                      const std::vector<std::vector<int>>& graph) {
    using clock = std::chrono::steady_clock;
    auto cores = make_cores(p, eps, cfg, graph);
    ThreadsShared sh(cfg.workers);

    std::mutex err_mu;
    std::exception_ptr err;
    auto t0 = clock::now();
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(cfg.workers));
    for (int i = 0; i < cfg.workers; ++i)
        threads.emplace_back([&, i] {
            try {
                thread_worker(*cores[static_cast<std::size_t>(i)], sh,
                              cfg.slice_seconds);
            } catch (...) {
                {
                    std::lock_guard<std::mutex> lk(err_mu);
                    if (!err) err = std::current_exception();
                }
                sh.broadcast_stop();  // abort the whole run with a diagnostic
            }
        });
    for (auto& t : threads) t.join();
    if (err) std::rethrow_exception(err);
    double wall = std::chrono::duration<double>(clock::now() - t0).count();

    assert(sh.pool.full() && "terminated without the credit pool summing to one");
    for (auto& c : cores)
        c->stats.active_seconds = c->queue.stats().active_seconds;
    return assemble(cores, wall);
}

// ---------------------------------------------------------------------------
// Sim backend: deterministic round-robin, one tick = 1 virtual millisecond
// = one prune step. Message passing and distribution are free in this cost
// model; ticks not spent pruning count as idle time.
// ---------------------------------------------------------------------------

enum class SimState { Work, StealWait, Dormant };

RunResult run_sim(const Problem& p, double eps, const GlbConfig& cfg,
                  const std::vector<std::vector<int>>& graph) {
    constexpr double kTick = 0.001;
    auto cores = make_cores(p, eps, cfg, graph);
    const int P = cfg.workers;
    const std::int64_t steps_per_slice =
        std::max<std::int64_t>(1, std::llround(cfg.slice_seconds / kTick));

    std::vector<std::deque<Envelope>> inbox(static_cast<std::size_t>(P));
    std::vector<SimState> state(static_cast<std::size_t>(P), SimState::Work);
    std::vector<std::int64_t> slice_ticks(static_cast<std::size_t>(P), 0);
    CreditPool pool;
    bool stop = false;
    Outbox out;

    auto deliver = [&]() {
        for (auto& [to, env] : out)
            inbox[static_cast<std::size_t>(to)].push_back(std::move(env));
        out.clear();
    };
    auto return_credits = [&](std::vector<int>& credits) {
        for (int e : credits) pool.add(e);
        credits.clear();
        if (pool.full()) stop = true;
    };
    // Runs the idle entry chain: surrender credits, then either launch the
    // first blocking random steal or fire the lifelines and go dormant.
    auto enter_idle = [&](WorkerCore& w) {
        std::vector<int> credits;
        w.enter_idle(out, credits);
        deliver();
        return_credits(credits);
        if (w.phase1_next(out)) {
            deliver();
            state[static_cast<std::size_t>(w.id)] = SimState::StealWait;
        } else {
            w.phase2(out);
            deliver();
            state[static_cast<std::size_t>(w.id)] = SimState::Dormant;
        }
    };

    std::int64_t tick = 0;
    while (!stop) {
        if (cfg.sim_tick_limit > 0 && tick >= cfg.sim_tick_limit)
            throw std::runtime_error("sim backend exceeded the tick limit");
        for (int i = 0; i < P && !stop; ++i) {
            WorkerCore& w = *cores[static_cast<std::size_t>(i)];
            auto& in = inbox[static_cast<std::size_t>(i)];
            bool got_work = false;
            while (!in.empty()) {
                Envelope e = std::move(in.front());
                in.pop_front();
                if (w.on_message(std::move(e), out)) got_work = true;
            }
            deliver();
            if (got_work) {
                state[static_cast<std::size_t>(i)] = SimState::Work;
                slice_ticks[static_cast<std::size_t>(i)] = 0;
            }
            switch (state[static_cast<std::size_t>(i)]) {
            case SimState::Work:
                if (!w.queue.empty()) {
                    w.queue.process_step();
                    w.stats.active_seconds += kTick;
                    auto& st = slice_ticks[static_cast<std::size_t>(i)];
                    ++st;
                    if (st >= steps_per_slice || w.queue.empty()) {
                        w.distribute(out);
                        deliver();
                        st = 0;
                    }
                    if (w.queue.empty()) enter_idle(w);
                } else {
                    // Only at startup: workers seeded without the root box.
                    w.stats.idle_seconds += kTick;
                    enter_idle(w);
                }
                break;
            case SimState::StealWait:
                if (w.waiting_victim == -1) {
                    // The victim said NoWork this tick: move on.
                    if (w.phase1_next(out)) {
                        deliver();
                    } else {
                        w.phase2(out);
                        deliver();
                        state[static_cast<std::size_t>(i)] = SimState::Dormant;
                    }
                }
                w.stats.idle_seconds += kTick;
                break;
            case SimState::Dormant:
                w.stats.idle_seconds += kTick;
                break;
            }
        }
        ++tick;
    }
    assert(pool.full());
    return assemble(cores, static_cast<double>(tick) * kTick);
}

}  // namespace

RunResult run_workers(const Problem& p, double eps, const GlbConfig& cfg) {
    if (cfg.workers < 1)
        throw std::invalid_argument("workers must be at least 1");
    if (!(cfg.slice_seconds > 0.0))
        throw std::invalid_argument("slice_seconds must be positive");
    if (cfg.random_steals < 0)
        throw std::invalid_argument("random_steals must be non-negative");
    auto graph = init_lifelines(cfg.workers, cfg.lifeline_side, cfg.lifeline_dims);
    if (cfg.backend == Backend::Sim) return run_sim(p, eps, cfg, graph);
    return run_threads(p, eps, cfg, graph);
}

}  // namespace pave
