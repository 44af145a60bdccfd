// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#include "pave/contractor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pave/hc4.hpp"
#include "pave/newton.hpp"

namespace pave {

namespace {

constexpr double kTheta = 0.1;  // fixed-point stop: no component shrank by >10%

// Skip the Newton step entirely for boxes wider than this: far from a root
// the midpoint-Jacobian precondition is garbage and Gauss-Seidel cannot
// contract, so the sweeps are pure overhead (~2x on the economics family).
constexpr double kNewtonGate = 2.0;

// Only boxes at most this wide get the inflate-and-retry Newton pass; wider
// boxes cannot be in a certification basin anyway.
constexpr double kInflateGate = 1e-2;

// Widens each listed component around its midpoint (doubling the radius,
// plus an absolute floor for degenerate components), clamped to the initial
// domain but never below the component it replaces.
Box inflate(const Box& b, const Box& domain, const std::vector<int>& vars) {
    Box cand = b;
    for (int j : vars) {
        double mid = midpoint(b[j]);
        double rad = 0.5 * width(b[j]);
        double delta = 2.0 * rad + 1e-12 * std::max(1.0, std::fabs(mid));
        cand[j] = hull(b[j], intersect(Interval(mid - delta, mid + delta),
                                       domain[j]));
    }
    return cand;
}

void mark_empty(Box& b) {
    for (auto& c : b.comps) c = Interval::empty();
}

// Greedy dependent-variable selection: walk the rows of the midpoint
// Jacobian (forward or backward), pick the remaining column with the largest
// pivot, eliminate it from the rows still to come. The reverse pass also
// prefers the last maximal column, so tied pivots (common at symmetric
// midpoints) genuinely yield an alternative selection.
std::optional<std::vector<int>> pick_dependents(std::vector<double> mj, int m,
                                                int n, bool reverse) {
    std::vector<int> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    if (reverse) std::reverse(cols.begin(), cols.end());
    std::vector<int> deps;
    auto at = [&](int r, int c) -> double& { return mj[std::size_t(r) * n + c]; };
    for (int step = 0; step < m; ++step) {
        int row = reverse ? m - 1 - step : step;
        int best = -1;
        double best_abs = 0.0;
        for (int c : cols) {
            double v = std::fabs(at(row, c));
            if (std::isfinite(v) && v > best_abs) {
                best_abs = v;
                best = c;
            }
        }
        if (best < 0) return std::nullopt;
        deps.push_back(best);
        cols.erase(std::find(cols.begin(), cols.end(), best));
        for (int step2 = step + 1; step2 < m; ++step2) {
            int r = reverse ? m - 1 - step2 : step2;
            double f = at(r, best) / at(row, best);
            for (int c : cols) at(r, c) -= f * at(row, c);
        }
    }
    return deps;
}

}  // namespace

bool hc4_fixed_point(const Problem& p, Box& b) {
    if (b.is_empty()) return false;
    if (p.constraints.empty()) return true;
    thread_local std::vector<double> w0;
    const int n = p.n();
    while (true) {
        w0.resize(n);
        for (int i = 0; i < n; ++i) w0[i] = width(b[i]);
        for (const auto& c : p.constraints)
            if (!hc4_revise(c, b)) return false;
        bool again = false;
        for (int i = 0; i < n && !again; ++i) {
            double nw = width(b[i]);
            if (std::isinf(w0[i]))
                again = !std::isinf(nw);
            else if (w0[i] > 0.0)
                again = (w0[i] - nw) > kTheta * w0[i];
        }
        if (!again) return true;
    }
}

std::optional<InnerCert> verify_inner(const Problem& p, const Box& b) {
    for (std::size_t ci : p.ineq_index) {
        Interval v = eval(p.constraints[ci].compiled, b);
        if (v.is_empty() || !(v.hi < 0.0)) return std::nullopt;
    }
    const int m = p.n_eq();
    const int n = p.n();
    if (m == 0) return InnerCert{b, {}};
    if (m >= n) return std::nullopt;  // equations make a full-dim inner box impossible

    thread_local std::vector<Interval> J;
    eval_jacobian(p, b, J);
    std::vector<double> mj(J.size());
    for (std::size_t i = 0; i < J.size(); ++i)
        mj[i] = J[i].is_empty() ? 0.0 : midpoint(J[i]);

    for (bool reverse : {false, true}) {
        auto deps = pick_dependents(mj, m, n, reverse);
        if (!deps) continue;
        // Inflate the dependent components: propagation leaves them hugging
        // the image of the parameters, where nothing can be strictly
        // interior. The inflated box stays a superset of b, so the verified
        // box covers every solution point of b once b leaves the queue.
        NewtonResult nr = interval_newton(p, inflate(b, p.domain, *deps), *deps);
        if (nr.cert == NewtonCert::Unique) return InnerCert{nr.box, *deps};
    }
    return std::nullopt;
}

PruneOutcome prune(const Problem& p, const Box& b, double eps) {
    (void)eps;
    PruneOutcome out{b, Certificate::Undecided};
    if (out.box.is_empty() || !hc4_fixed_point(p, out.box)) {
        mark_empty(out.box);
        out.cert = Certificate::EmptyProof;
        return out;
    }
    if (p.well_constrained() && p.n_eq() > 0) {
        std::vector<int> all(p.n());
        std::iota(all.begin(), all.end(), 0);
        // With inequalities present, a certified equation solution must also
        // satisfy them strictly; otherwise keep splitting.
        auto ineqs_strict = [&](const Box& box) {
            for (std::size_t ci : p.ineq_index) {
                Interval v = eval(p.constraints[ci].compiled, box);
                if (v.is_empty() || !(v.hi < 0.0)) return false;
            }
            return true;
        };
        if (max_width(out.box) > kNewtonGate) return out;
        NewtonResult nr = interval_newton(p, out.box, all);
        if (nr.cert == NewtonCert::Empty) {
            mark_empty(out.box);
            out.cert = Certificate::EmptyProof;
            return out;
        }
        if (nr.cert == NewtonCert::Unique) {
            out.box = nr.box;
            if (ineqs_strict(out.box)) out.cert = Certificate::UniqueSolution;
            return out;
        }
        // Propagation can squeeze a box so tightly onto a root that strict
        // interiority becomes unattainable; retry on an inflated copy. The
        // subset guard keeps a near-boundary root from being certified again
        // by the sibling box that does not contain it.
        if (max_width(nr.box) <= kInflateGate) {
            NewtonResult nr2 = interval_newton(p, inflate(nr.box, p.domain, all), all);
            if (nr2.cert == NewtonCert::Empty) {
                mark_empty(out.box);
                out.cert = Certificate::EmptyProof;
                return out;
            }
            if (nr2.cert == NewtonCert::Unique && is_subset(nr2.box, b)) {
                out.box = nr2.box;
                if (ineqs_strict(out.box)) out.cert = Certificate::UniqueSolution;
                return out;
            }
        }
        out.box = nr.box;
    }
    if (auto inner = verify_inner(p, out.box)) {
        out.box = inner->box;
        out.cert = Certificate::InnerVerified;
    }
    return out;
}

}  // namespace pave
