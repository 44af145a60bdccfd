// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0
//
// Independent test oracles: exact rational arithmetic (GMP) for checking
// directed rounding, and a plain-double finite-difference Newton polisher
// for checking certificates. Nothing here uses the interval code paths it
// verifies.

#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "pave/expr.hpp"
#include "pave/interval.hpp"

namespace oracle {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Exact rational value of a finite double (GMP's double conversion is exact).
inline mpq_class rat(double d) { return mpq_class(d); }

// q <= d treating +-inf as the usual extended reals.
inline bool rat_le(const mpq_class& q, double d) {
    if (d == kInf) return true;
    if (d == -kInf) return false;
    return q <= rat(d);
}
inline bool rat_ge(const mpq_class& q, double d) {
    if (d == -kInf) return true;
    if (d == kInf) return false;
    return q >= rat(d);
}

// Containment of the exact value q in [lo, hi].
inline bool encloses(double lo, double hi, const mpq_class& q) {
    return rat_ge(q, lo) && rat_le(q, hi);
}

// r is the exact value q rounded toward -inf, within `slack_ulps` extra
// downward steps. slack 0 demands correct directed rounding.
inline bool rounded_down(double r, const mpq_class& q, int slack_ulps = 0) {
    if (std::isnan(r)) return false;
    if (!rat_ge(q, r)) return false;  // need r <= q
    double up = r;
    for (int i = 0; i <= slack_ulps; ++i) up = std::nextafter(up, kInf);
    // q must lie strictly below r advanced by slack+1 ulps.
    if (up == kInf) return true;
    return q < rat(up);
}
inline bool rounded_up(double r, const mpq_class& q, int slack_ulps = 0) {
    if (std::isnan(r)) return false;
    if (!rat_le(q, r)) return false;  // need r >= q
    double dn = r;
    for (int i = 0; i <= slack_ulps; ++i) dn = std::nextafter(dn, -kInf);
    if (dn == -kInf) return true;
    return q > rat(dn);
}

// Random finite doubles with a wide exponent spread, occasionally exact
// small integers or zero, to exercise all rounding regimes.
class DoubleGen {
public:
    explicit DoubleGen(std::uint64_t seed) : rng_(seed) {}

    double operator()(int emin = -320, int emax = 320) {
        std::uniform_int_distribution<int> kind(0, 19);
        int k = kind(rng_);
        if (k == 0) return 0.0;
        if (k == 1) return double(std::uniform_int_distribution<int>(-8, 8)(rng_));
        std::uniform_real_distribution<double> mant(1.0, 2.0);
        std::uniform_int_distribution<int> expo(emin, emax);
        double v = std::ldexp(mant(rng_), expo(rng_));
        return std::uniform_int_distribution<int>(0, 1)(rng_) ? v : -v;
    }

    // A finite double in the subnormal-risk region.
    double tiny() {
        std::uniform_real_distribution<double> mant(1.0, 2.0);
        std::uniform_int_distribution<int> expo(-1074, -940);
        double v = std::ldexp(mant(rng_), expo(rng_));
        return std::uniform_int_distribution<int>(0, 1)(rng_) ? v : -v;
    }

    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

// ---------------------------------------------------------------------------
// Plain-double Newton polish with finite-difference Jacobian
// ---------------------------------------------------------------------------

// Solves the dense system a*x = rhs in place; false on a tiny pivot.
inline bool dense_solve(std::vector<double>& a, std::vector<double>& rhs, int m) {
    for (int c = 0; c < m; ++c) {
        int piv = c;
        for (int r = c + 1; r < m; ++r)
            if (std::fabs(a[std::size_t(r) * m + c]) >
                std::fabs(a[std::size_t(piv) * m + c]))
                piv = r;
        if (std::fabs(a[std::size_t(piv) * m + c]) < 1e-300) return false;
        if (piv != c) {
            for (int k = c; k < m; ++k)
                std::swap(a[std::size_t(piv) * m + k], a[std::size_t(c) * m + k]);
            std::swap(rhs[std::size_t(piv)], rhs[std::size_t(c)]);
        }
        for (int r = 0; r < m; ++r) {
            if (r == c) continue;
            double f = a[std::size_t(r) * m + c] / a[std::size_t(c) * m + c];
            if (f == 0.0) continue;
            for (int k = c; k < m; ++k)
                a[std::size_t(r) * m + k] -= f * a[std::size_t(c) * m + k];
            rhs[std::size_t(r)] -= f * rhs[std::size_t(c)];
        }
    }
    for (int c = 0; c < m; ++c) rhs[std::size_t(c)] /= a[std::size_t(c) * m + c];
    return true;
}

// Newton iteration on p's equations over the coordinates `vars` of pt (the
// rest stay fixed). Converges when every equation residual is below tol.
inline bool newton_polish(const pave::Problem& p, std::vector<double>& pt,
                          const std::vector<int>& vars, double tol = 1e-12,
                          int max_iter = 80) {
    const int m = p.n_eq();
    if (static_cast<int>(vars.size()) != m) return false;
    std::vector<double> f(static_cast<std::size_t>(m));
    std::vector<double> jac(static_cast<std::size_t>(m) * m);
    std::vector<double> step;
    for (int it = 0; it < max_iter; ++it) {
        double worst = 0.0;
        for (int i = 0; i < m; ++i) {
            f[std::size_t(i)] =
                pave::eval_point(p.constraints[p.eq_index[std::size_t(i)]].compiled, pt);
            worst = std::max(worst, std::fabs(f[std::size_t(i)]));
        }
        if (worst < tol) return true;
        for (int j = 0; j < m; ++j) {
            int v = vars[std::size_t(j)];
            double save = pt[std::size_t(v)];
            double h = 1e-7 * std::max(1.0, std::fabs(save));
            pt[std::size_t(v)] = save + h;
            for (int i = 0; i < m; ++i)
                jac[std::size_t(i) * m + j] = pave::eval_point(
                    p.constraints[p.eq_index[std::size_t(i)]].compiled, pt);
            pt[std::size_t(v)] = save - h;
            for (int i = 0; i < m; ++i) {
                double lo = pave::eval_point(
                    p.constraints[p.eq_index[std::size_t(i)]].compiled, pt);
                jac[std::size_t(i) * m + j] =
                    (jac[std::size_t(i) * m + j] - lo) / (2.0 * h);
            }
            pt[std::size_t(v)] = save;
        }
        step = f;
        std::vector<double> jc = jac;
        if (!dense_solve(jc, step, m)) return false;
        for (int j = 0; j < m; ++j)
            pt[std::size_t(vars[std::size_t(j)])] -= step[std::size_t(j)];
        for (double x : pt)
            if (!std::isfinite(x)) return false;
    }
    return false;
}

// True if some choice of n_eq dependent variables certifies `box` as inner:
// for `samples` random assignments of the remaining (parameter) variables
// inside the box, Newton on the dependents starting from the box midpoint
// converges to a point inside the box with every equation residual below tol
// and every strict inequality negative. Independent of the solver's own
// dependent-variable selection.
inline bool inner_box_oracle(const pave::Problem& p, const pave::Box& box,
                             int samples, std::mt19937_64& rng,
                             double tol = 1e-10) {
    const int n = p.n(), m = p.n_eq();
    auto sample_params = [&](const std::vector<char>& is_dep) {
        std::vector<double> pt(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const auto& c = box[static_cast<std::size_t>(i)];
            if (is_dep[static_cast<std::size_t>(i)]) {
                pt[static_cast<std::size_t>(i)] = pave::midpoint(c);
            } else {
                std::uniform_real_distribution<double> u(c.lo, c.hi);
                pt[static_cast<std::size_t>(i)] = u(rng);
            }
        }
        return pt;
    };
    auto point_ok = [&](const std::vector<double>& pt) {
        if (!pave::contains(box, pt)) return false;
        for (std::size_t ci : p.eq_index)
            if (std::fabs(pave::eval_point(p.constraints[ci].compiled, pt)) >= tol)
                return false;
        for (std::size_t ci : p.ineq_index)
            if (!(pave::eval_point(p.constraints[ci].compiled, pt) < 0.0))
                return false;
        return true;
    };

    if (m == 0) {
        std::vector<char> none(static_cast<std::size_t>(n), 0);
        for (int s = 0; s < samples; ++s) {
            std::vector<double> pt = sample_params(none);
            if (!pave::contains(box, pt)) return false;
            for (std::size_t ci : p.ineq_index)
                if (!(pave::eval_point(p.constraints[ci].compiled, pt) < 0.0))
                    return false;
        }
        return true;
    }
    if (m > n) return false;

    // Enumerate all size-m variable subsets as dependent candidates.
    std::vector<int> comb(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) comb[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<char> is_dep(static_cast<std::size_t>(n), 0);
        for (int v : comb) is_dep[static_cast<std::size_t>(v)] = 1;
        bool all_ok = true;
        for (int s = 0; s < samples && all_ok; ++s) {
            std::vector<double> pt = sample_params(is_dep);
            all_ok = newton_polish(p, pt, comb, 1e-12, 60) && point_ok(pt);
        }
        if (all_ok) return true;

        int i = m - 1;
        while (i >= 0 && comb[static_cast<std::size_t>(i)] == n - m + i) --i;
        if (i < 0) return false;
        ++comb[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < m; ++j)
            comb[static_cast<std::size_t>(j)] = comb[static_cast<std::size_t>(i)] + (j - i);
    }
}

}  // namespace oracle
