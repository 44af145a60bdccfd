// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#include "pave/newton.hpp"

#include <cassert>
#include <cmath>

#include "pave/linsys.hpp"

namespace pave {

NewtonResult interval_newton(const Problem& p, const Box& b,
                             const std::vector<int>& active) {
    const int m = p.n_eq();
    const int n = p.n();
    assert(static_cast<int>(active.size()) == m);
    NewtonResult res{b, NewtonCert::Unknown};
    if (m == 0 || res.box.is_empty()) return res;
    Box& x = res.box;

    thread_local std::vector<Interval> J, A, rhs, y, fm, y0;
    thread_local std::vector<double> C, mid;

    for (int sweep = 0; sweep < 10; ++sweep) {
        double w_before = 0.0;
        for (int j = 0; j < m; ++j) w_before += width(x[active[j]]);

        eval_jacobian(p, x, J);
        C.resize(std::size_t(m) * m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                const Interval& e = J[std::size_t(i) * n + active[j]];
                if (e.is_empty()) return res;  // derivative undefined somewhere
                C[std::size_t(i) * m + j] = midpoint(e);
            }
        if (!invert(C, m)) return res;  // no usable precondition

        // Rigorous residual at the active midpoint; parameters stay intervals.
        mid.resize(m);
        Box mbox = x;
        for (int j = 0; j < m; ++j) {
            mid[j] = midpoint(x[active[j]]);
            mbox[active[j]] = Interval(mid[j]);
        }
        fm.resize(m);
        for (int i = 0; i < m; ++i) {
            fm[i] = eval(p.constraints[p.eq_index[i]].compiled, mbox);
            if (fm[i].is_empty()) return res;
        }

        // A = C * J_active and rhs = -(C * fm), with outward rounding.
        A.resize(std::size_t(m) * m);
        rhs.resize(m);
        for (int i = 0; i < m; ++i) {
            for (int j = 0; j < m; ++j) {
                Interval acc(0.0);
                for (int k = 0; k < m; ++k)
                    acc = add(acc, mul(Interval(C[std::size_t(i) * m + k]),
                                       J[std::size_t(k) * n + active[j]]));
                A[std::size_t(i) * m + j] = acc;
            }
            Interval acc(0.0);
            for (int k = 0; k < m; ++k)
                acc = add(acc, mul(Interval(C[std::size_t(i) * m + k]), fm[k]));
            rhs[i] = neg(acc);
        }

        // Gauss-Seidel in the shifted frame y = x_active - mid.
        y.resize(m);
        y0.resize(m);
        for (int j = 0; j < m; ++j) y0[j] = y[j] = sub(x[active[j]], Interval(mid[j]));

        bool interior = true, regular = true;
        for (int i = 0; i < m; ++i) {
            Interval num = rhs[i];
            for (int j = 0; j < m; ++j)
                if (j != i) num = sub(num, mul(A[std::size_t(i) * m + j], y[j]));
            Interval yi = div_rel(num, A[std::size_t(i) * m + i], y[i]);
            if (yi.is_empty()) {
                for (int j = 0; j < m; ++j) x[active[j]] = Interval::empty();
                res.cert = NewtonCert::Empty;
                return res;
            }
            if (contains_zero(A[std::size_t(i) * m + i])) regular = false;
            // Interiority is tested back in the x frame so the outward
            // rounding of the shift cannot fake a strict inclusion.
            Interval xi = add(yi, Interval(mid[i]));
            if (!is_interior(xi, x[active[i]])) interior = false;
            y[i] = yi;
        }
        for (int j = 0; j < m; ++j) {
            Interval xi = intersect(x[active[j]], add(y[j], Interval(mid[j])));
            if (xi.is_empty()) {
                for (int jj = 0; jj < m; ++jj) x[active[jj]] = Interval::empty();
                res.cert = NewtonCert::Empty;
                return res;
            }
            x[active[j]] = xi;
        }
        if (interior && regular) {
            res.cert = NewtonCert::Unique;
            return res;
        }
        double w_after = 0.0;
        for (int j = 0; j < m; ++j) w_after += width(x[active[j]]);
        if (!(w_after < 0.99 * w_before)) break;
    }
    return res;
}

}  // namespace pave
