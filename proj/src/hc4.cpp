// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#include "pave/hc4.hpp"

#include <limits>
#include <vector>

namespace pave {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

bool hc4_revise(const Constraint& c, Box& b) {
    const auto& nodes = c.compiled.nodes;
    thread_local std::vector<Interval> vals, proj;

    Interval root = eval(c.compiled, b, vals);
    if (root.is_empty()) return false;
    Interval target = c.rel == Rel::EqZero ? Interval(0.0) : Interval(-kInf, 0.0);
    Interval rp = intersect(root, target);
    if (rp.is_empty()) return false;

    proj.resize(nodes.size());
    proj.back() = rp;

    // proj[i] is assigned before node i is visited: by the line above for the
    // root, by its (unique) parent for everything else.
    auto assign = [&](int child, const Interval& v) {
        proj[child] = intersect(vals[child], v);
        return !proj[child].is_empty();
    };

    for (int i = static_cast<int>(nodes.size()) - 1; i >= 0; --i) {
        const CNode& n = nodes[i];
        const Interval pt = proj[i];
        if (n.a >= 0 && pt == vals[i]) {
            // No narrowing at this node: the subtree cannot narrow either.
            proj[n.a] = vals[n.a];
            if (n.b >= 0) proj[n.b] = vals[n.b];
            continue;
        }
        switch (n.op) {
            case Op::Const:
                break;
            case Op::Var: {
                Interval nv = intersect(b[n.var], pt);
                if (nv.is_empty()) return false;
                b[n.var] = nv;
                break;
            }
            case Op::Add:
                if (!assign(n.a, sub(pt, vals[n.b]))) return false;
                if (!assign(n.b, sub(pt, vals[n.a]))) return false;
                break;
            case Op::Sub:
                if (!assign(n.a, add(pt, vals[n.b]))) return false;
                if (!assign(n.b, sub(vals[n.a], pt))) return false;
                break;
            case Op::Mul:
                proj[n.a] = div_rel(pt, vals[n.b], vals[n.a]);
                if (proj[n.a].is_empty()) return false;
                proj[n.b] = div_rel(pt, vals[n.a], vals[n.b]);
                if (proj[n.b].is_empty()) return false;
                break;
            case Op::Div:
                if (!assign(n.a, mul(pt, vals[n.b]))) return false;
                proj[n.b] = div_rel(vals[n.a], pt, vals[n.b]);
                if (proj[n.b].is_empty()) return false;
                break;
            case Op::Neg:
                if (!assign(n.a, neg(pt))) return false;
                break;
            case Op::Pow: {
                if (n.k % 2 == 0) {
                    Interval ptn = intersect(pt, Interval(0.0, kInf));
                    if (ptn.is_empty()) return false;
                    Interval pos(root_down(ptn.lo, n.k), root_up(ptn.hi, n.k));
                    Interval negb(-pos.hi, -pos.lo);
                    proj[n.a] = hull(intersect(vals[n.a], pos),
                                     intersect(vals[n.a], negb));
                    if (proj[n.a].is_empty()) return false;
                } else {
                    auto srd = [&n](double v) {
                        return v >= 0.0 ? root_down(v, n.k) : -root_up(-v, n.k);
                    };
                    auto sru = [&n](double v) {
                        return v >= 0.0 ? root_up(v, n.k) : -root_down(-v, n.k);
                    };
                    if (!assign(n.a, Interval(srd(pt.lo), sru(pt.hi)))) return false;
                }
                break;
            }
            case Op::Sqrt: {
                Interval ptn = intersect(pt, Interval(0.0, kInf));
                if (ptn.is_empty()) return false;
                if (!assign(n.a, sqr(ptn))) return false;
                break;
            }
        }
    }
    return true;
}

}  // namespace pave
