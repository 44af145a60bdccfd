// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#include "pave/expr.hpp"

#include <cassert>
#include <cmath>

namespace pave {

namespace {

std::shared_ptr<Expr> node(Op op, ExprPtr a = nullptr, ExprPtr b = nullptr) {
    auto e = std::make_shared<Expr>();
    e->op = op;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
}

bool is_const(const ExprPtr& e, double v) {
    return e->op == Op::Const && e->cval.lo == v && e->cval.hi == v;
}

// Folding builders, used for derivatives only so that parsed problems keep
// their exact source structure.
ExprPtr f_add(const ExprPtr& a, const ExprPtr& b) {
    if (is_const(a, 0.0)) return b;
    if (is_const(b, 0.0)) return a;
    return a + b;
}

ExprPtr f_sub(const ExprPtr& a, const ExprPtr& b) {
    if (is_const(b, 0.0)) return a;
    if (is_const(a, 0.0)) return -b;
    return a - b;
}

ExprPtr f_neg(const ExprPtr& a) {
    if (a->op == Op::Const) return constant(neg(a->cval));
    if (a->op == Op::Neg) return a->a;
    return -a;
}

ExprPtr f_mul(const ExprPtr& a, const ExprPtr& b) {
    if (is_const(a, 0.0) || is_const(b, 0.0)) return constant(0.0);
    if (is_const(a, 1.0)) return b;
    if (is_const(b, 1.0)) return a;
    return a * b;
}

ExprPtr f_div(const ExprPtr& a, const ExprPtr& b) {
    if (is_const(a, 0.0)) return a;
    if (is_const(b, 1.0)) return a;
    return a / b;
}

int flatten(const ExprPtr& e, CompiledExpr& out) {
    CNode n;
    n.op = e->op;
    n.var = e->var;
    n.k = e->k;
    n.cval = e->cval;
    if (e->a) n.a = flatten(e->a, out);
    if (e->b) n.b = flatten(e->b, out);
    if (e->var > out.max_var) out.max_var = e->var;
    out.nodes.push_back(n);
    return static_cast<int>(out.nodes.size()) - 1;
}

}  // namespace

ExprPtr constant(double v) { return constant(Interval(v)); }

ExprPtr constant(const Interval& enclosure, std::string lexeme) {
    auto e = std::make_shared<Expr>();
    e->op = Op::Const;
    e->cval = enclosure;
    e->lexeme = std::move(lexeme);
    return e;
}

ExprPtr variable(int index) {
    assert(index >= 0);
    auto e = std::make_shared<Expr>();
    e->op = Op::Var;
    e->var = index;
    return e;
}

ExprPtr operator+(const ExprPtr& a, const ExprPtr& b) { return node(Op::Add, a, b); }
ExprPtr operator-(const ExprPtr& a, const ExprPtr& b) { return node(Op::Sub, a, b); }
ExprPtr operator*(const ExprPtr& a, const ExprPtr& b) { return node(Op::Mul, a, b); }
ExprPtr operator/(const ExprPtr& a, const ExprPtr& b) { return node(Op::Div, a, b); }
ExprPtr operator-(const ExprPtr& a) { return node(Op::Neg, a); }

ExprPtr pow(const ExprPtr& a, int k) {
    assert(k >= 0);
    if (k == 0) return constant(1.0);
    if (k == 1) return a;
    auto e = node(Op::Pow, a);
    e->k = k;
    return e;
}

ExprPtr sqrt(const ExprPtr& a) { return node(Op::Sqrt, a); }

ExprPtr partial_deriv(const ExprPtr& e, int var) {
    switch (e->op) {
        case Op::Const:
            return constant(0.0);
        case Op::Var:
            return constant(e->var == var ? 1.0 : 0.0);
        case Op::Add:
            return f_add(partial_deriv(e->a, var), partial_deriv(e->b, var));
        case Op::Sub:
            return f_sub(partial_deriv(e->a, var), partial_deriv(e->b, var));
        case Op::Mul:
            return f_add(f_mul(partial_deriv(e->a, var), e->b),
                         f_mul(e->a, partial_deriv(e->b, var)));
        case Op::Div:
            return f_div(f_sub(f_mul(partial_deriv(e->a, var), e->b),
                               f_mul(e->a, partial_deriv(e->b, var))),
                         pow(e->b, 2));
        case Op::Neg:
            return f_neg(partial_deriv(e->a, var));
        case Op::Pow:
            return f_mul(f_mul(constant(double(e->k)), pow(e->a, e->k - 1)),
                         partial_deriv(e->a, var));
        case Op::Sqrt:
            return f_div(partial_deriv(e->a, var),
                         f_mul(constant(2.0), sqrt(e->a)));
    }
    return nullptr;  // unreachable
}

CompiledExpr compile(const ExprPtr& e) {
    CompiledExpr ce;
    flatten(e, ce);
    return ce;
}

Interval eval(const CompiledExpr& ce, const Box& b, std::vector<Interval>& vals) {
    vals.resize(ce.nodes.size());
    for (std::size_t i = 0; i < ce.nodes.size(); ++i) {
        const CNode& n = ce.nodes[i];
        switch (n.op) {
            case Op::Const: vals[i] = n.cval; break;
            case Op::Var:   vals[i] = b[n.var]; break;
            case Op::Add:   vals[i] = add(vals[n.a], vals[n.b]); break;
            case Op::Sub:   vals[i] = sub(vals[n.a], vals[n.b]); break;
            case Op::Mul:   vals[i] = mul(vals[n.a], vals[n.b]); break;
            case Op::Div:   vals[i] = div(vals[n.a], vals[n.b]); break;
            case Op::Neg:   vals[i] = neg(vals[n.a]); break;
            case Op::Pow:   vals[i] = pown(vals[n.a], n.k); break;
            case Op::Sqrt:  vals[i] = pave::sqrt(vals[n.a]); break;
        }
    }
    return vals.back();
}

Interval eval(const CompiledExpr& ce, const Box& b) {
    thread_local std::vector<Interval> scratch;
    return eval(ce, b, scratch);
}

Interval eval(const ExprPtr& e, const Box& b) { return eval(compile(e), b); }

double eval_point(const CompiledExpr& ce, const std::vector<double>& x) {
    thread_local std::vector<double> vals;
    vals.resize(ce.nodes.size());
    for (std::size_t i = 0; i < ce.nodes.size(); ++i) {
        const CNode& n = ce.nodes[i];
        switch (n.op) {
            case Op::Const: vals[i] = midpoint(n.cval); break;
            case Op::Var:   vals[i] = x[n.var]; break;
            case Op::Add:   vals[i] = vals[n.a] + vals[n.b]; break;
            case Op::Sub:   vals[i] = vals[n.a] - vals[n.b]; break;
            case Op::Mul:   vals[i] = vals[n.a] * vals[n.b]; break;
            case Op::Div:   vals[i] = vals[n.a] / vals[n.b]; break;
            case Op::Neg:   vals[i] = -vals[n.a]; break;
            case Op::Pow:   vals[i] = std::pow(vals[n.a], n.k); break;
            case Op::Sqrt:  vals[i] = std::sqrt(vals[n.a]); break;
        }
    }
    return vals.back();
}

void Problem::finalize() {
    eq_index.clear();
    ineq_index.clear();
    jac.clear();
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        constraints[i].compiled = compile(constraints[i].body);
        assert(constraints[i].compiled.max_var < n());
        (constraints[i].rel == Rel::EqZero ? eq_index : ineq_index).push_back(i);
    }
    jac.reserve(eq_index.size());
    for (std::size_t ei : eq_index) {
        std::vector<CompiledExpr> row;
        row.reserve(domain.size());
        for (int j = 0; j < n(); ++j)
            row.push_back(compile(partial_deriv(constraints[ei].body, j)));
        jac.push_back(std::move(row));
    }
}

void eval_jacobian(const Problem& p, const Box& b, std::vector<Interval>& out) {
    const int m = p.n_eq(), n = p.n();
    out.resize(std::size_t(m) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) out[std::size_t(i) * n + j] = eval(p.jac[i][j], b);
}

}  // namespace pave
