// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "pave/box.hpp"
#include "pave/interval.hpp"

namespace pave {

enum class Op { Const, Var, Add, Sub, Mul, Div, Neg, Pow, Sqrt };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression tree. Constants carry their tightest interval
// enclosure plus (when parsed) the source lexeme for faithful printing.
struct Expr {
    Op op;
    Interval cval;       // Const
    std::string lexeme;  // Const: original literal text, may be empty
    int var = -1;        // Var
    int k = 0;           // Pow exponent (>= 2)
    ExprPtr a, b;
};

ExprPtr constant(double v);
ExprPtr constant(const Interval& enclosure, std::string lexeme = {});
ExprPtr variable(int index);

ExprPtr operator+(const ExprPtr& a, const ExprPtr& b);
ExprPtr operator-(const ExprPtr& a, const ExprPtr& b);
ExprPtr operator*(const ExprPtr& a, const ExprPtr& b);
ExprPtr operator/(const ExprPtr& a, const ExprPtr& b);
ExprPtr operator-(const ExprPtr& a);
ExprPtr pow(const ExprPtr& a, int k);  // k >= 0; 0 and 1 fold away
ExprPtr sqrt(const ExprPtr& a);

// Symbolic partial derivative with algebraic folding (0/1 identities) so
// Jacobian trees stay small.
ExprPtr partial_deriv(const ExprPtr& e, int var);

// Flattened postorder form; children precede parents, root is the last node.
struct CNode {
    Op op;
    int a = -1, b = -1;  // child slots
    int var = -1;
    int k = 0;
    Interval cval;
};

struct CompiledExpr {
    std::vector<CNode> nodes;
    int max_var = -1;
};

CompiledExpr compile(const ExprPtr& e);

// Natural interval extension, bottom-up over the compiled nodes. `vals` is
// caller-provided scratch (resized as needed) holding one interval per node,
// which hc4_revise reuses for the backward pass.
Interval eval(const CompiledExpr& ce, const Box& b, std::vector<Interval>& vals);
Interval eval(const CompiledExpr& ce, const Box& b);
Interval eval(const ExprPtr& e, const Box& b);

// Plain double evaluation (round-to-nearest), for polishing and sampling.
double eval_point(const CompiledExpr& ce, const std::vector<double>& x);

enum class Rel { EqZero, LtZero };

struct Constraint {
    ExprPtr body;
    Rel rel = Rel::EqZero;
    CompiledExpr compiled;  // filled by Problem::finalize
};

// An NCSP instance: variables with initial domains, equations f=0 and strict
// inequalities g<0. Immutable (and shared across workers) once finalized.
struct Problem {
    std::string name;
    std::vector<std::string> var_names;
    Box domain;
    std::vector<Constraint> constraints;

    std::vector<std::size_t> eq_index;            // constraint slots with rel EqZero
    std::vector<std::size_t> ineq_index;          // slots with rel LtZero
    std::vector<std::vector<CompiledExpr>> jac;   // [eq][var] compiled partials

    int n() const { return static_cast<int>(domain.size()); }
    int n_eq() const { return static_cast<int>(eq_index.size()); }
    int n_ineq() const { return static_cast<int>(ineq_index.size()); }
    bool well_constrained() const { return n() == n_eq(); }

    // Compiles constraint bodies and the equation Jacobian; call once after
    // construction.
    void finalize();
};

// Interval Jacobian of the equations over b: row-major n_eq x n.
void eval_jacobian(const Problem& p, const Box& b, std::vector<Interval>& out);

}  // namespace pave
