// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "pave/box.hpp"
#include "pave/expr.hpp"

namespace pave {

enum class Certificate { EmptyProof, InnerVerified, UniqueSolution, Undecided };

struct PruneOutcome {
    Box box;  // contracted; all components empty iff cert == EmptyProof
    Certificate cert = Certificate::Undecided;
};

// Propagates hc4_revise over all constraints until a full round shrinks no
// component by more than 10% of its width. Contracts b in place; returns
// false when some constraint proves b empty.
bool hc4_fixed_point(const Problem& p, Box& b);

struct InnerCert {
    Box box;  // the box that was actually verified (see below)
    std::vector<int> dep_vars;  // dependent variables of the Newton test
};

// Tries to verify b as an inner box: every strict inequality holds on all of
// b, and (under-constrained case) every choice of the parameter variables
// extends to a solution of the equations. Dependent variables are chosen by
// greedy pivoting on the midpoint Jacobian; their components are epsilon-
// inflated (within the initial domain) before the Newton test, because
// propagation tends to squeeze them onto the image hull where a strict
// interior inclusion is impossible. The returned certificate carries the
// verified box, whose dependent components may differ from b's.
std::optional<InnerCert> verify_inner(const Problem& p, const Box& b);

// The per-box pruning pipeline: HC4 fixed point, then interval Newton
// certification (well-constrained) or inner verification (otherwise).
// eps plays no role here; precision classification happens in the search.
PruneOutcome prune(const Problem& p, const Box& b, double eps);

}  // namespace pave
