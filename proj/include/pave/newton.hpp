// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "pave/box.hpp"
#include "pave/expr.hpp"

namespace pave {

enum class NewtonCert { Empty, Unique, Unknown };

struct NewtonResult {
    Box box;  // input box with the active components contracted
    NewtonCert cert = NewtonCert::Unknown;
};

// Interval Newton (Hansen-Sengupta) on the square subsystem formed by the
// problem's equations and the `active` variables (active.size() == n_eq);
// the remaining variables act as interval parameters fixed at their values
// in b. The system is preconditioned by the inverse midpoint Jacobian and
// contracted by interval Gauss-Seidel, up to 10 sweeps or <1% width gain.
//
// Certificates: Empty — no equation solution in b (for any parameter value);
// Unique — for every parameter value there is exactly one solution of the
// active subsystem in b, and it lies in the returned box; Unknown otherwise
// (including a singular midpoint Jacobian).
NewtonResult interval_newton(const Problem& p, const Box& b,
                             const std::vector<int>& active);

}  // namespace pave
