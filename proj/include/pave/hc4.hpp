// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "pave/box.hpp"
#include "pave/expr.hpp"

namespace pave {

// Forward-backward constraint projection (HC4Revise). Contracts b in place:
// the result keeps every point of b satisfying c. Returns false when the
// projection proves no point of b satisfies c; b is unusable then.
// Strict inequalities are projected through their closure (g <= 0).
bool hc4_revise(const Constraint& c, Box& b);

}  // namespace pave
