// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace pave {

// Inverts the m x m row-major matrix a in place (partial-pivot LU,
// Gauss-Jordan). Returns false if a pivot vanishes, i.e. the matrix is
// singular to working precision; a is then garbage.
bool invert(std::vector<double>& a, int m);

}  // namespace pave
