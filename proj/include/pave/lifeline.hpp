// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

namespace pave {

// Outgoing lifeline edges for every worker: node ids are written base-l with
// z digits, and node u points at the z ids obtained by incrementing one
// digit modulo l. An edge landing on id >= P is redirected by further
// increments of the same digit; if the digit cycles back, the edge is
// dropped. Requires l >= 2, z >= 1, l^z >= P. The result has out-degree
// <= z, no self-edges, and is strongly connected.
std::vector<std::vector<int>> init_lifelines(int P, int l, int z);

}  // namespace pave
