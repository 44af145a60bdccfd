// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#include "pave/lifeline.hpp"

#include <cassert>
#include <cstdint>
#include <stdexcept>

namespace pave {

std::vector<std::vector<int>> init_lifelines(int P, int l, int z) {
    if (P < 1 || l < 2 || z < 1) throw std::invalid_argument("lifeline: need P >= 1, l >= 2, z >= 1");
    std::int64_t span = 1;
    for (int d = 0; d < z; ++d) {
        span *= l;
        if (span > (std::int64_t(1) << 40)) break;  // plenty; avoids overflow
    }
    if (span < P) throw std::invalid_argument("lifeline: l^z must be >= P");

    std::vector<std::vector<int>> out(P);
    for (int u = 0; u < P; ++u) {
        std::int64_t weight = 1;
        for (int d = 0; d < z; ++d, weight *= l) {
            int digit = int((u / weight) % l);
            // Increment this digit mod l until the id names a real worker or
            // we are back where we started.
            for (int step = 1; step < l; ++step) {
                int nd = (digit + step) % l;
                std::int64_t v = u + (std::int64_t(nd) - digit) * weight;
                if (v < P) {
                    bool dup = false;
                    for (int w : out[u]) dup = dup || w == int(v);
                    if (v != u && !dup) out[u].push_back(int(v));
                    break;
                }
            }
        }
    }
    return out;
}

}  // namespace pave
