// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#include "pave/linsys.hpp"

#include <cmath>

namespace pave {

bool invert(std::vector<double>& a, int m) {
    // Gauss-Jordan on [A | I] with partial pivoting.
    std::vector<double> inv(std::size_t(m) * m, 0.0);
    for (int i = 0; i < m; ++i) inv[std::size_t(i) * m + i] = 1.0;
    auto A = [&](int r, int c) -> double& { return a[std::size_t(r) * m + c]; };
    auto B = [&](int r, int c) -> double& { return inv[std::size_t(r) * m + c]; };

    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::fabs(A(r, col)) > std::fabs(A(piv, col))) piv = r;
        double p = A(piv, col);
        if (p == 0.0 || !std::isfinite(p)) return false;
        if (piv != col)
            for (int c = 0; c < m; ++c) {
                std::swap(A(piv, c), A(col, c));
                std::swap(B(piv, c), B(col, c));
            }
        double inv_p = 1.0 / p;
        for (int c = 0; c < m; ++c) {
            A(col, c) *= inv_p;
            B(col, c) *= inv_p;
        }
        for (int r = 0; r < m; ++r) {
            if (r == col) continue;
            double f = A(r, col);
            if (f == 0.0) continue;
            for (int c = 0; c < m; ++c) {
                A(r, c) -= f * A(col, c);
                B(r, c) -= f * B(col, c);
            }
        }
    }
    for (double v : inv)
        if (!std::isfinite(v)) return false;
    a.swap(inv);
    return true;
}

}  // namespace pave
