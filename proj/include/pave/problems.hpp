// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "pave/expr.hpp"

namespace pave {

// The k-variable economics benchmark (well-constrained):
//   (x_j + sum_{i=1}^{k-1-j} x_i * x_{i+j}) * x_k - j = 0   for j = 1..k-1
//   x_1 + ... + x_{k-1} + 1 = 0
// on [-100,100]^k. The literature varies in the constant terms; this uses
// c_j = j, under which eco8 has exactly 8 solutions.
Problem make_eco(int k);

// Intersection of two unit disks in the (v1,v2) plane, modeled as an
// under-constrained system over v = (v1,..,v4):
//   v1^2 + v2^2 - v3 = 0
//   (v1-1)^2 + v2^2 - v4 = 0
// on ([-1,1], [-1,1], [0,1], [0,1]). The solution set projects to the lens
// where both squared radii stay within 1.
Problem make_disks();

// d-sphere intersected with a hyperplane (under-constrained):
//   x_1^2 + ... + x_d^2 - 1 = 0
//   x_1 + ... + x_d = 0
// on [-1,1]^d; the solution set is a (d-2)-sphere.
Problem make_sphere_plane(int d);

// Dispatches a builtin by name: "eco", "eco10", "eco(10)" (default k=8);
// "disks"; "sphere-plane", "sphere-plane(5)", "sphere-plane5" (default
// d=3). Throws std::invalid_argument for unknown names or bad parameters.
Problem builtin_problem(const std::string& name);

}  // namespace pave
