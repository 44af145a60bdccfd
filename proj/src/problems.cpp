// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#include "pave/problems.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace pave {

namespace {

void add_eq(Problem& p, ExprPtr body) {
    p.constraints.push_back(Constraint{std::move(body), Rel::EqZero, {}});
}

}  // namespace

Problem make_eco(int k) {
    if (k < 2 || k > 1000)
        throw std::invalid_argument("eco(k) requires 2 <= k <= 1000");
    Problem p;
    p.name = "eco" + std::to_string(k);
    std::vector<ExprPtr> x;
    for (int i = 1; i <= k; ++i) {
        p.var_names.push_back("x" + std::to_string(i));
        p.domain.comps.push_back(Interval(-100.0, 100.0));
        x.push_back(variable(i - 1));
    }
    for (int j = 1; j <= k - 1; ++j) {
        ExprPtr s = x[j - 1];
        for (int i = 1; i <= k - 1 - j; ++i) s = s + x[i - 1] * x[i + j - 1];
        add_eq(p, s * x[k - 1] - constant(double(j)));
    }
    ExprPtr t = x[0];
    for (int i = 2; i <= k - 1; ++i) t = t + x[i - 1];
    add_eq(p, t + constant(1.0));
    p.finalize();
    return p;
}

Problem make_disks() {
    Problem p;
    p.name = "disks";
    p.var_names = {"v1", "v2", "v3", "v4"};
    p.domain.comps = {Interval(-1.0, 1.0), Interval(-1.0, 1.0),
                      Interval(0.0, 1.0), Interval(0.0, 1.0)};
    ExprPtr v1 = variable(0), v2 = variable(1), v3 = variable(2), v4 = variable(3);
    add_eq(p, pow(v1, 2) + pow(v2, 2) - v3);
    add_eq(p, pow(v1 - constant(1.0), 2) + pow(v2, 2) - v4);
    p.finalize();
    return p;
}

Problem make_sphere_plane(int d) {
    if (d < 2 || d > 1000)
        throw std::invalid_argument("sphere-plane(d) requires 2 <= d <= 1000");
    Problem p;
    p.name = "sphere-plane" + std::to_string(d);
    std::vector<ExprPtr> x;
    for (int i = 1; i <= d; ++i) {
        p.var_names.push_back("x" + std::to_string(i));
        p.domain.comps.push_back(Interval(-1.0, 1.0));
        x.push_back(variable(i - 1));
    }
    ExprPtr sq = pow(x[0], 2);
    ExprPtr sum = x[0];
    for (int i = 1; i < d; ++i) {
        sq = sq + pow(x[i], 2);
        sum = sum + x[i];
    }
    add_eq(p, sq - constant(1.0));
    add_eq(p, sum);
    p.finalize();
    return p;
}

Problem builtin_problem(const std::string& name) {
    // Splits a trailing integer parameter, written either as a bare suffix
    // ("eco8") or in parentheses ("eco(8)").
    std::string base = name;
    int param = -1;
    auto fail = [&]() -> Problem {
        throw std::invalid_argument(
            "unknown builtin '" + name +
            "' (expected eco[(k)], disks, or sphere-plane[(d)])");
    };
    std::size_t lp = name.find('(');
    if (lp != std::string::npos) {
        if (name.back() != ')' || lp + 2 > name.size() - 1) fail();
        base = name.substr(0, lp);
        std::string num = name.substr(lp + 1, name.size() - lp - 2);
        for (char c : num)
            if (!std::isdigit(static_cast<unsigned char>(c))) fail();
        param = std::stoi(num);
    } else {
        std::size_t digits = 0;
        while (digits < name.size() &&
               std::isdigit(static_cast<unsigned char>(name[name.size() - 1 - digits])))
            ++digits;
        if (digits > 0 && digits < name.size()) {
            base = name.substr(0, name.size() - digits);
            param = std::stoi(name.substr(name.size() - digits));
        }
    }
    if (base == "eco") return make_eco(param < 0 ? 8 : param);
    if (base == "sphere-plane") return make_sphere_plane(param < 0 ? 3 : param);
    if (base == "disks") {
        if (param >= 0)
            throw std::invalid_argument("builtin 'disks' takes no parameter");
        return make_disks();
    }
    return fail();
}

}  // namespace pave
