// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "pave/interval.hpp"

namespace pave {

// Axis-aligned box: one interval per variable.
struct Box {
    std::vector<Interval> comps;

    Box() = default;
    explicit Box(std::vector<Interval> c) : comps(std::move(c)) {}
    explicit Box(std::size_t n, Interval fill = Interval::entire()) : comps(n, fill) {}

    std::size_t size() const { return comps.size(); }
    Interval& operator[](std::size_t i) { return comps[i]; }
    const Interval& operator[](std::size_t i) const { return comps[i]; }

    bool is_empty() const {
        for (const auto& c : comps)
            if (c.is_empty()) return true;
        return comps.empty();
    }

    friend bool operator==(const Box&, const Box&) = default;
};

inline double max_width(const Box& b) {
    double w = 0.0;
    for (const auto& c : b.comps) w = std::max(w, width(c));
    return w;
}

inline std::vector<double> midpoint(const Box& b) {
    std::vector<double> m(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) m[i] = midpoint(b[i]);
    return m;
}

inline bool is_subset(const Box& a, const Box& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_subset(a[i], b[i])) return false;
    return true;
}

inline bool is_interior(const Box& a, const Box& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!is_interior(a[i], b[i])) return false;
    return true;
}

inline bool contains(const Box& b, const std::vector<double>& p) {
    for (std::size_t i = 0; i < b.size(); ++i)
        if (!contains(b[i], p[i])) return false;
    return true;
}

// Split component i at its midpoint; caller guarantees is_splittable(b[i]).
inline std::pair<Box, Box> bisect(const Box& b, std::size_t i) {
    double m = midpoint(b[i]);
    Box left = b, right = b;
    left.comps[i] = Interval(b[i].lo, m);
    right.comps[i] = Interval(m, b[i].hi);
    return {std::move(left), std::move(right)};
}

inline std::string to_string(const Box& b) {
    std::string s;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i) s += " x ";
        s += to_string(b[i]);
    }
    return s;
}

}  // namespace pave
