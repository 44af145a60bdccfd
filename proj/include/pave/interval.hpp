// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PAVE_INTERVAL_HPP
#define PAVE_INTERVAL_HPP

#include <cmath>
#include <limits>
#include <string>

namespace pave {

/// Closed interval [lo, hi] over IEEE-754 doubles.
///
/// Endpoints are never NaN; +-inf endpoints denote unbounded intervals.
/// The empty interval is the canonical sentinel [+inf, -inf].  Every
/// arithmetic operation rounds outward, so the computed interval always
/// contains the exact real image of its inputs.
struct Interval {
    double lo;
    double hi;

    Interval() : lo(0.0), hi(0.0) {}
    Interval(double l, double h) : lo(l + 0.0), hi(h + 0.0) {
        // +0.0 canonicalizes -0.0 endpoints so renderings and multiset
        // comparisons are stable.
        if (!(lo <= hi) || lo == std::numeric_limits<double>::infinity() ||
            hi == -std::numeric_limits<double>::infinity()) {
            *this = empty();
        }
    }
    explicit Interval(double v) : Interval(v, v) {}

    static Interval empty() {
        Interval r;
        r.lo = std::numeric_limits<double>::infinity();
        r.hi = -std::numeric_limits<double>::infinity();
        return r;
    }
    static Interval entire() {
        return Interval(-std::numeric_limits<double>::infinity(),
                        std::numeric_limits<double>::infinity());
    }

    bool is_empty() const { return !(lo <= hi); }
    bool operator==(const Interval&) const = default;
};

// Directed-rounding scalar helpers.  Results are correctly rounded in the
// normal range and at most 1 ulp pessimistic near under/overflow.
double add_down(double x, double y);
double add_up(double x, double y);
double sub_down(double x, double y);
double sub_up(double x, double y);
double mul_down(double x, double y);
double mul_up(double x, double y);
double div_down(double x, double y);
double div_up(double x, double y);
double sqrt_down(double x);
double sqrt_up(double x);
// x^k for x >= 0, k >= 1, monotone in x.
double pow_down(double x, int k);
double pow_up(double x, int k);
// Largest double r with r^k <= x (resp. smallest with r^k >= x); x >= 0.
// Exact in the normal range; when x is near the subnormal range the result
// is sound but may be pessimistic, since one ulp of x there spans many ulp
// of its k-th root.
double root_down(double x, int k);
double root_up(double x, int k);

Interval add(const Interval& a, const Interval& b);
Interval sub(const Interval& a, const Interval& b);
Interval mul(const Interval& a, const Interval& b);
// Extended division: a divisor containing 0 yields the single-interval hull
// of the two real branches (possibly [-inf,+inf]); div by [0,0] is empty.
Interval div(const Interval& a, const Interval& b);
Interval neg(const Interval& a);
// Image of x^2 (not a*a): sqr([-2,1]) = [0,4].
Interval sqr(const Interval& a);
// Image of x^k, integer k >= 0.
Interval pown(const Interval& a, int k);
// sqrt of a ∩ [0,inf); empty if a is entirely negative.
Interval sqrt(const Interval& a);

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) { return sub(a, b); }
inline Interval operator*(const Interval& a, const Interval& b) { return mul(a, b); }
inline Interval operator/(const Interval& a, const Interval& b) { return div(a, b); }
inline Interval operator-(const Interval& a) { return neg(a); }

Interval intersect(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);

// Relational division used by the HC4 backward pass and interval Newton:
// hull over both branches of {t in x : exists d in den, t*d in num}.
// Unlike div, it intersects each branch with x before hulling, so it can
// contract through a zero-containing divisor.
Interval div_rel(const Interval& num, const Interval& den, const Interval& x);

inline bool contains(const Interval& a, double v) { return a.lo <= v && v <= a.hi; }
inline bool contains_zero(const Interval& a) { return a.lo <= 0.0 && 0.0 <= a.hi; }
inline bool is_subset(const Interval& a, const Interval& b) {
    return a.is_empty() || (b.lo <= a.lo && a.hi <= b.hi);
}
// a inside b with strict inequalities on both endpoints.
inline bool is_interior(const Interval& a, const Interval& b) {
    return a.is_empty() || (b.lo < a.lo && a.hi < b.hi);
}

// hi - lo rounded up; NaN for the empty interval, +inf for unbounded ones.
double width(const Interval& x);
// A point of [lo,hi]; finite whenever the interval is bounded.
double midpoint(const Interval& x);
// True iff midpoint(x) splits x into two strictly smaller halves.
bool is_splittable(const Interval& x);

// "[lo,hi]" with shortest round-trip formatting of the endpoints.
std::string to_string(const Interval& x);

}  // namespace pave

#endif  // PAVE_INTERVAL_HPP
