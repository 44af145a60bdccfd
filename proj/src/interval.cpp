// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0

#include "pave/interval.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <charconv>
#include <cstdint>
#include <cstdio>

namespace pave {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMax = std::numeric_limits<double>::max();
// Below this magnitude the error term of *, / and sqrt may underflow, so the
// exact-residual test is unreliable; step outward unconditionally instead.
constexpr double kEftLimit = 0x1p-960;

inline double next_down(double x) { return std::nextafter(x, -kInf); }
inline double next_up(double x) { return std::nextafter(x, kInf); }

}  // namespace

// ---------------------------------------------------------------------------
// Directed scalar arithmetic.
//
// Round-to-nearest plus the exact error term (TwoSum / FMA residual) yields
// the correctly rounded directed result: if the error is zero the result is
// exact, otherwise its sign says which neighbour encloses the true value.
// ---------------------------------------------------------------------------

double add_down(double x, double y) {
    double s = x + y;
    if (std::isinf(s)) {
        if (s > 0.0) return (std::isinf(x) || std::isinf(y)) ? kInf : kMax;
        return -kInf;
    }
    double yv = s - x;
    double err = (x - (s - yv)) + (y - yv);  // exact for all finite x, y
    return err < 0.0 ? next_down(s) : s;
}

double add_up(double x, double y) {
    double s = x + y;
    if (std::isinf(s)) {
        if (s < 0.0) return (std::isinf(x) || std::isinf(y)) ? -kInf : -kMax;
        return kInf;
    }
    double yv = s - x;
    double err = (x - (s - yv)) + (y - yv);
    return err > 0.0 ? next_up(s) : s;
}

double sub_down(double x, double y) { return add_down(x, -y); }
double sub_up(double x, double y) { return add_up(x, -y); }

double mul_down(double x, double y) {
    if (x == 0.0 || y == 0.0) return 0.0;  // endpoint convention: 0 * inf = 0
    double p = x * y;
    if (std::isinf(p)) {
        if (p > 0.0) return (std::isinf(x) || std::isinf(y)) ? kInf : kMax;
        return -kInf;
    }
    if (std::fabs(p) < kEftLimit) return next_down(p);
    double err = std::fma(x, y, -p);  // exact: no underflow at this magnitude
    return err < 0.0 ? next_down(p) : p;
}

double mul_up(double x, double y) {
    if (x == 0.0 || y == 0.0) return 0.0;
    double p = x * y;
    if (std::isinf(p)) {
        if (p < 0.0) return (std::isinf(x) || std::isinf(y)) ? -kInf : -kMax;
        return kInf;
    }
    if (std::fabs(p) < kEftLimit) return next_up(p);
    double err = std::fma(x, y, -p);
    return err > 0.0 ? next_up(p) : p;
}

double div_down(double x, double y) {
    assert(y != 0.0);
    if (x == 0.0) return 0.0;
    if (std::isinf(y)) return std::isinf(x) ? ((x > 0) == (y > 0) ? kInf : -kInf) : 0.0;
    if (std::isinf(x)) return (x > 0) == (y > 0) ? kInf : -kInf;
    double q = x / y;
    if (std::isinf(q)) return q > 0.0 ? kMax : -kInf;
    if (std::fabs(q) < kEftLimit || std::fabs(x) < kEftLimit) return next_down(q);
    double err = std::fma(q, y, -x);  // division residual, exact here
    // true quotient - q has the sign of -err/y
    bool true_above = (err < 0.0) == (y > 0.0) && err != 0.0;
    return true_above || err == 0.0 ? q : next_down(q);
}

double div_up(double x, double y) {
    assert(y != 0.0);
    if (x == 0.0) return 0.0;
    if (std::isinf(y)) return std::isinf(x) ? ((x > 0) == (y > 0) ? kInf : -kInf) : 0.0;
    if (std::isinf(x)) return (x > 0) == (y > 0) ? kInf : -kInf;
    double q = x / y;
    if (std::isinf(q)) return q > 0.0 ? kInf : -kMax;
    if (std::fabs(q) < kEftLimit || std::fabs(x) < kEftLimit) return next_up(q);
    double err = std::fma(q, y, -x);
    bool true_below = (err > 0.0) == (y > 0.0) && err != 0.0;
    return true_below || err == 0.0 ? q : next_up(q);
}

double sqrt_down(double x) {
    assert(x >= 0.0);
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return kInf;
    double r = std::sqrt(x);
    if (x < kEftLimit) return std::max(0.0, next_down(r));
    double err = std::fma(r, r, -x);  // r^2 - x
    return err > 0.0 ? next_down(r) : r;
}

double sqrt_up(double x) {
    assert(x >= 0.0);
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return kInf;
    double r = std::sqrt(x);
    if (x < kEftLimit) return next_up(r);
    double err = std::fma(r, r, -x);
    return err < 0.0 ? next_up(r) : r;
}

double pow_down(double x, int k) {
    assert(x >= 0.0 && k >= 1);
    double acc = x;
    for (int i = 1; i < k; ++i) acc = mul_down(acc, x);
    return acc;
}

double pow_up(double x, int k) {
    assert(x >= 0.0 && k >= 1);
    double acc = x;
    for (int i = 1; i < k; ++i) acc = mul_up(acc, x);
    return acc;
}

namespace {

inline std::uint64_t dbits(double d) { return std::bit_cast<std::uint64_t>(d); }
inline double dval(std::uint64_t b) { return std::bit_cast<double>(b); }

// Bit pattern of the round-to-nearest k-th root, clamped to (0, kMax).
inline std::uint64_t root_seed(double x, int k) {
    double g = std::pow(x, 1.0 / k);
    if (!std::isfinite(g) || g <= 0.0) g = kMax;
    return std::min(dbits(g), dbits(kMax) - 1);
}

}  // namespace

// The k-th-root bounds invert the chained-multiplication powers: root_down
// returns the largest r with pow_up(r,k) <= x, which implies r^k <= x. The
// predicate is monotone in r and nonnegative doubles are bit-ordered, so we
// gallop outward from the round-to-nearest seed and bisect the bracket.
// Near the subnormal range one ulp of x spans many ulp of r, which the old
// one-ulp-at-a-time search turned into millions of steps; this is O(log).

double root_down(double x, int k) {
    assert(x >= 0.0 && k >= 1);
    if (x == 0.0 || std::isinf(x) || k == 1) return x;
    if (k == 2) return sqrt_down(x);
    auto ok = [&](std::uint64_t b) { return pow_up(dval(b), k) <= x; };
    const std::uint64_t top = dbits(kMax);
    std::uint64_t lo = 0, hi = top;  // ok(0); !ok(top): pow_up(kMax,k) = inf > x
    std::uint64_t g = root_seed(x, k), step = 1;
    if (ok(g)) {
        lo = g;
        while (step < top - lo && ok(lo + step)) {
            lo += step;
            step <<= 1;
        }
        if (step < top - lo) hi = lo + step;
    } else {
        hi = g;
        while (step < hi && !ok(hi - step)) {
            hi -= step;
            step <<= 1;
        }
        if (step < hi) lo = hi - step;
    }
    while (lo + 1 < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        (ok(mid) ? lo : hi) = mid;
    }
    return dval(lo);
}

double root_up(double x, int k) {
    assert(x >= 0.0 && k >= 1);
    if (x == 0.0 || std::isinf(x) || k == 1) return x;
    if (k == 2) return sqrt_up(x);
    auto ok = [&](std::uint64_t b) { return pow_down(dval(b), k) >= x; };
    const std::uint64_t top = dbits(kMax);
    std::uint64_t lo = 0, hi = top;  // !ok(0); ok(top): pow_down saturates at kMax >= x
    std::uint64_t g = root_seed(x, k), step = 1;
    if (ok(g)) {
        hi = g;
        while (step < hi && ok(hi - step)) {
            hi -= step;
            step <<= 1;
        }
        if (step < hi) lo = hi - step;
    } else {
        lo = g;
        while (step < top - lo && !ok(lo + step)) {
            lo += step;
            step <<= 1;
        }
        if (step < top - lo) hi = lo + step;
    }
    while (lo + 1 < hi) {
        std::uint64_t mid = lo + (hi - lo) / 2;
        (ok(mid) ? hi : lo) = mid;
    }
    return dval(hi);
}

// ---------------------------------------------------------------------------
// Interval operations.
// ---------------------------------------------------------------------------

Interval add(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    return Interval(add_down(a.lo, b.lo), add_up(a.hi, b.hi));
}

Interval sub(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    return Interval(sub_down(a.lo, b.hi), sub_up(a.hi, b.lo));
}

Interval neg(const Interval& a) {
    if (a.is_empty()) return a;
    return Interval(-a.hi, -a.lo);
}

Interval mul(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    if (a.lo >= 0.0) {  // a nonnegative
        if (b.lo >= 0.0) return Interval(mul_down(a.lo, b.lo), mul_up(a.hi, b.hi));
        if (b.hi <= 0.0) return Interval(mul_down(a.hi, b.lo), mul_up(a.lo, b.hi));
        return Interval(mul_down(a.hi, b.lo), mul_up(a.hi, b.hi));
    }
    if (a.hi <= 0.0) {  // a nonpositive
        if (b.lo >= 0.0) return Interval(mul_down(a.lo, b.hi), mul_up(a.hi, b.lo));
        if (b.hi <= 0.0) return Interval(mul_down(a.hi, b.hi), mul_up(a.lo, b.lo));
        return Interval(mul_down(a.lo, b.hi), mul_up(a.lo, b.lo));
    }
    // a straddles zero
    if (b.lo >= 0.0) return Interval(mul_down(a.lo, b.hi), mul_up(a.hi, b.hi));
    if (b.hi <= 0.0) return Interval(mul_down(a.hi, b.lo), mul_up(a.lo, b.lo));
    return Interval(std::min(mul_down(a.lo, b.hi), mul_down(a.hi, b.lo)),
                    std::max(mul_up(a.lo, b.lo), mul_up(a.hi, b.hi)));
}

Interval div(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    if (b.lo > 0.0) {
        if (a.lo >= 0.0) return Interval(div_down(a.lo, b.hi), div_up(a.hi, b.lo));
        if (a.hi <= 0.0) return Interval(div_down(a.lo, b.lo), div_up(a.hi, b.hi));
        return Interval(div_down(a.lo, b.lo), div_up(a.hi, b.lo));
    }
    if (b.hi < 0.0) {
        if (a.lo >= 0.0) return Interval(div_down(a.hi, b.hi), div_up(a.lo, b.lo));
        if (a.hi <= 0.0) return Interval(div_down(a.hi, b.lo), div_up(a.lo, b.hi));
        return Interval(div_down(a.hi, b.hi), div_up(a.lo, b.hi));
    }
    // 0 in b
    if (b.lo == 0.0 && b.hi == 0.0) return Interval::empty();
    if (contains_zero(a)) return Interval::entire();
    if (a.hi < 0.0) {
        if (b.hi == 0.0) return Interval(div_down(a.hi, b.lo), kInf);
        if (b.lo == 0.0) return Interval(-kInf, div_up(a.hi, b.hi));
        return Interval::entire();
    }
    // a.lo > 0
    if (b.hi == 0.0) return Interval(-kInf, div_up(a.lo, b.lo));
    if (b.lo == 0.0) return Interval(div_down(a.lo, b.hi), kInf);
    return Interval::entire();
}

Interval sqr(const Interval& a) { return pown(a, 2); }

Interval pown(const Interval& a, int k) {
    assert(k >= 0);
    if (a.is_empty()) return a;
    if (k == 0) return Interval(1.0);
    if (k == 1) return a;
    if (k % 2 != 0) {
        auto lo_k = [k](double v) { return v >= 0.0 ? pow_down(v, k) : -pow_up(-v, k); };
        auto hi_k = [k](double v) { return v >= 0.0 ? pow_up(v, k) : -pow_down(-v, k); };
        return Interval(lo_k(a.lo), hi_k(a.hi));
    }
    if (a.lo >= 0.0) return Interval(pow_down(a.lo, k), pow_up(a.hi, k));
    if (a.hi <= 0.0) return Interval(pow_down(-a.hi, k), pow_up(-a.lo, k));
    return Interval(0.0, std::max(pow_up(-a.lo, k), pow_up(a.hi, k)));
}

Interval sqrt(const Interval& a) {
    if (a.is_empty() || a.hi < 0.0) return Interval::empty();
    double lo = a.lo <= 0.0 ? 0.0 : sqrt_down(a.lo);
    return Interval(lo, sqrt_up(a.hi));
}

Interval intersect(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    return Interval(std::max(a.lo, b.lo), std::min(a.hi, b.hi));
}

Interval hull(const Interval& a, const Interval& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

Interval div_rel(const Interval& num, const Interval& den, const Interval& x) {
    if (x.is_empty() || num.is_empty() || den.is_empty()) return Interval::empty();
    if (den.lo == 0.0 && den.hi == 0.0) {
        // t*0 in num is possible iff 0 in num, and then any t qualifies.
        return contains_zero(num) ? x : Interval::empty();
    }
    if (den.lo < 0.0 && den.hi > 0.0) {
        Interval neg_branch = intersect(x, div(num, Interval(den.lo, 0.0)));
        Interval pos_branch = intersect(x, div(num, Interval(0.0, den.hi)));
        return hull(neg_branch, pos_branch);
    }
    return intersect(x, div(num, den));
}

double width(const Interval& x) {
    if (x.is_empty()) return std::numeric_limits<double>::quiet_NaN();
    return sub_up(x.hi, x.lo);
}

double midpoint(const Interval& x) {
    assert(!x.is_empty());
    if (x.lo == -kInf && x.hi == kInf) return 0.0;
    if (x.lo == -kInf) return std::min(x.hi, -kMax);
    if (x.hi == kInf) return std::max(x.lo, kMax);
    double m = 0.5 * (x.lo + x.hi);
    if (!std::isfinite(m)) m = 0.5 * x.lo + 0.5 * x.hi;
    return std::clamp(m, x.lo, x.hi);
}

bool is_splittable(const Interval& x) {
    if (x.is_empty() || !std::isfinite(x.lo) || !std::isfinite(x.hi)) return false;
    double m = midpoint(x);
    return x.lo < m && m < x.hi;
}

std::string to_string(const Interval& x) {
    if (x.is_empty()) return "[empty]";
    char buf[64];
    auto render = [&buf](double v) -> std::string {
        auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
        (void)ec;
        return std::string(buf, p);
    };
    return "[" + render(x.lo) + "," + render(x.hi) + "]";
}

}  // namespace pave
