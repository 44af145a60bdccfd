// SPDX-FileCopyrightText: Copyright (c) 2026 the parapave authors
// SPDX-License-Identifier: Apache-2.0
//
// Interval arithmetic checked against exact rational arithmetic (GMP), plus
// decimal-literal enclosure. The oracles never call the code under test.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cfloat>
#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "pave/interval.hpp"
#include "pave/parser.hpp"

using pave::Interval;
using oracle::rat;
using oracle::rounded_down;
using oracle::rounded_up;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kMax = DBL_MAX;

// The implementation steps outward unconditionally below this result
// magnitude, so tightness there is 1 ulp looser than correctly rounded.
constexpr double kTightLimit = 0x1p-959;

int mul_slack(double r) { return std::fabs(r) < kTightLimit ? 1 : 0; }

mpq_class rat_pow(double x, int k) {
    mpq_class q = 1;
    for (int i = 0; i < k; ++i) q *= rat(x);
    return q;
}

}  // namespace

TEST_CASE("interval construction, canonical forms and predicates") {
    CHECK(Interval() == Interval(0.0, 0.0));
    CHECK(Interval(2.0) == Interval(2.0, 2.0));
    CHECK(Interval::empty().is_empty());
    CHECK(!Interval::entire().is_empty());

    CHECK(Interval(3.0, 1.0).is_empty());               // inverted
    CHECK(Interval(std::nan(""), 1.0).is_empty());       // NaN endpoint
    CHECK(Interval(1.0, std::nan("")).is_empty());
    CHECK(Interval(kInf, kInf).is_empty());              // no [inf,inf] points
    CHECK(Interval(-kInf, -kInf).is_empty());

    Interval z(-0.0, 5.0);
    CHECK(!std::signbit(z.lo));                          // -0 canonicalized
    CHECK(pave::to_string(Interval(-0.0, 0.0)) == "[0,0]");

    CHECK(pave::contains(Interval(1, 3), 2.0));
    CHECK(!pave::contains(Interval(1, 3), 3.5));
    CHECK(pave::contains_zero(Interval(-1, 0)));
    CHECK(pave::is_subset(Interval(1, 2), Interval(0, 3)));
    CHECK(pave::is_subset(Interval::empty(), Interval(5, 6)));
    CHECK(!pave::is_subset(Interval(0, 4), Interval(0, 3)));
    CHECK(pave::is_interior(Interval(1, 2), Interval(0, 3)));
    CHECK(!pave::is_interior(Interval(0, 2), Interval(0, 3)));

    CHECK(pave::width(Interval(1, 2.5)) == doctest::Approx(1.5));
    CHECK(std::isnan(pave::width(Interval::empty())));
    CHECK(pave::width(Interval::entire()) == kInf);

    CHECK(pave::midpoint(Interval::entire()) == 0.0);
    CHECK(pave::midpoint(Interval(-kInf, 5.0)) == -kMax);
    CHECK(pave::midpoint(Interval(3.0, kInf)) == kMax);
    CHECK(pave::midpoint(Interval(1, 2)) == 1.5);
    CHECK(pave::midpoint(Interval(kMax, kMax)) == kMax);  // no overflow

    CHECK(pave::is_splittable(Interval(0, 1)));
    CHECK(!pave::is_splittable(Interval(2.0)));
    CHECK(!pave::is_splittable(Interval(1.0, std::nextafter(1.0, 2.0))));
    CHECK(!pave::is_splittable(Interval(0.0, kInf)));
}

TEST_CASE("directed add/sub are correctly rounded for all finite inputs") {
    oracle::DoubleGen gen(20260801);
    for (int i = 0; i < 6000; ++i) {
        double a = i % 5 == 0 ? gen.tiny() : gen();
        double b = i % 7 == 0 ? gen.tiny() : gen();
        mpq_class s = rat(a) + rat(b), d = rat(a) - rat(b);
        CAPTURE(a);
        CAPTURE(b);
        REQUIRE(rounded_down(pave::add_down(a, b), s));
        REQUIRE(rounded_up(pave::add_up(a, b), s));
        REQUIRE(rounded_down(pave::sub_down(a, b), d));
        REQUIRE(rounded_up(pave::sub_up(a, b), d));
    }
    // Overflow endpoints.
    CHECK(pave::add_down(kMax, kMax) == kMax);
    CHECK(pave::add_up(kMax, kMax) == kInf);
    CHECK(pave::add_down(-kMax, -kMax) == -kInf);
    CHECK(pave::add_up(-kMax, -kMax) == -kMax);
    CHECK(pave::add_down(kInf, 1.0) == kInf);
    CHECK(pave::add_up(-kInf, 1.0) == -kInf);
}

TEST_CASE("directed mul/div are correctly rounded away from the underflow band") {
    oracle::DoubleGen gen(20260802);
    for (int i = 0; i < 6000; ++i) {
        double a = i % 5 == 0 ? gen.tiny() : gen();
        double b = i % 7 == 0 ? gen.tiny() : gen();
        if (a == 0.0 || b == 0.0) continue;
        CAPTURE(a);
        CAPTURE(b);
        mpq_class p = rat(a) * rat(b);
        double md = pave::mul_down(a, b), mu = pave::mul_up(a, b);
        REQUIRE(rounded_down(md, p, mul_slack(md)));
        REQUIRE(rounded_up(mu, p, mul_slack(mu)));

        mpq_class q = rat(a) / rat(b);
        double dd = pave::div_down(a, b), du = pave::div_up(a, b);
        int ds = (std::fabs(a) < kTightLimit) ? 1 : 0;
        REQUIRE(rounded_down(dd, q, std::max(ds, mul_slack(dd))));
        REQUIRE(rounded_up(du, q, std::max(ds, mul_slack(du))));
    }
    // Endpoint conventions for zero and infinity.
    CHECK(pave::mul_down(0.0, kInf) == 0.0);
    CHECK(pave::mul_up(0.0, -kInf) == 0.0);
    CHECK(pave::mul_up(kMax, kMax) == kInf);
    CHECK(pave::mul_down(kMax, kMax) == kMax);
    CHECK(pave::mul_down(-kMax, kMax) == -kInf);
    CHECK(pave::div_down(0.0, 5.0) == 0.0);
    CHECK(pave::div_down(3.0, kInf) == 0.0);
    CHECK(pave::div_up(-3.0, kInf) == 0.0);
    CHECK(pave::div_down(kInf, 2.0) == kInf);
    CHECK(pave::div_down(kInf, -2.0) == -kInf);
}

TEST_CASE("sqrt, pow and root endpoints bracket the exact real value") {
    oracle::DoubleGen gen(20260803);
    for (int i = 0; i < 4000; ++i) {
        double x = std::fabs(i % 5 == 0 ? gen.tiny() : gen());
        if (x == 0.0) continue;
        CAPTURE(x);
        {
            double r = pave::sqrt_down(x), u = pave::sqrt_up(x);
            int slack = x < kTightLimit ? 1 : 0;
            REQUIRE(r >= 0.0);
            REQUIRE(rat_pow(r, 2) <= rat(x));
            REQUIRE(rat_pow(u, 2) >= rat(x));
            double r2 = r, u2 = u;
            for (int s = 0; s <= slack; ++s) {
                r2 = std::nextafter(r2, kInf);
                u2 = std::max(0.0, std::nextafter(u2, -kInf));
            }
            REQUIRE(rat_pow(r2, 2) > rat(x));
            REQUIRE((u == 0.0 || rat_pow(u2, 2) < rat(x)));
        }
        for (int k : {2, 3, 5, 8}) {
            mpq_class q = rat_pow(x, k);
            REQUIRE(rounded_down(pave::pow_down(x, k), q, k));
            REQUIRE(rounded_up(pave::pow_up(x, k), q, k));

            double r = pave::root_down(x, k), u = pave::root_up(x, k);
            REQUIRE(rat_pow(r, k) <= rat(x));
            REQUIRE((std::isinf(u) || rat_pow(u, k) >= rat(x)));
            if (x > 0x1p-900) {
                // Tightness only holds away from the subnormal band, where
                // one ulp of x spans many ulp of the root.
                double r2 = r, u2 = u;
                for (int s = 0; s <= k; ++s) {
                    r2 = std::nextafter(r2, kInf);
                    u2 = std::max(0.0, std::nextafter(u2, -kInf));
                }
                REQUIRE((std::isinf(r2) || rat_pow(r2, k) > rat(x)));
                REQUIRE((u == 0.0 || rat_pow(u2, k) < rat(x)));
            }
        }
    }
    CHECK(pave::root_down(8.0, 3) == 2.0);
    CHECK(pave::root_up(8.0, 3) == 2.0);
    CHECK(pave::pow_down(3.0, 4) == 81.0);
    CHECK(pave::sqrt_down(4.0) == 2.0);
    CHECK(pave::sqrt_up(4.0) == 2.0);
}

TEST_CASE("interval mul/div enclose the exact endpoint products tightly") {
    oracle::DoubleGen gen(20260804);
    auto make = [&gen](int emin, int emax) {
        double a = gen(emin, emax), b = gen(emin, emax);
        return Interval(std::min(a, b), std::max(a, b));
    };
    for (int i = 0; i < 4000; ++i) {
        Interval A = make(-200, 200), B = make(-200, 200);
        std::string sa = pave::to_string(A), sb = pave::to_string(B);
        CAPTURE(sa);
        CAPTURE(sb);
        {
            mpq_class c[] = {rat(A.lo) * rat(B.lo), rat(A.lo) * rat(B.hi),
                             rat(A.hi) * rat(B.lo), rat(A.hi) * rat(B.hi)};
            mpq_class qmin = c[0], qmax = c[0];
            for (const auto& v : c) {
                if (v < qmin) qmin = v;
                if (v > qmax) qmax = v;
            }
            Interval R = pave::mul(A, B);
            REQUIRE(rounded_down(R.lo, qmin, mul_slack(R.lo)));
            REQUIRE(rounded_up(R.hi, qmax, mul_slack(R.hi)));
        }
        if (!pave::contains_zero(B)) {
            mpq_class c[] = {rat(A.lo) / rat(B.lo), rat(A.lo) / rat(B.hi),
                             rat(A.hi) / rat(B.lo), rat(A.hi) / rat(B.hi)};
            mpq_class qmin = c[0], qmax = c[0];
            for (const auto& v : c) {
                if (v < qmin) qmin = v;
                if (v > qmax) qmax = v;
            }
            Interval R = pave::div(A, B);
            REQUIRE(rounded_down(R.lo, qmin, mul_slack(R.lo) + 1));
            REQUIRE(rounded_up(R.hi, qmax, mul_slack(R.hi) + 1));
        }
    }
}

TEST_CASE("division by zero-containing intervals follows the extended table") {
    using I = Interval;
    CHECK(pave::div(I(1, 2), I(0.0, 0.0)).is_empty());
    CHECK(pave::div(I(-1, 1), I(0.0, 0.0)).is_empty());
    CHECK(pave::div(I(1, 2), I(-1, 1)) == I::entire());
    CHECK(pave::div(I(0, 1), I(-1, 2)) == I::entire());
    CHECK(pave::div(I(1, 2), I(0, 1)) == I(1.0, kInf));
    CHECK(pave::div(I(1, 2), I(-1, 0)) == I(-kInf, -1.0));
    CHECK(pave::div(I(-2, -1), I(0, 1)) == I(-kInf, -1.0));
    CHECK(pave::div(I(-2, -1), I(-1, 0)) == I(1.0, kInf));

    // Relational division contracts through a zero-containing divisor.
    CHECK(pave::div_rel(I(2.0), I(-1, 1), I(0, 10)) == I(2, 10));
    CHECK(pave::div_rel(I(2.0), I(-1, 1), I(-10, 10)) == I(-10, 10));
    CHECK(pave::div_rel(I(0.0), I(0.0, 0.0), I(3, 4)) == I(3, 4));
    CHECK(pave::div_rel(I(1.0), I(0.0, 0.0), I(3, 4)).is_empty());
    CHECK(pave::div_rel(I(6.0), I(2, 3), I(0, 10)) == I(2, 3));
}

TEST_CASE("pown and sqrt of intervals compute the image, not the product") {
    using I = Interval;
    CHECK(pave::sqr(I(-2, 1)) == I(0, 4));
    CHECK(pave::pown(I(-2, 1), 3) == I(-8, 1));
    CHECK(pave::pown(I(-3, -2), 2) == I(4, 9));
    CHECK(pave::pown(I(2, 3), 0) == I(1.0));
    CHECK(pave::pown(I(-5, 7), 1) == I(-5, 7));
    CHECK(pave::pown(I::empty(), 4).is_empty());

    CHECK(pave::sqrt(I(-4, 9)) == I(0, 3));
    CHECK(pave::sqrt(I(-4, -1)).is_empty());
    CHECK(pave::sqrt(I(4, kInf)) == I(2, kInf));
    CHECK(pave::sqrt(I(0.0, 0.0)) == I(0.0, 0.0));
}

TEST_CASE("empty and unbounded operands propagate correctly") {
    using I = Interval;
    const I e = I::empty();
    CHECK(pave::add(e, I(1, 2)).is_empty());
    CHECK(pave::sub(I(1, 2), e).is_empty());
    CHECK(pave::mul(e, e).is_empty());
    CHECK(pave::div(e, I(1, 2)).is_empty());
    CHECK(pave::neg(e).is_empty());
    CHECK(pave::neg(I(1, 2)) == I(-2, -1));
    CHECK(pave::hull(e, I(5, 6)) == I(5, 6));
    CHECK(pave::hull(I(1, 2), I(5, 6)) == I(1, 6));
    CHECK(pave::intersect(I(1, 2), I(3, 4)).is_empty());
    CHECK(pave::intersect(I(1, 3), I(2, 4)) == I(2, 3));
    CHECK(pave::add(I::entire(), I(1.0)) == I::entire());
    CHECK(pave::mul(I(0.0, 1.0), I(2.0, kInf)) == I(0.0, kInf));
    CHECK(pave::mul(I(0.0, 0.0), I::entire()) == I(0.0, 0.0));
    CHECK(pave::sub(I(1, 2), I(0.5, 1)) == I(0.0, 1.5));
}

TEST_CASE("inclusion monotonicity: shrinking operands shrinks results") {
    oracle::DoubleGen gen(20260805);
    auto& rng = gen.rng();
    std::uniform_real_distribution<double> t01(0.0, 1.0);
    auto shrink = [&](const Interval& x) {
        double w = x.hi - x.lo;
        double a = x.lo + t01(rng) * 0.5 * w;
        double b = x.hi - t01(rng) * 0.5 * w;
        return Interval(std::min(a, b), std::max(a, b));
    };
    for (int i = 0; i < 2000; ++i) {
        double a = gen(-40, 40), b = gen(-40, 40), c = gen(-40, 40), d = gen(-40, 40);
        Interval A(std::min(a, b), std::max(a, b));
        Interval B(std::min(c, d), std::max(c, d));
        Interval As = shrink(A), Bs = shrink(B);
        std::string sa = pave::to_string(A), sb = pave::to_string(B);
        CAPTURE(sa);
        CAPTURE(sb);
        REQUIRE(pave::is_subset(pave::add(As, Bs), pave::add(A, B)));
        REQUIRE(pave::is_subset(pave::sub(As, Bs), pave::sub(A, B)));
        REQUIRE(pave::is_subset(pave::mul(As, Bs), pave::mul(A, B)));
        if (!pave::contains_zero(B))
            REQUIRE(pave::is_subset(pave::div(As, Bs), pave::div(A, B)));
        for (int k : {2, 3, 4})
            REQUIRE(pave::is_subset(pave::pown(As, k), pave::pown(A, k)));
        REQUIRE(pave::is_subset(pave::sqrt(As), pave::sqrt(A)));
    }
}

TEST_CASE("interval rendering round-trips endpoint bit patterns") {
    oracle::DoubleGen gen(20260806);
    for (int i = 0; i < 1000; ++i) {
        double a = gen(), b = gen();
        Interval x(std::min(a, b), std::max(a, b));
        std::string s = pave::to_string(x);
        auto comma = s.find(',');
        REQUIRE(s.front() == '[');
        REQUIRE(s.back() == ']');
        double lo = std::strtod(s.substr(1, comma - 1).c_str(), nullptr);
        double hi = std::strtod(s.substr(comma + 1, s.size() - comma - 2).c_str(),
                                nullptr);
        REQUIRE(lo == x.lo);
        REQUIRE(hi == x.hi);
    }
    CHECK(pave::to_string(Interval::empty()) == "[empty]");
    CHECK(pave::to_string(Interval::entire()) == "[-inf,inf]");
}

TEST_CASE("decimal literal enclosure is the tightest interval around the value") {
    // Hand-picked edges first.
    Interval r = pave::enclose_decimal("0.5");
    CHECK(r == Interval(0.5, 0.5));
    r = pave::enclose_decimal("0.1");
    CHECK(r.hi == 0.1);  // strtod value; exact 0.1 lies just below it
    CHECK(r.lo == std::nextafter(0.1, 0.0));
    r = pave::enclose_decimal("2");
    CHECK(r == Interval(2.0, 2.0));
    r = pave::enclose_decimal("-2.5e1");
    CHECK(r == Interval(-25.0, -25.0));
    r = pave::enclose_decimal("1e-400");  // below the subnormal range
    CHECK(r.lo == 0.0);
    CHECK(r.hi == std::numeric_limits<double>::denorm_min());
    CHECK_THROWS_AS((void)pave::enclose_decimal("1e400"), std::invalid_argument);
    CHECK_THROWS_AS((void)pave::enclose_decimal("1..2"), std::invalid_argument);
    CHECK_THROWS_AS((void)pave::enclose_decimal(""), std::invalid_argument);
    CHECK_THROWS_AS((void)pave::enclose_decimal("1e"), std::invalid_argument);

    // Randomized literals cross-checked against an exact rational build of
    // digits * 10^exponent.
    std::mt19937_64 rng(20260807);
    std::uniform_int_distribution<int> nint(0, 17), nfrac(0, 24), digit(0, 9);
    std::uniform_int_distribution<int> expo(-320, 320), coin(0, 1);
    for (int i = 0; i < 4000; ++i) {
        std::string ip, fp;
        for (int k = nint(rng); k > 0; --k) ip += char('0' + digit(rng));
        for (int k = nfrac(rng); k > 0; --k) fp += char('0' + digit(rng));
        if (ip.empty() && fp.empty()) ip = "7";
        bool negative = coin(rng) == 1;
        int e = expo(rng);
        std::string lit = (negative ? "-" : "") + (ip.empty() ? "0" : ip);
        if (!fp.empty()) lit += "." + fp;
        bool with_exp = coin(rng) == 1 || e != 0;
        if (with_exp) lit += "e" + std::to_string(e);
        if (!with_exp) e = 0;
        CAPTURE(lit);

        mpz_class digits_z((ip.empty() ? std::string("0") : ip) + fp, 10);
        mpq_class q(digits_z);
        mpz_class p10;
        long long down10 = (long long)fp.size() - e;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10,
                      (unsigned long)(down10 < 0 ? -down10 : down10));
        if (down10 >= 0)
            q /= mpq_class(p10);
        else
            q *= mpq_class(p10);
        if (negative) q = -q;
        q.canonicalize();

        try {
            Interval enc = pave::enclose_decimal(lit);
            REQUIRE(rounded_down(enc.lo, q));
            REQUIRE(rounded_up(enc.hi, q));
            bool point = enc.lo == enc.hi;
            bool exact = q == rat(enc.lo);
            REQUIRE(point == exact);
            if (!point) REQUIRE(enc.hi == std::nextafter(enc.lo, kInf));
        } catch (const std::invalid_argument&) {
            REQUIRE(abs(q) > rat(kMax));  // only true overflow may throw
        }
    }

    // A long literal exercises many guard digits.
    Interval pi = pave::enclose_decimal("3.14159265358979323846264338327950288");
    CHECK(pi.lo < pi.hi);
    CHECK(pi.hi == std::nextafter(pi.lo, kInf));
    CHECK(pave::contains(pi, 3.141592653589793));
}
