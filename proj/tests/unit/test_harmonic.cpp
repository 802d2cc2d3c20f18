#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spacings/asymptotics.hpp"
#include "spacings/harmonic.hpp"

using namespace spacings;

TEST_CASE("exact harmonic numbers") {
    for (int r = 1; r <= 5; ++r) CHECK(harmonic(1, r) == 1);
    CHECK(harmonic(2, 1) == Rational(3, 2));
    CHECK(harmonic(2, 2) == Rational(5, 4));
    CHECK(harmonic(5, 1) == Rational(137, 60));
    CHECK_THROWS_AS(harmonic(0, 1), std::domain_error);
}

TEST_CASE("harmonic table invariants") {
    const HarmonicTable t(10, 6);
    for (int r = 1; r < 6; ++r) CHECK(t(r) > t(r + 1));  // strictly decreasing in r for n >= 2
    const HarmonicTable t1(1, 4);
    for (int r = 1; r <= 4; ++r) CHECK(t1(r) == 1);
    CHECK_THROWS_AS(t(0), std::out_of_range);
    CHECK_THROWS_AS(t(7), std::out_of_range);
}

TEST_CASE("floating harmonic against the exact value") {
    const Real h = harmonic_real(100, 2, 256);
    const Real exact = Real::of(harmonic(100, 2), 256);
    CHECK(abs(h - exact) <= abs(exact) * Real::pow2(-220, 64));  // 60+ decimal digits
    CHECK(harmonic_real(1, 5, 64) == Real::of(1L, 64));
}

TEST_CASE("floating harmonic at n = 10^6 against the asymptotic expansion") {
    const mpfr_prec_t prec = 256;
    const Real h = harmonic_real(1000000, 1, prec);
    const Real n = Real::of(1000000L, prec);
    // log n + gamma + 1/(2n) - 1/(12 n^2): error term is ~1/(120 n^4) ~ 1e-26
    const Real approx = log(n) + euler_gamma(prec) + Real::of(1L, prec) / (n * 2) -
                        Real::of(1L, prec) / (n * n * 12);
    CHECK(abs(h - approx) <= Real::parse("1e-20", prec));
}

TEST_CASE("partition quantity spot values") {
    for (int s = 1; s <= 6; ++s) {
        CHECK(script_h_partition(1, s) == 1);
        CHECK(script_h_alternating(1, s) == 1);
        CHECK(script_h_recurrence(1, s) == 1);
    }
    CHECK(script_h_partition(2, 2) == Rational(7, 4));
    CHECK(script_h_alternating(2, 2) == Rational(7, 4));
    CHECK(script_h_recurrence(2, 2) == Rational(7, 4));
    CHECK(script_h_partition(2, 1) == Rational(3, 2));
    for (long n : {2L, 7L, 19L}) CHECK(script_h_recurrence(n, 1) == harmonic(n, 1));
    CHECK(script_h_alternating(50, 5) == script_h_partition(50, 5));
}

TEST_CASE("three algorithms agree exactly on a grid") {
    for (long n = 1; n <= 25; ++n) {
        HarmonicTable table(n, 8);
        const auto rec = script_h_all(table, 8);
        for (int s = 1; s <= 8; ++s) {
            CHECK(rec[s] == script_h_alternating(n, s));
            CHECK(rec[s] == script_h_partition(n, s));
        }
    }
    CHECK(script_h_recurrence(30, 10) == script_h_alternating(30, 10));
    CHECK(script_h_recurrence(30, 10) == script_h_partition(30, 10));
}

TEST_CASE("partition quantity is positive and increasing in n") {
    for (int s = 1; s <= 6; ++s) {
        Rational prev(0);
        for (long n = 1; n <= 20; ++n) {
            const Rational v = script_h_recurrence(n, s);
            CHECK(v > prev);
            prev = v;
        }
    }
}

TEST_CASE("induction-step identity over (n+1)^{sigma-s} weights") {
    for (long n = 1; n <= 15; ++n) {
        HarmonicTable table(n, 8);
        const auto hn = script_h_all(table, 8);
        HarmonicTable table1(n + 1, 8);
        const auto hn1 = script_h_all(table1, 8);
        for (int s = 1; s <= 8; ++s) {
            Rational acc(0);
            for (int sigma = 0; sigma <= s; ++sigma)
                acc += hn[sigma] * pow_rational(Rational(n + 1), sigma - s);
            CHECK(acc == hn1[s]);
        }
    }
}

TEST_CASE("floating recurrence path tracks the exact one") {
    const mpfr_prec_t prec = 192;
    for (long n : {10L, 137L}) {
        std::vector<Real> h;
        for (int r = 1; r <= 6; ++r) h.push_back(harmonic_real(n, r, prec));
        const auto sh = script_h_all_real(h, 6, prec);
        HarmonicTable table(n, 6);
        const auto exact = script_h_all(table, 6);
        for (int s = 0; s <= 6; ++s) {
            const Real e = Real::of(exact[s], prec);
            CHECK(abs(sh[s] - e) <= abs(e) * Real::pow2(-150, 64));
        }
    }
}
