#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spacings/exact_dist.hpp"
#include "spacings/harmonic.hpp"
#include "spacings/rng.hpp"

using namespace spacings;

TEST_CASE("cdf spot values and support") {
    CHECK(cdf(2, Rational(3, 4)) == Rational(1, 2));  // Uniform[1/2,1]: 2x-1
    CHECK(cdf(2, Rational(1, 2)) == 0);
    CHECK(cdf(3, Rational(1, 2)) == Rational(1, 4));
    CHECK_THROWS_AS(cdf(3, Rational(-1, 10)), std::domain_error);
    CHECK_THROWS_AS(cdf(3, Rational(11, 10)), std::domain_error);
    for (long n : {2L, 3L, 5L, 17L, 64L}) {
        CHECK(cdf(n, Rational(1, n)) == 0);
        CHECK(cdf(n, Rational(1)) == 1);
        CHECK(cdf(n, Rational(0)) == 0);
        CHECK(cdf(n, Rational(1, 2 * n)) == 0);  // below the support
    }
}

TEST_CASE("cdf_real agrees with the exact path") {
    for (long n : {2L, 10L, 100L}) {
        for (long i = 1; i <= 9; ++i) {
            const Rational x(i, 10);
            if (x <= Rational(1, n)) continue;
            const Real xv = Real::of(x, 256);
            const Real fr = cdf_real(n, xv, 256);
            const Real fe = Real::of(cdf(n, x), 256);
            if (fe.is_zero())
                CHECK(abs(fr) <= Real::pow2(-200, 64));
            else
                CHECK(abs(fr - fe) <= abs(fe) * Real::pow2(-200, 64));
        }
    }
    CHECK(cdf_real(2, Real::of(0.75, 128), 128).to_double() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("cdf_real is stable under precision escalation") {
    const Real x128 = Real::of(2.0 * std::log(1000.0) / 1000.0, 128);
    const Real a = cdf_real(1000, x128, 128);
    const Real b = cdf_real(1000, x128.to_precision(256), 256);
    CHECK(a.to_double() > 0.0);
    CHECK(a.to_double() < 1.0);
    CHECK(abs(a.to_precision(256) - b) <= abs(b) * Real::pow2(-100, 64));
}

TEST_CASE("cdf_estimate tracks cdf_real to the certified accuracy") {
    RngStream rng(5, 0);
    for (long n : {2L, 10L, 100L, 1000L}) {
        for (int i = 0; i < 25; ++i) {
            // spread points over the body of the law
            const double u = 0.02 + 0.96 * rng.next_double();
            const double x = quantile_double(n, u, 1e-10);
            const double fast = cdf_estimate(n, x);
            const double slow = cdf_real(n, Real::of(x, 192), 192).to_double();
            CHECK(std::abs(fast - slow) < 1e-9);
        }
    }
}

TEST_CASE("pdf spot values and edges") {
    CHECK(pdf(2, Rational(3, 4)) == 2);
    CHECK(pdf(3, Rational(1, 4)) == 0);   // below support 1/3
    CHECK(pdf(3, Rational(99, 100)) == Rational(3) * pow_rational(Rational(1, 100), 1) * 2);
    CHECK(pdf(5, Rational(1)) == 0);
    CHECK(pdf(5, Rational(1, 5)) == 0);
}

TEST_CASE("pdf matches a central finite difference of the cdf") {
    const mpfr_prec_t prec = 256;
    const Real h = Real::parse("1e-6", prec);
    for (long n : {3L, 7L}) {
        for (const Rational& x : {Rational(2, 5), Rational(3, 5), Rational(49, 100)}) {
            if (x <= Rational(1, n)) continue;
            const Real xv = Real::of(x, prec);
            const Real fd = (cdf_real(n, xv + h, prec) - cdf_real(n, xv - h, prec)) / (h * 2);
            const double expect = pdf(n, x).get_d();
            CHECK(fd.to_double() == doctest::Approx(expect).epsilon(1e-8));
        }
    }
}

TEST_CASE("cdf is non-decreasing across a fine grid") {
    for (long n : {2L, 3L, 5L, 10L, 50L, 200L}) {
        const mpfr_prec_t prec = 192;
        Real prev(prec);
        for (int i = 0; i <= 1000; ++i) {
            const Rational x = Rational(1, n) + (Rational(1) - Rational(1, n)) * Rational(i, 1000);
            const Real f = cdf_real(n, Real::of(x, prec), prec);
            CHECK(f >= prev);
            prev = f;
        }
        CHECK(prev == Real::of(1L, prec));
    }
}

TEST_CASE("quantile inverts the cdf") {
    const mpfr_prec_t prec = 128;
    const Real tol = Real::parse("1e-12", prec);
    const Real q = quantile(2, Real::of(Rational(1, 2), prec), tol, prec);
    CHECK(abs(q - Real::of(Rational(3, 4), prec)) <= tol);
    const Real q3 = quantile(3, Real::of(Rational(1, 4), prec), tol, prec);
    CHECK(abs(q3 - Real::of(Rational(1, 2), prec)) <= tol);

    RngStream rng(3, 3);
    for (long n : {2L, 5L, 17L}) {
        for (int i = 0; i < 10; ++i) {
            const Real p = Real::of(0.01 + 0.98 * rng.next_double(), prec);
            const Real x = quantile(n, p, tol, prec);
            CHECK(abs(cdf_real(n, x, prec) - p) <= tol);
        }
    }
    CHECK_THROWS_AS(quantile(2, Real::of(0.0, prec), tol, prec), std::domain_error);
}

TEST_CASE("exact moments") {
    CHECK(moment_exact(2, 1) == Rational(3, 4));
    CHECK(moment_exact(2, 2) == Rational(7, 12));
    CHECK(moment_exact(5, 1) == Rational(137, 300));
    // n=2, m=2 equals the direct integral of 2x^2 over [1/2, 1]
    CHECK(moment_exact(2, 2) == Rational(2) * (Rational(1, 3) - Rational(1, 24)));
}

TEST_CASE("gap means sum to one and match the first moment") {
    // prefix harmonic values keep the full n <= 200 sweep cheap; spot-check
    // that kth_gap_mean agrees with the prefix form along the way
    std::vector<Rational> H(201);
    for (long k = 1; k <= 200; ++k) H[k] = H[k - 1] + Rational(1, k);
    for (long n = 1; n <= 200; ++n) {
        Rational total(0);
        for (long k = 1; k <= n; ++k) {
            const Rational mean = (H[n] - H[k - 1]) / Rational(n);
            if (k == 1 || k == n || (n + k) % 37 == 0) CHECK(kth_gap_mean(n, k) == mean);
            total += mean;
        }
        CHECK(total == 1);
        if (n >= 2) CHECK(moment_exact(n, 1) == H[n] / Rational(n));
    }
    CHECK(kth_gap_mean(2, 1) == Rational(3, 4));
    CHECK(kth_gap_mean(2, 2) == Rational(1, 4));
    CHECK(kth_gap_mean(3, 2) == Rational(5, 18));
    // smallest gap: only the j = n term of the tail sum survives
    for (long n : {2L, 5L, 30L}) CHECK(kth_gap_mean(n, n) == Rational(1, n * n));
}

TEST_CASE("moment quadrature oracle") {
    const mpfr_prec_t prec = 192;
    {
        const auto q = moment_via_integration(2, 2, prec);
        CHECK(q.converged);
        CHECK(abs(q.value - Real::of(Rational(7, 12), prec)) <= Real::parse("1e-40", prec));
    }
    {
        const auto q = moment_via_integration(10, 1, prec);
        const Real exact = Real::of(moment_exact(10, 1), prec);
        CHECK(abs(q.value - exact) <= Real::parse("1e-12", prec));
    }
    {
        const auto q = moment_via_integration(2, 1, prec);
        CHECK(q.value.to_double() == doctest::Approx(0.75).epsilon(1e-15));
    }
    {
        // upper end of the cross-check grid
        const auto q = moment_via_integration(50, 6, prec);
        const Real exact = Real::of(moment_exact(50, 6), prec);
        CHECK(abs(q.value - exact) <= q.error_bound + Real::pow2(-120, prec));
    }
}

TEST_CASE("piecewise integral closed form") {
    CHECK(integral_piece(3, 1, 1, 1) == Rational(1, 12));
    // n = 2: the (1-kx)^0 = 1 branch reduces to the plain power integral
    for (int m = 1; m <= 5; ++m) {
        const Rational plain = (Rational(1) - pow_rational(Rational(1, 2), m + 1)) / (m + 1);
        CHECK(integral_piece(2, 1, 1, m) == plain);
    }
    CHECK_THROWS_AS(integral_piece(3, 2, 1, 1), std::domain_error);  // nu < k
    CHECK_THROWS_AS(integral_piece(3, 3, 3, 1), std::domain_error);  // k = n
}

TEST_CASE("telescoped nu-sum") {
    CHECK(nu_sum_closed(3, 1, 1) == Rational(10, 81));
    for (long n : {3L, 5L, 9L})
        for (int m = 1; m <= 4; ++m) CHECK(nu_sum_closed(n, n - 1, m) == integral_piece(n, n - 1, n - 1, m));
    RngStream rng(17, 0);
    for (int i = 0; i < 30; ++i) {
        const long n = 2 + static_cast<long>(rng.next_u64() % 19);
        const long k = 1 + static_cast<long>(rng.next_u64() % (n - 1));
        const int m = 1 + static_cast<int>(rng.next_u64() % 5);
        Rational termwise(0);
        for (long nu = k; nu < n; ++nu) termwise += integral_piece(n, k, nu, m);
        CHECK(termwise == nu_sum_closed(n, k, m));
    }
}

TEST_CASE("minimum gap survival") {
    for (long n : {2L, 10L, 100L}) CHECK(min_gap_survival(n, Rational(0)) == 1);
    CHECK(min_gap_survival(2, Rational(1, 4)) == Rational(1, 2));
    CHECK(min_gap_survival(10, Rational(1, 5)) == 0);  // beyond 1/n
    // (1 - t/n)^{n-1} approaches e^{-t}
    const double v = min_gap_survival(100, Rational(1, 10000)).get_d();
    CHECK(std::abs(v - std::exp(-1.0)) < 0.02);
}

TEST_CASE("pdf integrates to one piecewise") {
    const mpfr_prec_t prec = 192;
    const Real tol = Real::parse("1e-24", prec);
    for (long n : {2L, 3L, 5L, 10L, 25L, 50L}) {
        std::vector<Real> pieces;
        for (long nu = 1; nu < n; ++nu) {
            auto f = [&](const Real& x) {
                std::vector<Real> terms;
                for (long k = 1; k <= nu; ++k) {
                    Real t = Real::of(BigInt(binomial(n, k) * k), prec) *
                             pow_ui(Real::of(1L, prec) - x * k, n - 2);
                    if (k % 2 == 0) t = -t;
                    terms.push_back(std::move(t));
                }
                return compensated_sum(terms, prec) * (n - 1);
            };
            const auto r = integrate_adaptive(f, Real::of(Rational(1, nu + 1), prec),
                                              Real::of(Rational(1, nu), prec), tol, prec,
                                              std::max(6, static_cast<int>(n) / 2 + 3));
            pieces.push_back(r.value);
        }
        const Real total = compensated_sum(pieces, prec);
        CHECK(abs(total - Real::of(1L, prec)) <= Real::parse("1e-10", prec));
    }
}
