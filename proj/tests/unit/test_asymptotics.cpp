#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spacings/asymptotics.hpp"
#include "spacings/exact_dist.hpp"
#include "spacings/harmonic.hpp"
#include "spacings/series.hpp"

using namespace spacings;

namespace {

// reference digits, used only here
const char* kGamma50 = "0.57721566490153286060651209008240243104215933593992";
const char* kZeta2_50 = "1.6449340668482264364724151666460251892189499012068";
const char* kZeta3_50 = "1.2020569031595942853997381615114499907649862923405";

Real ref(const char* digits, mpfr_prec_t prec) { return Real::parse(digits, prec); }

}  // namespace

TEST_CASE("Euler-Mascheroni constant") {
    const Real g64 = euler_gamma(64);
    CHECK(abs(g64.to_precision(256) - ref(kGamma50, 256)) <= Real::parse("1e-18", 64));

    // doubling the precision only refines trailing bits
    const Real g256 = euler_gamma(256);
    const Real g512 = euler_gamma(512);
    CHECK(abs(g256.to_precision(512) - g512) <= Real::pow2(-250, 64));
    CHECK(abs(g256 - ref(kGamma50, 256)) <= Real::parse("1e-49", 64));

    // MPFR's own constant as an independent oracle
    Real builtin(256);
    mpfr_const_euler(builtin.raw(), MPFR_RNDN);
    CHECK(abs(g256 - builtin) <= Real::pow2(-250, 64));

    // H_n - log n approaches gamma like 1/(2n)
    const Real h = harmonic_real(1000000, 1, 256);
    const Real drift = h - log(Real::of(1000000L, 256)) - g256;
    CHECK(abs(drift) <= Real::parse("6e-7", 64));
}

TEST_CASE("integer zeta values") {
    const mpfr_prec_t prec = 256;
    const Real pi = Real::pi(prec);
    CHECK(abs(zeta_int(2, prec) - pi * pi / 6) <= Real::pow2(-240, 64));
    CHECK(abs(zeta_int(4, prec) - pow_ui(pi, 4) / 90) <= Real::pow2(-238, 64));
    CHECK(abs(zeta_int(2, prec) - ref(kZeta2_50, prec)) <= Real::parse("1e-49", 64));
    CHECK(abs(zeta_int(3, prec) - ref(kZeta3_50, prec)) <= Real::parse("1e-49", 64));
    CHECK_THROWS_AS(zeta_int(1, prec), std::domain_error);

    for (unsigned s = 2; s <= 30; ++s) {
        Real builtin(prec);
        mpfr_zeta_ui(builtin.raw(), s, MPFR_RNDN);
        CHECK(abs(zeta_int(s, prec) - builtin) <= abs(builtin) * Real::pow2(-240, 64));
    }
}

TEST_CASE("limit cumulants") {
    const mpfr_prec_t prec = 192;
    CHECK(limit_cumulant(1, prec) == euler_gamma(prec));
    CHECK(abs(limit_cumulant(2, prec) - zeta_int(2, prec)) <= Real::pow2(-180, 64));
    const Real k3 = limit_cumulant(3, prec);
    CHECK(abs(k3 - zeta_int(3, prec) * 2) <= Real::pow2(-180, 64));
    CHECK(k3.to_double() == doctest::Approx(2.4041138).epsilon(1e-7));
}

TEST_CASE("limit moments from the exp-series") {
    const mpfr_prec_t prec = 256;
    const Real g = euler_gamma(prec), z2 = zeta_int(2, prec), z3 = zeta_int(3, prec);
    const auto mu = limit_moments(3, prec);
    CHECK(abs(mu[1] - g) <= Real::pow2(-240, 64));
    CHECK(abs(mu[2] - (g * g + z2)) <= Real::pow2(-240, 64));
    CHECK(abs(mu[3] - (g * g * g + g * z2 * 3 + z3 * 2)) <= Real::pow2(-238, 64));
    CHECK(mu[2].to_double() == doctest::Approx(1.97811).epsilon(1e-5));
}

TEST_CASE("limit moments against Gumbel quadrature") {
    const mpfr_prec_t prec = 256;
    const auto mu = limit_moments(10, prec);
    for (int m : {1, 2, 4, 7, 10}) {
        const auto q = gumbel_moment_quadrature(m, prec);
        CHECK(q.converged);
        CHECK(abs(q.value - mu[m]) <= Real::parse("1e-10", prec));
    }
    // known closed forms for the first two
    const Real g = euler_gamma(prec), pi = Real::pi(prec);
    CHECK(abs(gumbel_moment_quadrature(1, prec).value - g) <= Real::parse("1e-30", prec));
    CHECK(abs(gumbel_moment_quadrature(2, prec).value - (g * g + pi * pi / 6)) <=
          Real::parse("1e-30", prec));
}

TEST_CASE("cumulants of the limit moments are the Gumbel cumulants") {
    const mpfr_prec_t prec = 256;
    auto mu = limit_moments(10, prec);
    mu.erase(mu.begin());
    const auto kappa = moments_to_cumulants(std::span<const Real>(mu));
    for (int m = 1; m <= 10; ++m)
        CHECK(abs(kappa[m - 1] - limit_cumulant(m, prec)) <= Real::parse("1e-12", prec));
}

TEST_CASE("centered-scaled first moment is H_n - log n") {
    const mpfr_prec_t prec = 256;
    for (long n : {2L, 100L, 5000L}) {
        const Real direct =
            Real::of(harmonic(n, 1), prec) - log(Real::of(static_cast<unsigned long>(n), prec));
        CHECK(abs(centered_scaled_moment(n, 1, prec) - direct) <=
              abs(direct) * Real::pow2(-200, 64));
    }
    // the floating path agrees with the exact one across the crossover
    const Real exact_side = centered_scaled_moment(3000, 2, prec, /*exact_limit=*/10000);
    const Real float_side = centered_scaled_moment(3000, 2, prec, /*exact_limit=*/100);
    CHECK(abs(exact_side - float_side) <= abs(exact_side) * Real::pow2(-150, 64));
}

TEST_CASE("centered-scaled second moment against a hand expansion") {
    const mpfr_prec_t prec = 256;
    for (long n : {10L, 250L}) {
        // E[(n dmax - log n)^2] = n^2 E[d^2] - 2 n log n E[d] + log^2 n
        const Real L = log(Real::of(static_cast<unsigned long>(n), prec));
        const Real e1 = Real::of(moment_exact(n, 1), prec);
        const Real e2 = Real::of(moment_exact(n, 2), prec);
        const Real direct = e2 * static_cast<long>(n * n) - L * e1 * static_cast<long>(2 * n) + L * L;
        CHECK(abs(centered_scaled_moment(n, 2, prec) - direct) <=
              abs(direct) * Real::pow2(-180, 64));
    }
}

TEST_CASE("centered-scaled first moment approaches gamma like 1/(2n)") {
    const mpfr_prec_t prec = 192;
    const Real v = centered_scaled_moment(1000, 1, prec);
    const Real expect = euler_gamma(prec) + Real::of(Rational(1, 2000), prec);
    CHECK(abs(v - expect) <= Real::parse("1e-7", prec));
}

TEST_CASE("cumulants of the auxiliary raw sequence are exact") {
    // raw moments m! script_h(n, m) have cumulants (m-1)! H_{n,m}, exactly
    for (long n : {3L, 17L, 50L}) {
        HarmonicTable table(n, 8);
        const auto sh = script_h_all(table, 8);
        std::vector<Rational> raw;
        for (int m = 1; m <= 8; ++m) raw.push_back(Rational(factorial(m)) * sh[m]);
        const auto kappa = moments_to_cumulants(std::span<const Rational>(raw));
        for (int m = 1; m <= 8; ++m) CHECK(kappa[m - 1] == Rational(factorial(m - 1)) * table(m));
    }
}

TEST_CASE("centered-scaled cumulants behave") {
    const mpfr_prec_t prec = 256;
    const auto kappa = centered_scaled_cumulants(500, 4, prec);
    const Real k1_direct =
        Real::of(harmonic(500, 1), prec) - log(Real::of(500UL, prec));
    CHECK(abs(kappa[0] - k1_direct) <= Real::pow2(-180, 64));
    // kappa_2 sits near zeta(2) already at n = 500
    CHECK(std::abs(kappa[1].to_double() - 1.6449) < 0.2);
}

TEST_CASE("gumbel cdf") {
    const mpfr_prec_t prec = 128;
    CHECK(gumbel_cdf(0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
    CHECK(abs(gumbel_cdf(Real(prec)) - exp(-Real::of(1L, prec))) <= Real::pow2(-120, 64));
    CHECK(gumbel_cdf(40.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(gumbel_cdf(-3.0) < 1e-8);
    double prev = 0.0;
    for (double x = -6.0; x <= 8.0; x += 0.25) {
        const double f = gumbel_cdf(x);
        CHECK(f >= prev);
        prev = f;
    }
    const double median = -std::log(std::log(2.0));
    CHECK(gumbel_cdf(median) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(median == doctest::Approx(0.36651292058166433).epsilon(1e-14));
}

TEST_CASE("determinacy diagnostic") {
    const mpfr_prec_t prec = 192;
    const auto rows = determinacy_check(15, prec);
    REQUIRE(rows.size() == 15);
    CHECK(rows[0].value.to_double() == doctest::Approx(0.7032).epsilon(1e-3));
    for (const auto& r : rows) CHECK(r.holds);
    // the bound sequence (free of moments) falls to 2/e
    const double two_over_e = 2.0 / std::exp(1.0);
    double prev = determinacy_bound_tail(1e3);
    for (double m : {1e4, 1e5, 1e6}) {
        const double b = determinacy_bound_tail(m);
        CHECK(b < prev);
        CHECK(b > two_over_e);
        prev = b;
    }
    CHECK(std::abs(determinacy_bound_tail(1e6) - two_over_e) < 0.002);
}

TEST_CASE("convergence table structure and diagnostics") {
    const mpfr_prec_t prec = 192;
    const std::vector<long> ns{100, 400};
    const auto rows = convergence_table(ns, 3, prec);
    REQUIRE(rows.size() == 6);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].n == ns[i / 3]);
        CHECK(rows[i].m == static_cast<int>(i % 3) + 1);
        CHECK(rows[i].abs_gap >= Real(prec));
        CHECK(abs(abs(rows[i].centered_moment - rows[i].limit_moment) - rows[i].abs_gap) <=
              Real::pow2(-100, 64));
    }
    // gaps shrink from n=100 to n=400 for every order
    for (int m = 0; m < 3; ++m) CHECK(rows[3 + m].abs_gap < rows[m].abs_gap);
    // m=1 column is H_n - log n
    const Real h100 = Real::of(harmonic(100, 1), prec) - log(Real::of(100UL, prec));
    CHECK(abs(rows[0].centered_moment - h100) <= Real::pow2(-150, 64));
}

TEST_CASE("scaled moment ratio drifts to one") {
    const mpfr_prec_t prec = 128;
    for (int m = 1; m <= 3; ++m) {
        const double r2 = scaled_moment_ratio(100, m, prec).to_double();
        const double r3 = scaled_moment_ratio(1000, m, prec).to_double();
        const double r4 = scaled_moment_ratio(10000, m, prec).to_double();
        CHECK(std::abs(r3 - 1.0) < std::abs(r2 - 1.0));
        CHECK(std::abs(r4 - 1.0) < std::abs(r3 - 1.0));
    }
    CHECK(std::abs(scaled_moment_ratio(10000, 1, prec).to_double() - 1.0) < 0.07);
}

TEST_CASE("results reproduce at doubled precision") {
    for (long n : {50L, 911L}) {
        const Real a = centered_scaled_moment(n, 3, 128);
        const Real b = centered_scaled_moment(n, 3, 256);
        CHECK(abs(a.to_precision(256) - b) <= abs(b) * Real::pow2(-64, 64));
    }
    const Real za = zeta_int(5, 128), zb = zeta_int(5, 256);
    CHECK(abs(za.to_precision(256) - zb) <= abs(zb) * Real::pow2(-64, 64));
    const auto qa = gumbel_moment_quadrature(3, 128).value;
    const auto qb = gumbel_moment_quadrature(3, 256).value;
    CHECK(abs(qa.to_precision(256) - qb) <= abs(qb) * Real::pow2(-64, 64));
}
