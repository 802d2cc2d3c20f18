#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <vector>

#include "spacings/asymptotics.hpp"
#include "spacings/combinatorics.hpp"
#include "spacings/harmonic.hpp"
#include "spacings/rng.hpp"
#include "spacings/series.hpp"

using namespace spacings;

TEST_CASE("partition enumeration order and contents") {
    const auto p1 = partitions(1);
    REQUIRE(p1.size() == 1);
    CHECK(p1[0].multiplicities == std::vector<unsigned>{1});

    const auto p3 = partitions(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0].multiplicities == std::vector<unsigned>{3, 0, 0});
    CHECK(p3[1].multiplicities == std::vector<unsigned>{1, 1, 0});
    CHECK(p3[2].multiplicities == std::vector<unsigned>{0, 0, 1});

    CHECK(partitions(10).size() == 42);
    CHECK_THROWS_AS(partitions(0), std::domain_error);
    CHECK_THROWS_AS(partitions(65), std::domain_error);
}

TEST_CASE("every enumerated partition is valid and distinct") {
    for (unsigned s : {5u, 12u, 20u}) {
        const auto ps = partitions(s);
        std::set<std::vector<unsigned>> seen;
        for (const auto& p : ps) {
            CHECK(p.is_partition_of(s));
            CHECK(seen.insert(p.multiplicities).second);
        }
        CHECK(BigInt(ps.size()) == partition_count(s));
    }
}

TEST_CASE("partition counts from the pentagonal recurrence") {
    CHECK(partition_count(0) == 1);
    CHECK(partition_count(10) == 42);
    CHECK(partition_count(30) == 5604);
    // enumeration agrees through s = 40
    for (unsigned s = 1; s <= 40; ++s)
        CHECK(partition_count(s) == BigInt(static_cast<unsigned long>(partitions(s).size())));
}

TEST_CASE("partition weights count cycle types") {
    CHECK(partition_weight(2, PartitionVector{{2, 0}}) == 1);
    CHECK(partition_weight(2, PartitionVector{{0, 1}}) == 1);
    CHECK(partition_weight(3, PartitionVector{{1, 1, 0}}) == 3);
    CHECK_THROWS_AS(partition_weight(3, PartitionVector{{1, 1, 1}}), std::invalid_argument);

    for (unsigned m = 1; m <= 20; ++m) {
        Rational total(0);
        for (const auto& p : partitions(m)) total += partition_weight(m, p);
        CHECK(total == Rational(factorial(m)));
    }
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(0, 0) == 1);

    // Pascal-triangle oracle up to n = 60
    std::vector<std::vector<BigInt>> pascal(61);
    for (int n = 0; n <= 60; ++n) {
        pascal[n].assign(n + 1, BigInt(1));
        for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
    for (int n = 0; n <= 60; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal[n][k]);
}

TEST_CASE("binomial identity residuals vanish") {
    CHECK(verify_identity_1(1) == 0);
    CHECK(verify_identity_1(2) == 0);
    CHECK(verify_identity_1(60) == 0);

    CHECK(verify_identity_2(2, 1) == 0);
    CHECK(verify_identity_2(3, 2) == 0);
    CHECK(verify_identity_2(40, 20) == 0);
    CHECK_THROWS_AS(verify_identity_2(5, 5), std::domain_error);
    CHECK_THROWS_AS(verify_identity_2(5, 7), std::domain_error);

    CHECK(verify_identity_3(1, 1, 1) == 0);
    CHECK(verify_identity_3(3, 2, 1) == 0);
    CHECK(verify_identity_3(5, 6, 6) == 0);
}

TEST_CASE("exp-series coefficients of exp(cy) are c^j") {
    const Rational c(3, 7);
    std::vector<Rational> x{c, Rational(0), Rational(0), Rational(0)};
    const auto mu = exp_series_coeffs(std::span<const Rational>(x));
    Rational expect(1);
    for (int j = 0; j <= 4; ++j) {
        CHECK(mu[j] == expect);
        expect *= c;
    }
}

TEST_CASE("exp-series matches the harmonic partition quantity at n=2") {
    std::vector<Rational> x{Rational(3, 2), Rational(5, 4)};  // H_{2,1}, H_{2,2}
    const auto mu = exp_series_coeffs(std::span<const Rational>(x));
    CHECK(mu[2] == Rational(7, 2));  // x1^2 + x2 = 9/4 + 5/4
    CHECK(mu[2] == Rational(2) * script_h_recurrence(2, 2));
}

TEST_CASE("exp-series third coefficient over the Gumbel constants") {
    const mpfr_prec_t prec = 256;
    const Real g = euler_gamma(prec), z2 = zeta_int(2, prec), z3 = zeta_int(3, prec);
    std::vector<Real> x{g, z2, z3};
    const auto mu = exp_series_coeffs(std::span<const Real>(x));
    const Real expect = g * g * g + g * z2 * 3 + z3 * 2;
    CHECK(abs(mu[3] - expect) <= abs(expect) * Real::pow2(-200, 64));
    // partition-enumeration oracle gives the same value
    const Real direct = exp_series_coeff_partition_sum(std::span<const Real>(x), 3);
    CHECK(abs(mu[3] - direct) <= abs(expect) * Real::pow2(-200, 64));
}

TEST_CASE("moment-cumulant transform on degenerate and exponential laws") {
    const Rational c(5, 3);
    std::vector<Rational> mu{c, c * c, c * c * c};
    auto kappa = moments_to_cumulants(std::span<const Rational>(mu));
    CHECK(kappa[0] == c);
    CHECK(kappa[1] == 0);
    CHECK(kappa[2] == 0);

    // Exp(1): mu'_j = j! corresponds to x_r = 1, kappa_j = (j-1)!
    std::vector<Rational> expmu;
    for (int j = 1; j <= 8; ++j) expmu.emplace_back(factorial(j));
    auto expk = moments_to_cumulants(std::span<const Rational>(expmu));
    for (int j = 1; j <= 8; ++j) CHECK(expk[j - 1] == Rational(factorial(j - 1)));

    // and cumulants (c, 0, ..., 0) give back moments c^j
    std::vector<Rational> kap{c, Rational(0), Rational(0), Rational(0)};
    auto back = cumulants_to_moments(std::span<const Rational>(kap));
    Rational expect = c;
    for (int j = 1; j <= 4; ++j) {
        CHECK(back[j - 1] == expect);
        expect *= c;
    }
}

TEST_CASE("cumulant contract of the exp-series and exact round-trips") {
    RngStream rng(99, 0);
    for (int rep = 0; rep < 20; ++rep) {
        const int m = 1 + static_cast<int>(rng.next_u64() % 10);
        std::vector<Rational> x;
        for (int i = 0; i < m; ++i) {
            Rational q(static_cast<long>(rng.next_u64() % 19) - 9,
                       1 + static_cast<long>(rng.next_u64() % 7));
            q.canonicalize();
            x.push_back(q);
        }
        auto mu = exp_series_coeffs(std::span<const Rational>(x));
        std::vector<Rational> mu_tail(mu.begin() + 1, mu.end());
        auto kappa = moments_to_cumulants(std::span<const Rational>(mu_tail));
        for (int j = 1; j <= m; ++j) CHECK(kappa[j - 1] == Rational(factorial(j - 1)) * x[j - 1]);
        auto back = cumulants_to_moments(std::span<const Rational>(kappa));
        CHECK(back == mu_tail);
    }
}
