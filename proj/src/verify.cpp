#include "spacings/verify.hpp"

#include <sstream>

#include "spacings/combinatorics.hpp"
#include "spacings/exact_dist.hpp"
#include "spacings/harmonic.hpp"
#include "spacings/rng.hpp"
#include "spacings/series.hpp"

namespace spacings {

namespace {

std::string tuple_str(std::initializer_list<long> vals) {
    std::ostringstream os;
    os << "(";
    bool first = true;
    for (long v : vals) {
        if (!first) os << ", ";
        os << v;
        first = false;
    }
    os << ")";
    return os.str();
}

void fail(VerifyCheck& c, const std::string& where, const Rational& residual) {
    c.pass = false;
    if (c.detail.empty()) c.detail = where + " residual " + to_string(residual);
}

// Exact antiderivative of x^m (1-kx)^{n-2} on [a, b] by binomial expansion:
// sum_j C(n-2, j) (-k)^j (b^{m+j+1} - a^{m+j+1}) / (m+j+1).
Rational integral_by_expansion(long n, long k, const Rational& a, const Rational& b, int m) {
    Rational acc(0);
    for (long j = 0; j <= n - 2; ++j) {
        Rational coeff(binomial(n - 2, j), BigInt(m + j + 1));
        coeff.canonicalize();
        coeff *= pow_rational(Rational(-k), j);
        acc += coeff * (pow_rational(b, m + j + 1) - pow_rational(a, m + j + 1));
    }
    return acc;
}

}  // namespace

VerifyReport verify_identities(const VerifyRanges& r) {
    VerifyReport rep;
    {
        VerifyCheck c;
        c.name = "identity-1 alternating k/(n+1-k) sum";
        for (long n = 1; n <= r.identities_n_max; ++n) {
            ++c.cases;
            Rational residual = verify_identity_1(n);
            if (residual != 0) fail(c, tuple_str({n}), residual);
        }
        rep.checks.push_back(std::move(c));
    }
    {
        VerifyCheck c;
        c.name = "identity-2 vanishing power sum";
        for (long n = 1; n <= r.identities_n_max; ++n) {
            for (long s = 0; s < n; ++s) {
                ++c.cases;
                Rational residual = verify_identity_2(n, s);
                if (residual != 0) fail(c, tuple_str({n, s}), residual);
            }
        }
        rep.checks.push_back(std::move(c));
    }
    {
        VerifyCheck c;
        c.name = "identity-3 factorial-binomial collapse";
        for (long n = 1; n <= r.identities_n_max; ++n) {
            for (long m = 1; m <= r.identities_m_max; ++m) {
                for (long s = 1; s <= m; ++s) {
                    ++c.cases;
                    Rational residual = verify_identity_3(n, m, s);
                    if (residual != 0) fail(c, tuple_str({n, m, s}), residual);
                }
            }
        }
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

VerifyReport verify_lemmas(const VerifyRanges& r) {
    VerifyReport rep;
    {
        VerifyCheck c;
        c.name = "partition-sum = alternating-sum = recurrence";
        for (long n = 1; n <= r.script_h_n_max; ++n) {
            HarmonicTable table(n, r.script_h_s_max);
            std::vector<Rational> rec = script_h_all(table, r.script_h_s_max);
            for (int s = 1; s <= r.script_h_s_max; ++s) {
                ++c.cases;
                const Rational alt = script_h_alternating(n, s);
                const Rational part = script_h_partition(n, s);
                if (alt != rec[s]) fail(c, "alt vs rec " + tuple_str({n, s}), alt - rec[s]);
                if (part != rec[s]) fail(c, "part vs rec " + tuple_str({n, s}), part - rec[s]);
            }
        }
        rep.checks.push_back(std::move(c));
    }
    {
        VerifyCheck c;
        c.name = "induction step sum_sigma h_sigma (n+1)^(sigma-s)";
        for (long n = 1; n <= r.induction_n_max; ++n) {
            HarmonicTable table(n, r.induction_s_max);
            std::vector<Rational> hn = script_h_all(table, r.induction_s_max);
            HarmonicTable table1(n + 1, r.induction_s_max);
            std::vector<Rational> hn1 = script_h_all(table1, r.induction_s_max);
            for (int s = 1; s <= r.induction_s_max; ++s) {
                ++c.cases;
                Rational acc(0);
                for (int sigma = 0; sigma <= s; ++sigma)
                    acc += hn[sigma] * pow_rational(Rational(n + 1), -(s - sigma));
                if (acc != hn1[s]) fail(c, tuple_str({n, s}), acc - hn1[s]);
            }
        }
        rep.checks.push_back(std::move(c));
    }
    {
        VerifyCheck c;
        c.name = "piecewise integral closed form (exact expansion)";
        for (long n = 2; n <= r.lemma1_exact_n_max; ++n) {
            for (long k = 1; k < n; ++k) {
                for (long nu = k; nu < n; ++nu) {
                    for (int m = 1; m <= 4; ++m) {
                        ++c.cases;
                        const Rational a(1, nu + 1), b(1, nu);
                        const Rational direct = integral_by_expansion(n, k, a, b, m);
                        const Rational closed = integral_piece(n, k, nu, m);
                        if (direct != closed) fail(c, tuple_str({n, k, nu, m}), direct - closed);
                    }
                }
            }
        }
        rep.checks.push_back(std::move(c));
    }
    {
        VerifyCheck c;
        c.name = "piecewise integral closed form vs quadrature";
        RngStream rng(r.seed, 0);
        const mpfr_prec_t prec = 192;
        const Real tol14 = Real::parse("1e-14", prec);
        for (int i = 0; i < r.lemma1_tuples; ++i) {
            const long n = 2 + static_cast<long>(rng.next_u64() % 29);  // 2..30
            const long k = 1 + static_cast<long>(rng.next_u64() % (n - 1));
            const long nu = k + static_cast<long>(rng.next_u64() % (n - k));
            const int m = 1 + static_cast<int>(rng.next_u64() % 6);
            ++c.cases;
            const Rational closed = integral_piece(n, k, nu, m);
            auto integrand = [&](const Real& x) {
                return pow_ui(x, m) * pow_ui(Real::of(1L, prec) - x * k, n - 2);
            };
            AdaptiveResult q = integrate_adaptive(
                integrand, Real::of(Rational(1, nu + 1), prec), Real::of(Rational(1, nu), prec),
                Real::parse("1e-30", prec), prec, std::max(6, (m + static_cast<int>(n)) / 2 + 2));
            const Real diff = abs(Real::of(closed, prec) - q.value);
            if (!(diff <= tol14)) {
                c.pass = false;
                if (c.detail.empty())
                    c.detail = tuple_str({n, k, nu, m}) + " |closed - quad| = " + diff.str(8);
            }
        }
        rep.checks.push_back(std::move(c));
    }
    {
        VerifyCheck c;
        c.name = "telescoped nu-sum equals termwise sum";
        for (long n = 2; n <= r.lemma2_n_max; ++n) {
            for (long k = 1; k < n; ++k) {
                for (int m = 1; m <= r.lemma2_m_max; ++m) {
                    ++c.cases;
                    Rational termwise(0);
                    for (long nu = k; nu < n; ++nu) termwise += integral_piece(n, k, nu, m);
                    const Rational closed = nu_sum_closed(n, k, m);
                    if (termwise != closed) fail(c, tuple_str({n, k, m}), termwise - closed);
                }
            }
        }
        rep.checks.push_back(std::move(c));
    }
    {
        VerifyCheck c;
        c.name = "exp-series recurrence equals partition sum";
        RngStream rng(r.seed, 1);
        for (int m = 1; m <= r.lemma4_m_max; ++m) {
            std::vector<Rational> x;
            for (int i = 0; i < m; ++i) {
                const long num = static_cast<long>(rng.next_u64() % 41) - 20;
                const long den = 1 + static_cast<long>(rng.next_u64() % 12);
                Rational q(num, den);
                q.canonicalize();
                x.push_back(q);
            }
            std::vector<Rational> mu = exp_series_coeffs(std::span<const Rational>(x));
            for (int j = 1; j <= m; ++j) {
                ++c.cases;
                const Rational direct =
                    exp_series_coeff_partition_sum(std::span<const Rational>(x), j);
                if (mu[j] != direct) fail(c, tuple_str({m, j}), mu[j] - direct);
            }
            // cumulant contract kappa_j = (j-1)! x_j, and the exact round-trip
            std::vector<Rational> mu_tail(mu.begin() + 1, mu.end());
            std::vector<Rational> kappa = moments_to_cumulants(std::span<const Rational>(mu_tail));
            for (int j = 1; j <= m; ++j) {
                ++c.cases;
                const Rational expect = Rational(factorial(j - 1)) * x[j - 1];
                if (kappa[j - 1] != expect) fail(c, "kappa " + tuple_str({m, j}), kappa[j - 1] - expect);
            }
            std::vector<Rational> back = cumulants_to_moments(std::span<const Rational>(kappa));
            for (int j = 1; j <= m; ++j) {
                ++c.cases;
                if (back[j - 1] != mu_tail[j - 1])
                    fail(c, "roundtrip " + tuple_str({m, j}), back[j - 1] - mu_tail[j - 1]);
            }
        }
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

VerifyReport verify_theorem(const VerifyRanges& r) {
    VerifyReport rep;
    {
        VerifyCheck c;
        c.name = "moment formula reconstructed from integral route";
        for (long n = 2; n <= r.theorem_n_max; ++n) {
            for (int m = 1; m <= r.theorem_m_max; ++m) {
                ++c.cases;
                Rational acc(0);
                for (long k = 1; k < n; ++k) {
                    Rational term = Rational(binomial(n, k) * k) * nu_sum_closed(n, k, m);
                    if (k % 2 == 0) term = -term;
                    acc += term;
                }
                acc *= Rational(n - 1);
                const Rational direct = moment_exact(n, m);
                if (acc != direct) fail(c, tuple_str({n, m}), acc - direct);
            }
        }
        rep.checks.push_back(std::move(c));
    }
    {
        VerifyCheck c;
        c.name = "moment formula vs adaptive quadrature";
        const mpfr_prec_t prec = 192;
        for (long n = 2; n <= r.quadrature_n_max; ++n) {
            for (int m = 1; m <= r.quadrature_m_max; ++m) {
                ++c.cases;
                MomentQuadrature q = moment_via_integration(n, m, prec);
                const Real exact = Real::of(moment_exact(n, m), prec);
                const Real slack = Real::pow2(-120, prec);
                if (!(abs(exact - q.value) <= q.error_bound + slack)) {
                    c.pass = false;
                    if (c.detail.empty())
                        c.detail = tuple_str({n, m}) + " gap " + abs(exact - q.value).str(8) +
                                   " bound " + q.error_bound.str(8);
                }
            }
        }
        rep.checks.push_back(std::move(c));
    }
    {
        VerifyCheck c;
        c.name = "moment sequence Cauchy-Schwarz consistency";
        for (long n : {2L, 5L, 10L, 20L, 50L}) {
            std::vector<Rational> mom;
            for (int m = 1; m <= 12; ++m) mom.push_back(moment_exact(n, m));
            for (int m = 1; m + 2 <= 12; ++m) {
                ++c.cases;
                const Rational lhs = mom[m - 1] * mom[m + 1];
                const Rational rhs = mom[m] * mom[m];
                if (lhs < rhs) fail(c, tuple_str({n, m}), lhs - rhs);
            }
        }
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

VerifyReport verify_all(const VerifyRanges& r) {
    VerifyReport rep = verify_identities(r);
    rep.append(verify_lemmas(r));
    rep.append(verify_theorem(r));
    return rep;
}

}  // namespace spacings
