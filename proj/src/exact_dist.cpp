#include "spacings/exact_dist.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spacings/harmonic.hpp"

namespace spacings {

namespace {

// min(n, floor(1/x)) for rational x in [0, 1]; x = 0 means every term is live.
long truncation_index(long n, const Rational& x) {
    if (x == 0) return n;
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_den().get_mpz_t(), x.get_num().get_mpz_t());
    return q.fits_slong_p() ? std::min(n, q.get_si()) : n;
}

// (1 - k x)^e as an exact rational; x canonical implies the result is too.
Rational one_minus_kx_pow(long k, const Rational& x, unsigned long e) {
    Rational base = Rational(1) - Rational(k) * x;
    return pow_rational(base, static_cast<long>(e));
}

}  // namespace

Rational cdf(long n, const Rational& x) {
    if (n < 2) throw std::domain_error("cdf: n >= 2 required");
    if (x < 0 || x > 1) throw std::domain_error("cdf: x must lie in [0, 1]");
    const long kmax = truncation_index(n, x);
    std::vector<Rational> terms;
    terms.reserve(kmax + 1);
    for (long k = 0; k <= kmax; ++k) {
        Rational t = Rational(binomial(n, k)) * one_minus_kx_pow(k, x, n - 1);
        if (k % 2 != 0) t = -t;
        terms.push_back(std::move(t));
    }
    Rational acc(0);
    for (const Rational& t : terms) acc += t;
    return acc;
}

Real cdf_real(long n, const Real& x, mpfr_prec_t prec) {
    if (n < 2) throw std::domain_error("cdf_real: n >= 2 required");
    const Real one = Real::of(1L, prec);
    if (x <= Real::of(1L, prec) / n) return Real(prec);
    if (x >= one) return one;
    const long kmax = std::min<long>(n, static_cast<long>(1.0 / x.to_double()));
    for (mpfr_prec_t wp = prec + 64; wp <= (mpfr_prec_t{1} << 22); wp *= 2) {
        std::vector<Real> terms;
        terms.reserve(kmax + 1);
        mpfr_exp_t max_exp = MPFR_EMIN_DEFAULT;
        const Real xw = x.to_precision(wp);
        for (long k = 0; k <= kmax; ++k) {
            Real base = Real::of(1L, wp) - xw * k;
            if (base.sign() < 0) break;  // guard against kmax off-by-one from the double estimate
            Real t = Real::of(binomial(n, k), wp) * pow_ui(base, n - 1);
            if (k % 2 != 0) t = -t;
            if (!t.is_zero()) max_exp = std::max(max_exp, t.exponent2());
            terms.push_back(std::move(t));
        }
        Real sum = compensated_sum(terms, wp);
        if (!sum.is_zero()) {
            const mpfr_exp_t cancelled = max_exp - sum.exponent2();
            if (cancelled <= static_cast<mpfr_exp_t>(wp - prec - 32)) return sum.to_precision(prec);
        }
    }
    throw std::runtime_error("cdf_real: precision escalation exhausted");
}

double cdf_estimate(long n, double x) {
    if (n < 2) throw std::domain_error("cdf_estimate: n >= 2 required");
    if (x <= 1.0 / static_cast<double>(n)) return 0.0;
    if (x >= 1.0) return 1.0;
    const long kmax = std::min<long>(n, static_cast<long>(std::floor(1.0 / x)));
    double sum = 1.0, comp = 0.0;  // k = 0 term
    double log_binom = 0.0;
    double max_abs = 1.0;
    double prev_lt = 0.0;
    for (long k = 1; k <= kmax; ++k) {
        log_binom += std::log(static_cast<double>(n - k + 1) / static_cast<double>(k));
        const double lt = log_binom + (n - 1) * std::log1p(-k * x);
        if (lt < -745.0) {
            if (lt < prev_lt && k > 1) break;  // underflowed past the peak
            prev_lt = lt;
            continue;
        }
        prev_lt = lt;
        double t = std::exp(lt);
        if (k % 2 != 0) t = -t;
        max_abs = std::max(max_abs, std::abs(t));
        // Neumaier compensation
        const double s = sum + t;
        comp += (std::abs(sum) >= std::abs(t)) ? (sum - s) + t : (t - s) + sum;
        sum = s;
    }
    const double value = sum + comp;
    // certify ~1e-10 absolute accuracy, else recompute in extended precision
    if (max_abs * 1.1e-16 * static_cast<double>(kmax + 1) > 1e-10)
        return cdf_real(n, Real::of(x, 192), 192).to_double();
    return std::min(1.0, std::max(0.0, value));
}

Rational pdf(long n, const Rational& x) {
    if (n < 2) throw std::domain_error("pdf: n >= 2 required");
    const Rational lo(1, n);
    if (x <= lo || x >= 1) return Rational(0);
    const long kmax = truncation_index(n, x);
    Rational acc(0);
    for (long k = 1; k <= kmax; ++k) {
        Rational t = Rational(binomial(n, k) * k) * one_minus_kx_pow(k, x, n - 2);
        if (k % 2 == 0) t = -t;
        acc += t;
    }
    return acc * Rational(n - 1);
}

Real quantile(long n, const Real& p, const Real& tol, mpfr_prec_t prec) {
    const Real zero(64), one = Real::of(1L, 64);
    if (!(p > zero) || !(p < one)) throw std::domain_error("quantile: p must lie in (0, 1)");
    Real lo = Real::of(1L, prec) / n;
    Real hi = Real::of(1L, prec);
    for (int it = 0; it < 200; ++it) {
        Real mid = (lo + hi) / 2;
        Real f = cdf_real(n, mid, prec);
        if (abs(f - p) <= tol) return mid;
        if (f < p)
            lo = std::move(mid);
        else
            hi = std::move(mid);
    }
    throw std::runtime_error("quantile: bisection failed to converge in 200 iterations");
}

double quantile_double(long n, double p, double tol) {
    if (!(p > 0.0) || !(p < 1.0)) throw std::domain_error("quantile_double: p must lie in (0, 1)");
    double lo = 1.0 / static_cast<double>(n), hi = 1.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f = cdf_estimate(n, mid);
        if (std::abs(f - p) <= tol || hi - lo < 4e-16 * hi) return mid;
        (f < p ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

Rational moment_exact(long n, int m) {
    if (n < 2 || m < 1 || m > 30)
        throw std::domain_error("moment_exact: n >= 2 and 1 <= m <= 30 required");
    // (n-1)! m! / (n+m-1)! = m! / ((n)(n+1)...(n+m-1))
    BigInt rising(1);
    for (long j = n; j <= n + m - 1; ++j) rising *= j;
    Rational c(factorial(static_cast<unsigned long>(m)), rising);
    c.canonicalize();
    return c * script_h_recurrence(n, m);
}

namespace {

// Boundary term T_{a,k,nu,b} = ((nu+1-k)^{a-1}/(nu+1)^{a+b-1} - (nu-k)^{a-1}/nu^{a+b-1}) / (k(a-1))
Rational boundary_term(long a, long k, long nu, long b) {
    const unsigned long e_num = static_cast<unsigned long>(a - 1);
    const unsigned long e_den = static_cast<unsigned long>(a + b - 1);
    Rational first(pow_bigint(BigInt(nu + 1 - k), e_num), pow_bigint(BigInt(nu + 1), e_den));
    first.canonicalize();
    Rational second(pow_bigint(BigInt(nu - k), e_num), pow_bigint(BigInt(nu), e_den));
    second.canonicalize();
    Rational r = first - second;
    r /= Rational(BigInt(k) * BigInt(a - 1));
    return r;
}

}  // namespace

Rational integral_piece(long n, long k, long nu, int m) {
    if (!(n >= 2 && k >= 1 && k < n && nu >= k && nu < n && m >= 1))
        throw std::domain_error("integral_piece: need 1 <= k <= nu < n and m >= 1");
    Rational acc(0);
    for (int mu = 0; mu <= m; ++mu) {
        // m!(n-2)! / ((m-mu)!(n+mu-2)!) = (m falling to m-mu) / ((n-1)...(n+mu-2))
        BigInt num = factorial(static_cast<unsigned long>(m));
        num /= factorial(static_cast<unsigned long>(m - mu));
        BigInt den(1);
        for (long j = n - 1; j <= n + mu - 2; ++j) den *= j;
        den *= pow_bigint(BigInt(k), static_cast<unsigned long>(mu));
        Rational coeff(num, den);
        coeff.canonicalize();
        acc += coeff * boundary_term(n + mu, k, nu, m - mu);
    }
    return acc;
}

Rational nu_sum_closed(long n, long k, int m) {
    if (!(n >= 2 && k >= 1 && k < n && m >= 1))
        throw std::domain_error("nu_sum_closed: need 1 <= k < n and m >= 1");
    const BigInt npow = pow_bigint(BigInt(n), static_cast<unsigned long>(n + m - 1));
    Rational acc(0);
    for (int mu = 0; mu <= m; ++mu) {
        BigInt num = factorial(static_cast<unsigned long>(m));
        num /= factorial(static_cast<unsigned long>(m - mu));
        num *= pow_bigint(BigInt(n - k), static_cast<unsigned long>(n + mu - 1));
        BigInt den(1);
        for (long j = n - 1; j <= n + mu - 1; ++j) den *= j;  // (n+mu-1)!/(n-2)!
        den *= pow_bigint(BigInt(k), static_cast<unsigned long>(mu + 1));
        den *= npow;
        Rational term(num, den);
        term.canonicalize();
        acc += term;
    }
    return acc;
}

MomentQuadrature moment_via_integration(long n, int m, mpfr_prec_t prec) {
    if (n < 2 || n > 200 || m < 1 || m > 30)
        throw std::domain_error("moment_via_integration: 2 <= n <= 200 and 1 <= m <= 30 required");
    // ~n/2 guard bits absorb the cancellation of the alternating C(n,k) sum
    const mpfr_prec_t wp = prec + 64 + static_cast<mpfr_prec_t>(n / 2);
    // polynomial degree of the integrand is m + n - 2; one panel is exact
    const int points = std::max(6, (m + static_cast<int>(n)) / 2 + 2);
    std::vector<BigInt> coeff(n);  // C(n,k) k, signed
    for (long k = 1; k < n; ++k) {
        coeff[k] = binomial(n, k) * k;
        if (k % 2 == 0) coeff[k] = -coeff[k];
    }
    MomentQuadrature out{Real(prec), Real(prec), true};
    const Real tol = Real::pow2(16 - static_cast<long>(prec), wp);
    std::vector<Real> pieces, errors;
    for (long nu = 1; nu < n; ++nu) {
        auto integrand = [&](const Real& x) {
            std::vector<Real> terms;
            terms.reserve(nu);
            for (long k = 1; k <= nu; ++k) {
                Real base = Real::of(1L, wp) - x * k;
                terms.push_back(Real::of(coeff[k], wp) * pow_ui(base, n - 2));
            }
            return compensated_sum(terms, wp) * pow_ui(x, m);
        };
        const Real a = Real::of(1L, wp) / (nu + 1);
        const Real b = Real::of(1L, wp) / nu;
        AdaptiveResult r = integrate_adaptive(integrand, a, b, tol / (n - 1), wp, points);
        if (!r.converged) out.converged = false;
        pieces.push_back(r.value);
        errors.push_back(r.error_bound);
    }
    out.value = (compensated_sum(pieces, wp) * (n - 1)).to_precision(prec);
    out.error_bound = (compensated_sum(errors, wp) * (n - 1)).to_precision(prec);
    return out;
}

Rational kth_gap_mean(long n, long k) {
    if (!(n >= 1 && k >= 1 && k <= n)) throw std::domain_error("kth_gap_mean: 1 <= k <= n required");
    Rational h = harmonic(n, 1);
    if (k > 1) h -= harmonic(k - 1, 1);
    return h / Rational(n);
}

Rational min_gap_survival(long n, const Rational& y) {
    if (n < 2 || y < 0) throw std::domain_error("min_gap_survival: n >= 2 and y >= 0 required");
    if (y > Rational(1, n)) return Rational(0);
    return pow_rational(Rational(1) - Rational(n) * y, n - 1);
}

}  // namespace spacings
