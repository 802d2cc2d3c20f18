#include "spacings/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "spacings/harmonic.hpp"
#include "spacings/quadrature.hpp"
#include "spacings/series.hpp"

namespace spacings {

Real limit_cumulant(int m, mpfr_prec_t prec) {
    if (m < 1) throw std::domain_error("limit_cumulant: m >= 1 required");
    if (m == 1) return euler_gamma(prec);
    return Real::of(factorial(static_cast<unsigned long>(m - 1)), prec) * zeta_int(m, prec);
}

std::vector<Real> limit_moments(int m_max, mpfr_prec_t prec) {
    if (m_max < 1 || m_max > 30)
        throw std::domain_error("limit_moments: 1 <= m_max <= 30 required");
    std::vector<Real> x;
    x.reserve(m_max);
    x.push_back(euler_gamma(prec));
    for (int r = 2; r <= m_max; ++r) x.push_back(zeta_int(r, prec));
    return exp_series_coeffs(std::span<const Real>(x));
}

Real limit_moment(int m, mpfr_prec_t prec) {
    return limit_moments(m, prec)[m];
}

namespace {

// Raw moments of n*d_max: A_k = n^k (n-1)! k! / (n+k-1)! script_h(n,k).
std::vector<Rational> raw_scaled_moments_exact(long n, int m_max) {
    HarmonicTable table(n, m_max);
    std::vector<Rational> sh = script_h_all(table, m_max);
    std::vector<Rational> a;
    a.reserve(m_max + 1);
    a.emplace_back(1);
    Rational scale(1);  // n^k / ((n)(n+1)...(n+k-1)) * k!, built incrementally
    for (int k = 1; k <= m_max; ++k) {
        scale *= Rational(BigInt(n) * BigInt(k), BigInt(n + k - 1));
        a.push_back(scale * sh[k]);
    }
    return a;
}

std::vector<Real> raw_scaled_moments_real(long n, int m_max, mpfr_prec_t prec) {
    std::vector<Real> h;
    h.reserve(m_max);
    for (int r = 1; r <= m_max; ++r) h.push_back(harmonic_real(n, r, prec));
    std::vector<Real> sh = script_h_all_real(h, m_max, prec);
    std::vector<Real> a;
    a.reserve(m_max + 1);
    a.push_back(Real::of(1L, prec));
    Real scale = Real::of(1L, prec);
    for (int k = 1; k <= m_max; ++k) {
        scale *= Real::of(BigInt(BigInt(n) * k), prec) / Real::of(BigInt(n + k - 1), prec);
        a.push_back(scale * sh[k]);
    }
    return a;
}

}  // namespace

std::vector<Real> centered_scaled_moments(long n, int m_max, mpfr_prec_t prec, long exact_limit) {
    if (n < 2 || m_max < 1) throw std::domain_error("centered_scaled_moments: n >= 2, m >= 1");
    const bool exact = n <= exact_limit;
    std::vector<Rational> a_exact;
    if (exact) a_exact = raw_scaled_moments_exact(n, m_max);
    for (mpfr_prec_t wp = prec + 64;; wp *= 2) {
        std::vector<Real> a;
        if (exact) {
            a.reserve(m_max + 1);
            for (const Rational& q : a_exact) a.push_back(Real::of(q, wp));
        } else {
            a = raw_scaled_moments_real(n, m_max, wp);
        }
        const Real neg_log_n = -log(Real::of(static_cast<unsigned long>(n), wp));
        std::vector<Real> out;
        out.reserve(m_max + 1);
        out.push_back(Real::of(1L, wp).to_precision(prec));
        bool precise_enough = true;
        for (int m = 1; m <= m_max; ++m) {
            std::vector<Real> terms;
            terms.reserve(m + 1);
            mpfr_exp_t max_exp = MPFR_EMIN_DEFAULT;
            for (int k = 0; k <= m; ++k) {
                Real t = Real::of(binomial(m, k), wp) * a[k] * pow_ui(neg_log_n, m - k);
                if (!t.is_zero()) max_exp = std::max(max_exp, t.exponent2());
                terms.push_back(std::move(t));
            }
            Real sum = compensated_sum(terms, wp);
            if (sum.is_zero() ||
                max_exp - sum.exponent2() > static_cast<mpfr_exp_t>(wp - prec - 16)) {
                precise_enough = false;
                break;
            }
            out.push_back(sum.to_precision(prec));
        }
        if (precise_enough) return out;
        if (wp > (mpfr_prec_t{1} << 20))
            throw std::runtime_error("centered_scaled_moments: precision escalation exhausted");
    }
}

Real centered_scaled_moment(long n, int m, mpfr_prec_t prec, long exact_limit) {
    return centered_scaled_moments(n, m, prec, exact_limit)[m];
}

std::vector<Real> centered_scaled_cumulants(long n, int m_max, mpfr_prec_t prec,
                                            long exact_limit) {
    if (m_max > 12) throw std::domain_error("centered_scaled_cumulants: m_max <= 12");
    std::vector<Real> mu = centered_scaled_moments(n, m_max, prec + 32, exact_limit);
    mu.erase(mu.begin());  // drop mu'_0
    std::vector<Real> kappa = moments_to_cumulants(std::span<const Real>(mu));
    for (Real& k : kappa) k = k.to_precision(prec);
    return kappa;
}

Real gumbel_cdf(const Real& x) {
    return exp(-exp(-x));
}

double gumbel_cdf(double x) {
    return std::exp(-std::exp(-x));
}

GumbelQuadrature gumbel_moment_quadrature(int m, mpfr_prec_t prec) {
    if (m < 1 || m > 12) throw std::domain_error("gumbel_moment_quadrature: 1 <= m <= 12");
    const mpfr_prec_t wp = prec + 32;
    const Real tol = Real::pow2(8 - static_cast<long>(prec), wp);
    double lo = -4.0, hi = 48.0;
    for (int attempt = 0; attempt < 8; ++attempt) {
        // tails: |x|^m e^{-e^{-x}} e^{-x} below lo (double-exponential),
        //        x^m e^{-x} above hi (Gamma(m+1, hi) <= 2 hi^m e^{-hi} for hi >= 2m)
        const double tail_hi = 2.0 * std::exp(m * std::log(hi) - hi);
        const double tail_lo = std::exp(std::abs(lo) + m * std::log(std::abs(lo) + 1.0) -
                                        std::exp(std::abs(lo)));
        if (tail_hi + tail_lo > tol.to_double() * 0.5) {
            lo -= 2.0;
            hi *= 1.5;
            continue;
        }
        auto integrand = [&](const Real& x) {
            const Real density = exp(-x - exp(-x));
            Real xm = pow_ui(x, static_cast<unsigned long>(m));
            return xm * density;
        };
        AdaptiveResult r = integrate_adaptive(integrand, Real::of(lo, wp), Real::of(hi, wp), tol,
                                              wp, 24);
        GumbelQuadrature out;
        out.value = r.value.to_precision(prec);
        out.error_bound = (r.error_bound + Real::of(tail_hi + tail_lo, wp)).to_precision(prec);
        out.converged = r.converged;
        return out;
    }
    throw std::runtime_error("gumbel_moment_quadrature: tail bound not met");
}

std::vector<DeterminacyRow> determinacy_check(int m_max, mpfr_prec_t prec) {
    if (m_max < 1 || m_max > 15) throw std::domain_error("determinacy_check: 1 <= m_max <= 15");
    std::vector<Real> mu = limit_moments(2 * m_max, prec);
    const Real c = sqrt(zeta_int(2, prec)) * 2;
    std::vector<DeterminacyRow> rows;
    rows.reserve(m_max);
    for (int m = 1; m <= m_max; ++m) {
        const long mm = 2 * m;
        const Real inv = Real::of(1L, prec) / mm;
        Real value = pow(mu[mm], inv) / mm;
        Real bound_inner = exp(c * sqrt(Real::of(mm, prec))) *
                           Real::of(factorial(static_cast<unsigned long>(mm)), prec) *
                           Real::pow2(mm, prec);
        Real bound = pow(bound_inner, inv) / mm;
        rows.push_back(DeterminacyRow{m, value, bound, value <= bound});
    }
    return rows;
}

double determinacy_bound_tail(double m) {
    const double mm = 2.0 * m;
    const double c = 2.0 * std::sqrt(1.6449340668482264);  // 2 sqrt(zeta(2))
    const double log_inner = c * std::sqrt(mm) + std::lgamma(mm + 1.0) + mm * std::log(2.0);
    return std::exp(log_inner / mm) / mm;
}

std::vector<ConvergenceRow> convergence_table(std::span<const long> ns, int m_max,
                                              mpfr_prec_t prec, long exact_limit) {
    if (ns.empty()) throw std::domain_error("convergence_table: at least one n required");
    std::vector<Real> mu_limit = limit_moments(m_max, prec);
    std::vector<Real> kappa_limit;
    kappa_limit.reserve(m_max);
    for (int m = 1; m <= m_max; ++m) kappa_limit.push_back(limit_cumulant(m, prec));
    std::vector<ConvergenceRow> rows;
    for (long n : ns) {
        if (n < 2) throw std::domain_error("convergence_table: each n must be >= 2");
        std::vector<Real> mu = centered_scaled_moments(n, m_max, prec, exact_limit);
        std::vector<Real> mu_tail(mu.begin() + 1, mu.end());
        std::vector<Real> kappa = moments_to_cumulants(std::span<const Real>(mu_tail));
        for (int m = 1; m <= m_max; ++m) {
            ConvergenceRow row{n, m, mu[m], mu_limit[m], abs(mu[m] - mu_limit[m]),
                               abs(kappa[m - 1] - kappa_limit[m - 1])};
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

Real scaled_moment_ratio(long n, int m, mpfr_prec_t prec, long exact_limit) {
    if (n < 2 || m < 1) throw std::domain_error("scaled_moment_ratio: n >= 2 and m >= 1");
    const mpfr_prec_t wp = prec + 32;
    Real raw(wp);
    if (n <= exact_limit) {
        raw = Real::of(raw_scaled_moments_exact(n, m)[m], wp);
    } else {
        raw = raw_scaled_moments_real(n, m, wp)[m];
    }
    // E[((n/log n) d_max)^m] = E[(n d_max)^m] / (log n)^m
    return (raw / pow_ui(log(Real::of(static_cast<unsigned long>(n), wp)), m)).to_precision(prec);
}

}  // namespace spacings
