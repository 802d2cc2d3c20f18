#pragma once

#include <span>
#include <vector>

#include "spacings/rational.hpp"
#include "spacings/real.hpp"

namespace spacings {

// Bernoulli number B_{2k} (B_0 = 1, B_2 = 1/6, ...), exact, memoized.
Rational bernoulli_even(unsigned k);

// Euler-Mascheroni constant via Euler-Maclaurin acceleration of H_N - log N,
// with N and the correction order chosen from the requested precision.
Real euler_gamma(mpfr_prec_t prec);

// zeta(s) for integer s >= 2: direct partial sum plus Euler-Maclaurin tail.
Real zeta_int(unsigned s, mpfr_prec_t prec);

// Limit cumulant of n*d_max - log n: gamma for m = 1, (m-1)! zeta(m) beyond.
Real limit_cumulant(int m, mpfr_prec_t prec);

// Limit moments mu_m = m! [y^m] exp(gamma y + sum_{r>=2} zeta(r) y^r / r),
// i.e. the raw moments of a standard Gumbel law.
Real limit_moment(int m, mpfr_prec_t prec);
std::vector<Real> limit_moments(int m_max, mpfr_prec_t prec);  // mu_0..mu_max

// E[(n d_max - log n)^m]: binomial expansion over exact raw moments for
// n <= exact_limit, floating harmonic path above; the only irrational factor
// (log n) enters once, at the end, under compensated summation with
// cancellation-driven precision escalation.
Real centered_scaled_moment(long n, int m, mpfr_prec_t prec, long exact_limit = 10000);
std::vector<Real> centered_scaled_moments(long n, int m_max, mpfr_prec_t prec,
                                          long exact_limit = 10000);

// Cumulants of n*d_max - log n via the moment transform.
std::vector<Real> centered_scaled_cumulants(long n, int m_max, mpfr_prec_t prec,
                                            long exact_limit = 10000);

Real gumbel_cdf(const Real& x);
double gumbel_cdf(double x);

// Raw Gumbel moment by adaptive quadrature of x^m exp(-x - e^-x) over a
// window with analytically bounded tails; widens the window and retries if
// the bound is not met.
struct GumbelQuadrature {
    Real value;
    Real error_bound;
    bool converged = true;
};
GumbelQuadrature gumbel_moment_quadrature(int m, mpfr_prec_t prec);

// Carleman-style determinacy diagnostic: mu_{2m}^{1/(2m)} / (2m) against the
// partition-count bound (exp(2 sqrt(zeta(2)) sqrt(2m)) (2m)! 2^{2m})^{1/(2m)} / (2m).
struct DeterminacyRow {
    int m;
    Real value;
    Real bound;
    bool holds;
};
std::vector<DeterminacyRow> determinacy_check(int m_max, mpfr_prec_t prec);

// The bound expression alone (no moments involved), usable for arbitrarily
// large m through lgamma; the sequence decreases to 2/e.
double determinacy_bound_tail(double m);

struct ConvergenceRow {
    long n;
    int m;
    Real centered_moment;
    Real limit_moment;
    Real abs_gap;
    Real cumulant_gap;
};
std::vector<ConvergenceRow> convergence_table(std::span<const long> ns, int m_max,
                                              mpfr_prec_t prec, long exact_limit = 10000);

// E[((n / log n) d_max)^m]; tends to one for every fixed m.
Real scaled_moment_ratio(long n, int m, mpfr_prec_t prec, long exact_limit = 10000);

}  // namespace spacings
