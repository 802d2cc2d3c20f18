#pragma once

#include "spacings/quadrature.hpp"
#include "spacings/rational.hpp"
#include "spacings/real.hpp"

namespace spacings {

// Exact finite-n law of the largest spacing d_max among n uniform points on a
// unit-perimeter circle. Support is [1/n, 1]; the distribution function is
//   P(d_max <= x) = sum_{k=0}^{min(n, floor(1/x))} (-1)^k C(n,k) (1 - kx)^{n-1}.

// Exact CDF at rational x in [0, 1]. Kink points x = 1/k are harmless: the
// boundary term vanishes there.
Rational cdf(long n, const Rational& x);

// Floating CDF with automatic precision escalation: works at a guard
// precision and doubles it until the alternating-sum cancellation leaves the
// requested number of good bits.
Real cdf_real(long n, const Real& x, mpfr_prec_t prec);

// Fast double-precision CDF with an absolute-error escape hatch: terms are
// evaluated in the log domain and summed with compensation; falls back to
// cdf_real if the running cancellation bound cannot certify ~1e-10 absolute
// accuracy. Intended for empirical-CDF comparisons over many sample points.
double cdf_estimate(long n, double x);

// Density (n-1) sum_{k=1}^{min(n, floor(1/x))} (-1)^{k+1} C(n,k) k (1-kx)^{n-2}
// on the open support 1/n < x < 1; zero outside. At kinks this evaluates the
// right-limit form.
Rational pdf(long n, const Rational& x);

// Inverse CDF by bisection on [1/n, 1]; |cdf(result) - p| <= tol.
// Throws std::runtime_error if 200 bisections cannot close the gap.
Real quantile(long n, const Real& p, const Real& tol, mpfr_prec_t prec);
double quantile_double(long n, double p, double tol = 1e-12);

// m-th moment of d_max, exactly: (n-1)! m! / (n+m-1)! * script_h(n, m).
Rational moment_exact(long n, int m);

// Same moment by adaptive quadrature of the two-level sum-of-integrals form
// (independent oracle): (n-1) sum_{nu=1}^{n-1} int_{1/(nu+1)}^{1/nu}
//   sum_{k=1}^{nu} C(n,k)(-1)^{k+1} k x^m (1-kx)^{n-2} dx.
struct MomentQuadrature {
    Real value;
    Real error_bound;
    bool converged = true;
};
MomentQuadrature moment_via_integration(long n, int m, mpfr_prec_t prec);

// Closed form of int_{1/(nu+1)}^{1/nu} x^m (1-kx)^{n-2} dx as a mu-sum of
// boundary terms; requires 1 <= k <= nu < n and m >= 1.
Rational integral_piece(long n, long k, long nu, int m);

// Telescoped nu-sum: sum_{nu=k}^{n-1} integral_piece(n,k,nu,m)
//   = sum_{mu=0}^m k^{-(mu+1)} m!(n-2)!/((m-mu)!(n+mu-1)!) (n-k)^{n+mu-1}/n^{n+m-1}.
Rational nu_sum_closed(long n, long k, int m);

// Mean of the k-th largest gap: (H_{n,1} - H_{k-1,1}) / n.
Rational kth_gap_mean(long n, long k);

// P(d_min > y) = (1 - ny)^{n-1} for 0 <= y <= 1/n, 0 beyond.
Rational min_gap_survival(long n, const Rational& y);

}  // namespace spacings
