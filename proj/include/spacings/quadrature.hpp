#pragma once

#include <functional>
#include <vector>

#include "spacings/real.hpp"

namespace spacings {

using RealFn = std::function<Real(const Real&)>;

// Gauss-Legendre nodes/weights on [-1, 1], computed at the requested
// precision by Newton iteration on the Legendre recurrence. Rules are cached
// per (points, precision); lookups are thread-safe.
struct GaussLegendreRule {
    std::vector<Real> nodes;
    std::vector<Real> weights;
};
const GaussLegendreRule& gauss_legendre(int points, mpfr_prec_t prec);

Real integrate_fixed(const RealFn& f, const Real& a, const Real& b,
                     const GaussLegendreRule& rule);

struct AdaptiveResult {
    Real value;
    Real error_bound;  // accumulated local estimates; an achieved bound, not a guess
    bool converged = true;
    long intervals = 0;
};

// Bisection-adaptive quadrature: an interval is accepted when the two-half
// refinement agrees with the single-panel estimate within its share of
// abs_tol. `points` is the panel order (exact for polynomials of degree
// 2*points - 1).
AdaptiveResult integrate_adaptive(const RealFn& f, const Real& a, const Real& b,
                                  const Real& abs_tol, mpfr_prec_t prec, int points = 16,
                                  int max_depth = 28);

}  // namespace spacings
