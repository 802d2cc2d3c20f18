#pragma once

#include <vector>

#include "spacings/rational.hpp"
#include "spacings/real.hpp"

namespace spacings {

// Exact generalized harmonic number H_{n,r} = sum_{j=1}^n j^{-r}.
Rational harmonic(long n, int r);

// H_{n,r} at working precision; relative error a few ulp (guard-digit
// accumulation). Large-n path where exact denominators blow up.
Real harmonic_real(long n, int r, mpfr_prec_t prec);

// Memoized H_{n,1..max_order} for one n. Immutable after construction.
class HarmonicTable {
  public:
    HarmonicTable(long n, int max_order);
    long n() const { return n_; }
    int max_order() const { return static_cast<int>(values_.size()); }
    const Rational& operator()(int r) const;  // r in [1, max_order]

  private:
    long n_;
    std::vector<Rational> values_;
};

// The partition-weighted harmonic quantity
//   script_h(n,s) = sum over partitions r of s of prod_i H_{n,i}^{r_i} / (r_i! i^{r_i})
// computed three independent ways -- all must agree exactly.

// Direct partition enumeration (oracle; s <= 30).
Rational script_h_partition(long n, int s);

// Alternating binomial form sum_{k=1}^n k^{-s} C(n,k) (-1)^{k+1} (oracle).
Rational script_h_alternating(long n, int s);

// Convolution recurrence s*h_s = sum_{r=1}^s H_{n,r} h_{s-r}, h_0 = 1.
// Production path, O(s^2) given the harmonic table.
Rational script_h_recurrence(long n, int s);

// All of script_h(n, 0..s_max) in one recurrence pass over the given table.
std::vector<Rational> script_h_all(const HarmonicTable& table, int s_max);

// Same recurrence over floating harmonic values (large-n path).
std::vector<Real> script_h_all_real(const std::vector<Real>& h_values, int s_max,
                                    mpfr_prec_t prec);

}  // namespace spacings
