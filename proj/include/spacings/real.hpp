#pragma once

#include <mpfr.h>

#include <span>
#include <string>
#include <utility>

#include "spacings/rational.hpp"

namespace spacings {

// Radix-2 floating value with an explicit working precision. Every operation
// rounds to nearest at the precision of its destination; binary operators
// produce results at the wider of the two operand precisions. Values are
// immutable from the caller's point of view once computed and are safe to
// share across threads.
class Real {
  public:
    static constexpr mpfr_prec_t kMinPrec = 64;
    static constexpr mpfr_prec_t kDefaultPrec = 256;

    Real() : Real(kMinPrec) {}
    explicit Real(mpfr_prec_t prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));  // rebind precision, then copy exactly
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    static Real of(double x, mpfr_prec_t prec);
    static Real of(long x, mpfr_prec_t prec);
    static Real of(unsigned long x, mpfr_prec_t prec);
    static Real of(const BigInt& z, mpfr_prec_t prec);
    // correctly rounded at `prec`
    static Real of(const Rational& q, mpfr_prec_t prec);
    static Real parse(const std::string& s, mpfr_prec_t prec);
    static Real pi(mpfr_prec_t prec);
    static Real nan(mpfr_prec_t prec);
    static Real pow2(long e, mpfr_prec_t prec);  // exact 2^e

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    Real to_precision(mpfr_prec_t prec) const;

    bool is_zero() const { return mpfr_zero_p(v_); }
    bool is_nan() const { return mpfr_nan_p(v_); }
    int sign() const { return mpfr_sgn(v_); }
    // binary exponent of the magnitude; only meaningful for nonzero values
    mpfr_exp_t exponent2() const { return mpfr_get_exp(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // scientific decimal; digits <= 0 means "as many as the precision carries"
    std::string str(int digits = 0) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
    friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
    friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
    friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }
    friend Real operator-(const Real& a) {
        Real r(a.precision());
        mpfr_neg(r.v_, a.v_, MPFR_RNDN);
        return r;
    }
    Real& operator+=(const Real& b) { return *this = *this + b; }
    Real& operator-=(const Real& b) { return *this = *this - b; }
    Real& operator*=(const Real& b) { return *this = *this * b; }
    Real& operator/=(const Real& b) { return *this = *this / b; }
    Real& operator*=(long b) { return *this = *this * b; }
    Real& operator/=(long b) { return *this = *this / b; }

    friend Real operator*(const Real& a, long b) {
        Real r(a.precision());
        mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, long b) {
        Real r(a.precision());
        mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator+(const Real& a, long b) {
        Real r(a.precision());
        mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, long b) {
        Real r(a.precision());
        mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
        return r;
    }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }

  private:
    static mpfr_prec_t clamp(mpfr_prec_t p) { return p < kMinPrec ? kMinPrec : p; }
    using BinFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);
    static Real binop(const Real& a, const Real& b, BinFn fn) {
        Real r(std::max(a.precision(), b.precision()));
        fn(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    mpfr_t v_;
};

Real abs(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real sqrt(const Real& x);
Real pow_ui(const Real& x, unsigned long e);
Real pow(const Real& x, const Real& y);

// Correctly rounded sum of the whole sequence at `prec`: the result equals
// the mathematically exact sum rounded once, regardless of cancellation or
// sequence length. Empty input gives zero.
Real compensated_sum(std::span<const Real> xs, mpfr_prec_t prec);

}  // namespace spacings
