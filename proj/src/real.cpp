#include "spacings/real.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace spacings {

Real Real::of(double x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
}

Real Real::of(long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
}

Real Real::of(unsigned long x, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui(r.v_, x, MPFR_RNDN);
    return r;
}

Real Real::of(const BigInt& z, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_z(r.v_, z.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real Real::of(const Rational& q, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    return r;
}

Real Real::parse(const std::string& s, mpfr_prec_t prec) {
    Real r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("Real::parse: cannot parse '" + s + "'");
    return r;
}

Real Real::pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::nan(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_nan(r.v_);
    return r;
}

Real Real::pow2(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
}

Real Real::to_precision(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string Real::str(int digits) const {
    if (digits <= 0)
        digits = std::max<int>(2, static_cast<int>(static_cast<double>(precision()) * 0.30103));
    char* out = nullptr;
    mpfr_asprintf(&out, "%.*Re", digits - 1, v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
}

namespace {
using UnFn = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);
Real unop(const Real& x, UnFn fn) {
    Real r(x.precision());
    fn(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}
}  // namespace

Real abs(const Real& x) { return unop(x, mpfr_abs); }
Real log(const Real& x) { return unop(x, mpfr_log); }
Real log1p(const Real& x) { return unop(x, mpfr_log1p); }
Real exp(const Real& x) { return unop(x, mpfr_exp); }
Real expm1(const Real& x) { return unop(x, mpfr_expm1); }
Real sqrt(const Real& x) { return unop(x, mpfr_sqrt); }

Real pow_ui(const Real& x, unsigned long e) {
    Real r(x.precision());
    mpfr_pow_ui(r.raw(), x.raw(), e, MPFR_RNDN);
    return r;
}

Real pow(const Real& x, const Real& y) {
    Real r(std::max(x.precision(), y.precision()));
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real compensated_sum(std::span<const Real> xs, mpfr_prec_t prec) {
    Real r(prec);
    if (xs.empty()) return r;
    std::vector<mpfr_srcptr> ptrs;
    ptrs.reserve(xs.size());
    for (const Real& x : xs) ptrs.push_back(x.raw());
    // mpfr_sum rounds the exact sum of the array once
    mpfr_sum(r.raw(), const_cast<mpfr_ptr*>(ptrs.data()), static_cast<unsigned long>(ptrs.size()),
             MPFR_RNDN);
    return r;
}

}  // namespace spacings
