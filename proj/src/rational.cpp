#include "spacings/rational.hpp"

#include <mpfr.h>

#include <cstdio>
#include <memory>
#include <stdexcept>

namespace spacings {

BigInt factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(unsigned long n, long k) {
    if (k < 0 || static_cast<unsigned long>(k) > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    const bool invert = e < 0;
    const unsigned long a = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (invert && base == 0) throw std::domain_error("pow_rational: 0 raised to a negative power");
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), a);
    // numerator/denominator of a canonical input stay coprime under powers
    if (invert) {
        if (r == 0) throw std::domain_error("pow_rational: zero inverse");
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
    }
    if (mpz_sgn(r.get_den_mpz_t()) < 0) {
        mpz_neg(r.get_num_mpz_t(), r.get_num_mpz_t());
        mpz_neg(r.get_den_mpz_t(), r.get_den_mpz_t());
    }
    return r;
}

BigInt pow_bigint(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string to_string(const BigInt& z) {
    return z.get_str();
}

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_rational: empty string");
    const auto dot = s.find('.');
    if (dot == std::string::npos) {
        Rational q;
        if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("parse_rational: cannot parse '" + s + "'");
        if (mpz_sgn(q.get_den_mpz_t()) == 0)
            throw std::invalid_argument("parse_rational: zero denominator in '" + s + "'");
        q.canonicalize();
        return q;
    }
    // decimal form: sign? digits '.' digits
    const std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
    if (tail.find_first_not_of("0123456789") != std::string::npos || tail.empty())
        throw std::invalid_argument("parse_rational: cannot parse '" + s + "'");
    const bool neg = !head.empty() && head[0] == '-';
    const std::string ipart = neg || (!head.empty() && head[0] == '+') ? head.substr(1) : head;
    if (ipart.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("parse_rational: cannot parse '" + s + "'");
    BigInt num(ipart.empty() ? "0" : ipart);
    BigInt scale = pow_bigint(BigInt(10), tail.size());
    num *= scale;
    num += BigInt(tail);
    Rational q(num, scale);
    q.canonicalize();
    if (neg) q = -q;
    return q;
}

std::string to_decimal_string(const Rational& q, int digits) {
    if (digits < 1) digits = 1;
    mpfr_t t;
    mpfr_init2(t, static_cast<mpfr_prec_t>(digits * 4 + 64));
    mpfr_set_q(t, q.get_mpq_t(), MPFR_RNDN);
    char* out = nullptr;
    mpfr_asprintf(&out, "%.*Rg", digits, t);
    std::string r(out);
    mpfr_free_str(out);
    mpfr_clear(t);
    return r;
}

}  // namespace spacings
