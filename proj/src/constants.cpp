#include <cmath>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "spacings/asymptotics.hpp"
#include "spacings/combinatorics.hpp"

namespace spacings {

namespace {
std::vector<Rational>& bernoulli_cache() {
    static std::vector<Rational> cache;  // cache[j] = B_j, even j only populated
    return cache;
}
std::mutex bernoulli_mutex;
}  // namespace

Rational bernoulli_even(unsigned k) {
    std::lock_guard<std::mutex> lock(bernoulli_mutex);
    auto& b = bernoulli_cache();
    const unsigned target = 2 * k;
    if (b.size() > target) return b[target];
    if (b.empty()) {
        b.emplace_back(1);         // B_0
        b.emplace_back(-1, 2);     // B_1
    }
    // B_m = -1/(m+1) sum_{j=0}^{m-1} C(m+1, j) B_j
    for (unsigned m = static_cast<unsigned>(b.size()); m <= target; ++m) {
        if (m % 2 == 1) {
            b.emplace_back(0);
            continue;
        }
        Rational acc(0);
        for (unsigned j = 0; j < m; ++j) {
            if (j > 1 && j % 2 == 1) continue;  // odd Bernoulli numbers vanish
            acc += Rational(binomial(m + 1, static_cast<long>(j))) * b[j];
        }
        acc /= Rational(m + 1);
        b.push_back(-acc);
    }
    return b[target];
}

namespace {

// Correction sum_{k>=1} B_{2k} * (prod of rising factors) * N^{-...} terms are
// added while they keep shrinking and stay above the 2^-(wp) noise floor.
struct EmParams {
    long log2_n;   // N = 2^log2_n
    unsigned max_terms;
};

EmParams em_params(mpfr_prec_t prec) {
    // N = 2^b balances the N-term partial sum against the number of
    // correction terms (roughly prec/(2b), valid while 2k << 2 pi N).
    long b = static_cast<long>(prec) / 24;
    if (b < 8) b = 8;
    if (b > 14) b = 14;
    return EmParams{b, static_cast<unsigned>(prec)};
}

}  // namespace

Real euler_gamma(mpfr_prec_t prec) {
    const mpfr_prec_t wp = prec + 64;
    const EmParams par = em_params(prec);
    const unsigned long n = 1UL << par.log2_n;
    // H_N at working precision
    Real h(wp), term(wp);
    for (unsigned long j = n; j >= 1; --j) {
        mpfr_ui_div(term.raw(), 1UL, Real::of(static_cast<unsigned long>(j), wp).raw(), MPFR_RNDN);
        mpfr_add(h.raw(), h.raw(), term.raw(), MPFR_RNDN);
    }
    Real g = h - log(Real::of(n, wp)) - Real::of(1L, wp) / Real::of(2 * n, wp);
    // + sum_k B_{2k} / (2k N^{2k}), signs carried by the Bernoulli numbers
    Real npow = Real::of(n, wp) * Real::of(n, wp);  // N^{2k}
    const Real n2 = npow;
    Real prev_mag = Real::nan(wp);
    for (unsigned k = 1; k <= par.max_terms; ++k) {
        Real t = Real::of(bernoulli_even(k), wp) / (npow * static_cast<long>(2 * k));
        const Real mag = abs(t);
        if (!prev_mag.is_nan() && mag > prev_mag) break;  // asymptotic series turned
        g += t;
        if (mag.is_zero() || mag.exponent2() < g.exponent2() - static_cast<mpfr_exp_t>(wp)) break;
        prev_mag = mag;
        npow *= n2;
    }
    return g.to_precision(prec);
}

Real zeta_int(unsigned s, mpfr_prec_t prec) {
    if (s < 2) throw std::domain_error("zeta_int: s >= 2 required");
    const mpfr_prec_t wp = prec + 64;
    const EmParams par = em_params(prec);
    const unsigned long n = 1UL << par.log2_n;
    // partial sum over j < N
    Real acc(wp), term(wp);
    for (unsigned long j = n - 1; j >= 1; --j) {
        mpfr_ui_pow_ui(term.raw(), j, s, MPFR_RNDN);
        mpfr_ui_div(term.raw(), 1UL, term.raw(), MPFR_RNDN);
        mpfr_add(acc.raw(), acc.raw(), term.raw(), MPFR_RNDN);
    }
    const Real nreal = Real::of(n, wp);
    const Real n_minus_s = Real::of(1L, wp) / pow_ui(nreal, s);  // N^-s
    acc += n_minus_s * nreal / static_cast<long>(s - 1);         // N^{1-s}/(s-1)
    acc += n_minus_s / 2;
    // + sum_k B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}
    const Real n2 = nreal * nreal;
    Real nfac = n_minus_s * nreal;  // becomes N^{-s-2k+1} after k divisions by N^2
    BigInt rising(1);
    Real prev_mag = Real::nan(wp);
    for (unsigned k = 1; k <= par.max_terms; ++k) {
        nfac /= n2;
        if (k == 1)
            rising = s;
        else
            rising *= BigInt(s + 2 * k - 3) * BigInt(s + 2 * k - 2);
        Rational coeff = bernoulli_even(k) * Rational(rising, factorial(2 * k));
        coeff.canonicalize();
        Real t = Real::of(coeff, wp) * nfac;
        const Real mag = abs(t);
        if (!prev_mag.is_nan() && mag > prev_mag) break;
        acc += t;
        if (mag.is_zero() || mag.exponent2() < acc.exponent2() - static_cast<mpfr_exp_t>(wp)) break;
        prev_mag = mag;
    }
    return acc.to_precision(prec);
}

}  // namespace spacings
