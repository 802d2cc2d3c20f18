#include "spacings/harmonic.hpp"

#include <stdexcept>

#include "spacings/combinatorics.hpp"

namespace spacings {

namespace {

// Balanced pairwise reduction keeps intermediate denominators small compared
// with a left fold over thousands of terms.
Rational tree_sum(std::vector<Rational>& terms, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return terms[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return tree_sum(terms, lo, mid) + tree_sum(terms, mid, hi);
}

}  // namespace

Rational harmonic(long n, int r) {
    if (n < 1 || r < 1) throw std::domain_error("harmonic: n >= 1 and r >= 1 required");
    std::vector<Rational> terms;
    terms.reserve(n);
    for (long j = 1; j <= n; ++j) {
        Rational t(BigInt(1), pow_bigint(BigInt(j), static_cast<unsigned long>(r)));
        terms.push_back(std::move(t));
    }
    return tree_sum(terms, 0, terms.size());
}

Real harmonic_real(long n, int r, mpfr_prec_t prec) {
    if (n < 1 || r < 1) throw std::domain_error("harmonic_real: n >= 1 and r >= 1 required");
    const mpfr_prec_t wp = prec + 40;
    Real acc(wp);
    Real term(wp);
    for (long j = n; j >= 1; --j) {  // ascending magnitude keeps the fold tight
        mpfr_ui_pow_ui(term.raw(), static_cast<unsigned long>(j), static_cast<unsigned long>(r),
                       MPFR_RNDN);
        mpfr_ui_div(term.raw(), 1UL, term.raw(), MPFR_RNDN);
        mpfr_add(acc.raw(), acc.raw(), term.raw(), MPFR_RNDN);
    }
    return acc.to_precision(prec);
}

HarmonicTable::HarmonicTable(long n, int max_order) : n_(n) {
    if (n < 1 || max_order < 1)
        throw std::domain_error("HarmonicTable: n >= 1 and max_order >= 1 required");
    values_.reserve(max_order);
    for (int r = 1; r <= max_order; ++r) values_.push_back(harmonic(n, r));
}

const Rational& HarmonicTable::operator()(int r) const {
    if (r < 1 || r > max_order()) throw std::out_of_range("HarmonicTable: order out of range");
    return values_[r - 1];
}

Rational script_h_partition(long n, int s) {
    if (n < 1 || s < 1 || s > 30)
        throw std::domain_error("script_h_partition: n >= 1 and 1 <= s <= 30 required");
    HarmonicTable table(n, s);
    Rational acc(0);
    for (const PartitionVector& r : partitions(static_cast<unsigned>(s))) {
        Rational term(1);
        for (int i = 1; i <= s; ++i) {
            const unsigned ri = r.multiplicities[i - 1];
            if (ri == 0) continue;
            term *= pow_rational(table(i), ri);
            term /= Rational(factorial(ri) * pow_bigint(BigInt(i), ri));
        }
        acc += term;
    }
    return acc;
}

Rational script_h_alternating(long n, int s) {
    if (n < 1 || s < 1) throw std::domain_error("script_h_alternating: n >= 1 and s >= 1 required");
    std::vector<Rational> terms;
    terms.reserve(n);
    for (long k = 1; k <= n; ++k) {
        Rational t(binomial(n, k), pow_bigint(BigInt(k), static_cast<unsigned long>(s)));
        t.canonicalize();
        if (k % 2 == 0) t = -t;
        terms.push_back(std::move(t));
    }
    return tree_sum(terms, 0, terms.size());
}

std::vector<Rational> script_h_all(const HarmonicTable& table, int s_max) {
    std::vector<Rational> h;
    h.reserve(s_max + 1);
    h.emplace_back(1);
    for (int s = 1; s <= s_max; ++s) {
        Rational acc(0);
        for (int r = 1; r <= s; ++r) acc += table(r) * h[s - r];
        acc /= Rational(s);
        h.push_back(std::move(acc));
    }
    return h;
}

Rational script_h_recurrence(long n, int s) {
    if (n < 1 || s < 1) throw std::domain_error("script_h_recurrence: n >= 1 and s >= 1 required");
    HarmonicTable table(n, s);
    return script_h_all(table, s)[s];
}

std::vector<Real> script_h_all_real(const std::vector<Real>& h_values, int s_max,
                                    mpfr_prec_t prec) {
    if (static_cast<int>(h_values.size()) < s_max)
        throw std::invalid_argument("script_h_all_real: need harmonic values up to order s_max");
    std::vector<Real> h;
    h.reserve(s_max + 1);
    h.push_back(Real::of(1L, prec));
    for (int s = 1; s <= s_max; ++s) {
        Real acc(prec);
        for (int r = 1; r <= s; ++r) acc += h_values[r - 1] * h[s - r];
        h.push_back(acc / static_cast<long>(s));
    }
    return h;
}

}  // namespace spacings
