#include "spacings/combinatorics.hpp"

#include <stdexcept>

namespace spacings {

unsigned PartitionVector::weight_sum() const {
    unsigned s = 0;
    for (unsigned i = 0; i < multiplicities.size(); ++i) s += (i + 1) * multiplicities[i];
    return s;
}

namespace {

// Fill parts >= `part` of a remaining budget, descending-lex in multiplicities.
void emit_partitions(unsigned remaining, unsigned part, unsigned s, std::vector<unsigned>& current,
                     std::vector<PartitionVector>& out) {
    if (remaining == 0) {
        out.push_back(PartitionVector{current});
        return;
    }
    if (part > remaining) return;
    for (unsigned r = remaining / part; /* down to 0 */; --r) {
        current[part - 1] = r;
        emit_partitions(remaining - r * part, part + 1, s, current, out);
        current[part - 1] = 0;
        if (r == 0) break;
    }
}

}  // namespace

std::vector<PartitionVector> partitions(unsigned s) {
    if (s == 0 || s > 64) throw std::domain_error("partitions: s must be in [1, 64]");
    std::vector<PartitionVector> out;
    std::vector<unsigned> current(s, 0);
    emit_partitions(s, 1, s, current, out);
    return out;
}

BigInt partition_count(unsigned s) {
    std::vector<BigInt> p(s + 1);
    p[0] = 1;
    for (unsigned n = 1; n <= s; ++n) {
        BigInt acc(0);
        for (unsigned k = 1;; ++k) {
            const unsigned long g1 = static_cast<unsigned long>(k) * (3UL * k - 1) / 2;
            const unsigned long g2 = static_cast<unsigned long>(k) * (3UL * k + 1) / 2;
            if (g1 > n) break;
            const int sign = (k % 2 == 1) ? 1 : -1;
            if (sign > 0)
                acc += p[n - g1];
            else
                acc -= p[n - g1];
            if (g2 <= n) {
                if (sign > 0)
                    acc += p[n - g2];
                else
                    acc -= p[n - g2];
            }
        }
        p[n] = acc;
    }
    return p[s];
}

Rational partition_weight(unsigned m, const PartitionVector& r) {
    if (!r.is_partition_of(m)) throw std::invalid_argument("partition_weight: r is not a partition of m");
    Rational w(factorial(m));
    for (unsigned i = 1; i <= m; ++i) {
        const unsigned ri = r.multiplicities[i - 1];
        if (ri == 0) continue;
        w /= Rational(factorial(ri) * pow_bigint(BigInt(i), ri));
    }
    return w;
}

Rational verify_identity_1(long n) {
    if (n < 1) throw std::domain_error("verify_identity_1: n >= 1 required");
    Rational lhs(0);
    for (long k = 1; k <= n; ++k) {
        Rational term(binomial(n, k) * k, BigInt(n + 1 - k));
        term.canonicalize();
        if (k % 2 == 0) term = -term;
        lhs += term;
    }
    const Rational rhs(n % 2 == 0 ? -1 : 1);
    return lhs - rhs;
}

Rational verify_identity_2(long n, long s) {
    if (n < 1) throw std::domain_error("verify_identity_2: n >= 1 required");
    if (s < 0 || s >= n)
        throw std::domain_error("verify_identity_2: identity requires 0 <= s <= n-1");
    // s = 0 needs the k = 0 term under the 0^0 = 1 convention (the sum is the
    // s-th finite difference of a degree-<n monomial); for s >= 1 that term
    // vanishes and the sum effectively starts at k = 1.
    Rational lhs(0);
    for (long k = (s == 0 ? 0 : 1); k <= n; ++k) {
        BigInt term = pow_bigint(BigInt(k), static_cast<unsigned long>(s)) * binomial(n, k);
        if (k % 2 == 0) term = -term;
        lhs += Rational(term);
    }
    return lhs;
}

Rational verify_identity_3(long n, long m, long s) {
    if (n < 1 || m < 1 || s < 1 || s > m)
        throw std::domain_error("verify_identity_3: need n,m >= 1 and 1 <= s <= m");
    Rational lhs(0);
    for (long mu = s; mu <= m; ++mu) {
        Rational term(binomial(n + mu - 1, mu - s),
                      factorial(m - mu) * factorial(n + mu - 1));
        term.canonicalize();
        if (mu % 2 != 0) term = -term;
        lhs += term;
    }
    Rational rhs(0);
    if (s == m) {
        rhs = Rational(1, factorial(n + m - 1));
        rhs.canonicalize();
        if (m % 2 != 0) rhs = -rhs;
    }
    return lhs - rhs;
}

}  // namespace spacings
