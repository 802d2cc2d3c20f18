#pragma once

#include <span>
#include <vector>

#include "spacings/combinatorics.hpp"
#include "spacings/rational.hpp"
#include "spacings/real.hpp"

namespace spacings {

// Scalar construction helpers so the transforms below run unchanged over
// exact rationals and arbitrary-precision reals.
inline Rational scalar_from(const BigInt& z, const Rational&) { return Rational(z); }
inline Real scalar_from(const BigInt& z, const Real& like) { return Real::of(z, like.precision()); }
inline Rational scalar_one(const Rational&) { return Rational(1); }
inline Real scalar_one(const Real& like) { return Real::of(1L, like.precision()); }

// Coefficients mu'_j = j! [y^j] exp(sum_r x_r y^r / r) for j = 0..m, from
// x = (x_1, ..., x_m), via the convolution recurrence
//   mu'_j = sum_{r=1}^{j} (j-1)!/(j-r)! x_r mu'_{j-r},  mu'_0 = 1.
// Equals the partition sum  sum_{r |- j} partition_weight(j, r) prod x_i^{r_i}.
template <class T>
std::vector<T> exp_series_coeffs(std::span<const T> x) {
    const std::size_t m = x.size();
    if (m == 0) return {};
    std::vector<T> mu;
    mu.reserve(m + 1);
    mu.push_back(scalar_one(x[0]));
    for (std::size_t j = 1; j <= m; ++j) {
        T acc = scalar_from(BigInt(0), x[0]);
        for (std::size_t r = 1; r <= j; ++r) {
            // (j-1)! / (j-r)! = (j-r+1)(j-r+2)...(j-1)
            BigInt coeff(1);
            for (std::size_t t = j - r + 1; t < j; ++t) coeff *= static_cast<unsigned long>(t);
            acc += scalar_from(coeff, x[0]) * x[r - 1] * mu[j - r];
        }
        mu.push_back(acc);
    }
    return mu;
}

// Raw moments mu'_1..mu'_m (mu'_0 = 1 implied) to cumulants kappa_1..kappa_m:
//   kappa_m = mu'_m - sum_{j=1}^{m-1} C(m-1, j-1) kappa_j mu'_{m-j}.
template <class T>
std::vector<T> moments_to_cumulants(std::span<const T> mu) {
    const std::size_t m = mu.size();
    std::vector<T> kappa;
    kappa.reserve(m);
    for (std::size_t i = 1; i <= m; ++i) {
        T acc = mu[i - 1];
        for (std::size_t j = 1; j < i; ++j)
            acc -= scalar_from(binomial(i - 1, static_cast<long>(j - 1)), mu[0]) * kappa[j - 1] *
                   mu[i - j - 1];
        kappa.push_back(acc);
    }
    return kappa;
}

// Exact inverse of moments_to_cumulants.
template <class T>
std::vector<T> cumulants_to_moments(std::span<const T> kappa) {
    const std::size_t m = kappa.size();
    std::vector<T> mu;
    mu.reserve(m);
    for (std::size_t i = 1; i <= m; ++i) {
        T acc = kappa[i - 1];
        for (std::size_t j = 1; j < i; ++j)
            acc += scalar_from(binomial(i - 1, static_cast<long>(j - 1)), kappa[0]) *
                   kappa[j - 1] * mu[i - j - 1];
        mu.push_back(acc);
    }
    return mu;
}

// Partition-sum form of exp_series_coeffs, used as the independent oracle:
//   mu'_m = sum over partitions r of m of partition_weight(m, r) prod_i x_i^{r_i}.
template <class T>
T exp_series_coeff_partition_sum(std::span<const T> x, unsigned m) {
    T acc = scalar_from(BigInt(0), x[0]);
    for (const PartitionVector& r : partitions(m)) {
        const Rational w = partition_weight(m, r);
        T term = scalar_from(w.get_num(), x[0]);
        term = term / scalar_from(w.get_den(), x[0]);
        for (unsigned i = 1; i <= m; ++i) {
            for (unsigned c = 0; c < r.multiplicities[i - 1]; ++c) term = term * x[i - 1];
        }
        acc += term;
    }
    return acc;
}

}  // namespace spacings
