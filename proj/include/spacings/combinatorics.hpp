#pragma once

#include <vector>

#include "spacings/rational.hpp"

namespace spacings {

// Integer partition of s encoded by part multiplicities: multiplicities[i-1]
// is the number of parts equal to i, so sum_i i * multiplicities[i-1] == s.
struct PartitionVector {
    std::vector<unsigned> multiplicities;

    unsigned size() const { return static_cast<unsigned>(multiplicities.size()); }
    unsigned weight_sum() const;  // sum_i i * r_i
    bool is_partition_of(unsigned s) const { return size() == s && weight_sum() == s; }
};

// All partitions of s as multiplicity vectors, in descending lexicographic
// order of (r_1, ..., r_s): s=3 gives (3,0,0), (1,1,0), (0,0,1).
// Enumeration is bounded at s <= 64; larger s throws std::domain_error.
std::vector<PartitionVector> partitions(unsigned s);

// p(s) by the Euler pentagonal-number recurrence; p(0) = 1.
BigInt partition_count(unsigned s);

// m! / (r_1! 1^{r_1} ... r_m! m^{r_m}), the number of permutations of m
// elements whose cycle type is r. Throws if r is not a partition of m.
Rational partition_weight(unsigned m, const PartitionVector& r);

// Exact residual (LHS - RHS) of sum_{k=1}^n C(n,k)(-1)^{k+1} k/(n+1-k) = (-1)^{n+1}.
Rational verify_identity_1(long n);

// Exact residual of sum_{k=1}^n k^s (-1)^{k+1} C(n,k) = 0, valid for 0 <= s <= n-1.
// Throws std::domain_error for s >= n, where the identity fails.
Rational verify_identity_2(long n, long s);

// Exact residual of
//   sum_{mu=s}^m (-1)^mu / ((m-mu)!(n+mu-1)!) * C(n+mu-1, mu-s)
//     = delta_{s,m} (-1)^m / (n+m-1)!
// for 1 <= s <= m.
Rational verify_identity_3(long n, long m, long s);

}  // namespace spacings
