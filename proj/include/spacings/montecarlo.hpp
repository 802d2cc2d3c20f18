#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spacings/rng.hpp"

namespace spacings {

// One simulated circular gap configuration.
struct SpacingSample {
    long n = 0;
    std::vector<double> gaps;  // d_1..d_n, summing to one
    double d_max = 0.0;
    double d_min = 0.0;
    std::optional<std::vector<double>> sorted_gaps;  // descending, on request

    // fills (and returns) the descending order statistics of the gaps
    const std::vector<double>& sort_gaps();
};

enum class Sampler {
    kSort,    // n-1 sorted uniforms plus the wrap-around gap
    kExpGap,  // normalized unit exponentials (Dirichlet(1,...,1) construction)
};

Sampler sampler_from_name(const std::string& name);
std::string sampler_name(Sampler s);

// Rotates the circle so one point sits at the origin, sorts the remaining
// n-1 uniforms, and returns the n circular gaps.
SpacingSample sample_spacings_sort(long n, RngStream& stream);

// d_i = E_i / sum(E): exponentials normalized by their total.
SpacingSample sample_spacings_expgap(long n, RngStream& stream);

struct SimulateOptions {
    long n = 2;
    std::uint64_t trials = 100000;
    std::uint64_t seed = 0;
    int workers = 1;
    int max_moment = 4;           // <= 8
    Sampler sampler = Sampler::kSort;
    int bins = 50;                // histogram of n*d_max - log n
    double range_lo = -4.0;
    double range_hi = 12.0;
    bool with_ks = true;          // KS statistic vs the exact CDF
    std::uint64_t ks_sample_cap = std::uint64_t{1} << 24;  // stride-subsample beyond this
    bool keep_samples = false;    // retain all d_max draws in the summary
};

struct SimulationSummary {
    long n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    int workers = 0;
    int max_moment = 0;
    std::string sampler;
    std::vector<double> moments;  // raw moments of d_max, orders 1..max_moment
    double dmax_mean = 0.0;
    double dmax_var = 0.0;   // unbiased sample variance
    double dmin_mean = 0.0;
    double ks_stat = 0.0;    // sup |F_emp - F_exact| at the retained samples
    double ks_scaled = 0.0;  // ks_stat * sqrt(retained sample count)
    std::uint64_t ks_samples = 0;
    std::vector<double> hist_edges;        // bins + 1 edges
    std::vector<std::uint64_t> hist_counts;  // out-of-range mass clamped to edge bins
    std::vector<double> dmax_samples;      // only when keep_samples was set
};

// Deterministic parallel simulation: trials are pre-partitioned into
// fixed-size chunks, chunk index = stream id, chunks dealt round-robin to
// workers, partial results merged in chunk order. The summary is therefore a
// pure function of (n, trials, seed, max_moment, sampler, histogram shape);
// the worker count changes scheduling only.
SimulationSummary simulate(const SimulateOptions& opts);

// sup_x |F_empirical(x) - reference(x)| over the sample points (both
// one-sided sups). `samples` need not be sorted.
double ks_statistic(std::vector<double> samples, long n);

// Two-sample KS distance between two empirical samples.
double ks_two_sample(std::vector<double> a, std::vector<double> b);

struct MinGapRow {
    double t;
    double empirical_survival;  // of n^2 d_min
    double exact_survival;      // (1 - nt/n^2)^{n-1}
    double limit_survival;      // e^{-t}
    std::uint64_t exceed_count;
};
std::vector<MinGapRow> min_gap_limit_test(long n, std::uint64_t trials, std::uint64_t seed,
                                          int workers = 1);

struct KthGapResult {
    long n = 0;
    long k = 0;
    double empirical_mean = 0.0;
    double exact_mean = 0.0;
    double std_error = 0.0;
    double z_score = 0.0;
};
KthGapResult kth_gap_mean_test(long n, long k, std::uint64_t trials, std::uint64_t seed,
                               int workers = 1);

}  // namespace spacings
