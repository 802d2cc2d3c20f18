#include "spacings/montecarlo.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

#include "spacings/exact_dist.hpp"

namespace spacings {

double RngStream::next_exponential() {
    return -std::log1p(-next_double());
}

const std::vector<double>& SpacingSample::sort_gaps() {
    if (!sorted_gaps) {
        std::vector<double> s = gaps;
        std::sort(s.begin(), s.end(), std::greater<double>());
        sorted_gaps = std::move(s);
    }
    return *sorted_gaps;
}

Sampler sampler_from_name(const std::string& name) {
    if (name == "sort") return Sampler::kSort;
    if (name == "expgap") return Sampler::kExpGap;
    throw std::invalid_argument("unknown sampler '" + name + "' (expected sort or expgap)");
}

std::string sampler_name(Sampler s) {
    return s == Sampler::kSort ? "sort" : "expgap";
}

namespace {

// Neumaier-compensated accumulator; merging two of them in a fixed order is
// itself deterministic, which keeps chunk merges worker-independent.
struct KahanSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double s = sum + x;
        comp += (std::abs(sum) >= std::abs(x)) ? (sum - s) + x : (x - s) + sum;
        sum = s;
    }
    void merge(const KahanSum& o) {
        add(o.sum);
        add(o.comp);
    }
    double total() const { return sum + comp; }
};

struct ChunkPlan {
    std::uint64_t chunk_size;
    std::uint64_t n_chunks;
};

ChunkPlan plan_chunks(std::uint64_t trials) {
    if (trials == 0) throw std::domain_error("simulate: trials >= 1 required");
    if (trials > (std::uint64_t{1} << 40))
        throw std::domain_error("simulate: trial counts above 2^40 are refused");
    // fixed-size chunks, independent of worker count; capped chunk table
    std::uint64_t chunk = 1 << 16;
    const std::uint64_t max_chunks = 4096;
    while ((trials + chunk - 1) / chunk > max_chunks) chunk *= 2;
    return ChunkPlan{chunk, (trials + chunk - 1) / chunk};
}

// Runs body(chunk_index) for every chunk, dealing chunks to `workers`
// threads round-robin. Bodies write only to their own chunk's slot.
void for_each_chunk(std::uint64_t n_chunks, int workers,
                    const std::function<void(std::uint64_t)>& body) {
    const int w = std::max(1, std::min<int>(workers, static_cast<int>(n_chunks)));
    if (w == 1) {
        for (std::uint64_t c = 0; c < n_chunks; ++c) body(c);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(w);
    for (int t = 0; t < w; ++t) {
        pool.emplace_back([&, t]() {
            for (std::uint64_t c = t; c < n_chunks; c += w) body(c);
        });
    }
    for (auto& th : pool) th.join();
}

// Fills `gaps` (size n) with the circular gaps of n-1 sorted uniforms.
void gen_gaps_sort(long n, RngStream& rng, std::vector<double>& points,
                   std::vector<double>& gaps) {
    points.resize(n - 1);
    for (double& p : points) p = rng.next_double();
    std::sort(points.begin(), points.end());
    gaps.resize(n);
    double prev = 0.0;
    for (long i = 0; i < n - 1; ++i) {
        gaps[i] = points[i] - prev;
        prev = points[i];
    }
    gaps[n - 1] = 1.0 - prev;
}

void gen_gaps_expgap(long n, RngStream& rng, std::vector<double>& gaps) {
    gaps.resize(n);
    double total = 0.0;
    for (long i = 0; i < n; ++i) {
        gaps[i] = rng.next_exponential();
        total += gaps[i];
    }
    for (long i = 0; i < n; ++i) gaps[i] /= total;
}

// d_max/d_min only, allocation-free for the exponential construction.
void extremes_expgap(long n, RngStream& rng, double& d_max, double& d_min) {
    double total = 0.0, mx = 0.0, mn = std::numeric_limits<double>::infinity();
    for (long i = 0; i < n; ++i) {
        const double e = rng.next_exponential();
        total += e;
        mx = std::max(mx, e);
        mn = std::min(mn, e);
    }
    d_max = mx / total;
    d_min = mn / total;
}

void extremes_sort(long n, RngStream& rng, std::vector<double>& points, double& d_max,
                   double& d_min) {
    points.resize(n - 1);
    for (double& p : points) p = rng.next_double();
    std::sort(points.begin(), points.end());
    double prev = 0.0, mx = 0.0, mn = std::numeric_limits<double>::infinity();
    for (long i = 0; i < n - 1; ++i) {
        const double g = points[i] - prev;
        prev = points[i];
        mx = std::max(mx, g);
        mn = std::min(mn, g);
    }
    const double last = 1.0 - prev;
    d_max = std::max(mx, last);
    d_min = std::min(mn, last);
}

}  // namespace

SpacingSample sample_spacings_sort(long n, RngStream& stream) {
    if (n < 2) throw std::domain_error("sample_spacings_sort: n >= 2 required");
    SpacingSample s;
    s.n = n;
    std::vector<double> points;
    gen_gaps_sort(n, stream, points, s.gaps);
    s.d_max = *std::max_element(s.gaps.begin(), s.gaps.end());
    s.d_min = *std::min_element(s.gaps.begin(), s.gaps.end());
    return s;
}

SpacingSample sample_spacings_expgap(long n, RngStream& stream) {
    if (n < 2) throw std::domain_error("sample_spacings_expgap: n >= 2 required");
    SpacingSample s;
    s.n = n;
    gen_gaps_expgap(n, stream, s.gaps);
    s.d_max = *std::max_element(s.gaps.begin(), s.gaps.end());
    s.d_min = *std::min_element(s.gaps.begin(), s.gaps.end());
    return s;
}

SimulationSummary simulate(const SimulateOptions& opts) {
    if (opts.n < 2) throw std::domain_error("simulate: n >= 2 required");
    if (opts.max_moment < 1 || opts.max_moment > 8)
        throw std::domain_error("simulate: max_moment must lie in [1, 8]");
    if (opts.bins < 1) throw std::domain_error("simulate: bins >= 1 required");
    if (!(opts.range_hi > opts.range_lo))
        throw std::domain_error("simulate: histogram range must be non-empty");
    const ChunkPlan plan = plan_chunks(opts.trials);
    const int M = opts.max_moment;
    const double log_n = std::log(static_cast<double>(opts.n));
    const double bin_width = (opts.range_hi - opts.range_lo) / opts.bins;

    const std::uint64_t ks_stride =
        opts.keep_samples || !opts.with_ks
            ? 1
            : std::max<std::uint64_t>(1, (opts.trials + opts.ks_sample_cap - 1) / opts.ks_sample_cap);
    const bool retain = opts.with_ks || opts.keep_samples;

    struct ChunkResult {
        std::vector<KahanSum> moments;  // orders 1..M
        KahanSum dmax2;                 // for the variance
        KahanSum dmin;
        std::vector<std::uint64_t> hist;
        std::vector<double> samples;
    };
    std::vector<ChunkResult> slots(plan.n_chunks);

    for_each_chunk(plan.n_chunks, opts.workers, [&](std::uint64_t c) {
        ChunkResult& r = slots[c];
        r.moments.assign(M, KahanSum{});
        r.hist.assign(opts.bins, 0);
        const std::uint64_t first = c * plan.chunk_size;
        const std::uint64_t count = std::min<std::uint64_t>(plan.chunk_size, opts.trials - first);
        RngStream rng(opts.seed, c);
        std::vector<double> points;
        if (retain) r.samples.reserve((count + ks_stride - 1) / ks_stride);
        for (std::uint64_t t = 0; t < count; ++t) {
            double d_max, d_min;
            if (opts.sampler == Sampler::kSort)
                extremes_sort(opts.n, rng, points, d_max, d_min);
            else
                extremes_expgap(opts.n, rng, d_max, d_min);
            double p = 1.0;
            for (int j = 0; j < M; ++j) {
                p *= d_max;
                r.moments[j].add(p);
            }
            r.dmax2.add(d_max * d_max);
            r.dmin.add(d_min);
            const double y = opts.n * d_max - log_n;
            long bin = static_cast<long>(std::floor((y - opts.range_lo) / bin_width));
            bin = std::clamp<long>(bin, 0, opts.bins - 1);
            ++r.hist[bin];
            if (retain && (first + t) % ks_stride == 0) r.samples.push_back(d_max);
        }
    });

    // deterministic merge in chunk order
    std::vector<KahanSum> moments(M);
    KahanSum dmax2, dmin;
    std::vector<std::uint64_t> hist(opts.bins, 0);
    std::vector<double> samples;
    for (const ChunkResult& r : slots) {
        for (int j = 0; j < M; ++j) moments[j].merge(r.moments[j]);
        dmax2.merge(r.dmax2);
        dmin.merge(r.dmin);
        for (int b = 0; b < opts.bins; ++b) hist[b] += r.hist[b];
        samples.insert(samples.end(), r.samples.begin(), r.samples.end());
    }

    SimulationSummary out;
    out.n = opts.n;
    out.trials = opts.trials;
    out.seed = opts.seed;
    out.workers = opts.workers;
    out.max_moment = M;
    out.sampler = sampler_name(opts.sampler);
    const double N = static_cast<double>(opts.trials);
    out.moments.resize(M);
    for (int j = 0; j < M; ++j) out.moments[j] = moments[j].total() / N;
    out.dmax_mean = out.moments[0];
    const double s1 = moments[0].total(), s2 = dmax2.total();
    out.dmax_var = opts.trials > 1 ? (s2 - s1 * s1 / N) / (N - 1.0) : 0.0;
    out.dmin_mean = dmin.total() / N;
    out.hist_edges.resize(opts.bins + 1);
    for (int b = 0; b <= opts.bins; ++b) out.hist_edges[b] = opts.range_lo + b * bin_width;
    out.hist_counts = std::move(hist);
    if (opts.with_ks) {
        out.ks_samples = samples.size();
        out.ks_stat = ks_statistic(samples, opts.n);
        out.ks_scaled = out.ks_stat * std::sqrt(static_cast<double>(out.ks_samples));
    } else {
        out.ks_stat = out.ks_scaled = std::nan("");
    }
    if (opts.keep_samples) out.dmax_samples = std::move(samples);
    return out;
}

double ks_statistic(std::vector<double> samples, long n) {
    if (samples.empty()) throw std::domain_error("ks_statistic: samples must be non-empty");
    std::sort(samples.begin(), samples.end());
    const double N = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf_estimate(n, samples[i]);
        d = std::max(d, (static_cast<double>(i) + 1.0) / N - f);
        d = std::max(d, f - static_cast<double>(i) / N);
    }
    return d;
}

double ks_two_sample(std::vector<double> a, std::vector<double> b) {
    if (a.empty() || b.empty()) throw std::domain_error("ks_two_sample: empty sample");
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
    std::size_t i = 0, j = 0;
    double d = 0.0;
    while (i < a.size() && j < b.size()) {
        const double x = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= x) ++i;
        while (j < b.size() && b[j] <= x) ++j;
        d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
    }
    return d;
}

std::vector<MinGapRow> min_gap_limit_test(long n, std::uint64_t trials, std::uint64_t seed,
                                          int workers) {
    if (n < 10) throw std::domain_error("min_gap_limit_test: n >= 10 required");
    static constexpr double kTs[] = {0.1, 0.5, 1.0, 2.0, 4.0};
    constexpr int T = 5;
    const ChunkPlan plan = plan_chunks(trials);
    std::vector<std::array<std::uint64_t, T>> slots(plan.n_chunks);
    const double n2 = static_cast<double>(n) * static_cast<double>(n);
    for_each_chunk(plan.n_chunks, workers, [&](std::uint64_t c) {
        auto& counts = slots[c];
        counts.fill(0);
        const std::uint64_t first = c * plan.chunk_size;
        const std::uint64_t count = std::min<std::uint64_t>(plan.chunk_size, trials - first);
        RngStream rng(seed, c);
        for (std::uint64_t t = 0; t < count; ++t) {
            double d_max, d_min;
            extremes_expgap(n, rng, d_max, d_min);
            const double scaled = n2 * d_min;
            for (int k = 0; k < T; ++k)
                if (scaled > kTs[k]) ++counts[k];
        }
    });
    std::array<std::uint64_t, T> total{};
    for (const auto& c : slots)
        for (int k = 0; k < T; ++k) total[k] += c[k];
    std::vector<MinGapRow> rows;
    rows.reserve(T);
    for (int k = 0; k < T; ++k) {
        MinGapRow row;
        row.t = kTs[k];
        row.exceed_count = total[k];
        row.empirical_survival = static_cast<double>(total[k]) / static_cast<double>(trials);
        // exact finite-n reference P(d_min > t/n^2) = (1 - t/n)^{n-1}
        row.exact_survival = std::exp((n - 1) * std::log1p(-kTs[k] / static_cast<double>(n)));
        row.limit_survival = std::exp(-kTs[k]);
        rows.push_back(row);
    }
    return rows;
}

KthGapResult kth_gap_mean_test(long n, long k, std::uint64_t trials, std::uint64_t seed,
                               int workers) {
    if (!(n >= 2 && k >= 1 && k <= n))
        throw std::domain_error("kth_gap_mean_test: 1 <= k <= n required");
    const ChunkPlan plan = plan_chunks(trials);
    struct Acc {
        KahanSum g, g2;
    };
    std::vector<Acc> slots(plan.n_chunks);
    for_each_chunk(plan.n_chunks, workers, [&](std::uint64_t c) {
        Acc& acc = slots[c];
        const std::uint64_t first = c * plan.chunk_size;
        const std::uint64_t count = std::min<std::uint64_t>(plan.chunk_size, trials - first);
        RngStream rng(seed, c);
        std::vector<double> points, gaps;
        for (std::uint64_t t = 0; t < count; ++t) {
            gen_gaps_sort(n, rng, points, gaps);
            std::nth_element(gaps.begin(), gaps.begin() + (k - 1), gaps.end(),
                             std::greater<double>());
            const double g = gaps[k - 1];
            acc.g.add(g);
            acc.g2.add(g * g);
        }
    });
    KahanSum g, g2;
    for (const Acc& a : slots) {
        g.merge(a.g);
        g2.merge(a.g2);
    }
    KthGapResult out;
    out.n = n;
    out.k = k;
    const double N = static_cast<double>(trials);
    out.empirical_mean = g.total() / N;
    out.exact_mean = kth_gap_mean(n, k).get_d();
    const double var = (g2.total() - g.total() * g.total() / N) / (N - 1.0);
    out.std_error = std::sqrt(std::max(0.0, var) / N);
    out.z_score = (out.empirical_mean - out.exact_mean) / out.std_error;
    return out;
}

}  // namespace spacings
