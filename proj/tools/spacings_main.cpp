// Command-line front end: exact spacing-law queries, identity verification,
// asymptotic tables, and the Monte Carlo simulator, all reproducible from the
// flag set echoed in the output envelope.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spacings/asymptotics.hpp"
#include "spacings/exact_dist.hpp"
#include "spacings/harmonic.hpp"
#include "spacings/montecarlo.hpp"
#include "spacings/verify.hpp"

using json = nlohmann::ordered_json;
using namespace spacings;

namespace {

constexpr const char* kArtifactVersion = "1.0.0";

enum class OutMode { kHuman, kJson, kCsv };

struct Output {
    OutMode mode;
    long precision;
    int digits;
};

OutMode default_mode() {
    return isatty(fileno(stdout)) ? OutMode::kHuman : OutMode::kJson;
}

void print_envelope(const std::string& command, const json& parameters, const json& results,
                    long precision, std::optional<std::uint64_t> seed) {
    json env;
    env["command"] = command;
    env["parameters"] = parameters;
    env["results"] = results;
    env["artifact_version"] = kArtifactVersion;
    env["precision_bits"] = precision;
    if (seed) env["seed"] = *seed;
    std::printf("%s\n", env.dump(2).c_str());
}

long env_precision() {
    if (const char* v = std::getenv("SPACINGS_PRECISION_BITS")) {
        const long p = std::atol(v);
        if (p >= 64) return p;
    }
    return 256;
}

// ---------------------------------------------------------------- moment ---

int run_moment(long n, int m, bool use_float, const Output& out) {
    json params{{"n", n}, {"m", m}, {"mode", use_float ? "float" : "exact"}};
    json results;
    std::string exact_str, dec_str;
    if (use_float) {
        const mpfr_prec_t prec = out.precision;
        std::vector<Real> h;
        for (int r = 1; r <= m; ++r) h.push_back(harmonic_real(n, r, prec + 32));
        Real sh = script_h_all_real(h, m, prec + 32)[m];
        Real coeff = Real::of(factorial(m), prec + 32);
        for (long j = n; j <= n + m - 1; ++j) coeff /= j;
        dec_str = (coeff * sh).to_precision(prec).str(out.digits);
        results = {{"n", n}, {"m", m}, {"decimal", dec_str}};
    } else {
        const Rational v = moment_exact(n, m);
        exact_str = to_string(v);
        dec_str = to_decimal_string(v, out.digits);
        results = {{"n", n}, {"m", m}, {"exact", exact_str}, {"decimal", dec_str}};
    }
    switch (out.mode) {
        case OutMode::kJson:
            print_envelope("moment", params, results, out.precision, std::nullopt);
            break;
        case OutMode::kCsv:
            std::printf("n,m,value\n%ld,%d,%s\n", n, m,
                        use_float ? dec_str.c_str() : exact_str.c_str());
            break;
        case OutMode::kHuman:
            if (use_float)
                std::printf("E[d_max^%d] for n=%ld: %s\n", m, n, dec_str.c_str());
            else
                std::printf("E[d_max^%d] for n=%ld: %s (= %s)\n", m, n, exact_str.c_str(),
                            dec_str.c_str());
            break;
    }
    return 0;
}

// ------------------------------------------------------------- cdf / pdf ---

int run_curve(const std::string& name, long n, const std::string& x_str, int grid, bool use_float,
              const Output& out) {
    const bool is_cdf = name == "cdf";
    json params{{"n", n}, {"grid", grid}, {"mode", use_float ? "float" : "exact"}};
    if (!x_str.empty()) params["x"] = x_str;

    struct Row {
        std::string x, value, decimal;
    };
    std::vector<Row> rows;
    auto eval_exact = [&](const Rational& x) {
        const Rational v = is_cdf ? cdf(n, x) : pdf(n, x);
        rows.push_back({to_string(x), to_string(v), to_decimal_string(v, out.digits)});
    };
    auto eval_float = [&](const Real& x) {
        const Real v = is_cdf ? cdf_real(n, x, out.precision)
                              : Real::of(pdf(n, parse_rational(x_str)), out.precision);
        rows.push_back({x.str(out.digits), v.str(out.digits), v.str(out.digits)});
    };

    if (grid > 0) {
        if (grid < 2) throw std::domain_error("grid needs at least 2 points");
        const Rational lo(1, n), hi(1);
        for (int i = 0; i < grid; ++i) {
            Rational x = lo + (hi - lo) * Rational(i, grid - 1);
            x.canonicalize();
            eval_exact(x);
        }
    } else if (use_float) {
        eval_float(Real::parse(x_str, out.precision));
    } else {
        eval_exact(parse_rational(x_str));
    }

    json jrows = json::array();
    for (const Row& r : rows)
        jrows.push_back(json{{"x", r.x}, {"value", r.value}, {"decimal", r.decimal}});
    switch (out.mode) {
        case OutMode::kJson:
            print_envelope(name, params, json{{"rows", jrows}}, out.precision, std::nullopt);
            break;
        case OutMode::kCsv:
            std::printf("n,x,value\n");
            for (const Row& r : rows) std::printf("%ld,%s,%s\n", n, r.x.c_str(), r.value.c_str());
            break;
        case OutMode::kHuman:
            for (const Row& r : rows)
                if (r.value == r.decimal)
                    std::printf("%s(n=%ld, x=%s) = %s\n", name.c_str(), n, r.x.c_str(),
                                r.value.c_str());
                else
                    std::printf("%s(n=%ld, x=%s) = %s = %s\n", name.c_str(), n, r.x.c_str(),
                                r.value.c_str(), r.decimal.c_str());
            break;
    }
    return 0;
}

// --------------------------------------------------------------- quantile ---

int run_quantile(long n, const std::string& p_str, const std::string& tol_str, const Output& out) {
    const Real p = Real::parse(p_str, out.precision);
    const Real tol = Real::parse(tol_str, out.precision);
    const Real x = quantile(n, p, tol, out.precision);
    json params{{"n", n}, {"p", p_str}, {"tolerance", tol_str}};
    json results{{"n", n}, {"p", p_str}, {"value", x.str(out.digits)}};
    switch (out.mode) {
        case OutMode::kJson:
            print_envelope("quantile", params, results, out.precision, std::nullopt);
            break;
        case OutMode::kCsv:
            std::printf("n,p,value\n%ld,%s,%s\n", n, p_str.c_str(), x.str(out.digits).c_str());
            break;
        case OutMode::kHuman:
            std::printf("quantile(n=%ld, p=%s) = %s\n", n, p_str.c_str(),
                        x.str(out.digits).c_str());
            break;
    }
    return 0;
}

// ---------------------------------------------------------------- kth-gap ---

int run_kth_gap(long n, long k, bool all, const Output& out) {
    std::vector<std::pair<long, Rational>> rows;
    if (all)
        for (long j = 1; j <= n; ++j) rows.emplace_back(j, kth_gap_mean(n, j));
    else
        rows.emplace_back(k, kth_gap_mean(n, k));
    json params{{"n", n}, {"k", k}, {"all", all}};
    json jrows = json::array();
    for (const auto& [j, v] : rows)
        jrows.push_back(json{{"k", j},
                             {"exact", to_string(v)},
                             {"decimal", to_decimal_string(v, out.digits)}});
    switch (out.mode) {
        case OutMode::kJson:
            print_envelope("kth-gap", params, json{{"rows", jrows}}, out.precision, std::nullopt);
            break;
        case OutMode::kCsv:
            std::printf("n,k,value\n");
            for (const auto& [j, v] : rows) std::printf("%ld,%ld,%s\n", n, j, to_string(v).c_str());
            break;
        case OutMode::kHuman:
            for (const auto& [j, v] : rows)
                std::printf("E[gap_(%ld)] for n=%ld: %s (= %s)\n", j, n, to_string(v).c_str(),
                            to_decimal_string(v, out.digits).c_str());
            break;
    }
    return 0;
}

// ----------------------------------------------------------------- verify ---

int run_verify(const std::string& suite, long n_max, int m_max, int s_max, int tuples,
               std::uint64_t seed, const Output& out) {
    VerifyRanges r;
    r.seed = seed;
    if (n_max > 0) {
        r.identities_n_max = n_max;
        r.script_h_n_max = n_max;
        r.induction_n_max = std::min<long>(n_max, 30);
        r.lemma1_exact_n_max = static_cast<int>(std::min<long>(n_max, 12));
        r.lemma2_n_max = std::min<long>(n_max, 20);
        r.theorem_n_max = n_max;
        r.quadrature_n_max = std::min<long>(n_max, 20);
    }
    if (m_max > 0) {
        r.identities_m_max = m_max;
        r.lemma2_m_max = std::min(m_max, 6);
        r.lemma4_m_max = std::min(m_max, 12);
        r.theorem_m_max = m_max;
        r.quadrature_m_max = std::min(m_max, 6);
    }
    if (s_max > 0) {
        r.script_h_s_max = s_max;
        r.induction_s_max = std::min(s_max, 8);
    }
    if (tuples > 0) r.lemma1_tuples = tuples;

    VerifyReport rep;
    if (suite == "identities")
        rep = verify_identities(r);
    else if (suite == "lemmas")
        rep = verify_lemmas(r);
    else if (suite == "theorem")
        rep = verify_theorem(r);
    else
        rep = verify_all(r);

    json params{{"suite", suite},   {"n_max", n_max},   {"m_max", m_max},
                {"s_max", s_max},   {"tuples", tuples}, {"seed", seed}};
    json checks = json::array();
    std::uint64_t total = 0;
    for (const auto& c : rep.checks) {
        total += c.cases;
        checks.push_back(
            json{{"name", c.name}, {"cases", c.cases}, {"pass", c.pass}, {"detail", c.detail}});
    }
    switch (out.mode) {
        case OutMode::kJson:
            print_envelope("verify", params,
                           json{{"checks", checks}, {"all_pass", rep.all_pass()}, {"cases", total}},
                           out.precision, seed);
            break;
        case OutMode::kCsv:
            std::printf("suite,check,cases,pass,detail\n");
            for (const auto& c : rep.checks)
                std::printf("%s,%s,%llu,%d,%s\n", suite.c_str(), c.name.c_str(),
                            static_cast<unsigned long long>(c.cases), c.pass ? 1 : 0,
                            c.detail.c_str());
            break;
        case OutMode::kHuman:
            for (const auto& c : rep.checks)
                std::printf("[%s] %s (%llu cases)%s%s\n", c.pass ? "PASS" : "FAIL", c.name.c_str(),
                            static_cast<unsigned long long>(c.cases), c.detail.empty() ? "" : ": ",
                            c.detail.c_str());
            std::printf("%s: %zu checks over %llu cases\n", rep.all_pass() ? "PASS" : "FAIL",
                        rep.checks.size(), static_cast<unsigned long long>(total));
            break;
    }
    return rep.all_pass() ? 0 : 1;
}

// ---------------------------------------------------------------- converge ---

int run_converge(const std::vector<long>& ns, int m_max, long exact_limit, const Output& out) {
    const mpfr_prec_t prec = out.precision;
    auto rows =
        convergence_table(std::span<const long>(ns.data(), ns.size()), m_max, prec, exact_limit);
    json params{{"ns", ns}, {"m_max", m_max}, {"exact_limit", exact_limit}};
    json jrows = json::array();
    for (const auto& r : rows)
        jrows.push_back(json{{"n", r.n},
                             {"m", r.m},
                             {"centered_moment", r.centered_moment.str(out.digits)},
                             {"limit_moment", r.limit_moment.str(out.digits)},
                             {"abs_gap", r.abs_gap.str(out.digits)},
                             {"cumulant_gap", r.cumulant_gap.str(out.digits)}});
    json jlimits = json::array();
    for (int m = 1; m <= m_max; ++m)
        jlimits.push_back(json{{"m", m},
                               {"moment", limit_moment(m, prec).str(out.digits)},
                               {"cumulant", limit_cumulant(m, prec).str(out.digits)}});
    json jscaled = json::array();
    for (long n : ns)
        for (int m = 1; m <= m_max; ++m)
            jscaled.push_back(
                json{{"n", n},
                     {"m", m},
                     {"value", scaled_moment_ratio(n, m, prec, exact_limit).str(out.digits)}});
    switch (out.mode) {
        case OutMode::kJson:
            print_envelope(
                "converge", params,
                json{{"rows", jrows}, {"limits", jlimits}, {"scaled_moment_to_one", jscaled}},
                prec, std::nullopt);
            break;
        case OutMode::kCsv:
            std::printf("n,m,centered_moment,limit_moment,abs_gap,cumulant_gap\n");
            for (const auto& r : rows)
                std::printf("%ld,%d,%s,%s,%s,%s\n", r.n, r.m,
                            r.centered_moment.str(out.digits).c_str(),
                            r.limit_moment.str(out.digits).c_str(),
                            r.abs_gap.str(out.digits).c_str(),
                            r.cumulant_gap.str(out.digits).c_str());
            break;
        case OutMode::kHuman:
            std::printf("%8s %3s %22s %22s %12s %12s\n", "n", "m", "centered_moment",
                        "limit_moment", "abs_gap", "cum_gap");
            for (const auto& r : rows)
                std::printf("%8ld %3d %22s %22s %12s %12s\n", r.n, r.m,
                            r.centered_moment.str(12).c_str(), r.limit_moment.str(12).c_str(),
                            r.abs_gap.str(4).c_str(), r.cumulant_gap.str(4).c_str());
            std::printf("limits: ");
            for (int m = 1; m <= m_max; ++m)
                std::printf("kappa_%d=%s ", m, limit_cumulant(m, prec).str(10).c_str());
            std::printf("\n");
            for (long n : ns) {
                std::printf("E[((n/log n) d_max)^m] at n=%ld:", n);
                for (int m = 1; m <= m_max; ++m)
                    std::printf(" %s", scaled_moment_ratio(n, m, prec, exact_limit).str(8).c_str());
                std::printf("\n");
            }
            break;
    }
    return 0;
}

// ------------------------------------------------------------------ limits ---

int run_limits(int m_max, int determinacy_m, const Output& out) {
    const mpfr_prec_t prec = out.precision;
    auto mu = limit_moments(m_max, prec);
    json params{{"m_max", m_max}, {"determinacy_m_max", determinacy_m}};
    json jm = json::array();
    for (int m = 1; m <= m_max; ++m)
        jm.push_back(json{{"m", m},
                          {"moment", mu[m].str(out.digits)},
                          {"cumulant", limit_cumulant(m, prec).str(out.digits)}});
    json results{{"rows", jm}};
    std::vector<DeterminacyRow> det;
    if (determinacy_m > 0) {
        det = determinacy_check(determinacy_m, prec);
        json jd = json::array();
        for (const auto& d : det)
            jd.push_back(json{{"m", d.m},
                              {"value", d.value.str(out.digits)},
                              {"bound", d.bound.str(out.digits)},
                              {"holds", d.holds}});
        results["determinacy"] = jd;
        results["bound_tail_1e6"] = determinacy_bound_tail(1e6);
    }
    switch (out.mode) {
        case OutMode::kJson:
            print_envelope("limits", params, results, prec, std::nullopt);
            break;
        case OutMode::kCsv:
            if (determinacy_m > 0) {
                std::printf("m,value,bound,holds\n");
                for (const auto& d : det)
                    std::printf("%d,%s,%s,%d\n", d.m, d.value.str(out.digits).c_str(),
                                d.bound.str(out.digits).c_str(), d.holds ? 1 : 0);
            } else {
                std::printf("m,limit_moment,limit_cumulant\n");
                for (int m = 1; m <= m_max; ++m)
                    std::printf("%d,%s,%s\n", m, mu[m].str(out.digits).c_str(),
                                limit_cumulant(m, prec).str(out.digits).c_str());
            }
            break;
        case OutMode::kHuman:
            std::printf("%3s %26s %26s\n", "m", "limit_moment", "limit_cumulant");
            for (int m = 1; m <= m_max; ++m)
                std::printf("%3d %26s %26s\n", m, mu[m].str(16).c_str(),
                            limit_cumulant(m, prec).str(16).c_str());
            for (const auto& d : det)
                std::printf("determinacy m=%2d: value %s <= bound %s %s\n", d.m,
                            d.value.str(8).c_str(), d.bound.str(8).c_str(),
                            d.holds ? "ok" : "VIOLATED");
            break;
    }
    return 0;
}

// ---------------------------------------------------------------- simulate ---

json summary_to_json(const SimulationSummary& s) {
    json ks;
    if (std::isnan(s.ks_stat))
        ks = {{"stat", nullptr}, {"scaled", nullptr}};
    else
        ks = {{"stat", s.ks_stat}, {"scaled", s.ks_scaled}};
    return json{{"n", s.n},
                {"trials", s.trials},
                {"seed", s.seed},
                {"workers", s.workers},
                {"moments", s.moments},
                {"dmax_mean", s.dmax_mean},
                {"dmax_var", s.dmax_var},
                {"dmin_mean", s.dmin_mean},
                {"ks", ks},
                {"histogram", json{{"edges", s.hist_edges}, {"counts", s.hist_counts}}}};
}

int run_simulate(const SimulateOptions& opts, const std::string& check, long k,
                 const Output& out) {
    json params{{"n", opts.n},
                {"trials", opts.trials},
                {"seed", opts.seed},
                {"workers", opts.workers},
                {"max_moment", opts.max_moment},
                {"sampler", sampler_name(opts.sampler)},
                {"bins", opts.bins},
                {"range", std::to_string(opts.range_lo) + ":" + std::to_string(opts.range_hi)},
                {"ks", opts.with_ks},
                {"check", check},
                {"k", k}};
    if (check == "min-gap") {
        auto rows = min_gap_limit_test(opts.n, opts.trials, opts.seed, opts.workers);
        json jrows = json::array();
        for (const auto& r : rows)
            jrows.push_back(json{{"t", r.t},
                                 {"empirical_survival", r.empirical_survival},
                                 {"exact_survival", r.exact_survival},
                                 {"limit_survival", r.limit_survival},
                                 {"exceed_count", r.exceed_count}});
        switch (out.mode) {
            case OutMode::kJson:
                print_envelope("simulate", params, json{{"min_gap", jrows}}, out.precision,
                               opts.seed);
                break;
            case OutMode::kCsv:
                std::printf("t,empirical_survival,exact_survival,limit_survival\n");
                for (const auto& r : rows)
                    std::printf("%g,%.10g,%.10g,%.10g\n", r.t, r.empirical_survival,
                                r.exact_survival, r.limit_survival);
                break;
            case OutMode::kHuman:
                std::printf("%6s %22s %16s %16s\n", "t", "empirical P(n^2 dmin>t)", "exact",
                            "e^-t");
                for (const auto& r : rows)
                    std::printf("%6g %22.8f %16.8f %16.8f\n", r.t, r.empirical_survival,
                                r.exact_survival, r.limit_survival);
                break;
        }
        return 0;
    }
    if (check == "kth-gap") {
        auto res = kth_gap_mean_test(opts.n, k, opts.trials, opts.seed, opts.workers);
        json results{{"n", res.n},
                     {"k", res.k},
                     {"empirical_mean", res.empirical_mean},
                     {"exact_mean", res.exact_mean},
                     {"std_error", res.std_error},
                     {"z_score", res.z_score}};
        switch (out.mode) {
            case OutMode::kJson:
                print_envelope("simulate", params, results, out.precision, opts.seed);
                break;
            case OutMode::kCsv:
                std::printf("n,k,empirical_mean,exact_mean,std_error,z_score\n");
                std::printf("%ld,%ld,%.12g,%.12g,%.3g,%.3f\n", res.n, res.k, res.empirical_mean,
                            res.exact_mean, res.std_error, res.z_score);
                break;
            case OutMode::kHuman:
                std::printf("k-th largest gap (n=%ld, k=%ld): empirical %.8f, exact %.8f, z=%.2f\n",
                            res.n, res.k, res.empirical_mean, res.exact_mean, res.z_score);
                break;
        }
        return 0;
    }

    const SimulationSummary s = simulate(opts);
    const json results = summary_to_json(s);
    switch (out.mode) {
        case OutMode::kJson:
            print_envelope("simulate", params, results, out.precision, opts.seed);
            break;
        case OutMode::kCsv: {
            std::printf("field,value\n");
            std::printf("n,%ld\ntrials,%llu\nseed,%llu\nworkers,%d\nsampler,%s\n", s.n,
                        static_cast<unsigned long long>(s.trials),
                        static_cast<unsigned long long>(s.seed), s.workers, s.sampler.c_str());
            for (std::size_t j = 0; j < s.moments.size(); ++j)
                std::printf("moment_%zu,%.17g\n", j + 1, s.moments[j]);
            std::printf("dmax_mean,%.17g\ndmax_var,%.17g\ndmin_mean,%.17g\n", s.dmax_mean,
                        s.dmax_var, s.dmin_mean);
            if (!std::isnan(s.ks_stat))
                std::printf("ks_stat,%.17g\nks_scaled,%.17g\n", s.ks_stat, s.ks_scaled);
            std::printf("\nbin_lo,bin_hi,count\n");
            for (std::size_t b = 0; b + 1 < s.hist_edges.size(); ++b)
                std::printf("%.17g,%.17g,%llu\n", s.hist_edges[b], s.hist_edges[b + 1],
                            static_cast<unsigned long long>(s.hist_counts[b]));
            break;
        }
        case OutMode::kHuman:
            std::printf("simulate n=%ld trials=%llu seed=%llu sampler=%s\n", s.n,
                        static_cast<unsigned long long>(s.trials),
                        static_cast<unsigned long long>(s.seed), s.sampler.c_str());
            std::printf("  E[d_max] = %.8f   Var[d_max] = %.4e   E[d_min] = %.4e\n", s.dmax_mean,
                        s.dmax_var, s.dmin_mean);
            for (std::size_t j = 0; j < s.moments.size(); ++j)
                std::printf("  raw moment %zu: %.10g\n", j + 1, s.moments[j]);
            if (!std::isnan(s.ks_stat))
                std::printf("  KS vs exact cdf: D = %.6f, D*sqrt(N) = %.3f (N = %llu)\n", s.ks_stat,
                            s.ks_scaled, static_cast<unsigned long long>(s.ks_samples));
            break;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact and asymptotic law of the largest spacing among n uniform points on a "
                 "circle, with a Monte Carlo cross-check"};
    app.require_subcommand(1);

    std::string out_mode_str;
    long precision = env_precision();
    int digits = 17;
    app.add_option("--out", out_mode_str, "Output format: human, json, or csv")
        ->check(CLI::IsMember({"human", "json", "csv"}));
    app.add_option("--precision", precision, "Working precision in bits (>= 64)")
        ->check(CLI::Range(64L, 1L << 20));
    app.add_option("--digits", digits, "Decimal digits for rendered values")
        ->check(CLI::Range(1, 10000));

    auto* c_moment = app.add_subcommand("moment", "Exact moment E[d_max^m]");
    long mo_n = 2;
    int mo_m = 1;
    bool mo_float = false, mo_exact = false;
    c_moment->add_option("--n", mo_n, "Number of points")
        ->required()
        ->check(CLI::Range(2L, LONG_MAX));
    c_moment->add_option("--m", mo_m, "Moment order")->required()->check(CLI::Range(1, 30));
    c_moment->add_flag("--float", mo_float, "Floating evaluation (large n)");
    c_moment->add_flag("--exact", mo_exact, "Exact rational evaluation (default)");

    auto* c_cdf = app.add_subcommand("cdf", "Distribution function of d_max");
    auto* c_pdf = app.add_subcommand("pdf", "Density of d_max");
    long cv_n = 2;
    std::string cv_x;
    int cv_grid = 0;
    bool cv_float = false;
    for (auto* c : {c_cdf, c_pdf}) {
        c->add_option("--n", cv_n, "Number of points")->required()->check(CLI::Range(2L, LONG_MAX));
        c->add_option("--x", cv_x, "Evaluation point (rational like 1/2, or decimal)");
        c->add_option("--grid", cv_grid, "Emit a grid of this many rows over [1/n, 1]");
        c->add_flag("--float", cv_float, "Floating evaluation at --precision");
    }

    auto* c_quant = app.add_subcommand("quantile", "Inverse CDF by bisection");
    long q_n = 2;
    std::string q_p, q_tol = "1e-12";
    c_quant->add_option("--n", q_n, "Number of points")
        ->required()
        ->check(CLI::Range(2L, LONG_MAX));
    c_quant->add_option("--p", q_p, "Probability in (0,1)")->required();
    c_quant->add_option("--tolerance", q_tol, "CDF tolerance");

    auto* c_kth = app.add_subcommand("kth-gap", "Mean of the k-th largest gap");
    long kg_n = 2, kg_k = 1;
    bool kg_all = false;
    c_kth->add_option("--n", kg_n, "Number of points")->required()->check(CLI::Range(1L, LONG_MAX));
    c_kth->add_option("--k", kg_k, "Gap rank (1 = largest)");
    c_kth->add_flag("--all", kg_all, "Emit all ranks 1..n");

    auto* c_verify = app.add_subcommand("verify", "Exact identity and formula verification");
    std::string v_suite = "all";
    long v_nmax = 0;
    int v_mmax = 0, v_smax = 0, v_tuples = 0;
    std::uint64_t v_seed = 20240901;
    c_verify->add_option("--suite", v_suite, "identities, lemmas, theorem, or all")
        ->check(CLI::IsMember({"identities", "lemmas", "theorem", "all"}));
    c_verify->add_option("--n-max", v_nmax, "Cap on n ranges");
    c_verify->add_option("--m-max", v_mmax, "Cap on moment orders");
    c_verify->add_option("--s-max", v_smax, "Cap on partition orders");
    c_verify->add_option("--tuples", v_tuples, "Random tuples for the quadrature check");
    c_verify->add_option("--seed", v_seed, "Seed for randomized checks");

    auto* c_conv = app.add_subcommand("converge", "Centered-scaled moments vs Gumbel limits");
    std::vector<long> conv_ns{100, 1000, 10000};
    int conv_mmax = 4;
    long conv_exact_limit = 10000;
    c_conv->add_option("--ns", conv_ns, "Comma-separated n values")->delimiter(',');
    c_conv->add_option("--m-max", conv_mmax, "Highest moment order")->check(CLI::Range(1, 12));
    c_conv->add_option("--exact-limit", conv_exact_limit, "Largest n computed exactly");

    auto* c_lim = app.add_subcommand("limits", "Limiting moments and cumulants");
    int lim_mmax = 10, lim_det = 0;
    c_lim->add_option("--m-max", lim_mmax, "Highest order")->check(CLI::Range(1, 30));
    c_lim->add_option("--determinacy-m-max", lim_det, "Also run the determinacy bound check")
        ->check(CLI::Range(0, 15));

    auto* c_sim = app.add_subcommand("simulate", "Monte Carlo spacing simulation");
    SimulateOptions sim;
    sim.workers = 1;
    std::string sim_sampler = "sort", sim_range = "-4:12", sim_check = "none";
    long sim_k = 1;
    bool sim_no_ks = false;
    c_sim->add_option("--n", sim.n, "Number of points")->required()->check(CLI::Range(2L, LONG_MAX));
    c_sim->add_option("--trials", sim.trials, "Trial count")->required();
    c_sim->add_option("--seed", sim.seed, "RNG seed");
    c_sim->add_option("--workers", sim.workers, "Worker threads (scheduling only)")
        ->check(CLI::Range(1, 4096));
    c_sim->add_option("--max-moment", sim.max_moment, "Raw moments up to this order")
        ->check(CLI::Range(1, 8));
    c_sim->add_option("--sampler", sim_sampler, "sort or expgap");
    c_sim->add_option("--bins", sim.bins, "Histogram bins")->check(CLI::Range(1, 100000));
    c_sim->add_option("--range", sim_range, "Histogram range LO:HI for n*d_max - log n");
    c_sim->add_flag("--no-ks", sim_no_ks, "Skip the KS statistic");
    c_sim->add_option("--check", sim_check, "none, min-gap, or kth-gap")
        ->check(CLI::IsMember({"none", "min-gap", "kth-gap"}));
    c_sim->add_option("--k", sim_k, "Rank for --check kth-gap");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Output out{out_mode_str.empty()
                   ? default_mode()
                   : (out_mode_str == "json"
                          ? OutMode::kJson
                          : (out_mode_str == "csv" ? OutMode::kCsv : OutMode::kHuman)),
               precision, digits};

    try {
        if (c_moment->parsed()) return run_moment(mo_n, mo_m, mo_float && !mo_exact, out);
        if (c_cdf->parsed() || c_pdf->parsed()) {
            const std::string name = c_cdf->parsed() ? "cdf" : "pdf";
            if (cv_x.empty() && cv_grid <= 0)
                throw std::domain_error(name + ": provide --x or --grid");
            return run_curve(name, cv_n, cv_x, cv_grid, cv_float, out);
        }
        if (c_quant->parsed()) return run_quantile(q_n, q_p, q_tol, out);
        if (c_kth->parsed()) return run_kth_gap(kg_n, kg_k, kg_all, out);
        if (c_verify->parsed())
            return run_verify(v_suite, v_nmax, v_mmax, v_smax, v_tuples, v_seed, out);
        if (c_conv->parsed()) return run_converge(conv_ns, conv_mmax, conv_exact_limit, out);
        if (c_lim->parsed()) return run_limits(lim_mmax, lim_det, out);
        if (c_sim->parsed()) {
            sim.sampler = sampler_from_name(sim_sampler);
            sim.with_ks = !sim_no_ks;
            const auto colon = sim_range.find(':', 1);  // LO may start with '-'
            if (colon == std::string::npos)
                throw std::domain_error("simulate: --range must be LO:HI");
            sim.range_lo = std::stod(sim_range.substr(0, colon));
            sim.range_hi = std::stod(sim_range.substr(colon + 1));
            return run_simulate(sim, sim_check, sim_k, out);
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
