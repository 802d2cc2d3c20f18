#include "spacings/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace spacings {

namespace {

// P_k(x) and P_k'(x) via the three-term recurrence.
void legendre_eval(int k, const Real& x, Real& p, Real& dp) {
    const mpfr_prec_t prec = x.precision();
    Real pm1 = Real::of(1L, prec);  // P_0
    Real pj = x;                    // P_1
    for (int j = 1; j < k; ++j) {
        Real pnext = (x * pj * (2 * j + 1) - pm1 * j) / (j + 1);
        pm1 = std::move(pj);
        pj = std::move(pnext);
    }
    p = pj;
    // P_k' = k (x P_k - P_{k-1}) / (x^2 - 1)
    dp = (x * pj - pm1) * k / (x * x - Real::of(1L, prec));
}

GaussLegendreRule build_rule(int points, mpfr_prec_t prec) {
    if (points < 2) throw std::invalid_argument("gauss_legendre: points >= 2 required");
    const mpfr_prec_t wp = prec + 32;
    GaussLegendreRule rule;
    rule.nodes.assign(points, Real(prec));
    rule.weights.assign(points, Real(prec));
    int newton_iters = 4;
    for (mpfr_prec_t bits = 48; bits < wp; bits *= 2) ++newton_iters;
    const int half = (points + 1) / 2;
    for (int i = 1; i <= half; ++i) {
        const double seed = std::cos(M_PI * (i - 0.25) / (points + 0.5));
        Real x = Real::of(seed, wp);
        Real p(wp), dp(wp);
        for (int it = 0; it < newton_iters; ++it) {
            legendre_eval(points, x, p, dp);
            x -= p / dp;
        }
        legendre_eval(points, x, p, dp);
        const Real one = Real::of(1L, wp);
        Real w = (one - x * x) * dp * dp;
        w = Real::of(2L, wp) / w;
        rule.nodes[i - 1] = (-x).to_precision(prec);
        rule.weights[i - 1] = w.to_precision(prec);
        rule.nodes[points - i] = x.to_precision(prec);
        rule.weights[points - i] = rule.weights[i - 1];
    }
    return rule;
}

std::map<std::pair<int, mpfr_prec_t>, GaussLegendreRule>& rule_cache() {
    static std::map<std::pair<int, mpfr_prec_t>, GaussLegendreRule> cache;
    return cache;
}
std::mutex rule_mutex;

}  // namespace

const GaussLegendreRule& gauss_legendre(int points, mpfr_prec_t prec) {
    std::lock_guard<std::mutex> lock(rule_mutex);
    auto key = std::make_pair(points, prec);
    auto it = rule_cache().find(key);
    if (it == rule_cache().end()) it = rule_cache().emplace(key, build_rule(points, prec)).first;
    return it->second;
}

Real integrate_fixed(const RealFn& f, const Real& a, const Real& b,
                     const GaussLegendreRule& rule) {
    const mpfr_prec_t prec = std::max(a.precision(), b.precision());
    const Real half_len = (b - a) / 2;
    const Real mid = (a + b) / 2;
    std::vector<Real> terms;
    terms.reserve(rule.nodes.size());
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        terms.push_back(rule.weights[i] * f(mid + half_len * rule.nodes[i]));
    return compensated_sum(terms, prec) * half_len;
}

namespace {

void adapt(const RealFn& f, const Real& a, const Real& b, const Real& whole, const Real& tol,
           const GaussLegendreRule& rule, int depth, AdaptiveResult& out) {
    const Real mid = (a + b) / 2;
    const Real left = integrate_fixed(f, a, mid, rule);
    const Real right = integrate_fixed(f, mid, b, rule);
    const Real refined = left + right;
    const Real err = abs(whole - refined);
    if (err <= tol || depth <= 0) {
        out.value += refined;
        out.error_bound += err;
        out.intervals += 2;
        if (depth <= 0 && !(err <= tol)) out.converged = false;
        return;
    }
    const Real half_tol = tol / 2;
    adapt(f, a, mid, left, half_tol, rule, depth - 1, out);
    adapt(f, mid, b, right, half_tol, rule, depth - 1, out);
}

}  // namespace

AdaptiveResult integrate_adaptive(const RealFn& f, const Real& a, const Real& b,
                                  const Real& abs_tol, mpfr_prec_t prec, int points,
                                  int max_depth) {
    const GaussLegendreRule& rule = gauss_legendre(points, prec);
    AdaptiveResult out;
    out.value = Real(prec);
    out.error_bound = Real(prec);
    const Real whole = integrate_fixed(f, a.to_precision(prec), b.to_precision(prec), rule);
    adapt(f, a.to_precision(prec), b.to_precision(prec), whole, abs_tol, rule, max_depth, out);
    return out;
}

}  // namespace spacings
