#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace spacings {

struct VerifyCheck {
    std::string name;
    std::uint64_t cases = 0;
    bool pass = true;
    std::string detail;  // offending tuple / residual on failure
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void append(VerifyReport other) {
        for (auto& c : other.checks) checks.push_back(std::move(c));
    }
};

struct VerifyRanges {
    long identities_n_max = 60;
    int identities_m_max = 10;
    long script_h_n_max = 50;
    int script_h_s_max = 10;
    long induction_n_max = 30;
    int induction_s_max = 8;
    int lemma1_exact_n_max = 12;
    int lemma1_tuples = 100;     // random tuples checked against quadrature
    long lemma2_n_max = 20;
    int lemma2_m_max = 5;
    int lemma4_m_max = 12;
    long theorem_n_max = 30;
    int theorem_m_max = 6;
    long quadrature_n_max = 20;  // moment quadrature cross-check
    int quadrature_m_max = 4;
    std::uint64_t seed = 20240901;
};

// Exact residuals of the three binomial identities over the full grid.
VerifyReport verify_identities(const VerifyRanges& r);

// Triple agreement of the partition quantity, the induction-step identity,
// the closed integral forms against exact/quadrature oracles, and the
// exp-series/cumulant transform contracts.
VerifyReport verify_lemmas(const VerifyRanges& r);

// The moment formula reconstructed from the sum-of-integrals route, plus
// quadrature and moment-inequality cross-checks.
VerifyReport verify_theorem(const VerifyRanges& r);

VerifyReport verify_all(const VerifyRanges& r);

}  // namespace spacings
