#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "uqp/hopf.hpp"
#include "uqp/irrep.hpp"
#include "uqp/oracle.hpp"
#include "uqp/report.hpp"

namespace uqp {

struct SuiteConfig {
    AlgebraParams params;
    ChiKind kind = ChiKind::elliptic;
    std::optional<CoefficientTable> custom;
    std::optional<Scalar> c0;
    std::vector<HalfInt> spins;
    std::vector<std::pair<HalfInt, HalfInt>> pairs;
};

/// Irreps with 2j <= 9 and every tensor pair with 2j1, 2j2 <= 4.
inline SuiteConfig default_suite(AlgebraParams params, ChiKind kind) {
    SuiteConfig cfg;
    cfg.params = params;
    cfg.kind = kind;
    for (int t = 0; t <= 9; ++t) cfg.spins.push_back(HalfInt::from_twice(t));
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) cfg.pairs.emplace_back(HalfInt::from_twice(a), HalfInt::from_twice(b));
    return cfg;
}

/// Largest |2m| any check in the suite evaluates chi at (never below 10).
inline double suite_weight_bound(const SuiteConfig& cfg) {
    int twice = 10;
    for (HalfInt j : cfg.spins) twice = std::max(twice, j.twice());
    for (auto [a, b] : cfg.pairs) twice = std::max(twice, a.twice() + b.twice());
    return twice;
}

/// Runs every configured irrep and coproduct check in configuration order.
/// Construction failures become a failing "construction" entry instead of aborting the run.
inline std::vector<CheckReport> run_suite(const SuiteConfig& cfg) {
    cfg.params.validate();
    std::vector<CheckReport> reports;
    if (cfg.spins.empty() && cfg.pairs.empty()) return reports;

    const WeightFunction chi =
        make_chi(cfg.kind, cfg.params, suite_weight_bound(cfg), cfg.custom ? &*cfg.custom : nullptr);
    const PsiSeries psi = solve_psi(chi, cfg.c0);
    const int eta = cfg.params.eta;

    auto failed = [&](ReportParams rp, const error& e) {
        CheckReport r;
        r.params = std::move(rp);
        r.add(std::string("construction: ") + e.what(), std::numeric_limits<double>::infinity(), 0.0);
        return r;
    };

    for (HalfInt j : cfg.spins) {
        try {
            reports.push_back(check_relations(make_irrep(j, eta, psi), chi, cfg.params));
        } catch (const error& e) {
            reports.push_back(failed({"irrep", chi.kind, cfg.params.q, cfg.params.p, cfg.params.beta, eta, j, {}, {},
                                      chi.truncation_order},
                                     e));
        }
    }
    for (auto [j1, j2] : cfg.pairs) {
        try {
            TensorRep t = build_tensor(make_irrep(j1, eta, psi), make_irrep(j2, eta, psi), cfg.params.spectral_tol);
            t = build_induced_coproduct(std::move(t), psi);
            reports.push_back(check_coproduct(t, chi, cfg.params));
        } catch (const error& e) {
            reports.push_back(failed({"coproduct", chi.kind, cfg.params.q, cfg.params.p, cfg.params.beta, eta, {}, j1,
                                      j2, chi.truncation_order},
                                     e));
        }
    }
    return reports;
}

inline bool all_passed(const std::vector<CheckReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed(); });
}

} // namespace uqp
