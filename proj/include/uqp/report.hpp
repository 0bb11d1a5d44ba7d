#pragma once

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "uqp/matrix.hpp"
#include "uqp/weightfn.hpp"

namespace uqp {

struct CheckEntry {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Echo of the parameters a report was produced with.
struct ReportParams {
    std::string subject; ///< "irrep" or "coproduct"
    ChiKind kind = ChiKind::standard;
    Scalar q, p, beta;
    int eta = 0;
    std::optional<HalfInt> j, j1, j2;
    int truncation_order = 0;
};

struct CheckReport {
    ReportParams params;
    std::vector<CheckEntry> checks;

    void add(std::string name, double residual, double tolerance) {
        // NaN residuals never pass.
        const bool pass = residual <= tolerance;
        checks.push_back({std::move(name), residual, tolerance, pass});
    }
    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.pass; });
    }
    const CheckEntry* find(std::string_view name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

/// Max-norm of `diff` divided by 1 + the largest entry among the inputs.
inline double scaled_residual(const Matrix& diff, std::initializer_list<const Matrix*> inputs) {
    double scale = 0.0;
    for (const Matrix* m : inputs) scale = std::max(scale, max_abs(*m));
    if (!all_finite(diff)) return std::numeric_limits<double>::infinity();
    return max_abs(diff) / (1.0 + scale);
}

} // namespace uqp
