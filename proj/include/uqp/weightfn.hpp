#pragma once

#include <cmath>
#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>

#include "uqp/arith.hpp"

namespace uqp {

enum class ChiKind { standard, beta, elliptic, custom };

inline std::string_view to_string(ChiKind kind) {
    switch (kind) {
    case ChiKind::standard: return "standard";
    case ChiKind::beta: return "beta";
    case ChiKind::elliptic: return "elliptic";
    case ChiKind::custom: return "custom";
    }
    return "?";
}

inline ChiKind parse_chi_kind(std::string_view text) {
    for (auto k : {ChiKind::standard, ChiKind::beta, ChiKind::elliptic, ChiKind::custom})
        if (to_string(k) == text) return k;
    throw invalid_argument_error("unknown chi kind: '" + std::string(text) + "'");
}

/// Laurent coefficient table in t = q^{2 J0}: k -> coefficient, k != 0.
using CoefficientTable = std::map<int, Scalar>;

/// The commutator right-hand side chi(J0) = sum_k b_k q^{2 k J0}.
struct WeightFunction {
    ChiKind kind = ChiKind::custom;
    Scalar q;
    CoefficientTable coeffs;
    /// Elliptic only: number of theta terms kept on each side (odd |k| <= 2N-1).
    int truncation_order = 0;
    /// Elliptic only: bound on the first omitted theta term at the certified weight.
    double truncation_bound = 0.0;
    double weight_bound = 0.0;

    Scalar evaluate_at(Scalar t) const {
        Scalar sum{0.0, 0.0};
        for (const auto& [k, b] : coeffs) sum += b * int_pow(t, k);
        return sum;
    }
    /// chi at J0 = m.
    Scalar evaluate(HalfInt m) const { return evaluate_at(int_pow(q, m.twice())); }
};

inline void validate_table(const CoefficientTable& table) {
    for (const auto& [k, b] : table) {
        if (k == 0) throw invalid_argument_error("coefficient table has an entry at k = 0");
        if (!std::isfinite(b.real()) || !std::isfinite(b.imag()))
            throw invalid_argument_error("coefficient at k = " + std::to_string(k) + " is not finite");
    }
}

/// chi = [2 J0], the undeformed commutator.
inline WeightFunction chi_standard(Scalar q) {
    require_generic_q(q);
    const Scalar inv_d = 1.0 / (q - 1.0 / q);
    return {ChiKind::standard, q, {{-1, -inv_d}, {1, inv_d}}};
}

/// Polynomial deformation chi = [2 J0] (1 + beta [J0]^2).
///
/// Coefficients: b_{+-1} = +-(1 - 2 beta / d^2) / d and b_{+-2} = +-beta / d^3 with
/// d = q - 1/q. This is the table whose transformed coefficients are
/// a_{+-1} = q^{+-1} d^-2 (1 - 2 beta d^-2) and a_{+-2} = q^{+-2} d^-4 beta / (q + 1/q).
/// beta = 0 returns exactly the standard table.
inline WeightFunction chi_beta(Scalar q, Scalar beta) {
    require_generic_q(q);
    const Scalar inv_d = 1.0 / (q - 1.0 / q);
    const Scalar inv_d3 = inv_d * inv_d * inv_d;
    const Scalar b1 = inv_d - 2.0 * beta * inv_d3;
    WeightFunction w{ChiKind::beta, q, {{-1, -b1}, {1, b1}}};
    if (beta != Scalar{0.0, 0.0}) {
        const Scalar b2 = beta * inv_d3;
        w.coeffs[-2] = -b2;
        w.coeffs[2] = b2;
    }
    return w;
}

/// Theta-series commutator sum_n (-1)^n q^{2 J0 (2n+1)} p^{(n+1/2)^2}.
///
/// Odd k = 2n+1 carries b_k = (-1)^n p^{k^2/4}, so b_{-k} = -b_k and even k vanish.
/// Terms n = -N .. N-1 are kept, with N the smallest order for which the first omitted
/// term |p|^{(N+1/2)^2} Q^{(2N+1) weight_bound}, Q = max(|q|, 1/|q|), drops below
/// trunc_tol. weight_bound is the largest |2m| at which chi will be evaluated.
inline WeightFunction chi_elliptic(Scalar q, Scalar p, double trunc_tol, double weight_bound) {
    require_generic_q(q);
    if (!(std::abs(p) < 1.0)) throw non_convergence_error("theta series needs |p| < 1");
    if (!(trunc_tol > 0.0)) throw invalid_argument_error("trunc_tol must be positive");
    if (weight_bound < 0.0) throw invalid_argument_error("weight_bound must be nonnegative");

    WeightFunction w{ChiKind::elliptic, q, {}};
    w.weight_bound = weight_bound;
    if (p == Scalar{0.0, 0.0}) return w;

    const double log_p = std::log(std::abs(p));
    const double log_q = std::abs(std::log(std::abs(q)));
    const double log_tol = std::log(trunc_tol);
    constexpr int max_order = 100000;
    int order = 0;
    auto log_term = [&](int n) { return (n + 0.5) * (n + 0.5) * log_p + (2 * n + 1) * weight_bound * log_q; };
    while (!(log_term(order) < log_tol)) {
        if (++order > max_order) throw non_convergence_error("theta series truncation order exceeds limit");
    }
    w.truncation_order = order;
    w.truncation_bound = std::exp(log_term(order));

    const Scalar log_p_c = std::log(p);
    for (int n = -order; n < order; ++n) {
        const int k = 2 * n + 1;
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        w.coeffs[k] = sign * std::exp(0.25 * k * k * log_p_c);
    }
    return w;
}

/// Arbitrary finite table supplied by the caller.
inline WeightFunction chi_custom(Scalar q, CoefficientTable table) {
    require_generic_q(q);
    validate_table(table);
    return {ChiKind::custom, q, std::move(table)};
}

/// Reads lines "k re im" (tab or space separated). Blank lines are skipped.
inline CoefficientTable read_coefficient_table(std::istream& in) {
    CoefficientTable table;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream fields(line);
        long k = 0;
        double re = 0.0, im = 0.0;
        std::string extra;
        if (!(fields >> k >> re >> im) || (fields >> extra))
            throw invalid_argument_error("coefficient file line " + std::to_string(lineno) + ": expected 'k re im'");
        if (k == 0) throw invalid_argument_error("coefficient file line " + std::to_string(lineno) + ": k must be nonzero");
        if (!table.emplace(static_cast<int>(k), Scalar{re, im}).second)
            throw invalid_argument_error("coefficient file line " + std::to_string(lineno) + ": duplicate k = " +
                                         std::to_string(k));
    }
    validate_table(table);
    return table;
}

/// psi(J0) = a0 + sum_k a_k q^{2 k J0}, the solution of psi(m) - psi(m-1) = chi(m).
struct PsiSeries {
    Scalar q;
    CoefficientTable coeffs;
    Scalar a0{0.0, 0.0};
    std::optional<Scalar> c0;

    /// Non-constant part at t = q^{2 J}.
    Scalar varying_at(Scalar t) const {
        Scalar sum{0.0, 0.0};
        for (const auto& [k, a] : coeffs) sum += a * int_pow(t, k);
        return sum;
    }
    Scalar at(Scalar t) const { return a0 + varying_at(t); }
};

/// a_k = q^k b_k / (q^k - q^-k) for every k in the table; a0 = 0 unless c0 is given,
/// in which case a0 = c0 - sum_k b_k / (q^k - q^-k) (so that psi(-1/2) = c0).
inline PsiSeries solve_psi(const WeightFunction& chi, std::optional<Scalar> c0 = std::nullopt) {
    const Scalar q = chi.q;
    require_generic_q(q);
    PsiSeries psi{q, {}, {0.0, 0.0}, c0};
    Scalar offset{0.0, 0.0};
    for (const auto& [k, b] : chi.coeffs) {
        const Scalar qk = int_pow(q, k);
        const Scalar gap = qk - 1.0 / qk;
        if (std::abs(gap) < 1e-13 * std::max(1.0, std::abs(qk)))
            throw resonance_error("q^k = q^-k at k = " + std::to_string(k));
        psi.coeffs[k] = qk * b / gap;
        offset += b / gap;
    }
    if (c0) psi.a0 = *c0 - offset;
    return psi;
}

inline Scalar eval_psi(const PsiSeries& psi, HalfInt m) { return psi.at(int_pow(psi.q, m.twice())); }

/// psi(hi) - psi(lo) without the constant a0, so the result does not depend on it.
inline Scalar psi_gap(const PsiSeries& psi, HalfInt hi, HalfInt lo) {
    return psi.varying_at(int_pow(psi.q, hi.twice())) - psi.varying_at(int_pow(psi.q, lo.twice()));
}

/// phi(c) = psi(J_op) where c = [J_op][J_op+1]; J_op need not be a half-integer.
inline Scalar eval_phi_of_casimir(const PsiSeries& psi, Scalar c) { return psi.at(invert_casimir(c, psi.q)); }

/// phi'(y) at y = [m][m+1], from the term-by-term derivative of psi:
/// d psi / d [J][J+1] = d^2 sum_k k a_k t^k / (q t - 1/(q t)), t = q^{2m}.
inline Scalar phi_derivative(const PsiSeries& psi, HalfInt m) {
    const Scalar q = psi.q;
    const Scalar t = int_pow(q, m.twice());
    const Scalar d = q - 1.0 / q;
    Scalar num{0.0, 0.0};
    for (const auto& [k, a] : psi.coeffs) num += static_cast<double>(k) * a * int_pow(t, k);
    const Scalar den = q * t - 1.0 / (q * t);
    if (std::abs(den) < 1e-300) throw degenerate_discriminant_error("phi' undefined at weight " + m.str());
    return d * d * num / den;
}

/// Builds chi of the requested kind from the shared parameters.
inline WeightFunction make_chi(ChiKind kind, const AlgebraParams& params, double weight_bound,
                               const CoefficientTable* custom = nullptr) {
    switch (kind) {
    case ChiKind::standard: return chi_standard(params.q);
    case ChiKind::beta: return chi_beta(params.q, params.beta);
    case ChiKind::elliptic: return chi_elliptic(params.q, params.p, params.trunc_tol, weight_bound);
    case ChiKind::custom:
        if (!custom) throw invalid_argument_error("custom chi requires a coefficient table");
        return chi_custom(params.q, *custom);
    }
    throw invalid_argument_error("unknown chi kind");
}

} // namespace uqp
