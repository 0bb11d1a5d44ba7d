#pragma once

#include <optional>

#include "uqp/matrix.hpp"
#include "uqp/report.hpp"
#include "uqp/weightfn.hpp"

namespace uqp {

/// (2j+1)-dimensional representation in the basis m = j, j-1, ..., -j
/// (basis index i holds weight m = j - i). Operators act on coordinate columns.
struct Irrep {
    HalfInt j;
    int eta = 0;
    Scalar q;
    Matrix K2, K2inv;          ///< q^{2J0}, q^{-2J0}
    Matrix Jplus, Jminus;      ///< U_q(sl(2)) ladder operators
    Matrix JhatPlus, JhatMinus; ///< mapped ladder operators (empty until build_mapped)
    Matrix C, Chat;            ///< classical and deformed Casimirs
    std::optional<PsiSeries> psi;

    int dim() const { return j.twice() + 1; }
    HalfInt weight(int index) const { return j - HalfInt::integer(index); }
    bool mapped() const { return psi.has_value(); }
};

inline void require_eta(int eta) {
    if (eta < -1 || eta > 1) throw invalid_argument_error("eta must be -1, 0 or +1, got " + std::to_string(eta));
}

/// x^{(1 + sign*eta)/2}: the exponent is 0, 1/2 (principal root) or 1.
inline Scalar ladder_factor(Scalar x, int eta, int sign) {
    switch (1 + sign * eta) {
    case 0: return {1.0, 0.0};
    case 1: return std::sqrt(x);
    default: return x;
    }
}

/// U_q(sl(2)) irrep with J+ |m> = ([j][j+1] - [m][m+1])^{(1+eta)/2} |m+1>
/// and J- |m> = ([j][j+1] - [m][m-1])^{(1-eta)/2} |m-1>.
inline Irrep build_classical(HalfInt j, int eta, Scalar q) {
    require_eta(eta);
    require_generic_q(q);
    if (j.twice() < 0) throw invalid_argument_error("spin must be nonnegative: " + j.str());
    Irrep rep;
    rep.j = j;
    rep.eta = eta;
    rep.q = q;
    const int d = rep.dim();
    rep.K2 = Matrix::Zero(d, d);
    rep.K2inv = Matrix::Zero(d, d);
    rep.Jplus = Matrix::Zero(d, d);
    rep.Jminus = Matrix::Zero(d, d);
    const Scalar cas = classical_casimir_value(j, q);
    for (int i = 0; i < d; ++i) {
        const HalfInt m = rep.weight(i);
        rep.K2(i, i) = int_pow(q, m.twice());
        rep.K2inv(i, i) = int_pow(q, -m.twice());
    }
    // Link between weights m (index i) and m+1 (index i-1).
    for (int i = 1; i < d; ++i) {
        const HalfInt m = rep.weight(i);
        const Scalar gap = cas - casimir_polynomial(m, q);
        rep.Jplus(i - 1, i) = ladder_factor(gap, eta, +1);
        rep.Jminus(i, i - 1) = ladder_factor(gap, eta, -1);
    }
    rep.C = rep.Jminus * rep.Jplus;
    for (int i = 0; i < d; ++i) rep.C(i, i) += casimir_polynomial(rep.weight(i), q);
    return rep;
}

/// Deformed Casimir C^ = J^- J^+ + psi(J0); requires the mapped generators.
inline Irrep build_casimirs(Irrep rep) {
    const int d = rep.dim();
    rep.C = rep.Jminus * rep.Jplus;
    for (int i = 0; i < d; ++i) rep.C(i, i) += casimir_polynomial(rep.weight(i), rep.q);
    if (rep.mapped()) {
        rep.Chat = rep.JhatMinus * rep.JhatPlus;
        for (int i = 0; i < d; ++i) rep.Chat(i, i) += eval_psi(*rep.psi, rep.weight(i));
    }
    return rep;
}

/// Applies the nonlinear map: J^+ |m> = (psi(j) - psi(m))^{(1+eta)/2} |m+1> and
/// J^- |m> = (psi(j) - psi(m-1))^{(1-eta)/2} |m-1>.
///
/// The lowering factor is evaluated at m-1 so that J^+ J^- - J^- J^+ = psi(m) - psi(m-1).
inline Irrep build_mapped(Irrep base, PsiSeries psi) {
    if (psi.q != base.q) throw invalid_argument_error("psi was solved at a different q than the irrep");
    const int d = base.dim();
    base.JhatPlus = Matrix::Zero(d, d);
    base.JhatMinus = Matrix::Zero(d, d);
    for (int i = 1; i < d; ++i) {
        const Scalar gap = psi_gap(psi, base.j, base.weight(i));
        base.JhatPlus(i - 1, i) = ladder_factor(gap, base.eta, +1);
        base.JhatMinus(i, i - 1) = ladder_factor(gap, base.eta, -1);
    }
    base.psi = std::move(psi);
    return build_casimirs(std::move(base));
}

inline Irrep make_irrep(HalfInt j, int eta, const PsiSeries& psi) {
    return build_mapped(build_classical(j, eta, psi.q), psi);
}

inline Matrix diagonal_of(const Irrep& rep, const auto& fn) {
    Matrix out = Matrix::Zero(rep.dim(), rep.dim());
    for (int i = 0; i < rep.dim(); ++i) out(i, i) = fn(rep.weight(i));
    return out;
}

/// Residuals of the defining relations of the mapped irrep. Every entry is always present.
inline CheckReport check_relations(const Irrep& rep, const WeightFunction& chi, const AlgebraParams& params) {
    if (!rep.mapped()) throw invalid_argument_error("check_relations needs a mapped irrep");
    CheckReport report;
    report.params = {"irrep", chi.kind, rep.q, params.p, params.beta, rep.eta, rep.j, {}, {}, chi.truncation_order};

    const Scalar q2 = rep.q * rep.q;
    const Matrix& Jp = rep.JhatPlus;
    const Matrix& Jm = rep.JhatMinus;

    Matrix d = rep.K2 * Jp * rep.K2inv - q2 * Jp;
    report.add("grading_plus", scaled_residual(d, {&Jp}), params.grading_tol());
    d = rep.K2 * Jm * rep.K2inv - Jm / q2;
    report.add("grading_minus", scaled_residual(d, {&Jm}), params.grading_tol());

    const Matrix chi_diag = diagonal_of(rep, [&](HalfInt m) { return chi.evaluate(m); });
    d = commutator(Jp, Jm) - chi_diag;
    report.add("commutator_chi", scaled_residual(d, {&Jp, &Jm, &chi_diag}), params.match_tol);

    const Matrix bracket_diag = diagonal_of(rep, [&](HalfInt m) { return q_bracket(m + m, rep.q); });
    d = commutator(rep.Jplus, rep.Jminus) - bracket_diag;
    report.add("classical_commutator", scaled_residual(d, {&rep.Jplus, &rep.Jminus}), params.match_tol);

    const Scalar cas = classical_casimir_value(rep.j, rep.q);
    d = rep.C - cas * Matrix::Identity(rep.dim(), rep.dim());
    report.add("classical_casimir", scaled_residual(d, {&rep.C}), params.match_tol);

    const Scalar psi_j = eval_psi(*rep.psi, rep.j);
    d = rep.Chat - psi_j * Matrix::Identity(rep.dim(), rep.dim());
    report.add("casimir_eigenvalue", scaled_residual(d, {&rep.Chat}), params.match_tol);

    report.add("centrality_plus", scaled_residual(commutator(rep.Chat, Jp), {&rep.Chat, &Jp}), params.match_tol);
    report.add("centrality_minus", scaled_residual(commutator(rep.Chat, Jm), {&rep.Chat, &Jm}), params.match_tol);
    report.add("centrality_k2", scaled_residual(commutator(rep.Chat, rep.K2), {&rep.Chat, &rep.K2}),
               params.match_tol);

    const bool finite = all_finite(Jp) && all_finite(Jm) && all_finite(rep.Chat);
    report.add("finite", finite ? 0.0 : std::numeric_limits<double>::infinity(), 0.0);
    return report;
}

} // namespace uqp
