#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Eigenvalues>

#include "uqp/irrep.hpp"
#include "uqp/oracle.hpp"

namespace uqp {

/// Product-basis indices sharing one total weight M = m1 + m2.
struct WeightBlock {
    HalfInt weight;
    std::vector<int> indices;
};

/// Eigen-decomposition of the coupled Casimir restricted to one weight block.
/// Column k of `vectors` spans the coupled-spin `spins[k]` line of the block.
struct BlockSpectrum {
    Matrix vectors, inverse;
    std::vector<HalfInt> spins;
    std::vector<Scalar> eigenvalues; ///< as measured by the eigensolver
};

/// Tensor product of two irreps with the U_q(sl(2)) coproduct
///   Delta J0 = J0 x 1 + 1 x J0,  Delta J+- = J+- x q^{J0} + q^{-J0} x J+-.
/// Product index is i1 * dim(right) + i2.
struct TensorRep {
    Irrep left, right;
    std::vector<HalfInt> weights;
    Matrix DJ0exp, DJ0expInv; ///< q^{2 Delta J0} and its inverse
    Matrix DJplus, DJminus, DC;
    Matrix DJhatPlus, DJhatMinus; ///< empty until build_induced_coproduct
    std::vector<WeightBlock> blocks; ///< ordered by decreasing weight
    std::vector<BlockSpectrum> spectra; ///< parallel to blocks
    std::optional<PsiSeries> psi;
    double spectral_tol = 1e-8;

    int dim() const { return static_cast<int>(weights.size()); }
    HalfInt min_spin() const { return abs(left.j - right.j); }
    HalfInt max_spin() const { return left.j + right.j; }
    bool induced() const { return psi.has_value(); }
};

namespace detail {

inline Matrix half_power_diag(const Irrep& rep, int sign) {
    Matrix out = Matrix::Zero(rep.dim(), rep.dim());
    for (int i = 0; i < rep.dim(); ++i) out(i, i) = q_pow(rep.q, sign > 0 ? rep.weight(i) : -rep.weight(i));
    return out;
}

/// Matches the block eigenvalues against [J][J+1] for the spins J >= |M| present in
/// the decomposition; the assignment must be one-to-one.
inline BlockSpectrum decompose_block(const TensorRep& t, const WeightBlock& block) {
    const auto n = static_cast<Eigen::Index>(block.indices.size());
    Matrix sub(n, n);
    for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b) sub(a, b) = t.DC(block.indices[a], block.indices[b]);

    std::vector<HalfInt> candidates;
    for (HalfInt J = std::max(t.min_spin(), abs(block.weight)); J <= t.max_spin(); J = J + 1) candidates.push_back(J);
    if (static_cast<Eigen::Index>(candidates.size()) != n)
        throw identification_error("weight block " + block.weight.str() + " has unexpected size");

    Eigen::ComplexEigenSolver<Matrix> solver(sub, true);
    if (solver.info() != Eigen::Success) throw non_convergence_error("block eigensolver did not converge");

    std::vector<int> assigned(n, -1);
    for (Eigen::Index k = 0; k < n; ++k) {
        const Scalar lambda = solver.eigenvalues()(k);
        int best = -1;
        double best_dist = 0.0;
        for (int c = 0; c < static_cast<int>(n); ++c) {
            const Scalar target = classical_casimir_value(candidates[c], t.left.q);
            const double dist = std::abs(lambda - target) / (1.0 + std::abs(target));
            if (best < 0 || dist < best_dist) {
                best = c;
                best_dist = dist;
            }
        }
        if (best_dist > t.spectral_tol)
            throw identification_error("coupled Casimir eigenvalue at weight " + block.weight.str() +
                                       " matches no [J][J+1] within spectral_tol");
        if (assigned[best] >= 0)
            throw identification_error("two eigenvalues at weight " + block.weight.str() + " match spin " +
                                       candidates[best].str());
        assigned[best] = static_cast<int>(k);
    }

    // Columns ordered by decreasing spin.
    BlockSpectrum spec;
    spec.vectors.resize(n, n);
    for (Eigen::Index c = 0; c < n; ++c) {
        const auto src = assigned[n - 1 - c];
        spec.vectors.col(c) = solver.eigenvectors().col(src);
        spec.spins.push_back(candidates[n - 1 - c]);
        spec.eigenvalues.push_back(solver.eigenvalues()(src));
    }
    spec.inverse = spec.vectors.partialPivLu().inverse();
    return spec;
}

} // namespace detail

/// Base part of the tensor product: coproducts of J0, J+- and the coupled Casimir
/// DC = (Delta J-)(Delta J+) + [Delta J0][Delta J0 + 1], plus its weight-block spectra.
inline TensorRep build_tensor(const Irrep& left, const Irrep& right, double spectral_tol = 1e-8) {
    if (left.q != right.q) throw invalid_argument_error("tensor factors were built at different q");
    if (left.eta != right.eta) throw invalid_argument_error("tensor factors use different eta conventions");
    TensorRep t;
    t.left = left;
    t.right = right;
    t.spectral_tol = spectral_tol;
    const Scalar q = left.q;

    const Matrix Kl_inv = detail::half_power_diag(left, -1);
    const Matrix Kr = detail::half_power_diag(right, +1);
    t.DJ0exp = kron(left.K2, right.K2);
    t.DJ0expInv = kron(left.K2inv, right.K2inv);
    t.DJplus = kron(left.Jplus, Kr) + kron(Kl_inv, right.Jplus);
    t.DJminus = kron(left.Jminus, Kr) + kron(Kl_inv, right.Jminus);

    for (int a = 0; a < left.dim(); ++a)
        for (int b = 0; b < right.dim(); ++b) t.weights.push_back(left.weight(a) + right.weight(b));

    t.DC = t.DJminus * t.DJplus;
    for (int i = 0; i < t.dim(); ++i) t.DC(i, i) += casimir_polynomial(t.weights[i], q);

    std::map<HalfInt, std::vector<int>, std::greater<>> by_weight;
    for (int i = 0; i < t.dim(); ++i) by_weight[t.weights[i]].push_back(i);
    for (auto& [w, idx] : by_weight) t.blocks.push_back({w, std::move(idx)});
    for (const auto& block : t.blocks) t.spectra.push_back(detail::decompose_block(t, block));
    return t;
}

/// A point of the joint spectrum of (DC, Delta J0).
struct SpectralPoint {
    HalfInt spin;    ///< coupled J identified for the eigenvalue
    HalfInt weight;  ///< total weight M of the block
    Scalar casimir;  ///< exact [J][J+1]
    Scalar measured; ///< eigensolver value
};

using SpectralFunction = std::function<Scalar(const SpectralPoint&)>;

/// f(DC, Delta J0) assembled blockwise as V diag(f) V^-1.
inline Matrix coupled_spectral_function(const TensorRep& t, const SpectralFunction& f) {
    Matrix out = Matrix::Zero(t.dim(), t.dim());
    for (std::size_t b = 0; b < t.blocks.size(); ++b) {
        const auto& block = t.blocks[b];
        const auto& spec = t.spectra[b];
        const auto n = static_cast<Eigen::Index>(block.indices.size());
        Vector values(n);
        for (Eigen::Index k = 0; k < n; ++k)
            values(k) = f({spec.spins[k], block.weight, classical_casimir_value(spec.spins[k], t.left.q),
                           spec.eigenvalues[k]});
        const Matrix sub = spec.vectors * values.asDiagonal() * spec.inverse;
        for (Eigen::Index a = 0; a < n; ++a)
            for (Eigen::Index c = 0; c < n; ++c) out(block.indices[a], block.indices[c]) = sub(a, c);
    }
    return out;
}

/// Divided difference (phi(c) - phi(y)) / (c - y) with c = [J][J+1], y = [M][M+1];
/// at J = M it is the limit phi'(y).
inline Scalar divided_difference(const PsiSeries& psi, HalfInt spin, HalfInt weight) {
    if (spin == weight) return phi_derivative(psi, weight);
    const Scalar c = classical_casimir_value(spin, psi.q);
    return psi_gap(psi, spin, weight) / (c - casimir_polynomial(weight, psi.q));
}

/// Delta J^+ = (Delta J+) R^{(1+eta)/2}, Delta J^- = R^{(1-eta)/2} (Delta J-), where R is the
/// divided-difference operator of the commuting pair (DC, Delta J0).
inline TensorRep build_induced_coproduct(TensorRep t, PsiSeries psi) {
    if (psi.q != t.left.q) throw invalid_argument_error("psi was solved at a different q than the tensor factors");
    const int eta = t.left.eta;
    const Matrix r_plus = coupled_spectral_function(
        t, [&](const SpectralPoint& pt) { return ladder_factor(divided_difference(psi, pt.spin, pt.weight), eta, +1); });
    const Matrix r_minus = coupled_spectral_function(
        t, [&](const SpectralPoint& pt) { return ladder_factor(divided_difference(psi, pt.spin, pt.weight), eta, -1); });
    t.DJhatPlus = t.DJplus * r_plus;
    t.DJhatMinus = r_minus * t.DJminus;
    t.psi = std::move(psi);
    return t;
}

/// phi(DC) = psi(J) on each coupled-spin eigenspace.
inline Matrix phi_of_coupled_casimir(const TensorRep& t) {
    if (!t.induced()) throw invalid_argument_error("tensor rep has no psi attached");
    return coupled_spectral_function(t, [&](const SpectralPoint& pt) { return eval_psi(*t.psi, pt.spin); });
}

/// Projector onto the coupled-spin-J eigenspace of DC.
inline Matrix spin_projector(const TensorRep& t, HalfInt spin) {
    return coupled_spectral_function(t, [&](const SpectralPoint& pt) {
        return pt.spin == spin ? Scalar{1.0, 0.0} : Scalar{0.0, 0.0};
    });
}

/// Second construction of the induced coproduct: the product basis is re-expressed
/// in coupled multiplets (highest-weight eigenvector of DC, then repeated Delta J-
/// normalised to the spin-J matrix elements) and the spin-J mapped irreps are
/// conjugated back. `base_plus/minus` reproduce Delta J+- by the same route.
struct ConjugatedCoproduct {
    Matrix basis;
    Matrix plus, minus;
    Matrix base_plus, base_minus;
};

inline ConjugatedCoproduct induced_by_conjugation(const TensorRep& t, const PsiSeries& psi) {
    const int d = t.dim();
    ConjugatedCoproduct out;
    out.basis = Matrix::Zero(d, d);
    Matrix hat_p = Matrix::Zero(d, d), hat_m = Matrix::Zero(d, d);
    Matrix base_p = Matrix::Zero(d, d), base_m = Matrix::Zero(d, d);
    int offset = 0;
    for (HalfInt J = t.max_spin(); J >= t.min_spin(); J = J - 1) {
        const auto b = static_cast<std::size_t>(
            std::find_if(t.blocks.begin(), t.blocks.end(), [&](const WeightBlock& w) { return w.weight == J; }) -
            t.blocks.begin());
        const auto& spec = t.spectra.at(b);
        const auto col = std::find(spec.spins.begin(), spec.spins.end(), J) - spec.spins.begin();
        Vector v = Vector::Zero(d);
        for (std::size_t a = 0; a < t.blocks[b].indices.size(); ++a)
            v(t.blocks[b].indices[a]) = spec.vectors(static_cast<Eigen::Index>(a), col);

        const Irrep irrep = make_irrep(J, t.left.eta, psi);
        out.basis.col(offset) = v;
        for (int k = 1; k < irrep.dim(); ++k) {
            v = t.DJminus * v / irrep.Jminus(k, k - 1);
            out.basis.col(offset + k) = v;
        }
        const int n = irrep.dim();
        hat_p.block(offset, offset, n, n) = irrep.JhatPlus;
        hat_m.block(offset, offset, n, n) = irrep.JhatMinus;
        base_p.block(offset, offset, n, n) = irrep.Jplus;
        base_m.block(offset, offset, n, n) = irrep.Jminus;
        offset += n;
    }
    const Matrix inv = out.basis.partialPivLu().inverse();
    out.plus = out.basis * hat_p * inv;
    out.minus = out.basis * hat_m * inv;
    out.base_plus = out.basis * base_p * inv;
    out.base_minus = out.basis * base_m * inv;
    return out;
}

namespace detail {

/// Over all words of length 1..max_len in three letters: max |tr(P w(A)) - tr(w(B))| / (1 + |tr(w(B))|).
inline double word_trace_mismatch(const Matrix& proj, const std::array<const Matrix*, 3>& tensor_ops,
                                  const std::array<const Matrix*, 3>& irrep_ops, int max_len) {
    double worst = 0.0;
    std::function<void(const Matrix&, const Matrix&, int)> walk = [&](const Matrix& wt, const Matrix& wi, int len) {
        if (len > 0) {
            const Scalar lhs = (proj * wt).trace();
            const Scalar rhs = wi.trace();
            worst = std::max(worst, std::abs(lhs - rhs) / (1.0 + std::abs(rhs)));
        }
        if (len == max_len) return;
        for (int letter = 0; letter < 3; ++letter)
            walk(wt * *tensor_ops[letter], wi * *irrep_ops[letter], len + 1);
    };
    walk(Matrix::Identity(proj.rows(), proj.cols()),
         Matrix::Identity(irrep_ops[0]->rows(), irrep_ops[0]->cols()), 0);
    return worst;
}

} // namespace detail

/// Residuals for the induced coproduct. Every entry is always present.
inline CheckReport check_coproduct(const TensorRep& t, const WeightFunction& chi, const AlgebraParams& params) {
    if (!t.induced()) throw invalid_argument_error("check_coproduct needs the induced coproduct");
    const PsiSeries& psi = *t.psi;
    const Scalar q = t.left.q;
    const int d = t.dim();
    CheckReport report;
    report.params = {"coproduct", chi.kind, q, params.p, params.beta, t.left.eta, {}, t.left.j, t.right.j,
                     chi.truncation_order};

    const Matrix& Jp = t.DJhatPlus;
    const Matrix& Jm = t.DJhatMinus;
    const Scalar q2 = q * q;

    Matrix diff = t.DJ0exp * Jp * t.DJ0expInv - q2 * Jp;
    report.add("grading_plus", scaled_residual(diff, {&Jp}), params.match_tol);
    diff = t.DJ0exp * Jm * t.DJ0expInv - Jm / q2;
    report.add("grading_minus", scaled_residual(diff, {&Jm}), params.match_tol);

    Matrix chi_diag = Matrix::Zero(d, d), bracket_diag = Matrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        chi_diag(i, i) = chi.evaluate(t.weights[i]);
        bracket_diag(i, i) = q_bracket(t.weights[i] + t.weights[i], q);
    }
    diff = commutator(Jp, Jm) - chi_diag;
    report.add("commutator_chi", scaled_residual(diff, {&Jp, &Jm, &chi_diag}), params.coproduct_tol());

    diff = commutator(t.DJplus, t.DJminus) - bracket_diag;
    report.add("base_commutator", scaled_residual(diff, {&t.DJplus, &t.DJminus}), params.match_tol);
    report.add("casimir_weight_commute", scaled_residual(commutator(t.DC, t.DJ0exp), {&t.DC, &t.DJ0exp}),
               params.match_tol);

    // Spectrum of DC from an eigensolve of the whole matrix, matched greedily.
    {
        std::vector<Scalar> measured = oracle_eigensolve(t.DC, params.spectral_tol);
        std::vector<bool> used(measured.size(), false);
        double worst = 0.0, scale = 0.0;
        for (HalfInt J = t.min_spin(); J <= t.max_spin(); J = J + 1) {
            const Scalar c = classical_casimir_value(J, q);
            scale = std::max(scale, std::abs(c));
            for (int mult = 0; mult < J.twice() + 1; ++mult) {
                std::size_t best = measured.size();
                for (std::size_t k = 0; k < measured.size(); ++k)
                    if (!used[k] && (best == measured.size() || std::abs(measured[k] - c) < std::abs(measured[best] - c)))
                        best = k;
                used[best] = true;
                worst = std::max(worst, std::abs(measured[best] - c));
            }
        }
        report.add("dc_spectrum", worst / (1.0 + scale), params.spectral_tol);
    }

    {
        const Matrix phi = phi_of_coupled_casimir(t);
        double worst = scaled_residual(commutator(phi, Jp), {&phi, &Jp});
        worst = std::max(worst, scaled_residual(commutator(phi, Jm), {&phi, &Jm}));
        worst = std::max(worst, scaled_residual(commutator(phi, t.DJ0exp), {&phi, &t.DJ0exp}));
        report.add("centrality_phi", worst, params.coproduct_tol());
    }

    {
        double worst = 0.0;
        for (HalfInt J = t.min_spin(); J <= t.max_spin(); J = J + 1) {
            const Irrep irrep = make_irrep(J, t.left.eta, psi);
            const Matrix proj = spin_projector(t, J);
            worst = std::max(worst, detail::word_trace_mismatch(proj, {&Jp, &Jm, &t.DJ0exp},
                                                                {&irrep.JhatPlus, &irrep.JhatMinus, &irrep.K2}, 4));
        }
        report.add("block_word_traces", worst, params.spectral_tol);
    }

    {
        const ConjugatedCoproduct alt = induced_by_conjugation(t, psi);
        const Matrix dp = Jp - alt.plus, dm = Jm - alt.minus;
        const double worst = std::max(scaled_residual(dp, {&Jp}), scaled_residual(dm, {&Jm}));
        report.add("conjugation_oracle", worst, params.spectral_tol);
    }

    {
        // Highest-weight vector of each coupled multiplet is annihilated by Delta J^+.
        double worst = 0.0;
        for (std::size_t b = 0; b < t.blocks.size(); ++b) {
            const auto& spec = t.spectra[b];
            for (std::size_t k = 0; k < spec.spins.size(); ++k) {
                if (spec.spins[k] != t.blocks[b].weight) continue;
                Vector v = Vector::Zero(d);
                for (std::size_t a = 0; a < t.blocks[b].indices.size(); ++a)
                    v(t.blocks[b].indices[a]) = spec.vectors(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(k));
                worst = std::max(worst, (Jp * v).norm() / (v.norm() * (1.0 + max_abs(Jp))));
            }
        }
        report.add("highest_weight_annihilation", worst, params.coproduct_tol());
    }

    const bool finite = all_finite(Jp) && all_finite(Jm);
    report.add("finite", finite ? 0.0 : std::numeric_limits<double>::infinity(), 0.0);
    return report;
}

/// Generators whose counit and antipode are transported through the map.
enum class Generator { K, Kinv, Jplus, Jminus, JhatPlus, JhatMinus };

/// epsilon(q^{+-J0}) = 1, epsilon(J+-) = 0; the mapped ladder operators inherit 0.
inline Scalar counit(Generator g) {
    return (g == Generator::K || g == Generator::Kinv) ? Scalar{1.0, 0.0} : Scalar{0.0, 0.0};
}

/// The counit as a representation: the spin-0 mapped irrep.
inline Irrep counit_representation(int eta, const PsiSeries& psi) { return make_irrep(HalfInt{}, eta, psi); }

/// S(q^{J0}) = q^{-J0}, S(J+-) = -q^{+-1} J+- evaluated on `rep`.
/// The induced antipode of the mapped generators is not determined and is rejected.
inline Matrix antipode(const Irrep& rep, Generator g) {
    switch (g) {
    case Generator::K: return detail::half_power_diag(rep, -1);
    case Generator::Kinv: return detail::half_power_diag(rep, +1);
    case Generator::Jplus: return -rep.q * rep.Jplus;
    case Generator::Jminus: return -rep.Jminus / rep.q;
    case Generator::JhatPlus:
    case Generator::JhatMinus: break;
    }
    throw invalid_argument_error("antipode of the mapped ladder operators has no determined formula");
}

} // namespace uqp
