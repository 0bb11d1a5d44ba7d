#include <algorithm>

#include <gtest/gtest.h>

#include "hp_oracle.hpp"
#include "uqp/hopf.hpp"

using namespace uqp;
using namespace uqp::testing;

namespace {
const Scalar q12{1.2, 0.0};
const Scalar p01{0.1, 0.0};
HalfInt h(int twice) { return HalfInt::from_twice(twice); }

const WeightFunction& elliptic() {
    static const WeightFunction chi = chi_elliptic(q12, p01, 1e-16, 10.0);
    return chi;
}
const PsiSeries& elliptic_psi() {
    static const PsiSeries psi = solve_psi(elliptic());
    return psi;
}

TensorRep induced(int t1, int t2, const PsiSeries& psi, int eta = 0) {
    TensorRep t = build_tensor(make_irrep(h(t1), eta, psi), make_irrep(h(t2), eta, psi));
    return build_induced_coproduct(std::move(t), psi);
}
} // namespace

TEST(BuildTensor, TrivialPair) {
    const auto t = induced(0, 0, elliptic_psi());
    ASSERT_EQ(t.dim(), 1);
    EXPECT_EQ(t.DC(0, 0), Scalar(0.0));
    EXPECT_EQ(t.DJhatPlus(0, 0), Scalar(0.0));
}

TEST(BuildTensor, HalfHalfWeightsAndSpectrum) {
    const auto t = build_tensor(build_classical(h(1), 0, q12), build_classical(h(1), 0, q12));
    ASSERT_EQ(t.dim(), 4);
    const std::vector<int> expected_twice{2, 0, 0, -2};
    for (int i = 0; i < 4; ++i) {
        EXPECT_EQ(t.weights[i].twice(), expected_twice[i]);
        EXPECT_NEAR(std::abs(t.DJ0exp(i, i) - int_pow(q12, expected_twice[i])), 0.0, 1e-15);
    }
    auto values = oracle_eigensolve(t.DC, 1e-10);
    std::sort(values.begin(), values.end(), [](Scalar a, Scalar b) { return a.real() < b.real(); });
    EXPECT_NEAR(std::abs(values[0]), 0.0, 1e-12);
    for (int k = 1; k < 4; ++k) EXPECT_NEAR(values[k].real(), 2.0333333333333333198, 1e-12);
    ASSERT_EQ(t.blocks.size(), 3u);
    EXPECT_EQ(t.blocks[1].indices, (std::vector<int>{1, 2}));
}

TEST(BuildTensor, WeightAdditivity) {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            const auto left = build_classical(h(a), 0, q12), right = build_classical(h(b), 0, q12);
            const auto t = build_tensor(left, right);
            for (int i = 0; i < left.dim(); ++i)
                for (int j = 0; j < right.dim(); ++j) {
                    const int idx = i * right.dim() + j;
                    EXPECT_EQ(t.weights[idx], left.weight(i) + right.weight(j));
                    EXPECT_LE(std::abs(t.DJ0exp(idx, idx) - left.K2(i, i) * right.K2(j, j)), 1e-14);
                }
        }
}

TEST(BuildTensor, SpectrumMultiplicities) {
    for (int eta : {-1, 0, 1})
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b) {
                const auto t = build_tensor(build_classical(h(a), eta, q12), build_classical(h(b), eta, q12));
                std::vector<int> count(a + b + 1, 0);
                for (const auto& spec : t.spectra)
                    for (HalfInt J : spec.spins) ++count[J.twice()];
                for (int J = std::abs(a - b); J <= a + b; J += 2) EXPECT_EQ(count[J], J + 1) << a << "x" << b;
            }
}

TEST(BuildTensor, MismatchedFactorsRejected) {
    EXPECT_THROW(build_tensor(build_classical(h(1), 0, q12), build_classical(h(1), 1, q12)), invalid_argument_error);
    EXPECT_THROW(build_tensor(build_classical(h(1), 0, q12), build_classical(h(1), 0, Scalar(1.3))),
                 invalid_argument_error);
}

TEST(BuildTensor, IdentificationFailureReported) {
    auto left = build_classical(h(1), 0, q12);
    left.Jplus(0, 1) *= 1.5; // no longer a representation: DC eigenvalues move off [J][J+1]
    left.Jminus(1, 0) *= 1.5;
    EXPECT_THROW(build_tensor(left, build_classical(h(1), 0, q12)), identification_error);
}

TEST(SpectralFunction, ConstantAndReconstruction) {
    const auto t = build_tensor(build_classical(h(4), 0, q12), build_classical(h(3), 0, q12));
    const Matrix one = coupled_spectral_function(t, [](const SpectralPoint&) { return Scalar(1.0); });
    EXPECT_LE(max_abs(one - Matrix::Identity(t.dim(), t.dim())), 1e-12);
    const Matrix dc = coupled_spectral_function(t, [](const SpectralPoint& pt) { return pt.casimir; });
    EXPECT_LE(max_abs(dc - t.DC), 1e-8 * (1 + max_abs(t.DC)));
    EXPECT_LE(max_abs(commutator(dc, t.DJ0exp)), 1e-10);
}

TEST(SpectralFunction, PhiOfCasimirOnHalfHalf) {
    const auto t = build_tensor(build_classical(h(1), 0, q12), build_classical(h(1), 0, q12));
    const auto& psi = elliptic_psi();
    const Matrix f = coupled_spectral_function(t, [&](const SpectralPoint& pt) {
        return eval_phi_of_casimir(psi, pt.casimir);
    });
    // Spectrum {psi(0), psi(1) x 3}; the weight +-1 lines are pure spin 1.
    EXPECT_NEAR(std::abs(f(0, 0) - eval_psi(psi, h(2))), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(f(3, 3) - eval_psi(psi, h(2))), 0.0, 1e-10);
    auto values = oracle_eigensolve(f, 1e-10);
    std::sort(values.begin(), values.end(), [](Scalar a, Scalar b) { return a.real() < b.real(); });
    EXPECT_NEAR(values[0].real(), 3.1071525233333854019, 1e-10);
    for (int k = 1; k < 4; ++k) EXPECT_NEAR(values[k].real(), 3.5115044612128769915, 1e-10);
}

TEST(InducedCoproduct, IdentityMapForStandardChi) {
    const auto psi = solve_psi(chi_standard(q12));
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            const auto t = induced(a, b, psi);
            EXPECT_LE(max_abs(t.DJhatPlus - t.DJplus), 1e-9) << a << "x" << b;
            EXPECT_LE(max_abs(t.DJhatMinus - t.DJminus), 1e-9) << a << "x" << b;
        }
}

TEST(InducedCoproduct, HalfHalfCommutatorDiagonal) {
    const auto t = induced(1, 1, elliptic_psi());
    const Matrix comm = commutator(t.DJhatPlus, t.DJhatMinus);
    const double chi1 = lo(hp_theta(h(2), hp(1.2), hp(0.1), 30));
    const double expected[4] = {chi1, 0.0, 0.0, -chi1};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) EXPECT_NEAR(std::abs(comm(i, j) - (i == j ? expected[i] : 0.0)), 0.0, 1e-12);
    // Top product vector is annihilated.
    EXPECT_LE(t.DJhatPlus.col(0).norm(), 1e-14);
}

TEST(InducedCoproduct, ConjugationRouteAgrees) {
    for (int eta : {-1, 0, 1})
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b) {
                const auto t = induced(a, b, elliptic_psi(), eta);
                const auto alt = induced_by_conjugation(t, elliptic_psi());
                EXPECT_LE(max_abs(alt.base_plus - t.DJplus), 1e-9);
                EXPECT_LE(max_abs(alt.base_minus - t.DJminus), 1e-9);
                EXPECT_LE(max_abs(alt.plus - t.DJhatPlus), 1e-9) << eta << " " << a << "x" << b;
                EXPECT_LE(max_abs(alt.minus - t.DJhatMinus), 1e-9) << eta << " " << a << "x" << b;
            }
}

TEST(InducedCoproduct, NoNonFiniteEntriesAtCoincidingPoints) {
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            const auto t = induced(a, b, elliptic_psi());
            EXPECT_TRUE(all_finite(t.DJhatPlus));
            EXPECT_TRUE(all_finite(t.DJhatMinus));
        }
}

TEST(CheckCoproduct, AllPairsPass) {
    AlgebraParams params;
    for (int eta : {-1, 0, 1}) {
        params.eta = eta;
        for (int a = 0; a <= 4; ++a)
            for (int b = 0; b <= 4; ++b) {
                const auto report = check_coproduct(induced(a, b, elliptic_psi(), eta), elliptic(), params);
                for (const auto& c : report.checks)
                    EXPECT_TRUE(c.pass) << eta << " " << a << "x" << b << " " << c.name << " " << c.residual;
            }
    }
}

TEST(CheckCoproduct, TrivialPairAtRoundoff) {
    AlgebraParams params;
    const auto report = check_coproduct(induced(0, 0, elliptic_psi()), elliptic(), params);
    for (const auto& c : report.checks) EXPECT_LE(c.residual, 1e-15) << c.name;
}

TEST(CheckCoproduct, OneTimesHalf) {
    AlgebraParams params;
    const auto report = check_coproduct(induced(2, 1, elliptic_psi()), elliptic(), params);
    for (const auto& c : report.checks) EXPECT_LT(c.residual, 1e-9) << c.name;
    EXPECT_EQ(report.checks.size(), 11u);
}

TEST(CheckCoproduct, IdentityRatioFailsForElliptic) {
    AlgebraParams params;
    auto t = induced(1, 1, elliptic_psi());
    t.DJhatPlus = t.DJplus;
    t.DJhatMinus = t.DJminus;
    const auto report = check_coproduct(t, elliptic(), params);
    EXPECT_GE(report.find("commutator_chi")->residual, 1e-3);
    EXPECT_FALSE(report.passed());
}

TEST(Counit, TrivialFactorActsAsIdentity) {
    const auto& psi = elliptic_psi();
    const auto eps = counit_representation(0, psi);
    ASSERT_EQ(eps.dim(), 1);
    for (int t2 = 0; t2 <= 4; ++t2) {
        const auto rep = make_irrep(h(t2), 0, psi);
        auto left = build_induced_coproduct(build_tensor(eps, rep), psi);
        auto right = build_induced_coproduct(build_tensor(rep, eps), psi);
        EXPECT_LE(max_abs(left.DJhatPlus - rep.JhatPlus), 1e-12);
        EXPECT_LE(max_abs(left.DJhatMinus - rep.JhatMinus), 1e-12);
        EXPECT_LE(max_abs(right.DJhatPlus - rep.JhatPlus), 1e-12);
        EXPECT_LE(max_abs(right.DJhatMinus - rep.JhatMinus), 1e-12);
    }
}

TEST(Counit, GeneratorValues) {
    EXPECT_EQ(counit(Generator::K), Scalar(1.0));
    EXPECT_EQ(counit(Generator::Kinv), Scalar(1.0));
    for (auto g : {Generator::Jplus, Generator::Jminus, Generator::JhatPlus, Generator::JhatMinus})
        EXPECT_EQ(counit(g), Scalar(0.0));
}

TEST(Antipode, BaseGenerators) {
    const auto rep = make_irrep(h(3), 0, elliptic_psi());
    const Matrix sk = antipode(rep, Generator::K);
    const Matrix skinv = antipode(rep, Generator::Kinv);
    EXPECT_LE(max_abs(sk * skinv - Matrix::Identity(4, 4)), 1e-14);
    EXPECT_LE(max_abs(sk * sk - rep.K2inv), 1e-14);
    EXPECT_LE(max_abs(antipode(rep, Generator::Jplus) + q12 * rep.Jplus), 1e-14);
    EXPECT_LE(max_abs(antipode(rep, Generator::Jminus) + rep.Jminus / q12), 1e-14);
    EXPECT_THROW(antipode(rep, Generator::JhatPlus), invalid_argument_error);
}
