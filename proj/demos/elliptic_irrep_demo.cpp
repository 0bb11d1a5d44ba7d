// Builds the spin-3/2 elliptic irrep and the 1 x 1/2 induced coproduct, then prints
// the commutator diagonal next to the theta series it should reproduce.

#include <iostream>

#include <fmt/format.h>

#include "uqp/uqp.hpp"

int main() {
    using namespace uqp;
    AlgebraParams params; // q = 1.2, p = 0.1, eta = 0

    const WeightFunction chi = chi_elliptic(params.q, params.p, params.trunc_tol, 10.0);
    const PsiSeries psi = solve_psi(chi);
    fmt::print("theta table: N = {}, {} coefficients\n", chi.truncation_order, chi.coeffs.size());

    const Irrep rep = make_irrep(HalfInt::from_twice(3), params.eta, psi);
    const Matrix comm = commutator(rep.JhatPlus, rep.JhatMinus);
    for (int i = 0; i < rep.dim(); ++i) {
        const HalfInt m = rep.weight(i);
        fmt::print("m = {:>4}  [J+,J-] = {:.15f}  theta = {:.15f}\n", m.str(), comm(i, i).real(),
                   oracle_theta_sum(m, params.q, params.p, chi.truncation_order + 2).real());
    }
    fmt::print("Chat = psi(3/2) = {:.15f}\n", rep.Chat(0, 0).real());

    TensorRep t = build_tensor(make_irrep(HalfInt::integer(1), 0, psi), make_irrep(HalfInt::from_twice(1), 0, psi));
    t = build_induced_coproduct(std::move(t), psi);
    const CheckReport report = check_coproduct(t, chi, params);
    for (const auto& c : report.checks)
        fmt::print("{:<28} {:.3e} <= {:.1e}  {}\n", c.name, c.residual, c.tolerance, c.pass ? "ok" : "FAIL");
    return report.passed() ? 0 : 1;
}
