#pragma once

#include <vector>

#include <Eigen/Eigenvalues>

#include "uqp/arith.hpp"
#include "uqp/matrix.hpp"

namespace uqp {

/// Direct partial sum of sum_{n=-N}^{N-1} (-1)^n q^{2m(2n+1)} p^{(n+1/2)^2}.
///
/// Independent of the coefficient-table route; T may be a multiprecision type.
template <class T>
T oracle_theta_sum(HalfInt m, const T& q, const T& p, int order) {
    using std::exp;
    using std::log;
    if (p == T(0)) return T(0);
    const T log_p = log(p);
    T sum(0);
    for (int n = -order; n < order; ++n) {
        const int odd = 2 * n + 1;
        const T term = int_pow(q, m.twice() * odd) * exp(T(odd * odd) / T(4) * log_p);
        if (n % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

/// Dense eigenvalues with a per-pair residual check |A v - lambda v| <= tol |A|_F.
inline std::vector<Scalar> oracle_eigensolve(const Matrix& a, double tol) {
    if (a.rows() != a.cols()) throw invalid_argument_error("eigensolve needs a square matrix");
    if (a.size() == 0) return {};
    Eigen::ComplexEigenSolver<Matrix> solver(a, true);
    if (solver.info() != Eigen::Success) throw non_convergence_error("eigensolver did not converge");
    const double norm = a.norm();
    std::vector<Scalar> values;
    for (Eigen::Index k = 0; k < a.rows(); ++k) {
        const Scalar lambda = solver.eigenvalues()(k);
        const Vector v = solver.eigenvectors().col(k);
        const double res = (a * v - lambda * v).norm() / std::max(v.norm(), 1e-300);
        if (res > tol * std::max(norm, 1.0))
            throw non_convergence_error("eigenpair residual " + std::to_string(res) + " exceeds tolerance");
        values.push_back(lambda);
    }
    return values;
}

} // namespace uqp
