#pragma once

#include <Eigen/Dense>

#include "uqp/arith.hpp"

namespace uqp {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// Largest entry modulus; 0 for an empty matrix.
inline double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

inline bool all_finite(const Matrix& m) {
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        const Scalar z = m.data()[i];
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    }
    return true;
}

} // namespace uqp
