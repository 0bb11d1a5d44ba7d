#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "uqp/error.hpp"
#include "uqp/half_int.hpp"

namespace uqp {

using Scalar = std::complex<double>;

/// Deformation parameters and numerical controls shared by every builder.
struct AlgebraParams {
    Scalar q{1.2, 0.0};
    Scalar p{0.1, 0.0};   ///< elliptic nome
    Scalar beta{0.0, 0.0};
    double trunc_tol = 1e-16;
    double match_tol = 1e-10;
    double spectral_tol = 1e-8;
    int eta = 0;

    /// Grading is exact up to rounding, so it is held to a tighter bound.
    double grading_tol() const { return match_tol * 1e-2; }
    /// Tensor-product relations accumulate eigensolver error.
    double coproduct_tol() const { return match_tol * 10.0; }

    void validate() const {
        if (!std::isfinite(q.real()) || !std::isfinite(q.imag()))
            throw invalid_argument_error("q must be finite");
        if (std::abs(std::abs(q) - 1.0) < 1e-12)
            throw invalid_argument_error("|q| = 1 is not generic (roots of unity are unsupported)");
        if (!(std::abs(p) < 1.0))
            throw non_convergence_error("elliptic nome must satisfy |p| < 1");
        if (!std::isfinite(beta.real()) || !std::isfinite(beta.imag()))
            throw invalid_argument_error("beta must be finite");
        if (!(trunc_tol > 0.0)) throw invalid_argument_error("trunc_tol must be positive");
        // match_tol = 0 is allowed: it turns every residual check into a negative control.
        if (!(match_tol >= 0.0)) throw invalid_argument_error("match_tol must be nonnegative");
        if (!(spectral_tol > 0.0)) throw invalid_argument_error("spectral_tol must be positive");
        if (eta < -1 || eta > 1) throw invalid_argument_error("eta must be -1, 0 or +1");
    }
};

inline constexpr double degenerate_q_tol = 1e-12;

template <class T>
T int_pow(T base, int n) {
    T result(1);
    bool invert = n < 0;
    unsigned e = invert ? static_cast<unsigned>(-static_cast<long>(n)) : static_cast<unsigned>(n);
    while (e) {
        if (e & 1u) result *= base;
        base *= base;
        e >>= 1u;
    }
    return invert ? T(1) / result : result;
}

/// q^x for half-integer x, using the principal square root for odd 2x.
template <class T>
T q_pow(const T& q, HalfInt x) {
    using std::sqrt;
    if (x.is_integer()) return int_pow(q, x.twice() / 2);
    return int_pow(T(sqrt(q)), x.twice());
}

/// q^x for arbitrary real x via the principal logarithm.
template <class T>
T q_pow(const T& q, double x) {
    using std::exp;
    using std::log;
    return exp(T(x) * log(q));
}

template <class T>
void require_generic_q(const T& q) {
    using std::abs;
    if (abs(q - T(1)) < degenerate_q_tol || abs(q + T(1)) < degenerate_q_tol)
        throw degenerate_q_error("q is too close to +1 or -1");
}

/// [x] = (q^x - q^-x) / (q - q^-1).
template <class T>
T q_bracket(HalfInt x, const T& q) {
    require_generic_q(q);
    const T qx = q_pow(q, x);
    return (qx - T(1) / qx) / (q - T(1) / q);
}

template <class T>
T q_bracket(double x, const T& q) {
    require_generic_q(q);
    const T qx = q_pow(q, x);
    return (qx - T(1) / qx) / (q - T(1) / q);
}

/// Eigenvalue [j][j+1] of the U_q(sl(2)) Casimir on the spin-j irrep.
template <class T>
T classical_casimir_value(HalfInt j, const T& q) {
    if (j.twice() < 0) throw invalid_argument_error("spin must be nonnegative: " + j.str());
    return q_bracket(j, q) * q_bracket(j + 1, q);
}

/// [x][x+1] for any half-integer x (no sign restriction); used for weights.
template <class T>
T casimir_polynomial(HalfInt x, const T& q) {
    return q_bracket(x, q) * q_bracket(x + 1, q);
}

/// Solves c = [J][J+1] for q^{2J}.
///
/// With u = q^{2J+1}, the equation reads u + 1/u = c (q - 1/q)^2 + q + 1/q. Of the
/// two roots u, 1/u the one on the same side of the unit circle as q is returned
/// (for |q| > 1 that is the larger modulus, which is the J >= 0 branch).
template <class T>
T invert_casimir(const T& c, const T& q) {
    using std::abs;
    using std::sqrt;
    require_generic_q(q);
    const T d = q - T(1) / q;
    const T s = c * d * d + q + T(1) / q;
    const T disc = s * s - T(4);
    if (abs(disc) < 1e-13 * (1.0 + abs(s * s)))
        throw degenerate_discriminant_error("Casimir quadratic has a double root");
    const T root = sqrt(disc);
    const T plus = (s + root) / T(2);
    const T minus = (s - root) / T(2);
    const T big = abs(plus) >= abs(minus) ? plus : minus;
    if (abs(abs(big) - 1.0) < 1e-13)
        throw degenerate_discriminant_error("Casimir quadratic roots have equal modulus");
    const T u = abs(q) > 1.0 ? big : T(1) / big;
    return u / q;
}

} // namespace uqp
