#pragma once

#include <stdexcept>
#include <string>

namespace uqp {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// q too close to +1 or -1 (the bracket denominator vanishes).
class degenerate_q_error : public error {
public:
    using error::error;
};

/// Double root in the Casimir quadratic, or roots of equal modulus.
class degenerate_discriminant_error : public error {
public:
    using error::error;
};

/// q^k coincides with q^-k for some k present in a coefficient table.
class resonance_error : public error {
public:
    using error::error;
};

/// Theta series with |p| >= 1, or a truncation order that cannot be reached.
class non_convergence_error : public error {
public:
    using error::error;
};

/// A coupled-Casimir eigenvalue could not be matched to any [J][J+1].
class identification_error : public error {
public:
    using error::error;
};

/// Malformed parameters, spins, coefficient files or mismatched factors.
class invalid_argument_error : public error {
public:
    using error::error;
};

} // namespace uqp
