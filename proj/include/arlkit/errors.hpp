// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace arlkit {

// Base for numerical failures that callers are expected to handle per point
// (sweeps report them as a status column). Bad arguments use std::invalid_argument.
class ArlError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The 2x2 angle block of the Fisher information has determinant <= 0.
class SingularInformation : public ArlError {
public:
    using ArlError::ArlError;
};

/// rho_im == 0 and rho_re == +-1: the quartic degenerates to a constant.
class NoClosedForm : public ArlError {
public:
    using ArlError::ArlError;
};

/// alpha*kappa*phi/gamma^2 > 1, so the quartic-case square root is imaginary.
class DomainError : public ArlError {
public:
    using ArlError::ArlError;
};

/// No sign change of delta^2 - CRB(delta) below the ambiguity cap.
class NoBracket : public ArlError {
public:
    using ArlError::ArlError;
};

} // namespace arlkit
