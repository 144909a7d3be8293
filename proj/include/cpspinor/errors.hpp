#pragma once

#include <stdexcept>
#include <string>

namespace cpspinor {

/// Malformed arguments: wrong lengths, unknown names, values outside the grammar.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Violated mathematical precondition (weight outside the admissible set, etc.).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// classify() was asked about a pair with equal weights; that pairing is the
/// zeroth-order case and is deliberately outside the first-order classification.
struct ZerothOrderError : DomainError {
  using DomainError::DomainError;
};

/// An internal verification the oracle relies on did not hold (non-scalar
/// Casimir, inconsistent bracket expansion, non-integral multiplicity, ...).
struct OracleFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Spectral projectors were requested for eigenvalues that are not distinct.
struct DegenerateSpectrum : OracleFailure {
  using OracleFailure::OracleFailure;
};

/// The multiplicity recursion met a vanishing denominator in strict mode.
struct DegenerateRecursion : OracleFailure {
  using OracleFailure::OracleFailure;
};

/// A truncated character product was requested deeper than its inputs allow.
struct DepthUnderflow : std::runtime_error {
  DepthUnderflow(const std::string& what, int required) : std::runtime_error(what), required_depth(required) {}
  int required_depth;
};

}  // namespace cpspinor
