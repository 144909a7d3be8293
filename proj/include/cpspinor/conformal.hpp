#pragma once

#include <map>

#include "cpspinor/spinor_sets.hpp"
#include "cpspinor/weights.hpp"

namespace cpspinor {

// Conformal weights in <,>-units (epsilon basis orthonormal).  Two sign
// conventions are in circulation for the scalar attached to a pair
// (lambda, mu) through g_1 = F(w_1):
//
//   c_hat   = 1/2 (<lambda,lambda+2d> + <w_1,w_1+2d> - <mu,mu+2d>)
//   c_tilde = 1/2 (<mu,mu+2d> - <lambda,lambda+2d> - <w_1,w_1+2d>) = -c_hat
//
// The published worked examples (Dirac (1+2l)/2, twistor 1/2) are reproduced
// by c_hat, which is therefore the canonical choice everywhere; c_tilde is
// retained so reports can surface both values side by side.

/// <lambda, lambda + 2 delta>.
Rat casimir_norm(const Weight& lambda);

/// c_hat for arbitrary weights (no admissibility gate); alpha is the highest
/// weight of the tensoring module, w_1 in every use within this project.
Rat conformal_weight_raw(const Weight& lambda, const Weight& alpha, const Weight& mu);

/// The canonical conformal weight of the source module for the operator
/// towards L(mu).  Requires lambda in A and mu in A_lambda.
Rat conformal_weight(const Weight& lambda, const Weight& mu);

/// The opposite-sign variant as printed in the source derivation (== -c_hat).
Rat conformal_weight_printed(const Weight& lambda, const Weight& mu);

/// Both conventions for one pair, for reports.
struct ConformalData {
  Weight lambda;
  Weight alpha;
  Weight mu;
  Rat c_hat;
  Rat c_tilde_printed;
};

ConformalData conformal_data(const Weight& lambda, const Weight& mu);

/// Eigenvalues of Psi = 1/(8l+8) Sum_mu (c - c_hat(lambda,mu)) pi_mu on the
/// components of L(lambda) (x) F(w_1): one entry per mu in A_lambda.  The
/// entry vanishes exactly when c equals the conformal weight of the pair.
std::map<Weight, Rat> psi_symbolic_eigenvalues(const Weight& lambda, const Rat& c);

}  // namespace cpspinor
