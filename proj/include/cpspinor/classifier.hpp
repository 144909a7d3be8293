#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpspinor/conformal.hpp"

namespace cpspinor {

// First-order invariant operator classification between bundles induced from
// modules L(lambda, c)_gamma: the data of a module is an admissible highest
// weight, a generalized conformal weight (grading-element eigenvalue) and a
// parity gamma = +-1 (action of -1 in the one-dimensional center of the Levi
// factor).  An operator L(lambda,c)_gamma -> L(mu,d)_gamma' exists (and is
// then unique up to scale) iff
//   mu in A_lambda,  c = c_hat(lambda,mu),  d = c + 1,  gamma = gamma'.

struct ModuleTriple {
  Weight lambda;
  Rat c;
  int gamma;  // +1 or -1

  ModuleTriple(Weight lambda_, Rat c_, int gamma_);
};

enum class OperatorName { dirac, twistor, rarita_schwinger, unnamed };

std::string operator_name_str(OperatorName n);
OperatorName operator_name_from_str(const std::string& s);

/// One admissible first-order operator; invariants (adjacency, c = c_hat,
/// d = c+1, matching parity) are enforced at construction.
struct OperatorDescriptor {
  ModuleTriple source;
  ModuleTriple target;
  OperatorName name;

  OperatorDescriptor(ModuleTriple source_, ModuleTriple target_, OperatorName name_ = OperatorName::unnamed);
};

/// dim Hom for the pair, in {0,1}.  Equal weights are rejected with
/// ZerothOrderError (that case is a zeroth-order operator, not classified
/// here).
int classify(const ModuleTriple& source, const ModuleTriple& target);

/// All first-order operators out of L(lambda, . )_gamma: one descriptor per
/// element of A_lambda, with the forced conformal weights.
std::vector<OperatorDescriptor> enumerate_first_order(const Weight& lambda, int gamma);

/// The named fixtures: Dirac, twistor, Rarita-Schwinger.
OperatorDescriptor named_operator(OperatorName name, Rank l, int gamma);

/// Matches (lambda, mu) against the named fixtures.
OperatorName recognize_operator(const Weight& lambda, const Weight& mu);

}  // namespace cpspinor
