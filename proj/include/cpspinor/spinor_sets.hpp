#pragma once

#include <string>
#include <vector>

#include "cpspinor/weights.hpp"

namespace cpspinor {

// Membership in the admissible weight set
//   A = { Sum lambda_i w_i : lambda_i in N_0 for i < l,
//         lambda_{l-1} + 2 lambda_l + 3 > 0,  lambda_l in Z + 1/2 },
// the highest weights of the infinite-dimensional bounded-multiplicity
// ("higher symplectic spinor") modules L(lambda).

/// A weight known to lie in A, carrying its fundamental-coefficient view.
class AdmissibleWeight {
 public:
  explicit AdmissibleWeight(Weight w);

  const Weight& weight() const { return w_; }
  const RatVec& fundamental() const { return fund_; }

 private:
  Weight w_;
  RatVec fund_;
};

struct AMembership {
  bool ok;
  std::string violated;  // empty when ok; names the failed condition otherwise
};

/// Exact test of the three defining conditions of A, reporting which one
/// failed (for CLI diagnostics).
AMembership a_membership(const Weight& lambda);

bool in_A(const Weight& lambda);

/// Highest weight of the even basic spinor module S+ = L(-1/2 w_l).
Weight s_plus_weight(Rank l);
/// Highest weight of the odd basic spinor module S- = L(w_{l-1} - 3/2 w_l).
Weight s_minus_weight(Rank l);

/// The 2l weights {+-e_i} of the defining representation F(w_1),
/// in the order e_1, ..., e_l, -e_1, ..., -e_l.
std::vector<Weight> defining_weights(Rank l);

/// A_lambda = A intersect { lambda +- e_i }: the summands of
/// L(lambda) (x) F(w_1), sorted descending lexicographically.
/// Requires lambda in A.
std::vector<Weight> a_lambda(const Weight& lambda);

}  // namespace cpspinor
