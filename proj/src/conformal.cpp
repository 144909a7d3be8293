#include "cpspinor/conformal.hpp"

#include <algorithm>

namespace cpspinor {

namespace {
Weight varpi1(int rank) {
  Rank l(rank, Rank::LowRank::allow);
  return epsilon(l, 1);
}

void require_adjacent(const Weight& lambda, const Weight& mu) {
  AMembership m = a_membership(lambda);
  if (!m.ok) throw DomainError("conformal weight requires an admissible source: " + m.violated);
  std::vector<Weight> comp = a_lambda(lambda);
  if (std::find(comp.begin(), comp.end(), mu) == comp.end())
    throw DomainError("target weight is not a component of L(lambda) (x) F(w_1)");
}
}  // namespace

Rat casimir_norm(const Weight& lambda) {
  Rank l(lambda.rank(), Rank::LowRank::allow);
  return inner(lambda, lambda + weyl_delta(l) * Rat(2));
}

Rat conformal_weight_raw(const Weight& lambda, const Weight& alpha, const Weight& mu) {
  return (casimir_norm(lambda) + casimir_norm(alpha) - casimir_norm(mu)) / 2;
}

Rat conformal_weight(const Weight& lambda, const Weight& mu) {
  require_adjacent(lambda, mu);
  return conformal_weight_raw(lambda, varpi1(lambda.rank()), mu);
}

Rat conformal_weight_printed(const Weight& lambda, const Weight& mu) {
  require_adjacent(lambda, mu);
  return -conformal_weight_raw(lambda, varpi1(lambda.rank()), mu);
}

ConformalData conformal_data(const Weight& lambda, const Weight& mu) {
  require_adjacent(lambda, mu);
  Weight alpha = varpi1(lambda.rank());
  Rat c_hat = conformal_weight_raw(lambda, alpha, mu);
  return ConformalData{lambda, alpha, mu, c_hat, -c_hat};
}

std::map<Weight, Rat> psi_symbolic_eigenvalues(const Weight& lambda, const Rat& c) {
  AMembership m = a_membership(lambda);
  if (!m.ok) throw DomainError("psi eigenvalues require an admissible weight: " + m.violated);
  const int l = lambda.rank();
  Rat scale(1, 8 * l + 8);
  std::map<Weight, Rat> out;
  for (const Weight& mu : a_lambda(lambda))
    out.emplace(mu, (c - conformal_weight_raw(lambda, varpi1(l), mu)) * scale);
  return out;
}

}  // namespace cpspinor
