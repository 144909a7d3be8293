#include "cpspinor/spinor_sets.hpp"

#include <algorithm>
#include <sstream>

namespace cpspinor {

AdmissibleWeight::AdmissibleWeight(Weight w) : w_(std::move(w)), fund_(fundamental_from_weight(w_)) {
  AMembership m = a_membership(w_);
  if (!m.ok) throw DomainError("weight is not admissible: " + m.violated);
}

AMembership a_membership(const Weight& lambda) {
  const int l = lambda.rank();
  RatVec f = fundamental_from_weight(lambda);
  for (int i = 0; i + 1 < l; ++i) {
    if (!is_nonneg_integer(f[i])) {
      std::ostringstream os;
      os << "lambda_" << (i + 1) << " = " << rat_str(f[i]) << " is not a non-negative integer";
      return {false, os.str()};
    }
  }
  if (!is_half_odd_integer(f[l - 1])) {
    std::ostringstream os;
    os << "lambda_" << l << " = " << rat_str(f[l - 1]) << " is not in Z + 1/2";
    return {false, os.str()};
  }
  Rat gate = (l >= 2 ? f[l - 2] : Rat(0)) + 2 * f[l - 1] + 3;
  if (gate <= 0) {
    std::ostringstream os;
    os << "lambda_" << (l - 1) << " + 2*lambda_" << l << " + 3 = " << rat_str(gate) << " is not > 0";
    return {false, os.str()};
  }
  return {true, {}};
}

bool in_A(const Weight& lambda) { return a_membership(lambda).ok; }

Weight s_plus_weight(Rank l) {
  RatVec f(l.l(), Rat(0));
  f[l.l() - 1] = Rat(-1, 2);
  return weight_from_fundamental(f, l);
}

Weight s_minus_weight(Rank l) {
  RatVec f(l.l(), Rat(0));
  f[l.l() - 2] = 1;
  f[l.l() - 1] = Rat(-3, 2);
  return weight_from_fundamental(f, l);
}

std::vector<Weight> defining_weights(Rank l) {
  std::vector<Weight> out;
  out.reserve(2 * l.l());
  for (int i = 1; i <= l.l(); ++i) out.push_back(epsilon(l, i));
  for (int i = 1; i <= l.l(); ++i) out.push_back(epsilon(l, i) * Rat(-1));
  return out;
}

std::vector<Weight> a_lambda(const Weight& lambda) {
  AMembership m = a_membership(lambda);
  if (!m.ok) throw DomainError("a_lambda requires an admissible weight: " + m.violated);
  Rank l(lambda.rank(), Rank::LowRank::allow);
  std::vector<Weight> out;
  for (const Weight& nu : defining_weights(l)) {
    Weight mu = lambda + nu;
    if (in_A(mu)) out.push_back(mu);
  }
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) { return b < a; });
  return out;
}

}  // namespace cpspinor
