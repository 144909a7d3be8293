#include "cpspinor/classifier.hpp"

#include <algorithm>

namespace cpspinor {

ModuleTriple::ModuleTriple(Weight lambda_, Rat c_, int gamma_)
    : lambda(std::move(lambda_)), c(std::move(c_)), gamma(gamma_) {
  AMembership m = a_membership(lambda);
  if (!m.ok) throw DomainError("module weight is not admissible: " + m.violated);
  if (gamma != 1 && gamma != -1) throw InvalidInput("parity gamma must be +1 or -1");
}

std::string operator_name_str(OperatorName n) {
  switch (n) {
    case OperatorName::dirac: return "dirac";
    case OperatorName::twistor: return "twistor";
    case OperatorName::rarita_schwinger: return "rarita_schwinger";
    case OperatorName::unnamed: return "unnamed";
  }
  return "unnamed";
}

OperatorName operator_name_from_str(const std::string& s) {
  if (s == "dirac") return OperatorName::dirac;
  if (s == "twistor") return OperatorName::twistor;
  if (s == "rarita_schwinger") return OperatorName::rarita_schwinger;
  if (s == "unnamed") return OperatorName::unnamed;
  throw InvalidInput("unknown operator name: '" + s + "'");
}

OperatorDescriptor::OperatorDescriptor(ModuleTriple source_, ModuleTriple target_, OperatorName name_)
    : source(std::move(source_)), target(std::move(target_)), name(name_) {
  std::vector<Weight> comp = a_lambda(source.lambda);
  if (std::find(comp.begin(), comp.end(), target.lambda) == comp.end())
    throw DomainError("descriptor target is not adjacent to its source");
  if (source.c != conformal_weight(source.lambda, target.lambda))
    throw DomainError("descriptor source conformal weight is not the canonical one");
  if (target.c != source.c + 1) throw DomainError("descriptor target must have d = c + 1");
  if (source.gamma != target.gamma) throw DomainError("descriptor parities must match");
}

int classify(const ModuleTriple& source, const ModuleTriple& target) {
  if (source.lambda == target.lambda)
    throw ZerothOrderError(
        "equal source and target weights: zeroth-order case, excluded from the first-order classification");
  std::vector<Weight> comp = a_lambda(source.lambda);
  if (std::find(comp.begin(), comp.end(), target.lambda) == comp.end()) return 0;
  if (source.c != conformal_weight(source.lambda, target.lambda)) return 0;
  if (target.c != source.c + 1) return 0;
  if (source.gamma != target.gamma) return 0;
  return 1;
}

OperatorName recognize_operator(const Weight& lambda, const Weight& mu) {
  Rank l(lambda.rank(), Rank::LowRank::allow);
  Weight sp = s_plus_weight(l);
  Weight sm = s_minus_weight(l);
  Weight w1 = epsilon(l, 1);
  if (lambda == sp && mu == sm) return OperatorName::dirac;
  if (lambda == sp && mu == w1 + sp) return OperatorName::twistor;
  if (lambda == w1 + sp && mu == w1 + sm) return OperatorName::rarita_schwinger;
  return OperatorName::unnamed;
}

std::vector<OperatorDescriptor> enumerate_first_order(const Weight& lambda, int gamma) {
  AMembership m = a_membership(lambda);
  if (!m.ok) throw DomainError("enumeration requires an admissible weight: " + m.violated);
  std::vector<OperatorDescriptor> out;
  for (const Weight& mu : a_lambda(lambda)) {
    Rat c = conformal_weight(lambda, mu);
    out.emplace_back(ModuleTriple(lambda, c, gamma), ModuleTriple(mu, c + 1, gamma), recognize_operator(lambda, mu));
  }
  return out;
}

OperatorDescriptor named_operator(OperatorName name, Rank l, int gamma) {
  Weight sp = s_plus_weight(l);
  Weight sm = s_minus_weight(l);
  Weight w1 = epsilon(l, 1);
  Weight lambda = zero_weight(l), mu = zero_weight(l);
  switch (name) {
    case OperatorName::dirac:
      lambda = sp;
      mu = sm;
      break;
    case OperatorName::twistor:
      lambda = sp;
      mu = w1 + sp;
      break;
    case OperatorName::rarita_schwinger:
      lambda = w1 + sp;
      mu = w1 + sm;
      break;
    case OperatorName::unnamed:
      throw InvalidInput("'unnamed' is not a retrievable operator name");
  }
  Rat c = conformal_weight(lambda, mu);
  return OperatorDescriptor(ModuleTriple(lambda, c, gamma), ModuleTriple(mu, c + 1, gamma), name);
}

}  // namespace cpspinor
