#include <doctest.h>

#include "cpspinor/classifier.hpp"
#include "cpspinor/rng.hpp"

using namespace cpspinor;

namespace {
Weight wf(std::initializer_list<const char*> fund, int l) {
  RatVec f;
  for (const char* s : fund) f.push_back(parse_rat(s));
  return weight_from_fundamental(f, Rank(l));
}

Weight random_admissible(Rank l, Rng& rng) {
  for (;;) {
    RatVec f(l.l());
    for (int i = 0; i + 1 < l.l(); ++i) f[i] = Rat(rng.range(0, 4));
    f[l.l() - 1] = Rat(2 * rng.range(-4, 3) + 1, 2);
    Weight w = weight_from_fundamental(f, l);
    if (in_A(w)) return w;
  }
}
}  // namespace

TEST_CASE("classification of the Dirac pair and its perturbations") {
  Rank l3(3);
  Weight sp = s_plus_weight(l3), sm = s_minus_weight(l3);
  CHECK(classify(ModuleTriple(sp, Rat(7, 2), 1), ModuleTriple(sm, Rat(9, 2), 1)) == 1);
  CHECK(classify(ModuleTriple(sp, Rat(7, 2), 1), ModuleTriple(sm, Rat(9, 2), -1)) == 0);
  CHECK(classify(ModuleTriple(sp, Rat(7, 2), 1), ModuleTriple(sm, Rat(5), 1)) == 0);
  CHECK(classify(ModuleTriple(sp, Rat(7, 2), 1), ModuleTriple(wf({"2", "0", "-1/2"}, 3), Rat(9, 2), 1)) == 0);
}

TEST_CASE("equal weights are the zeroth-order case") {
  Rank l3(3);
  Weight sp = s_plus_weight(l3);
  CHECK_THROWS_AS(classify(ModuleTriple(sp, Rat(0), 1), ModuleTriple(sp, Rat(1), 1)), ZerothOrderError);
}

TEST_CASE("module triples validate their data") {
  Rank l3(3);
  CHECK_THROWS_AS(ModuleTriple(wf({"1", "0", "0"}, 3), Rat(0), 1), DomainError);
  CHECK_THROWS_AS(ModuleTriple(s_plus_weight(l3), Rat(0), 2), InvalidInput);
}

TEST_CASE("enumeration fixtures") {
  Rank l3(3);
  std::vector<OperatorDescriptor> ds = enumerate_first_order(s_plus_weight(l3), 1);
  REQUIRE(ds.size() == 2);
  CHECK(ds[0].name == OperatorName::twistor);
  CHECK(ds[0].source.c == Rat(1, 2));
  CHECK(ds[1].name == OperatorName::dirac);
  CHECK(ds[1].source.c == Rat(7, 2));

  Weight rs = epsilon(l3, 1) + s_plus_weight(l3);
  CHECK(enumerate_first_order(rs, 1).size() == 4);
  CHECK(enumerate_first_order(wf({"1", "1", "-1/2"}, 3), 1).size() == 6);
}

TEST_CASE("named fixtures") {
  OperatorDescriptor d = named_operator(OperatorName::dirac, Rank(3), 1);
  CHECK(d.source.lambda == s_plus_weight(Rank(3)));
  CHECK(d.source.c == Rat(7, 2));
  CHECK(d.target.lambda == s_minus_weight(Rank(3)));
  CHECK(d.target.c == Rat(9, 2));

  OperatorDescriptor t = named_operator(OperatorName::twistor, Rank(3), 1);
  CHECK(t.source.c == Rat(1, 2));
  CHECK(t.target.c == Rat(3, 2));
  CHECK(t.target.lambda == epsilon(Rank(3), 1) + s_plus_weight(Rank(3)));

  OperatorDescriptor r = named_operator(OperatorName::rarita_schwinger, Rank(4), 1);
  CHECK(r.source.lambda == epsilon(Rank(4), 1) + s_plus_weight(Rank(4)));
  CHECK(r.source.c == Rat(9, 2));
  CHECK(r.target.lambda == epsilon(Rank(4), 1) + s_minus_weight(Rank(4)));
  CHECK(r.target.c == Rat(11, 2));

  CHECK_THROWS_AS(named_operator(OperatorName::unnamed, Rank(3), 1), InvalidInput);
}

TEST_CASE("classification implies the symbolic psi eigenvalue vanishes") {
  Rng rng(55);
  Rank l3(3);
  for (int it = 0; it < 20; ++it) {
    Weight lambda = random_admissible(l3, rng);
    for (const OperatorDescriptor& d : enumerate_first_order(lambda, 1)) {
      CHECK(classify(d.source, d.target) == 1);
      CHECK(psi_symbolic_eigenvalues(lambda, d.source.c).at(d.target.lambda) == 0);
      CHECK(d.target.c == d.source.c + 1);
    }
  }
}

TEST_CASE("descriptor invariants are enforced") {
  Rank l3(3);
  Weight sp = s_plus_weight(l3), sm = s_minus_weight(l3);
  CHECK_THROWS_AS(OperatorDescriptor(ModuleTriple(sp, Rat(7, 2), 1), ModuleTriple(sm, Rat(9, 2), -1)), DomainError);
  CHECK_THROWS_AS(OperatorDescriptor(ModuleTriple(sp, Rat(3), 1), ModuleTriple(sm, Rat(4), 1)), DomainError);
  CHECK_THROWS_AS(OperatorDescriptor(ModuleTriple(sp, Rat(7, 2), 1), ModuleTriple(sm, Rat(5), 1)), DomainError);
}
