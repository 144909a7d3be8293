#include <doctest.h>

#include "cpspinor/conformal.hpp"
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

TEST_CASE("Casimir norms") {
  Rank l3(3);
  CHECK(casimir_norm(epsilon(l3, 1)) == 7);  // 1 + 2l
  CHECK(casimir_norm(zero_weight(l3)) == 0);
  CHECK(casimir_norm(s_plus_weight(l3)) == Rat(-21, 4));
  for (int l : {3, 4, 5}) {
    Rank rk(l);
    CHECK(casimir_norm(epsilon(rk, 1)) == 1 + 2 * l);
  }
}

TEST_CASE("conformal weights of the published operators") {
  for (int l : {3, 4, 5, 6}) {
    Rank rk(l);
    Weight sp = s_plus_weight(rk), sm = s_minus_weight(rk), w1 = epsilon(rk, 1);
    CHECK(conformal_weight(sp, sm) == Rat(1 + 2 * l, 2));           // Dirac
    CHECK(conformal_weight(sp, w1 + sp) == Rat(1, 2));              // twistor
    CHECK(conformal_weight(w1 + sp, w1 + sm) == Rat(1 + 2 * l, 2)); // Rarita-Schwinger
  }
}

TEST_CASE("printed sign convention is the negative of the canonical one") {
  Rank l3(3);
  Weight sp = s_plus_weight(l3), sm = s_minus_weight(l3);
  ConformalData cd = conformal_data(sp, sm);
  CHECK(cd.c_hat == Rat(7, 2));
  CHECK(cd.c_tilde_printed == Rat(-7, 2));
  CHECK(cd.c_hat + cd.c_tilde_printed == 0);
  CHECK(conformal_weight_printed(sp, sm) == -conformal_weight(sp, sm));
}

TEST_CASE("precondition gates") {
  Rank l3(3);
  CHECK_THROWS_AS(conformal_weight(wf({"1", "0", "0"}, 3), s_plus_weight(l3)), DomainError);
  // 2 w_1 - 1/2 w_3 is admissible but not adjacent to -1/2 w_3.
  CHECK_THROWS_AS(conformal_weight(s_plus_weight(l3), wf({"2", "0", "-1/2"}, 3)), DomainError);
}

TEST_CASE("pair symmetry: c(lambda,mu) + c(mu,lambda) = 1 + 2l") {
  Rng rng(31);
  for (int l : {3, 4}) {
    Rank rk(l);
    for (int it = 0; it < 25; ++it) {
      Weight lambda = random_admissible(rk, rng);
      for (const Weight& mu : a_lambda(lambda))
        CHECK(conformal_weight(lambda, mu) + conformal_weight(mu, lambda) == 1 + 2 * l);
    }
  }
}

TEST_CASE("Dirac pattern: lambda_l = -1/2 and mu = lambda - e_l give (1+2l)/2") {
  Rng rng(32);
  Rank l3(3);
  int found = 0;
  while (found < 10) {
    Weight lambda = random_admissible(l3, rng);
    if (fundamental_from_weight(lambda)[2] != Rat(-1, 2)) continue;
    Weight mu = lambda - epsilon(l3, 3);
    if (!in_A(mu)) continue;
    CHECK(casimir_norm(mu) == casimir_norm(lambda));
    CHECK(conformal_weight(lambda, mu) == Rat(7, 2));
    ++found;
  }
}

TEST_CASE("symbolic psi eigenvalues") {
  Rank l3(3);
  Weight sp = s_plus_weight(l3), sm = s_minus_weight(l3), w1 = epsilon(l3, 1);
  std::map<Weight, Rat> eig = psi_symbolic_eigenvalues(sp, Rat(7, 2));
  REQUIRE(eig.size() == 2);
  CHECK(eig.at(sm) == 0);
  CHECK(eig.at(w1 + sp) == Rat(3, 32));

  // affine in c with slope 1/(8l+8), and the vanishing entry is unique
  Rng rng(33);
  for (int it = 0; it < 20; ++it) {
    Weight lambda = random_admissible(l3, rng);
    std::vector<Weight> comps = a_lambda(lambda);
    if (comps.empty()) continue;
    Rat c1 = rng.small_rat(), c2 = c1 + rng.range(1, 5);
    std::map<Weight, Rat> e1 = psi_symbolic_eigenvalues(lambda, c1);
    std::map<Weight, Rat> e2 = psi_symbolic_eigenvalues(lambda, c2);
    for (const Weight& mu : comps) CHECK(e2.at(mu) - e1.at(mu) == (c2 - c1) / 32);
    const Weight& mu0 = comps[rng.upto(static_cast<long>(comps.size()))];
    std::map<Weight, Rat> e0 = psi_symbolic_eigenvalues(lambda, conformal_weight(lambda, mu0));
    for (const Weight& mu : comps) CHECK((e0.at(mu) == 0) == (mu == mu0));
  }
}
