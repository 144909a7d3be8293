#include <doctest.h>

#include <algorithm>

#include "cpspinor/rng.hpp"
#include "cpspinor/spinor_sets.hpp"

using namespace cpspinor;

namespace {
Weight wf(std::initializer_list<const char*> fund, int l) {
  RatVec f;
  for (const char* s : fund) f.push_back(parse_rat(s));
  return weight_from_fundamental(f, Rank(l));
}

// Seeded admissible weights, used by several suites.
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

TEST_CASE("membership in the admissible set") {
  CHECK(in_A(s_plus_weight(Rank(3))));
  CHECK(in_A(s_minus_weight(Rank(3))));
  CHECK(!in_A(wf({"0", "0", "-3/2"}, 3)));  // boundary: gate is exactly 0
  CHECK(!in_A(wf({"1", "0", "0"}, 3)));     // last coefficient not half-odd
  CHECK(!in_A(wf({"-1", "0", "-1/2"}, 3)));

  CHECK(a_membership(wf({"0", "0", "-3/2"}, 3)).violated.find("not > 0") != std::string::npos);
  CHECK(a_membership(wf({"1", "0", "0"}, 3)).violated.find("Z + 1/2") != std::string::npos);
  CHECK(a_membership(wf({"-1", "0", "-1/2"}, 3)).violated.find("lambda_1") != std::string::npos);
}

TEST_CASE("admissible weight carries its fundamental view") {
  AdmissibleWeight aw(s_plus_weight(Rank(3)));
  CHECK(aw.fundamental() == RatVec{0, 0, Rat(-1, 2)});
  CHECK_THROWS_AS(AdmissibleWeight(wf({"1", "0", "0"}, 3)), DomainError);
}

TEST_CASE("defining representation weights") {
  for (int l : {3, 4, 5}) {
    Rank rk(l);
    std::vector<Weight> ws = defining_weights(rk);
    CHECK(static_cast<int>(ws.size()) == 2 * l);
    CHECK(std::find(ws.begin(), ws.end(), zero_weight(rk)) == ws.end());
    for (int i = 1; i <= l; ++i) {
      CHECK(std::find(ws.begin(), ws.end(), epsilon(rk, i)) != ws.end());
      CHECK(std::find(ws.begin(), ws.end(), epsilon(rk, i) * Rat(-1)) != ws.end());
    }
  }
}

TEST_CASE("component sets of the published examples") {
  for (int l : {3, 4, 5}) {
    Rank rk(l);
    Weight w1 = epsilon(rk, 1);

    std::vector<Weight> a1 = a_lambda(s_plus_weight(rk));
    std::vector<Weight> want1 = {w1 + s_plus_weight(rk), s_minus_weight(rk)};
    std::sort(want1.begin(), want1.end(), [](const Weight& a, const Weight& b) { return b < a; });
    CHECK(a1 == want1);

    std::vector<Weight> a2 = a_lambda(w1 + s_plus_weight(rk));
    CHECK(a2.size() == 4);
    RatVec f2(l, Rat(0));
    f2[1] = 1;
    f2[l - 1] = Rat(-1, 2);
    std::vector<Weight> want2 = {weight_from_fundamental(f2, rk), w1 * Rat(2) + s_plus_weight(rk), s_plus_weight(rk),
                                 w1 + s_minus_weight(rk)};
    std::sort(want2.begin(), want2.end(), [](const Weight& a, const Weight& b) { return b < a; });
    CHECK(a2 == want2);
  }
  // l = 3, lambda = w_1 + w_2 - 1/2 w_3: all six shifts stay admissible.
  CHECK(a_lambda(wf({"1", "1", "-1/2"}, 3)).size() == 6);
}

TEST_CASE("component properties on seeded admissible weights") {
  Rng rng(99);
  Rank l3(3);
  for (int it = 0; it < 40; ++it) {
    Weight lambda = random_admissible(l3, rng);
    std::vector<Weight> comps = a_lambda(lambda);
    CHECK(comps.size() <= 6);
    CHECK(std::find(comps.begin(), comps.end(), lambda) == comps.end());
    std::vector<Weight> shifts = defining_weights(l3);
    for (const Weight& mu : comps) {
      CHECK(in_A(mu));
      CHECK(std::find(shifts.begin(), shifts.end(), mu - lambda) != shifts.end());
      // adjacency is symmetric
      std::vector<Weight> back = a_lambda(mu);
      CHECK(std::find(back.begin(), back.end(), lambda) != back.end());
    }
  }
}

TEST_CASE("a_lambda rejects inadmissible weights") {
  CHECK_THROWS_AS(a_lambda(wf({"1", "0", "0"}, 3)), DomainError);
}
