#include <doctest.h>

#include "cpspinor/rng.hpp"
#include "cpspinor/weights.hpp"

using namespace cpspinor;

namespace {
Weight wf(std::initializer_list<const char*> fund, int l) {
  RatVec f;
  for (const char* s : fund) f.push_back(parse_rat(s));
  return weight_from_fundamental(f, Rank(l));
}
}  // namespace

TEST_CASE("rank gate") {
  CHECK_THROWS_AS(Rank(2), InvalidInput);
  CHECK_THROWS_AS(Rank(1, Rank::LowRank::allow), InvalidInput);
  CHECK(Rank(2, Rank::LowRank::allow).l() == 2);
  CHECK(Rank(3).l() == 3);
}

TEST_CASE("fundamental to epsilon coordinates") {
  CHECK(wf({"0", "1", "0"}, 3) == Weight(Rank(3), {1, 1, 0}));
  CHECK(wf({"0", "0", "-1/2"}, 3) == Weight(Rank(3), {Rat(-1, 2), Rat(-1, 2), Rat(-1, 2)}));
  CHECK(wf({"0", "0", "0"}, 3) == Weight(Rank(3), {0, 0, 0}));
  RatVec short_list{1, 2};
  CHECK_THROWS_AS(weight_from_fundamental(short_list, Rank(3)), InvalidInput);
}

TEST_CASE("epsilon to fundamental coordinates") {
  CHECK(fundamental_from_weight(Weight(Rank(3), {1, 1, 0})) == RatVec{0, 1, 0});
  CHECK(fundamental_from_weight(Weight(Rank(3), {Rat(-1, 2), Rat(-1, 2), Rat(-3, 2)})) ==
        RatVec{0, 1, Rat(-3, 2)});
}

TEST_CASE("coordinate changes are mutually inverse on 100 seeded weights") {
  Rng rng(2024);
  for (int l : {3, 4, 5}) {
    Rank rk(l);
    for (int it = 0; it < 34; ++it) {
      RatVec f(l);
      for (int i = 0; i < l; ++i) f[i] = rng.small_rat();
      Weight w = weight_from_fundamental(f, rk);
      CHECK(fundamental_from_weight(w) == f);
      CHECK(weight_from_fundamental(fundamental_from_weight(w), rk) == w);
    }
  }
}

TEST_CASE("inner product") {
  Rank l3(3);
  CHECK(inner(epsilon(l3, 1), epsilon(l3, 1)) == 1);
  CHECK(inner(epsilon(l3, 1), epsilon(l3, 2)) == 0);
  CHECK(inner(weyl_delta(l3), weyl_delta(l3)) == 14);
  CHECK_THROWS_AS(inner(epsilon(l3, 1), epsilon(Rank(4), 1)), InvalidInput);

  Rng rng(7);
  for (int it = 0; it < 20; ++it) {
    RatVec a(3), b(3), c(3);
    for (int i = 0; i < 3; ++i) {
      a[i] = rng.small_rat();
      b[i] = rng.small_rat();
      c[i] = rng.small_rat();
    }
    Weight wa(l3, a), wb(l3, b), wc(l3, c);
    Rat s = rng.small_rat();
    CHECK(inner(wa, wb) == inner(wb, wa));
    CHECK(inner(wa + wb * s, wc) == inner(wa, wc) + s * inner(wb, wc));
  }
}

TEST_CASE("Weyl vector") {
  CHECK(weyl_delta(Rank(3)) == Weight(Rank(3), {3, 2, 1}));
  CHECK(weyl_delta(Rank(4)) == Weight(Rank(4), {4, 3, 2, 1}));
  for (int l : {3, 4, 5}) {
    Rank rk(l);
    CHECK(weyl_delta(rk) == weight_from_fundamental(RatVec(l, Rat(1)), rk));
  }
}

TEST_CASE("root data") {
  for (int l : {3, 4, 5}) {
    Rank rk(l);
    RootData rd = root_data(rk);
    CHECK(static_cast<int>(rd.positive_roots.size()) == l * l);
    CHECK(static_cast<int>(rd.simple_roots.size()) == l);
    for (const Weight& alpha : rd.positive_roots) {
      auto h = root_height(alpha);
      REQUIRE(h.has_value());
      CHECK(*h >= 1);
    }
  }
  RootData rd3 = root_data(Rank(3));
  CHECK(rd3.simple_roots[0] == Weight(Rank(3), {1, -1, 0}));
  CHECK(rd3.simple_roots[1] == Weight(Rank(3), {0, 1, -1}));
  CHECK(rd3.simple_roots[2] == Weight(Rank(3), {0, 0, 2}));
}

TEST_CASE("fundamental weights pair to delta_ij against simple coroots") {
  for (int l : {3, 4, 5}) {
    Rank rk(l);
    RootData rd = root_data(rk);
    for (int i = 1; i <= l; ++i) {
      RatVec f(l, Rat(0));
      f[i - 1] = 1;
      Weight wi = weight_from_fundamental(f, rk);
      for (int j = 0; j < l; ++j) {
        const Weight& alpha = rd.simple_roots[j];
        Rat pairing = inner(wi, alpha) * 2 / inner(alpha, alpha);
        CHECK(pairing == (j == i - 1 ? 1 : 0));
      }
    }
  }
}

TEST_CASE("simple root coordinates and heights") {
  Rank l3(3);
  Weight beta = Weight(l3, {0, 2, 2});
  RatVec k = simple_root_coords(beta);
  CHECK(k == RatVec{0, 2, 2});
  CHECK(root_height(beta) == 4);
  CHECK(!root_height(Weight(l3, {0, 0, 1})).has_value());   // half a simple root
  CHECK(!root_height(Weight(l3, {-1, 1, 0})).has_value());  // negative coefficient
}
