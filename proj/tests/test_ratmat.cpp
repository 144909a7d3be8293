#include <doctest.h>

#include "cpspinor/ratmat.hpp"
#include "cpspinor/rng.hpp"

using namespace cpspinor;

namespace {
RatMat random_matrix(int r, int c, Rng& rng) {
  RatMat m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Rat(rng.range(-4, 4));
  return m;
}
}  // namespace

TEST_CASE("arithmetic basics") {
  RatMat a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = Rat(1, 2);
  a.at(1, 0) = -2;
  RatMat i2 = RatMat::identity(2);
  CHECK(a * i2 == a);
  CHECK(i2 * a == a);
  CHECK((a - a).is_zero());
  CHECK(a.transposed().transposed() == a);
  CHECK(a.trace() == 1);
}

TEST_CASE("solve and inverse on seeded nonsingular systems") {
  Rng rng(11);
  int solved = 0;
  while (solved < 15) {
    RatMat a = random_matrix(5, 5, rng);
    if (rank(a) < 5) continue;
    RatMat b = random_matrix(5, 3, rng);
    RatMat x = solve(a, b);
    CHECK(a * x == b);
    CHECK(a * inverse(a) == RatMat::identity(5));
    ++solved;
  }
}

TEST_CASE("singular systems are rejected") {
  RatMat a(2, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 2;
  a.at(1, 0) = 2;
  a.at(1, 1) = 4;
  CHECK_THROWS_AS(solve(a, RatMat::identity(2)), OracleFailure);
}

TEST_CASE("rank-nullity on seeded rectangular matrices") {
  Rng rng(12);
  for (int it = 0; it < 25; ++it) {
    int r = 2 + static_cast<int>(rng.upto(5)), c = 2 + static_cast<int>(rng.upto(5));
    RatMat m = random_matrix(r, c, rng);
    RatMat ns = nullspace(m);
    CHECK(rank(m) + ns.cols() == c);
    CHECK((m * ns).is_zero());
  }
}

TEST_CASE("kronecker product is bilinear and mixed-associative with apply") {
  Rng rng(13);
  RatMat a = random_matrix(2, 2, rng), b = random_matrix(3, 3, rng);
  RatMat c = random_matrix(2, 2, rng), d = random_matrix(3, 3, rng);
  CHECK(a.kron(b) * c.kron(d) == (a * c).kron(b * d));
}

TEST_CASE("scalar identity detection") {
  RatMat m = RatMat::identity(3) * Rat(5, 7);
  Rat s;
  CHECK(m.scalar_multiple_of_identity(s));
  CHECK(s == Rat(5, 7));
  m.at(0, 1) = 1;
  CHECK(!m.scalar_multiple_of_identity(s));
}

TEST_CASE("vstack") {
  RatMat a = RatMat::identity(2);
  RatMat b(1, 2);
  b.at(0, 0) = 3;
  RatMat v = vstack({a, b});
  CHECK(v.rows() == 3);
  CHECK(v.at(2, 0) == 3);
  CHECK(v.at(0, 0) == 1);
}
