#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cpspinor/errors.hpp"
#include "cpspinor/rational.hpp"

namespace cpspinor {

/// Rank of the symplectic Lie algebra sp(2l).  The classification is stated
/// for l >= 3; l = 2 is accepted only when explicitly requested (cheap test
/// configurations) and callers are expected to watermark such output.
class Rank {
 public:
  enum class LowRank { deny, allow };

  explicit Rank(int l, LowRank low = LowRank::deny);

  int l() const { return l_; }

 private:
  int l_;
};

/// Weight of sp(2l,C) in exact epsilon-coordinates (the orthogonal basis in
/// which <,> is the standard dot product).  Immutable after construction.
class Weight {
 public:
  /// Empty placeholder (rank 0); any arithmetic with it throws.
  Weight() = default;
  Weight(Rank rank, RatVec coords);

  int rank() const { return static_cast<int>(coords_.size()); }
  const RatVec& coords() const { return coords_; }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }

  bool operator==(const Weight& o) const { return coords_ == o.coords_; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  /// Lexicographic order on epsilon-coordinates; used for all deterministic
  /// sequences and map keys.
  bool operator<(const Weight& o) const;

  Weight operator+(const Weight& o) const;
  Weight operator-(const Weight& o) const;
  Weight operator*(const Rat& s) const;

 private:
  RatVec coords_;
};

/// Positive and simple roots of the C_l root system, in a fixed order.
struct RootData {
  Rank rank;
  std::vector<Weight> positive_roots;  // l^2 roots, descending lexicographic
  std::vector<Weight> simple_roots;    // e_i - e_{i+1} (i < l), then 2 e_l
};

/// Sum_i coeffs_i * w_i with w_i = e_1 + ... + e_i, expressed in
/// epsilon-coordinates.
Weight weight_from_fundamental(const RatVec& coeffs, Rank l);

/// Inverse coordinate change: fundamental coefficients of w.
RatVec fundamental_from_weight(const Weight& w);

/// <a,b> = Sum_i a_i b_i.  Both arguments must share the same rank.
Rat inner(const Weight& a, const Weight& b);

/// The Weyl vector delta = (l, l-1, ..., 1), i.e. the sum of all fundamental
/// weights.
Weight weyl_delta(Rank l);

RootData root_data(Rank l);

/// Basis vector e_i (1-based) as a Weight.
Weight epsilon(Rank l, int i);

Weight zero_weight(Rank l);

/// Coordinates of w in the simple-root basis (exact; not necessarily
/// integral or non-negative for arbitrary w).
RatVec simple_root_coords(const Weight& w);

/// Height of w = Sum k_i alpha_i when every k_i is a non-negative integer;
/// nullopt otherwise.  This is the truncation depth used by the character
/// oracle.
std::optional<long> root_height(const Weight& w);

}  // namespace cpspinor
