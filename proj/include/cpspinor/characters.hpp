#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cpspinor/spinor_sets.hpp"
#include "cpspinor/verma.hpp"
#include "cpspinor/weights.hpp"

namespace cpspinor {

// Truncated formal characters of highest weight sp(2l,C)-modules, exact
// within a declared window.  The multiplicity oracle is a Freudenthal-type
// recursion seeded at the top weight; at the (provably occurring) weights
// where its denominator vanishes the multiplicity is settled independently
// by the contravariant-form rank (VermaShapovalov) and the resolution is
// recorded in the character, never guessed.

struct Window {
  Weight top;
  long depth = 0;  // maximum simple-root height of top - nu

  bool contains(const Weight& nu) const;
};

/// A zero-denominator point of the recursion and how it was settled.
struct DegenerateResolution {
  Weight nu;
  long verma_dim;
  long multiplicity;
};

struct FormalCharacter {
  Window window;
  std::map<Weight, long> mult;  // nonzero entries only
  std::vector<DegenerateResolution> degenerate_points;

  long multiplicity_at(const Weight& nu) const;
  long total_mass() const;
  long max_multiplicity() const;
};

enum class Parity { even, odd };

/// Exact character of the basic spinor module S+ (even) or S- (odd) from the
/// polynomial realization: the monomial z^a carries weight -Sum (a_i+1/2)e_i.
FormalCharacter spinor_character(Rank l, Parity parity, long depth);

struct FreudenthalOptions {
  /// Abort with DegenerateRecursion at zero denominators instead of
  /// resolving them through the contravariant form.
  bool strict = false;
};

/// Multiplicities of L(lambda) down to the requested depth.  lambda must be
/// admissible (infinite-dimensional case) or dominant integral (classical
/// Freudenthal).
FormalCharacter freudenthal_character(const Weight& lambda, long depth, const FreudenthalOptions& opts = {});

/// Cached variant: one JSON file per (l, lambda, depth) under cache_dir,
/// recomputed on version mismatch.
FormalCharacter freudenthal_character_cached(const Weight& lambda, long depth, const std::string& cache_dir,
                                             const FreudenthalOptions& opts = {});

/// Largest height of top - nu over the entries (0 for a single-point
/// character).
long height_spread(const FormalCharacter& c);

/// Truncated product of a character with the complete character of a
/// finite-dimensional module; exact to the requested depth below
/// a.top + b.top.  Requires a.depth >= depth + height_spread(b).
FormalCharacter multiply_truncated(const FormalCharacter& a, const FormalCharacter& b_finite, long depth);

/// Weyl dimension of F(lambda) for dominant integral lambda.
Rat weyl_dim(const Weight& lambda);

struct Theorem2Report {
  bool pass = false;
  Weight lambda;
  long depth = 0;
  std::vector<Weight> components;
  long weights_compared = 0;
  bool spinor_cross_checked = false;
  std::optional<Weight> discrepancy_weight;
  long discrepancy_lhs = 0;
  long discrepancy_rhs = 0;
  std::vector<DegenerateResolution> degenerate_points;
};

/// Checks char L(lambda) * char F(w_1) == Sum_{mu in A_lambda} char L(mu)
/// weight by weight within the window of depth `depth` below lambda + e_1.
/// components_override substitutes the component list (negative controls).
Theorem2Report verify_theorem2(const Weight& lambda, long depth, const std::string& cache_dir = "",
                               const std::optional<std::vector<Weight>>& components_override = std::nullopt);

}  // namespace cpspinor
