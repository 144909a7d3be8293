#pragma once

#include <map>
#include <memory>
#include <vector>

#include "cpspinor/graded.hpp"
#include "cpspinor/weights.hpp"

namespace cpspinor {

// Weight multiplicities of irreducible highest weight modules over sp(2l,C)
// from first principles: dim L(lambda)_nu equals the rank of the Gram matrix
// of the contravariant (Shapovalov) form on the Verma weight space
// M(lambda)_nu.  The form is computed with a small PBW engine over the exact
// structure constants of the matrix realization (transpose as the
// Chevalley antiinvolution).  This holds for every lambda, dominant or not,
// which is what makes it a sound cross-check at the points where the
// multiplicity recursion degenerates.
class VermaShapovalov {
 public:
  explicit VermaShapovalov(int l);
  ~VermaShapovalov();

  int l() const;

  /// Number of PBW monomials of depth beta (= dim M(lambda)_{lambda-beta});
  /// zero when beta is outside the positive root cone.
  long verma_dim(const Weight& beta) const;

  /// dim L(lambda)_{lambda - beta}, exact; zero outside the cone.
  long multiplicity(const Weight& lambda, const Weight& beta) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace cpspinor
