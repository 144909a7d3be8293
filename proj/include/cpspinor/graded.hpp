#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "cpspinor/ratmat.hpp"
#include "cpspinor/weights.hpp"

namespace cpspinor {

// Explicit matrix model of g = sp(2l+2) with its contact |2|-grading
//   g = g_{-2} + g_{-1} + g_0 + g_1 + g_2,   g_0 = sp(2l) + R Gr,
// in the basis where the symplectic form is anti-diagonal (+1 on the lower
// half, -1 on the upper half) and the grading element is
// Gr = diag(1, 0, ..., 0, -1).  Everything downstream (Killing forms, dual
// bases, jet actions, Casimir and spectral checks) is measured from this
// realization in exact rational arithmetic; no closed-form normalization
// constants are assumed anywhere.

class GradedRealization {
 public:
  /// l >= 3 is the validated range; l = 2 is accepted for cheap tests.
  explicit GradedRealization(int l);

  int l() const { return l_; }
  int ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }

  const RatMat& omega() const { return omega_; }
  const RatMat& gr() const { return basis_[gr_index_]; }
  int gr_index() const { return gr_index_; }

  const std::vector<RatMat>& basis() const { return basis_; }
  int grade_of(int index) const { return grade_[index]; }
  const std::vector<int>& indices_of_grade(int j) const;
  /// Grade-0 basis indices other than Gr: a basis of g_0^ss = sp(2l).
  const std::vector<int>& g0ss_indices() const { return g0ss_; }

  /// Exact coordinates of x in the realization basis; throws InvalidInput
  /// when x does not lie in sp(2l+2).
  RatVec coordinates(const RatMat& x) const;

  RatMat from_coordinates(const RatVec& coords) const;

  /// ad of the k-th basis element, as a dim x dim matrix (lazily built).
  const RatMat& ad(int k) const;

  /// Killing form tr(ad x . ad y) of the full algebra.
  Rat killing(const RatMat& x, const RatMat& y) const;
  Rat killing_by_index(int k, int m) const;

  /// Killing form of g_0^ss computed intrinsically (ad-traces inside the
  /// subalgebra alone), for two elements of its span.
  Rat killing_g0ss(const RatMat& x, const RatMat& y) const;

  /// Cartan elements H_1..H_l of g_0^ss (diag +1 at slot i, -1 mirrored);
  /// returned as realization basis indices.
  const std::vector<int>& cartan_indices() const { return cartan_; }

  /// Root of a g_0^ss basis element (zero weight for Cartan elements).
  const Weight& root_of(int g0ss_index) const;
  /// g_0^ss basis indices whose root is positive.
  const std::vector<int>& positive_root_indices() const { return positive_; }

 private:
  void build_basis();
  void build_structure();

  int l_, ambient_;
  RatMat omega_;
  std::vector<RatMat> basis_;
  std::vector<int> grade_;
  std::map<int, std::vector<int>> by_grade_;
  int gr_index_ = -1;
  std::vector<int> g0ss_;
  std::vector<int> cartan_;
  std::vector<int> positive_;
  std::map<int, Weight> roots_;
  // Disjoint-support bookkeeping: every matrix position belongs to exactly
  // one basis element.
  std::vector<std::vector<int>> owner_index_;
  std::vector<std::vector<Rat>> owner_coeff_;
  // Lazily built and then immutable; the mutex keeps concurrent readers safe.
  mutable std::mutex cache_mu_;
  mutable std::vector<std::optional<RatMat>> ad_cache_;
  mutable std::optional<RatMat> killing_gram_;
  mutable std::optional<RatMat> g0ss_gram_;
  const RatMat& ad_unlocked(int k) const;
  const RatMat& killing_gram() const;
  const RatMat& g0ss_gram() const;
  RatVec g0ss_local_coords(const RatMat& x) const;
};

/// Killing-dual bases: {xi^i} spanning g_+ (g_1 first, then g_2) with duals
/// {xi_i} in g_-, and {eta^i} spanning g_0 (g_0^ss first, Gr last) with duals
/// {eta_i}.  Pairings are exactly delta^i_j.
struct DualBases {
  int s;  // dim g_1
  int r;  // dim g_+
  int t;  // dim g_0^ss
  std::vector<RatMat> xi_up, xi_down;
  std::vector<RatMat> eta_up, eta_down;
};

DualBases dual_bases(const GradedRealization& real);

/// Normalization constants measured from the realization next to the
/// reference values quoted in the source derivation.
struct MeasuredConstants {
  Rat gr_norm;                  // (Gr,Gr)_g by ad-traces
  Rat gr_norm_paper;            // 8l+8
  Rat kappa_measured;           // (x,y)_{g0ss} / (x,y)_g on g_0^ss
  Rat kappa_paper;              // l/(l+1)
  Rat dual_ratio;               // dual of the intrinsic g0ss Killing form vs <,>
  Rat dual_ratio_restricted;    // dual of (,)_g restricted to g0ss vs <,>
  Rat dual_ratio_paper;         // 1/(8l+8)
  bool gr_norm_matches_paper;
  bool kappa_matches_paper;
  bool dual_ratio_matches_paper;
};

MeasuredConstants measured_constants(const GradedRealization& real);

enum class ModuleKind { defining, adjoint, trivial };
enum class ModuleAlgebra { g_full, g0ss };

/// Finite-dimensional test module: one action matrix per realization basis
/// element.  For g0ss modules the nilpotent part acts by zero and Gr acts by
/// the conformal weight c; the negative part is undefined (the module is a
/// p-module).
class ModuleRealization {
 public:
  static ModuleRealization build(const GradedRealization& real, ModuleKind kind, ModuleAlgebra algebra,
                                 Rat conformal_c = Rat(0));
  /// g_1 as a g0ss-module (the defining 2l-dimensional representation living
  /// inside the grading); Gr acts by 1.
  static ModuleRealization g1_module(const GradedRealization& real);
  /// Tensor product with diagonal action.
  static ModuleRealization tensor(const ModuleRealization& a, const ModuleRealization& b);

  int dim() const { return dim_; }
  ModuleKind kind() const { return kind_; }
  ModuleAlgebra algebra() const { return algebra_; }
  const Rat& conformal_c() const { return c_; }

  /// Action matrix of the k-th realization basis element; throws for
  /// negative grades on p-modules.
  const RatMat& action(int k) const;

  /// Action of Sum coords_k B_k.
  RatMat act(const RatVec& coords) const;

  /// Weight of each basis vector of the module, read from the (diagonal)
  /// Cartan actions.
  std::vector<Weight> basis_weights(const GradedRealization& real) const;

 private:
  ModuleRealization() = default;
  int dim_ = 0;
  ModuleKind kind_ = ModuleKind::trivial;
  ModuleAlgebra algebra_ = ModuleAlgebra::g0ss;
  Rat c_;
  std::vector<RatMat> action_;
  std::vector<bool> defined_;
};

/// Element of the first-jet module J^1 E = E + (g_+ (x) E); jet slot i holds
/// the coefficient of xi^i.
struct JetVector {
  RatVec v_prime;
  std::vector<RatVec> jet;  // r slots of module vectors

  static JetVector zero(int r, int dim_e);
  bool operator==(const JetVector& o) const { return v_prime == o.v_prime && jet == o.jet; }
};

/// The induced p-action on first jets:
///   R.(v', S (x) v'') = (R.v', S (x) R.v'' + [R,S] (x) v''
///                         + Sum_i xi^i (x) [R, xi_i]_p . v').
JetVector jets_act(const GradedRealization& real, const DualBases& duals, const ModuleRealization& mod,
                   const RatMat& r_elt, const JetVector& w);

/// Projection J^1 E -> restricted jets: zeroes the g_2 slots.
JetVector restrict_jet(const GradedRealization& real, const DualBases& duals, JetVector w);

/// Psi(X (x) v) = Sum_{i<=s} xi^i (x) [X, xi_i].v on g_1 (x) E, as a matrix
/// in the basis {xi^a (x) e_b} (slot-major).
RatMat psi_matrix(const GradedRealization& real, const DualBases& duals, const ModuleRealization& mod);

/// The same map computed through the g_0 dual pair:
/// Psi(X (x) v) = Sum_j [eta_j, X] (x) eta^j.v.  Built independently of
/// psi_matrix so the two can be compared entry by entry.
RatMat psi_matrix_via_g0(const GradedRealization& real, const DualBases& duals, const ModuleRealization& mod);

/// Psi computed with a re-mixed basis of g_1 (unimodular rational change of
/// basis, duals recomputed); the result is expressed in the original tensor
/// basis and must coincide with psi_matrix.
RatMat psi_matrix_with_mixed_g1(const GradedRealization& real, const DualBases& duals, const ModuleRealization& mod,
                                const RatMat& mix);

/// Casimir of g_0^ss in the measured normalization (intrinsic dual pairs),
/// acting on the module.
RatMat casimir_operator(const GradedRealization& real, const ModuleRealization& mod);

/// Same, asserting the result is scalar (irreducible test modules) and
/// returning the scalar alongside.
std::pair<RatMat, Rat> casimir_matrix(const GradedRealization& real, const ModuleRealization& mod);

/// Highest-weight vectors of a g0ss-module: weight and coordinate vector,
/// one entry per irreducible component (ordered by descending weight).
std::vector<std::pair<Weight, RatVec>> highest_weight_vectors(const GradedRealization& real,
                                                              const ModuleRealization& mod);

/// Lagrange projectors onto the eigenspaces of a diagonalizable matrix with
/// the given distinct exact eigenvalues; validates idempotence, mutual
/// annihilation and partition of unity.
std::vector<RatMat> spectral_projectors(const RatMat& c_matrix, const std::vector<Rat>& eigenvalues);

}  // namespace cpspinor
