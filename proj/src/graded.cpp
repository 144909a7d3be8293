#include "cpspinor/graded.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace cpspinor {

namespace {

struct Ent {
  int r, c;
  Rat v;
};

// Position grade: +1 on the first coordinate, -1 on the last, 0 in between.
int pos_grade(int p, int n) { return p == 0 ? 1 : (p == n - 1 ? -1 : 0); }

}  // namespace

GradedRealization::GradedRealization(int l) : l_(l), ambient_(2 * l + 2) {
  if (l < 2) throw InvalidInput("graded realization requires rank >= 2");
  build_basis();
  build_structure();
}

void GradedRealization::build_basis() {
  const int n = ambient_;
  omega_ = RatMat(n, n);
  for (int p = 0; p < n; ++p) omega_.at(p, n - 1 - p) = (p <= l_ ? Rat(-1) : Rat(1));

  // sp(n) = Omega^{-1} Sym(n); the generator attached to the symmetric pair
  // {i,j} has support {(n-1-i, j), (n-1-j, i)}, which is grade-homogeneous
  // and meets every other generator's support in nothing.
  auto sign_at = [&](int p) { return p <= l_ ? Rat(-1) : Rat(1); };
  struct Raw {
    std::vector<Ent> entries;
    int grade;
  };
  std::vector<Raw> raw;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      std::vector<Ent> e;
      int ibar = n - 1 - i, jbar = n - 1 - j;
      if (i == j) {
        e.push_back({ibar, i, Rat(1)});
      } else {
        e.push_back({ibar, j, -sign_at(ibar)});
        e.push_back({jbar, i, -sign_at(jbar)});
      }
      std::sort(e.begin(), e.end(), [](const Ent& a, const Ent& b) { return a.r != b.r ? a.r < b.r : a.c < b.c; });
      Rat lead = e.front().v;
      for (Ent& x : e) x.v /= lead;
      raw.push_back({e, pos_grade(e.front().r, n) - pos_grade(e.front().c, n)});
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    if (a.grade != b.grade) return a.grade < b.grade;
    if (a.entries.front().r != b.entries.front().r) return a.entries.front().r < b.entries.front().r;
    return a.entries.front().c < b.entries.front().c;
  });

  owner_index_.assign(n, std::vector<int>(n, -1));
  owner_coeff_.assign(n, RatVec(n, Rat(0)));
  for (std::size_t k = 0; k < raw.size(); ++k) {
    RatMat m(n, n);
    for (const Ent& e : raw[k].entries) {
      m.at(e.r, e.c) = e.v;
      owner_index_[e.r][e.c] = static_cast<int>(k);
      owner_coeff_[e.r][e.c] = e.v;
    }
    basis_.push_back(std::move(m));
    grade_.push_back(raw[k].grade);
    by_grade_[raw[k].grade].push_back(static_cast<int>(k));
  }
  ad_cache_.assign(basis_.size(), std::nullopt);
}

RatVec GradedRealization::coordinates(const RatMat& x) const {
  const int n = ambient_;
  if (x.rows() != n || x.cols() != n) throw InvalidInput("matrix does not match the ambient dimension");
  RatVec coords(basis_.size(), Rat(0));
  std::vector<bool> have(basis_.size(), false);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int k = owner_index_[a][b];
      if (!have[k]) {
        coords[k] = x.at(a, b) / owner_coeff_[a][b];
        have[k] = true;
      } else if (x.at(a, b) != coords[k] * owner_coeff_[a][b]) {
        throw InvalidInput("matrix is not in the span of the symplectic basis");
      }
    }
  return coords;
}

RatMat GradedRealization::from_coordinates(const RatVec& coords) const {
  if (coords.size() != basis_.size()) throw InvalidInput("coordinate count mismatch");
  RatMat x(ambient_, ambient_);
  for (std::size_t k = 0; k < coords.size(); ++k)
    if (coords[k] != 0) x = x + basis_[k] * coords[k];
  return x;
}

void GradedRealization::build_structure() {
  const int n = ambient_;
  // Grading element: the unique grade-0 generator supported on the corners.
  gr_index_ = owner_index_[0][0];
  for (int k : by_grade_[0])
    if (k != gr_index_) g0ss_.push_back(k);

  // Cartan elements H_i = E_ii - E_(mirror,mirror), i = 1..l.
  for (int i = 1; i <= l_; ++i) {
    RatMat h(n, n);
    h.at(i, i) = 1;
    h.at(n - 1 - i, n - 1 - i) = -1;
    RatVec c = coordinates(h);
    int found = -1;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] == 0) continue;
      if (c[k] != 1 || found >= 0) throw OracleFailure("Cartan element is not a unit basis vector");
      found = static_cast<int>(k);
    }
    cartan_.push_back(found);
  }

  // Root labels of the g_0^ss basis elements, measured by bracketing with
  // the Cartan elements.
  Rank rk(l_, Rank::LowRank::allow);
  for (int k : g0ss_) {
    RatVec root(l_, Rat(0));
    for (int i = 0; i < l_; ++i) {
      RatMat br = basis_[cartan_[i]].commutator(basis_[k]);
      // br must be an exact multiple of basis_[k].
      RatVec bc = coordinates(br);
      for (std::size_t m = 0; m < bc.size(); ++m)
        if (bc[m] != 0 && static_cast<int>(m) != k)
          throw OracleFailure("g0ss basis element is not a Cartan eigenvector");
      root[i] = bc[static_cast<std::size_t>(k)];
    }
    roots_.emplace(k, Weight(rk, root));
  }
  for (int k : g0ss_) {
    const Weight& w = roots_.at(k);
    for (int i = 0; i < l_; ++i) {
      if (w[i] == 0) continue;
      if (w[i] > 0) positive_.push_back(k);
      break;
    }
  }
}

const std::vector<int>& GradedRealization::indices_of_grade(int j) const {
  static const std::vector<int> empty;
  auto it = by_grade_.find(j);
  return it == by_grade_.end() ? empty : it->second;
}

const RatMat& GradedRealization::ad_unlocked(int k) const {
  if (!ad_cache_[k]) {
    RatMat m(dim(), dim());
    for (int j = 0; j < dim(); ++j) {
      RatVec col = coordinates(basis_[k].commutator(basis_[j]));
      for (int i = 0; i < dim(); ++i) m.at(i, j) = col[i];
    }
    ad_cache_[k] = std::move(m);
  }
  return *ad_cache_[k];
}

const RatMat& GradedRealization::ad(int k) const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  return ad_unlocked(k);
}

const RatMat& GradedRealization::killing_gram() const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  if (!killing_gram_) {
    RatMat g(dim(), dim());
    // Sparse trace: ad matrices have O(dim) nonzero entries.
    std::vector<std::vector<Ent>> nnz(dim());
    for (int k = 0; k < dim(); ++k) {
      const RatMat& a = ad_unlocked(k);
      for (int i = 0; i < dim(); ++i)
        for (int j = 0; j < dim(); ++j)
          if (a.at(i, j) != 0) nnz[k].push_back({i, j, a.at(i, j)});
    }
    for (int k = 0; k < dim(); ++k)
      for (int m = k; m < dim(); ++m) {
        Rat t = 0;
        const RatMat& am = ad_unlocked(m);
        for (const Ent& e : nnz[k])
          if (am.at(e.c, e.r) != 0) t += e.v * am.at(e.c, e.r);
        g.at(k, m) = t;
        g.at(m, k) = t;
      }
    killing_gram_ = std::move(g);
  }
  return *killing_gram_;
}

Rat GradedRealization::killing_by_index(int k, int m) const { return killing_gram().at(k, m); }

Rat GradedRealization::killing(const RatMat& x, const RatMat& y) const {
  RatVec cx = coordinates(x), cy = coordinates(y);
  const RatMat& g = killing_gram();
  Rat s = 0;
  for (int k = 0; k < dim(); ++k) {
    if (cx[k] == 0) continue;
    for (int m = 0; m < dim(); ++m)
      if (cy[m] != 0 && g.at(k, m) != 0) s += cx[k] * cy[m] * g.at(k, m);
  }
  return s;
}

RatVec GradedRealization::g0ss_local_coords(const RatMat& x) const {
  const int t = static_cast<int>(g0ss_.size());
  RatVec full = coordinates(x);
  RatVec loc(t, Rat(0));
  std::map<int, int> local;
  for (int i = 0; i < t; ++i) local[g0ss_[i]] = i;
  for (int k = 0; k < dim(); ++k) {
    if (full[k] == 0) continue;
    auto it = local.find(k);
    if (it == local.end()) throw InvalidInput("element is not in the span of g_0^ss");
    loc[it->second] = full[k];
  }
  return loc;
}

const RatMat& GradedRealization::g0ss_gram() const {
  std::lock_guard<std::mutex> lock(cache_mu_);
  if (!g0ss_gram_) {
    // Intrinsic ad-trace Gram of g_0^ss.
    const int t = static_cast<int>(g0ss_.size());
    std::vector<RatMat> ads(t, RatMat(t, t));
    for (int i = 0; i < t; ++i)
      for (int j = 0; j < t; ++j) {
        RatVec col = g0ss_local_coords(basis_[g0ss_[i]].commutator(basis_[g0ss_[j]]));
        for (int m = 0; m < t; ++m) ads[i].at(m, j) = col[m];
      }
    RatMat g(t, t);
    for (int i = 0; i < t; ++i)
      for (int j = i; j < t; ++j) {
        Rat tr = (ads[i] * ads[j]).trace();
        g.at(i, j) = tr;
        g.at(j, i) = tr;
      }
    g0ss_gram_ = std::move(g);
  }
  return *g0ss_gram_;
}

Rat GradedRealization::killing_g0ss(const RatMat& x, const RatMat& y) const {
  const RatMat& g = g0ss_gram();
  RatVec cx = g0ss_local_coords(x), cy = g0ss_local_coords(y);
  const int t = g.rows();
  Rat s = 0;
  for (int i = 0; i < t; ++i) {
    if (cx[i] == 0) continue;
    for (int j = 0; j < t; ++j)
      if (cy[j] != 0 && g.at(i, j) != 0) s += cx[i] * cy[j] * g.at(i, j);
  }
  return s;
}

const Weight& GradedRealization::root_of(int g0ss_index) const {
  auto it = roots_.find(g0ss_index);
  if (it == roots_.end()) throw InvalidInput("index is not a g_0^ss basis element");
  return it->second;
}

DualBases dual_bases(const GradedRealization& real) {
  DualBases d;
  std::vector<int> up, down;
  for (int k : real.indices_of_grade(1)) up.push_back(k);
  d.s = static_cast<int>(up.size());
  for (int k : real.indices_of_grade(2)) up.push_back(k);
  d.r = static_cast<int>(up.size());
  for (int k : real.indices_of_grade(-1)) down.push_back(k);
  for (int k : real.indices_of_grade(-2)) down.push_back(k);

  RatMat gram(d.r, d.r);
  for (int i = 0; i < d.r; ++i)
    for (int j = 0; j < d.r; ++j) gram.at(i, j) = real.killing_by_index(up[i], down[j]);
  RatMat c = inverse(gram);
  for (int i = 0; i < d.r; ++i) d.xi_up.push_back(real.basis()[up[i]]);
  for (int j = 0; j < d.r; ++j) {
    RatMat x(real.ambient(), real.ambient());
    for (int m = 0; m < d.r; ++m)
      if (c.at(m, j) != 0) x = x + real.basis()[down[m]] * c.at(m, j);
    d.xi_down.push_back(std::move(x));
  }

  std::vector<int> g0(real.g0ss_indices());
  d.t = static_cast<int>(g0.size());
  g0.push_back(real.gr_index());
  RatMat gram0(d.t + 1, d.t + 1);
  for (int i = 0; i <= d.t; ++i)
    for (int j = 0; j <= d.t; ++j) gram0.at(i, j) = real.killing_by_index(g0[i], g0[j]);
  RatMat c0 = inverse(gram0);
  for (int i = 0; i <= d.t; ++i) d.eta_up.push_back(real.basis()[g0[i]]);
  for (int j = 0; j <= d.t; ++j) {
    RatMat x(real.ambient(), real.ambient());
    for (int m = 0; m <= d.t; ++m)
      if (c0.at(m, j) != 0) x = x + real.basis()[g0[m]] * c0.at(m, j);
    d.eta_down.push_back(std::move(x));
  }
  return d;
}

MeasuredConstants measured_constants(const GradedRealization& real) {
  MeasuredConstants out;
  const int l = real.l();
  out.gr_norm = real.killing_by_index(real.gr_index(), real.gr_index());
  out.gr_norm_paper = Rat(8 * l + 8);

  // kappa: the two invariant forms on the simple algebra g_0^ss are
  // proportional; measure the ratio and insist it is the same for every
  // probing pair.
  bool have = false;
  Rat kappa;
  for (int i : real.g0ss_indices())
    for (int j : real.g0ss_indices()) {
      Rat full = real.killing_by_index(i, j);
      Rat intr = real.killing_g0ss(real.basis()[i], real.basis()[j]);
      if (full == 0) {
        if (intr != 0) throw OracleFailure("g0ss Killing forms are not proportional");
        continue;
      }
      Rat ratio = intr / full;
      if (!have) {
        kappa = ratio;
        have = true;
      } else if (ratio != kappa) {
        throw OracleFailure("g0ss Killing form ratio is not constant");
      }
    }
  if (!have) throw OracleFailure("no nonzero Killing pairings found on g0ss");
  out.kappa_measured = kappa;
  out.kappa_paper = Rat(l, l + 1);

  // Dual-form ratios on the Cartan dual: the inverse of the Cartan Gram in
  // the H-basis is the Gram of the dual form in the epsilon-basis, which
  // must be an exact multiple of the identity.
  auto dual_ratio_from = [&](bool intrinsic) {
    RatMat g(l, l);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        int a = real.cartan_indices()[i], b = real.cartan_indices()[j];
        g.at(i, j) = intrinsic ? real.killing_g0ss(real.basis()[a], real.basis()[b]) : real.killing_by_index(a, b);
      }
    RatMat d = inverse(g);
    Rat s;
    if (!d.scalar_multiple_of_identity(s))
      throw OracleFailure("dual Cartan Gram is not a multiple of the identity");
    return s;
  };
  out.dual_ratio = dual_ratio_from(true);
  out.dual_ratio_restricted = dual_ratio_from(false);
  out.dual_ratio_paper = Rat(1, 8 * l + 8);

  out.gr_norm_matches_paper = (out.gr_norm == out.gr_norm_paper);
  out.kappa_matches_paper = (out.kappa_measured == out.kappa_paper);
  out.dual_ratio_matches_paper =
      (out.dual_ratio == out.dual_ratio_paper) || (out.dual_ratio_restricted == out.dual_ratio_paper);
  return out;
}

ModuleRealization ModuleRealization::build(const GradedRealization& real, ModuleKind kind, ModuleAlgebra algebra,
                                           Rat conformal_c) {
  ModuleRealization m;
  m.kind_ = kind;
  m.algebra_ = algebra;
  m.c_ = conformal_c;
  const int dimg = real.dim();
  m.action_.assign(dimg, RatMat());
  m.defined_.assign(dimg, false);

  if (algebra == ModuleAlgebra::g_full) {
    switch (kind) {
      case ModuleKind::defining:
        m.dim_ = real.ambient();
        for (int k = 0; k < dimg; ++k) {
          m.action_[k] = real.basis()[k];
          m.defined_[k] = true;
        }
        break;
      case ModuleKind::adjoint:
        m.dim_ = dimg;
        for (int k = 0; k < dimg; ++k) {
          m.action_[k] = real.ad(k);
          m.defined_[k] = true;
        }
        break;
      case ModuleKind::trivial:
        m.dim_ = 1;
        for (int k = 0; k < dimg; ++k) {
          m.action_[k] = RatMat(1, 1);
          m.defined_[k] = true;
        }
        break;
    }
    return m;
  }

  const std::vector<int>& g0 = real.g0ss_indices();
  const int t = static_cast<int>(g0.size());
  std::map<int, int> local;
  for (int i = 0; i < t; ++i) local[g0[i]] = i;

  switch (kind) {
    case ModuleKind::defining: {
      m.dim_ = 2 * real.l();
      for (int k : g0) {
        RatMat a(m.dim_, m.dim_);
        for (int i = 0; i < m.dim_; ++i)
          for (int j = 0; j < m.dim_; ++j) a.at(i, j) = real.basis()[k].at(1 + i, 1 + j);
        m.action_[k] = std::move(a);
        m.defined_[k] = true;
      }
      break;
    }
    case ModuleKind::adjoint: {
      m.dim_ = t;
      for (int k : g0) {
        RatMat a(t, t);
        for (int j = 0; j < t; ++j) {
          RatVec col = real.coordinates(real.basis()[k].commutator(real.basis()[g0[j]]));
          for (int i = 0; i < real.dim(); ++i) {
            if (col[i] == 0) continue;
            auto it = local.find(i);
            if (it == local.end()) throw OracleFailure("g0ss bracket left the subalgebra");
            a.at(it->second, j) = col[i];
          }
        }
        m.action_[k] = std::move(a);
        m.defined_[k] = true;
      }
      break;
    }
    case ModuleKind::trivial: {
      m.dim_ = 1;
      for (int k : g0) {
        m.action_[k] = RatMat(1, 1);
        m.defined_[k] = true;
      }
      break;
    }
  }
  // Grading element acts by the conformal weight, the nilpotent part by zero.
  m.action_[real.gr_index()] = RatMat::identity(m.dim_) * conformal_c;
  m.defined_[real.gr_index()] = true;
  for (int j : real.indices_of_grade(1)) {
    m.action_[j] = RatMat(m.dim_, m.dim_);
    m.defined_[j] = true;
  }
  for (int j : real.indices_of_grade(2)) {
    m.action_[j] = RatMat(m.dim_, m.dim_);
    m.defined_[j] = true;
  }
  return m;
}

ModuleRealization ModuleRealization::g1_module(const GradedRealization& real) {
  ModuleRealization m;
  m.kind_ = ModuleKind::defining;
  m.algebra_ = ModuleAlgebra::g0ss;
  m.c_ = 1;
  const std::vector<int>& g1 = real.indices_of_grade(1);
  const int s = static_cast<int>(g1.size());
  std::map<int, int> slot;
  for (int i = 0; i < s; ++i) slot[g1[i]] = i;
  m.dim_ = s;
  m.action_.assign(real.dim(), RatMat());
  m.defined_.assign(real.dim(), false);
  for (int k : real.g0ss_indices()) {
    RatMat a(s, s);
    for (int j = 0; j < s; ++j) {
      RatVec col = real.coordinates(real.basis()[k].commutator(real.basis()[g1[j]]));
      for (int i = 0; i < real.dim(); ++i) {
        if (col[i] == 0) continue;
        auto it = slot.find(i);
        if (it == slot.end()) throw OracleFailure("g0ss bracket left g_1");
        a.at(it->second, j) = col[i];
      }
    }
    m.action_[k] = std::move(a);
    m.defined_[k] = true;
  }
  m.action_[real.gr_index()] = RatMat::identity(s);
  m.defined_[real.gr_index()] = true;
  return m;
}

ModuleRealization ModuleRealization::tensor(const ModuleRealization& a, const ModuleRealization& b) {
  if (a.action_.size() != b.action_.size()) throw InvalidInput("tensor factors come from different realizations");
  ModuleRealization m;
  m.kind_ = a.kind_;
  m.algebra_ = ModuleAlgebra::g0ss;
  m.c_ = a.c_ + b.c_;
  m.dim_ = a.dim_ * b.dim_;
  m.action_.assign(a.action_.size(), RatMat());
  m.defined_.assign(a.action_.size(), false);
  RatMat ia = RatMat::identity(a.dim_), ib = RatMat::identity(b.dim_);
  for (std::size_t k = 0; k < a.action_.size(); ++k) {
    if (!a.defined_[k] || !b.defined_[k]) continue;
    m.action_[k] = a.action_[k].kron(ib) + ia.kron(b.action_[k]);
    m.defined_[k] = true;
  }
  return m;
}

const RatMat& ModuleRealization::action(int k) const {
  if (k < 0 || k >= static_cast<int>(action_.size())) throw InvalidInput("basis index out of range");
  if (!defined_[k]) throw InvalidInput("module action undefined for this basis element (not a p-direction)");
  return action_[k];
}

RatMat ModuleRealization::act(const RatVec& coords) const {
  if (coords.size() != action_.size()) throw InvalidInput("coordinate count mismatch in module action");
  RatMat a(dim_, dim_);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == 0) continue;
    a = a + action(static_cast<int>(k)) * coords[k];
  }
  return a;
}

std::vector<Weight> ModuleRealization::basis_weights(const GradedRealization& real) const {
  Rank rk(real.l(), Rank::LowRank::allow);
  std::vector<RatVec> diag;
  for (int k : real.cartan_indices()) {
    const RatMat& a = action(k);
    RatVec d(dim_);
    for (int i = 0; i < dim_; ++i) {
      for (int j = 0; j < dim_; ++j)
        if (i != j && a.at(i, j) != 0) throw OracleFailure("Cartan action is not diagonal in the module basis");
      d[i] = a.at(i, i);
    }
    diag.push_back(std::move(d));
  }
  std::vector<Weight> out;
  for (int i = 0; i < dim_; ++i) {
    RatVec w(real.l());
    for (int k = 0; k < real.l(); ++k) w[k] = diag[k][i];
    out.push_back(Weight(rk, std::move(w)));
  }
  return out;
}

JetVector JetVector::zero(int r, int dim_e) {
  JetVector w;
  w.v_prime.assign(dim_e, Rat(0));
  w.jet.assign(r, RatVec(dim_e, Rat(0)));
  return w;
}

namespace {
void axpy(RatVec& y, const Rat& a, const RatVec& x) {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] += a * x[i];
}
}  // namespace

JetVector jets_act(const GradedRealization& real, const DualBases& duals, const ModuleRealization& mod,
                   const RatMat& r_elt, const JetVector& w) {
  RatVec coords = real.coordinates(r_elt);
  for (int k = 0; k < real.dim(); ++k)
    if (coords[k] != 0 && real.grade_of(k) < 0)
      throw InvalidInput("jet action requires an element of the parabolic subalgebra");
  if (static_cast<int>(w.jet.size()) != duals.r || static_cast<int>(w.v_prime.size()) != mod.dim())
    throw InvalidInput("jet vector shape mismatch");

  // Map realization index -> slot for the g_+ basis.
  std::vector<int> slot(real.dim(), -1);
  {
    int i = 0;
    for (int k : real.indices_of_grade(1)) slot[k] = i++;
    for (int k : real.indices_of_grade(2)) slot[k] = i++;
  }

  RatMat act_r = mod.act(coords);
  JetVector out = JetVector::zero(duals.r, mod.dim());
  out.v_prime = act_r.apply(w.v_prime);

  for (int i = 0; i < duals.r; ++i) {
    // S (x) R.v''
    RatVec rv = act_r.apply(w.jet[i]);
    axpy(out.jet[i], Rat(1), rv);
    // [R, S] (x) v''
    bool nonzero = false;
    for (const Rat& x : w.jet[i])
      if (x != 0) {
        nonzero = true;
        break;
      }
    if (nonzero) {
      RatVec bc = real.coordinates(r_elt.commutator(duals.xi_up[i]));
      for (int k = 0; k < real.dim(); ++k) {
        if (bc[k] == 0) continue;
        if (slot[k] < 0) throw OracleFailure("bracket of p with g_+ left g_+");
        axpy(out.jet[slot[k]], bc[k], w.jet[i]);
      }
    }
  }
  // Sum_i xi^i (x) [R, xi_i]_p . v'
  for (int i = 0; i < duals.r; ++i) {
    RatVec bc = real.coordinates(r_elt.commutator(duals.xi_down[i]));
    for (int k = 0; k < real.dim(); ++k)
      if (real.grade_of(k) < 0) bc[k] = 0;
    bool any = false;
    for (const Rat& x : bc)
      if (x != 0) {
        any = true;
        break;
      }
    if (!any) continue;
    RatVec contrib = mod.act(bc).apply(w.v_prime);
    axpy(out.jet[i], Rat(1), contrib);
  }
  return out;
}

JetVector restrict_jet(const GradedRealization&, const DualBases& duals, JetVector w) {
  for (int i = duals.s; i < duals.r; ++i) w.jet[i].assign(w.jet[i].size(), Rat(0));
  return w;
}

namespace {

int tensor_index(int slot, int vec, int dim_e) { return slot * dim_e + vec; }

}  // namespace

RatMat psi_matrix(const GradedRealization& real, const DualBases& duals, const ModuleRealization& mod) {
  const int s = duals.s, de = mod.dim();
  RatMat psi(s * de, s * de);
  for (int a = 0; a < s; ++a)
    for (int i = 0; i < s; ++i) {
      RatVec bc = real.coordinates(duals.xi_up[a].commutator(duals.xi_down[i]));
      RatMat act = mod.act(bc);
      if (act.is_zero()) continue;
      for (int b = 0; b < de; ++b)
        for (int c = 0; c < de; ++c)
          if (act.at(c, b) != 0) psi.at(tensor_index(i, c, de), tensor_index(a, b, de)) += act.at(c, b);
    }
  return psi;
}

RatMat psi_matrix_via_g0(const GradedRealization& real, const DualBases& duals, const ModuleRealization& mod) {
  const int s = duals.s, de = mod.dim();
  RatMat psi(s * de, s * de);
  // Slot map for g_1.
  std::vector<int> slot(real.dim(), -1);
  {
    int i = 0;
    for (int k : real.indices_of_grade(1)) slot[k] = i++;
  }
  for (int j = 0; j <= duals.t; ++j) {
    RatMat act_j = mod.act(real.coordinates(duals.eta_up[j]));
    for (int a = 0; a < s; ++a) {
      RatVec bc = real.coordinates(duals.eta_down[j].commutator(duals.xi_up[a]));
      for (int k = 0; k < real.dim(); ++k) {
        if (bc[k] == 0) continue;
        if (slot[k] < 0) throw OracleFailure("[eta_j, g_1] left g_1");
        for (int b = 0; b < de; ++b)
          for (int c = 0; c < de; ++c)
            if (act_j.at(c, b) != 0)
              psi.at(tensor_index(slot[k], c, de), tensor_index(a, b, de)) += bc[k] * act_j.at(c, b);
      }
    }
  }
  return psi;
}

RatMat psi_matrix_with_mixed_g1(const GradedRealization& real, const DualBases& duals, const ModuleRealization& mod,
                                const RatMat& mix) {
  const int s = duals.s, de = mod.dim();
  if (mix.rows() != s || mix.cols() != s) throw InvalidInput("basis mix must be s x s");
  // New basis xi'^a = Sum_b mix[a][b] xi^b of g_1, same g_2 part.
  std::vector<RatMat> up;
  for (int a = 0; a < s; ++a) {
    RatMat x(real.ambient(), real.ambient());
    for (int b = 0; b < s; ++b)
      if (mix.at(a, b) != 0) x = x + duals.xi_up[b] * mix.at(a, b);
    up.push_back(std::move(x));
  }
  // Duals of the new g_1 basis inside g_{-1}, by the Killing Gram.
  std::vector<int> neg = real.indices_of_grade(-1);
  RatMat gram(s, s);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < s; ++j) gram.at(i, j) = real.killing(up[i], real.basis()[neg[j]]);
  RatMat c = inverse(gram);
  std::vector<RatMat> down;
  for (int j = 0; j < s; ++j) {
    RatMat x(real.ambient(), real.ambient());
    for (int m = 0; m < s; ++m)
      if (c.at(m, j) != 0) x = x + real.basis()[neg[m]] * c.at(m, j);
    down.push_back(std::move(x));
  }
  // Psi with the mixed pair, expressed in the original tensor coordinates.
  std::vector<int> slot(real.dim(), -1);
  {
    int i = 0;
    for (int k : real.indices_of_grade(1)) slot[k] = i++;
  }
  RatMat psi(s * de, s * de);
  for (int a0 = 0; a0 < s; ++a0)
    for (int a = 0; a < s; ++a) {
      RatMat act = mod.act(real.coordinates(duals.xi_up[a0].commutator(down[a])));
      if (act.is_zero()) continue;
      RatVec pa = real.coordinates(up[a]);
      for (int k = 0; k < real.dim(); ++k) {
        if (pa[k] == 0) continue;
        if (slot[k] < 0) throw OracleFailure("mixed basis element is not in g_1");
        for (int b = 0; b < de; ++b)
          for (int cc = 0; cc < de; ++cc)
            if (act.at(cc, b) != 0)
              psi.at(tensor_index(slot[k], cc, de), tensor_index(a0, b, de)) += pa[k] * act.at(cc, b);
      }
    }
  return psi;
}

RatMat casimir_operator(const GradedRealization& real, const ModuleRealization& mod) {
  const std::vector<int>& g0 = real.g0ss_indices();
  const int t = static_cast<int>(g0.size());
  RatMat gram(t, t);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j)
      gram.at(i, j) = real.killing_g0ss(real.basis()[g0[i]], real.basis()[g0[j]]);
  RatMat inv = inverse(gram);
  RatMat c(mod.dim(), mod.dim());
  for (int i = 0; i < t; ++i) {
    RatMat dual(mod.dim(), mod.dim());
    for (int m = 0; m < t; ++m)
      if (inv.at(m, i) != 0) dual = dual + mod.action(g0[m]) * inv.at(m, i);
    c = c + mod.action(g0[i]) * dual;
  }
  return c;
}

std::pair<RatMat, Rat> casimir_matrix(const GradedRealization& real, const ModuleRealization& mod) {
  RatMat c = casimir_operator(real, mod);
  Rat s;
  if (!c.scalar_multiple_of_identity(s))
    throw OracleFailure("Casimir is not scalar on this module (is it irreducible?)");
  return {std::move(c), std::move(s)};
}

std::vector<std::pair<Weight, RatVec>> highest_weight_vectors(const GradedRealization& real,
                                                              const ModuleRealization& mod) {
  std::vector<Weight> wts = mod.basis_weights(real);
  std::map<Weight, std::vector<int>> spaces;
  for (int i = 0; i < mod.dim(); ++i) spaces[wts[i]].push_back(i);

  std::vector<std::pair<Weight, RatVec>> out;
  for (auto it = spaces.rbegin(); it != spaces.rend(); ++it) {
    const std::vector<int>& idx = it->second;
    std::vector<RatMat> blocks;
    for (int p : real.positive_root_indices()) {
      const RatMat& a = mod.action(p);
      RatMat sub(mod.dim(), static_cast<int>(idx.size()));
      for (int col = 0; col < static_cast<int>(idx.size()); ++col)
        for (int row = 0; row < mod.dim(); ++row) sub.at(row, col) = a.at(row, idx[col]);
      blocks.push_back(std::move(sub));
    }
    RatMat ns = nullspace(vstack(blocks));
    for (int k = 0; k < ns.cols(); ++k) {
      RatVec full(mod.dim(), Rat(0));
      for (int row = 0; row < static_cast<int>(idx.size()); ++row) full[idx[row]] = ns.at(row, k);
      out.emplace_back(it->first, std::move(full));
    }
  }
  return out;
}

std::vector<RatMat> spectral_projectors(const RatMat& c_matrix, const std::vector<Rat>& eigenvalues) {
  for (std::size_t i = 0; i < eigenvalues.size(); ++i)
    for (std::size_t j = i + 1; j < eigenvalues.size(); ++j)
      if (eigenvalues[i] == eigenvalues[j])
        throw DegenerateSpectrum("repeated Casimir eigenvalue " + rat_str(eigenvalues[i]) +
                                 ": components are not separable by the Casimir");
  const int n = c_matrix.rows();
  std::vector<RatMat> out;
  for (std::size_t k = 0; k < eigenvalues.size(); ++k) {
    RatMat p = RatMat::identity(n);
    for (std::size_t j = 0; j < eigenvalues.size(); ++j) {
      if (j == k) continue;
      p = p * (c_matrix - RatMat::identity(n) * eigenvalues[j]) * (1 / (eigenvalues[k] - eigenvalues[j]));
    }
    out.push_back(std::move(p));
  }
  RatMat sum(n, n);
  for (const RatMat& p : out) sum = sum + p;
  if (sum != RatMat::identity(n)) throw OracleFailure("spectral projectors do not sum to the identity");
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i] * out[i] != out[i]) throw OracleFailure("spectral projector is not idempotent");
    for (std::size_t j = 0; j < out.size(); ++j)
      if (i != j && !(out[i] * out[j]).is_zero()) throw OracleFailure("spectral projectors are not orthogonal");
  }
  return out;
}

}  // namespace cpspinor
