#include "cpspinor/report.hpp"

#include <algorithm>
#include <sstream>

#include "cpspinor/conformal.hpp"
#include "cpspinor/rng.hpp"
#include "cpspinor/serialize.hpp"

namespace cpspinor {

bool VerificationReport::passed() const {
  for (const CheckResult& c : checks)
    if (c.status == "fail") return false;
  return true;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["report"] = check;
  j["rank"] = rank;
  j["seed"] = seed;
  j["status"] = passed() ? "pass" : "fail";
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckResult& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["status"] = c.status;
    if (!c.measured.empty()) e["measured"] = c.measured;
    if (!c.reference.empty()) e["reference"] = c.reference;
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(e);
  }
  j["checks"] = arr;
  if (!extra.is_null()) j["extra"] = extra;
  return j;
}

std::string VerificationReport::render_text() const {
  std::ostringstream os;
  os << "report " << check << " (rank " << rank;
  if (seed) os << ", seed " << seed;
  os << "): " << (passed() ? "PASS" : "FAIL") << "\n";
  for (const CheckResult& c : checks) {
    std::string tag = c.status == "pass" ? "PASS" : (c.status == "fail" ? "FAIL" : "MISMATCH-VS-PAPER");
    os << "  [" << tag << "] " << c.name;
    if (!c.measured.empty()) os << " | measured " << c.measured;
    if (!c.reference.empty()) os << " | reference " << c.reference;
    if (!c.detail.empty()) os << " | " << c.detail;
    os << "\n";
  }
  return os.str();
}

namespace {

void add(VerificationReport& r, const std::string& name, bool ok, const std::string& measured = "",
         const std::string& reference = "", const std::string& detail = "") {
  r.checks.push_back({name, ok ? "pass" : "fail", measured, reference, detail});
}

void add_vs_paper(VerificationReport& r, const std::string& name, const std::string& measured,
                  const std::string& reference, bool matches) {
  r.checks.push_back({name, matches ? "pass" : "mismatch-vs-paper", measured, reference,
                      matches ? "" : "measured by ad-traces; reported without failing"});
}

RatMat random_span_element(const GradedRealization& real, const std::vector<int>& indices, Rng& rng) {
  RatMat x(real.ambient(), real.ambient());
  for (int k : indices) {
    Rat c(rng.range(-3, 3));
    if (c != 0) x = x + real.basis()[k] * c;
  }
  return x;
}

RatVec random_vec(int n, Rng& rng) {
  RatVec v(n);
  for (int i = 0; i < n; ++i) v[i] = Rat(rng.range(-4, 4));
  return v;
}

std::vector<int> p_indices(const GradedRealization& real) {
  std::vector<int> out;
  for (int k = 0; k < real.dim(); ++k)
    if (real.grade_of(k) >= 0) out.push_back(k);
  return out;
}

// Psi on a decomposable element X (x) v straight from the definition.
std::vector<RatVec> psi_apply_direct(const GradedRealization& real, const DualBases& duals,
                                     const ModuleRealization& mod, const RatMat& x, const RatVec& v) {
  std::vector<RatVec> out(duals.s, RatVec(mod.dim(), Rat(0)));
  for (int i = 0; i < duals.s; ++i) {
    RatVec bc = real.coordinates(x.commutator(duals.xi_down[i]));
    RatVec w = mod.act(bc).apply(v);
    for (int c = 0; c < mod.dim(); ++c) out[i][c] += w[c];
  }
  return out;
}

// The same element through the g_0 dual pair.
std::vector<RatVec> psi_apply_via_g0(const GradedRealization& real, const DualBases& duals,
                                     const ModuleRealization& mod, const RatMat& x, const RatVec& v) {
  std::vector<int> slot(real.dim(), -1);
  int i = 0;
  for (int k : real.indices_of_grade(1)) slot[k] = i++;
  std::vector<RatVec> out(duals.s, RatVec(mod.dim(), Rat(0)));
  for (int j = 0; j <= duals.t; ++j) {
    RatVec bc = real.coordinates(duals.eta_down[j].commutator(x));
    RatVec w = mod.act(real.coordinates(duals.eta_up[j])).apply(v);
    for (int k = 0; k < real.dim(); ++k) {
      if (bc[k] == 0) continue;
      if (slot[k] < 0) throw OracleFailure("[eta_j, g_1] left g_1");
      for (int c = 0; c < mod.dim(); ++c) out[slot[k]][c] += bc[k] * w[c];
    }
  }
  return out;
}

}  // namespace

VerificationReport verify_grading(int l) {
  VerificationReport rep;
  rep.check = "grading";
  rep.rank = l;
  GradedRealization real(l);

  bool sp_ok = true;
  for (const RatMat& b : real.basis())
    if (!(b.transposed() * real.omega() + real.omega() * b).is_zero()) sp_ok = false;
  add(rep, "every basis element preserves the symplectic form", sp_ok);

  bool gr_ok = true;
  for (int k = 0; k < real.dim(); ++k) {
    RatMat want = real.basis()[k] * Rat(real.grade_of(k));
    if (real.gr().commutator(real.basis()[k]) != want) gr_ok = false;
  }
  add(rep, "[Gr, X] = jX on every graded basis element", gr_ok);

  bool closed_ok = true;
  for (int k = 0; k < real.dim() && closed_ok; ++k)
    for (int m = 0; m < real.dim(); ++m) {
      RatMat br = real.basis()[k].commutator(real.basis()[m]);
      int g = real.grade_of(k) + real.grade_of(m);
      if (g < -2 || g > 2) {
        if (!br.is_zero()) {
          closed_ok = false;
          break;
        }
        continue;
      }
      RatVec c = real.coordinates(br);
      for (int i = 0; i < real.dim(); ++i)
        if (c[i] != 0 && real.grade_of(i) != g) {
          closed_ok = false;
          break;
        }
      if (!closed_ok) break;
    }
  add(rep, "[g_i, g_j] c g_{i+j} for all basis pairs", closed_ok);

  {
    const std::vector<int>& g1 = real.indices_of_grade(1);
    const std::vector<int>& g2 = real.indices_of_grade(2);
    RatMat span(static_cast<int>(g1.size() * g1.size()), static_cast<int>(g2.size()));
    int row = 0;
    for (int a : g1)
      for (int b : g1) {
        RatVec c = real.coordinates(real.basis()[a].commutator(real.basis()[b]));
        for (std::size_t j = 0; j < g2.size(); ++j) span.at(row, static_cast<int>(j)) = c[g2[j]];
        ++row;
      }
    add(rep, "g_1 generates g_+ (bracket closure onto g_2)", rank(span) == static_cast<int>(g2.size()));
  }

  {
    std::ostringstream meas, ref;
    meas << real.indices_of_grade(-2).size() << "," << real.indices_of_grade(-1).size() << ","
         << real.indices_of_grade(0).size() << "," << real.indices_of_grade(1).size() << ","
         << real.indices_of_grade(2).size();
    ref << 1 << "," << 2 * l << "," << l * (2 * l + 1) + 1 << "," << 2 * l << "," << 1;
    add(rep, "grade dimensions", meas.str() == ref.str(), meas.str(), ref.str());
  }
  return rep;
}

VerificationReport verify_constants_report(int l) {
  VerificationReport rep;
  rep.check = "constants";
  rep.rank = l;
  GradedRealization real(l);
  MeasuredConstants mc = measured_constants(real);

  add_vs_paper(rep, "(Gr,Gr)_g", rat_str(mc.gr_norm), rat_str(mc.gr_norm_paper) + " (= 8l+8)",
               mc.gr_norm_matches_paper);
  add_vs_paper(rep, "kappa = (,)_g0ss / (,)_g", rat_str(mc.kappa_measured),
               rat_str(mc.kappa_paper) + " (= l/(l+1))", mc.kappa_matches_paper);
  {
    std::string meas = rat_str(mc.dual_ratio) + " (intrinsic), " + rat_str(mc.dual_ratio_restricted) + " (restricted)";
    add_vs_paper(rep, "dual form ratio on the Cartan dual", meas, rat_str(mc.dual_ratio_paper) + " (= 1/(8l+8))",
                 mc.dual_ratio_matches_paper);
  }

  // eta_{t+1} = Gr / (Gr,Gr)_g: the structural identity behind rho.
  DualBases duals = dual_bases(real);
  RatMat want = real.gr() * (1 / mc.gr_norm);
  add(rep, "eta_{t+1} = rho Gr with rho = 1/(Gr,Gr)_g", duals.eta_down.back() == want);

  // kappa * dual_ratio / rho == 1: the combination entering the spectral
  // identity is normalization-free, which is why classification only needs
  // the <,>-based conformal weights.
  Rat combo = mc.kappa_measured * mc.dual_ratio * mc.gr_norm;
  add(rep, "kappa * dual_ratio * (Gr,Gr)_g = 1 (normalization independence)", combo == 1, rat_str(combo), "1");

  // Conformal-weight sign convention: c_hat reproduces the published Dirac
  // and twistor values; the opposite-sign variant is their negative.
  {
    Rank rk(l, Rank::LowRank::allow);
    Weight sp = s_plus_weight(rk);
    Rat dirac = conformal_weight(sp, s_minus_weight(rk));
    Rat twistor = conformal_weight(sp, epsilon(rk, 1) + sp);
    bool ok = dirac == Rat(1 + 2 * l, 2) && twistor == Rat(1, 2) &&
              conformal_weight_printed(sp, s_minus_weight(rk)) == -dirac;
    add(rep, "c_hat convention reproduces the published conformal weights; the printed variant is its negative", ok,
        "dirac " + rat_str(dirac) + ", twistor " + rat_str(twistor),
        "(1+2l)/2 = " + rat_str(Rat(1 + 2 * l, 2)) + ", 1/2");
  }

  rep.extra["gr_norm"] = rat_str(mc.gr_norm);
  rep.extra["kappa_measured"] = rat_str(mc.kappa_measured);
  rep.extra["dual_ratio"] = rat_str(mc.dual_ratio);
  rep.extra["dual_ratio_restricted"] = rat_str(mc.dual_ratio_restricted);
  return rep;
}

VerificationReport verify_lemma1(int l, std::uint64_t seed) {
  VerificationReport rep;
  rep.check = "lemma1";
  rep.rank = l;
  rep.seed = seed;
  GradedRealization real(l);
  DualBases duals = dual_bases(real);
  Rng rng(seed);

  for (const Rat& c : {Rat(0), Rat(3, 7)}) {
    ModuleRealization mod = ModuleRealization::build(real, ModuleKind::defining, ModuleAlgebra::g0ss, c);
    RatMat a = psi_matrix(real, duals, mod);
    RatMat b = psi_matrix_via_g0(real, duals, mod);
    add(rep, "psi definitions agree as exact matrices (c = " + rat_str(c) + ")", a == b);
  }

  ModuleRealization mod = ModuleRealization::build(real, ModuleKind::defining, ModuleAlgebra::g0ss, Rat(3, 7));
  bool evals_ok = true;
  for (int it = 0; it < 100 && evals_ok; ++it) {
    RatMat x = random_span_element(real, real.indices_of_grade(1), rng);
    RatVec v = random_vec(mod.dim(), rng);
    if (psi_apply_direct(real, duals, mod, x, v) != psi_apply_via_g0(real, duals, mod, x, v)) evals_ok = false;
  }
  add(rep, "100 seeded random (X, v) evaluations agree entrywise", evals_ok);

  // Basis independence: unimodular re-mix of g_1 leaves psi unchanged.
  {
    int s = duals.s;
    RatMat mix = RatMat::identity(s);
    for (int step = 0; step < 2 * s; ++step) {
      int i = static_cast<int>(rng.upto(s)), j = static_cast<int>(rng.upto(s));
      if (i == j) continue;
      Rat f(rng.range(-2, 2));
      for (int c = 0; c < s; ++c) mix.at(i, c) += f * mix.at(j, c);
    }
    add(rep, "psi is independent of the g_1 basis (unimodular re-mix)",
        psi_matrix_with_mixed_g1(real, duals, mod, mix) == psi_matrix(real, duals, mod));
  }

  // g0ss-equivariance of psi on g_1 (x) E.
  {
    ModuleRealization g1m = ModuleRealization::g1_module(real);
    ModuleRealization tensor = ModuleRealization::tensor(g1m, mod);
    RatMat psi = psi_matrix(real, duals, mod);
    bool comm_ok = true;
    for (int it = 0; it < 50 && comm_ok; ++it) {
      int k = real.g0ss_indices()[rng.upto(static_cast<long>(real.g0ss_indices().size()))];
      if (!(psi * tensor.action(k) == tensor.action(k) * psi)) comm_ok = false;
    }
    add(rep, "psi commutes with the g0ss action (50 seeded generators)", comm_ok);
  }
  return rep;
}

VerificationReport verify_formula1(int l, std::uint64_t seed) {
  VerificationReport rep;
  rep.check = "formula1";
  rep.rank = l;
  rep.seed = seed;
  GradedRealization real(l);
  DualBases duals = dual_bases(real);
  Rng rng(seed);
  ModuleRealization mod = ModuleRealization::build(real, ModuleKind::defining, ModuleAlgebra::g0ss, Rat(2, 3));
  std::vector<int> pidx = p_indices(real);

  bool ok = true;
  for (int it = 0; it < 100 && ok; ++it) {
    RatMat r1 = random_span_element(real, pidx, rng);
    RatMat r2 = random_span_element(real, pidx, rng);
    JetVector w = JetVector::zero(duals.r, mod.dim());
    w.v_prime = random_vec(mod.dim(), rng);
    for (int i = 0; i < duals.r; ++i) w.jet[i] = random_vec(mod.dim(), rng);
    JetVector lhs1 = jets_act(real, duals, mod, r1, jets_act(real, duals, mod, r2, w));
    JetVector lhs2 = jets_act(real, duals, mod, r2, jets_act(real, duals, mod, r1, w));
    JetVector rhs = jets_act(real, duals, mod, r1.commutator(r2), w);
    JetVector diff = JetVector::zero(duals.r, mod.dim());
    for (int c = 0; c < mod.dim(); ++c) diff.v_prime[c] = lhs1.v_prime[c] - lhs2.v_prime[c] - rhs.v_prime[c];
    for (int i = 0; i < duals.r; ++i)
      for (int c = 0; c < mod.dim(); ++c) diff.jet[i][c] = lhs1.jet[i][c] - lhs2.jet[i][c] - rhs.jet[i][c];
    if (!(diff == JetVector::zero(duals.r, mod.dim()))) ok = false;
  }
  add(rep, "jet action is a Lie algebra representation (100 seeded pairs in p)", ok);

  // Grading element: (v', S (x) v'') -> (c v', (1+c) S (x) v'').
  {
    JetVector w = JetVector::zero(duals.r, mod.dim());
    w.v_prime = random_vec(mod.dim(), rng);
    for (int i = 0; i < duals.s; ++i) w.jet[i] = random_vec(mod.dim(), rng);
    JetVector got = jets_act(real, duals, mod, real.gr(), w);
    bool gr_ok = true;
    for (int c = 0; c < mod.dim(); ++c)
      if (got.v_prime[c] != mod.conformal_c() * w.v_prime[c]) gr_ok = false;
    for (int i = 0; i < duals.s; ++i)
      for (int c = 0; c < mod.dim(); ++c)
        if (got.jet[i][c] != (mod.conformal_c() + 1) * w.jet[i][c]) gr_ok = false;
    add(rep, "Gr acts by c on E and by 1+c on g_1 (x) E", gr_ok);
  }
  return rep;
}

VerificationReport verify_theorem3(int l, std::uint64_t seed) {
  VerificationReport rep;
  rep.check = "theorem3";
  rep.rank = l;
  rep.seed = seed;
  GradedRealization real(l);
  DualBases duals = dual_bases(real);
  Rng rng(seed);
  ModuleRealization mod = ModuleRealization::build(real, ModuleKind::defining, ModuleAlgebra::g0ss, Rat(1, 2));

  std::vector<int> plus;
  for (int k = 0; k < real.dim(); ++k)
    if (real.grade_of(k) > 0) plus.push_back(k);

  bool slot_ok = true;
  for (int it = 0; it < 50 && slot_ok; ++it) {
    RatMat r = random_span_element(real, plus, rng);
    JetVector w = JetVector::zero(duals.r, mod.dim());
    w.v_prime = random_vec(mod.dim(), rng);
    for (int i = 0; i < duals.r; ++i) w.jet[i] = random_vec(mod.dim(), rng);
    JetVector got = jets_act(real, duals, mod, r, w);
    for (const Rat& x : got.v_prime)
      if (x != 0) slot_ok = false;
  }
  add(rep, "g_+ never reaches the value slot (trivial nilpotent action)", slot_ok);

  // Sum_i X_i.(0, Y_i (x) v'') = (0, Z (x) v'') with Z = Sum [X_i, Y_i],
  // and the restricted-jet quotient kills the result.
  bool comp_ok = true, quot_ok = true;
  for (int it = 0; it < 50 && comp_ok; ++it) {
    RatVec v = random_vec(mod.dim(), rng);
    JetVector sum = JetVector::zero(duals.r, mod.dim());
    RatMat z(real.ambient(), real.ambient());
    for (int pair = 0; pair < 3; ++pair) {
      RatMat x = random_span_element(real, plus, rng);
      RatMat y = random_span_element(real, plus, rng);
      z = z + x.commutator(y);
      JetVector w = JetVector::zero(duals.r, mod.dim());
      RatVec yc = real.coordinates(y);
      // w = (0, Y (x) v): spread y over the g_+ slots
      {
        int slot = 0;
        for (int k : real.indices_of_grade(1)) {
          for (int c = 0; c < mod.dim(); ++c) w.jet[slot][c] += yc[k] * v[c];
          ++slot;
        }
        for (int k : real.indices_of_grade(2)) {
          for (int c = 0; c < mod.dim(); ++c) w.jet[slot][c] += yc[k] * v[c];
          ++slot;
        }
      }
      JetVector a = jets_act(real, duals, mod, x, w);
      for (int c = 0; c < mod.dim(); ++c) sum.v_prime[c] += a.v_prime[c];
      for (int i = 0; i < duals.r; ++i)
        for (int c = 0; c < mod.dim(); ++c) sum.jet[i][c] += a.jet[i][c];
    }
    JetVector want = JetVector::zero(duals.r, mod.dim());
    RatVec zc = real.coordinates(z);
    {
      int slot = 0;
      for (int k : real.indices_of_grade(1)) {
        for (int c = 0; c < mod.dim(); ++c) want.jet[slot][c] += zc[k] * v[c];
        ++slot;
      }
      for (int k : real.indices_of_grade(2)) {
        for (int c = 0; c < mod.dim(); ++c) want.jet[slot][c] += zc[k] * v[c];
        ++slot;
      }
    }
    if (!(sum == want)) comp_ok = false;
    if (!(restrict_jet(real, duals, sum) == JetVector::zero(duals.r, mod.dim()))) quot_ok = false;
  }
  add(rep, "Sum X_i.(0, Y_i (x) v) = (0, Sum [X_i,Y_i] (x) v) exactly", comp_ok);
  add(rep, "the composite dies in the restricted-jet quotient", quot_ok);
  return rep;
}

VerificationReport verify_theorem4(int l) {
  VerificationReport rep;
  rep.check = "theorem4";
  rep.rank = l;
  GradedRealization real(l);
  MeasuredConstants mc = measured_constants(real);
  Rank rk(l, Rank::LowRank::allow);

  struct Case {
    ModuleKind kind;
    const char* name;
    Weight hw;
  };
  std::vector<Case> cases = {{ModuleKind::trivial, "trivial", zero_weight(rk)},
                             {ModuleKind::defining, "defining", epsilon(rk, 1)},
                             {ModuleKind::adjoint, "adjoint", epsilon(rk, 1) * Rat(2)}};
  for (const Case& c : cases) {
    ModuleRealization mod = ModuleRealization::build(real, c.kind, ModuleAlgebra::g0ss, Rat(0));
    auto [mat, scalar] = casimir_matrix(real, mod);
    Rat want = mc.dual_ratio * casimir_norm(c.hw);
    std::ostringstream name;
    name << "Casimir is scalar on the " << c.name << " module with value dual_ratio * <hw, hw+2delta>";
    add(rep, name.str(), scalar == want, rat_str(scalar), rat_str(want));
  }
  return rep;
}

VerificationReport verify_lemma2(int l) {
  VerificationReport rep;
  rep.check = "lemma2";
  rep.rank = l;
  GradedRealization real(l);
  DualBases duals = dual_bases(real);
  MeasuredConstants mc = measured_constants(real);
  Rat rho = 1 / mc.gr_norm;
  Rat kappa = mc.kappa_measured;

  // Components of g_1 (x) E for the defining test module, from first
  // principles: highest weight vectors, measured Casimir scalars, Lagrange
  // projectors.  The slot-major tensor index here matches psi_matrix.
  ModuleRealization e0 = ModuleRealization::build(real, ModuleKind::defining, ModuleAlgebra::g0ss, Rat(0));
  ModuleRealization g1m = ModuleRealization::g1_module(real);
  ModuleRealization tensor = ModuleRealization::tensor(g1m, e0);
  RatMat cas = casimir_operator(real, tensor);

  std::vector<std::pair<Weight, RatVec>> hwv = highest_weight_vectors(real, tensor);
  bool distinct = true;
  for (std::size_t i = 0; i < hwv.size(); ++i)
    for (std::size_t j = i + 1; j < hwv.size(); ++j)
      if (hwv[i].first == hwv[j].first) distinct = false;
  add(rep, "tensor decomposition is multiplicity-free (distinct component weights)", distinct);
  if (!distinct) return rep;

  std::vector<Rat> eigs;
  bool scalar_ok = true;
  for (const auto& [mu, v] : hwv) {
    RatVec cv = cas.apply(v);
    Rat s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) {
        s = cv[i] / v[i];
        break;
      }
    for (std::size_t i = 0; i < v.size(); ++i)
      if (cv[i] != s * v[i]) scalar_ok = false;
    eigs.push_back(s);
  }
  add(rep, "Casimir acts by an exact scalar on each highest weight vector", scalar_ok);

  std::vector<RatMat> proj = spectral_projectors(cas, eigs);
  {
    bool ranks_ok = true;
    std::ostringstream meas, ref;
    for (std::size_t m = 0; m < proj.size(); ++m) {
      int r = rank(proj[m]);
      Rat want = weyl_dim(hwv[m].first);
      meas << (m ? "+" : "") << r;
      ref << (m ? "+" : "") << rat_str(want);
      if (Rat(r) != want) ranks_ok = false;
    }
    add(rep, "projector ranks match the Weyl dimensions of the components", ranks_ok, meas.str(), ref.str());
  }

  Rat cas_e = casimir_matrix(real, e0).second;
  Rat cas_g1 = casimir_matrix(real, g1m).second;
  std::vector<Rat> c_mu;
  for (const Rat& s : eigs) c_mu.push_back((cas_e + cas_g1 - s) / 2);

  for (const Rat& c : {Rat(0), Rat(1), Rat(-1), Rat(7, 2), Rat(22, 7)}) {
    ModuleRealization ec = ModuleRealization::build(real, ModuleKind::defining, ModuleAlgebra::g0ss, c);
    RatMat psi = psi_matrix(real, duals, ec);
    RatMat want(psi.rows(), psi.cols());
    for (std::size_t m = 0; m < proj.size(); ++m) want = want + proj[m] * (rho * c - kappa * c_mu[m]);
    add(rep, "psi = sum (rho c - kappa c_mu) pi_mu at c = " + rat_str(c), psi == want);
  }

  // The component killed at c = c_hat(hw_E, hw_g1, mu) is exactly mu: the
  // spectral picture selects the classifier's target, and the kernel there
  // is the whole component.
  {
    Weight hw_e = highest_weight_vectors(real, e0).front().first;
    Weight hw_g1 = highest_weight_vectors(real, g1m).front().first;
    bool tie_ok = true;
    for (std::size_t m = 0; m < hwv.size(); ++m) {
      Rat c_star = conformal_weight_raw(hw_e, hw_g1, hwv[m].first);
      for (std::size_t m2 = 0; m2 < hwv.size(); ++m2) {
        Rat eig = rho * c_star - kappa * c_mu[m2];
        if ((eig == 0) != (m2 == m)) tie_ok = false;
      }
      ModuleRealization estar = ModuleRealization::build(real, ModuleKind::defining, ModuleAlgebra::g0ss, c_star);
      RatMat psi_star = psi_matrix(real, duals, estar);
      if (!(psi_star * proj[m]).is_zero()) tie_ok = false;
      if (rank(psi_star) + rank(proj[m]) != psi_star.rows()) tie_ok = false;
    }
    add(rep, "psi kills exactly the selected component at c = c_hat", tie_ok);
  }
  return rep;
}

VerificationReport verify_theorem2_report(const Weight& lambda, long depth, const std::string& cache_dir) {
  VerificationReport rep;
  rep.check = "theorem2";
  rep.rank = lambda.rank();
  Theorem2Report t2 = verify_theorem2(lambda, depth, cache_dir);
  std::ostringstream name;
  name << "char L(lambda) * char F(w_1) = sum over " << t2.components.size() << " components, depth " << depth;
  if (t2.pass) {
    add(rep, name.str(), true, "", "", std::to_string(t2.weights_compared) + " weights compared");
  } else {
    std::ostringstream d;
    d << "first discrepancy at (";
    for (int i = 0; i < t2.discrepancy_weight->rank(); ++i) d << (i ? "," : "") << rat_str((*t2.discrepancy_weight)[i]);
    d << "): lhs " << t2.discrepancy_lhs << " vs rhs " << t2.discrepancy_rhs;
    add(rep, name.str(), false, "", "", d.str());
  }
  if (t2.spinor_cross_checked)
    add(rep, "left factor cross-checked against the closed-form spinor character", true);
  nlohmann::json degs = nlohmann::json::array();
  for (const auto& d : t2.degenerate_points) {
    nlohmann::json e;
    nlohmann::json coords = nlohmann::json::array();
    for (const Rat& x : d.nu.coords()) coords.push_back(rat_str(x));
    e["nu"] = coords;
    e["verma_dim"] = d.verma_dim;
    e["multiplicity"] = d.multiplicity;
    degs.push_back(e);
  }
  rep.extra["degenerate_points"] = degs;
  rep.extra["lambda_fundamental"] = fundamental_csv(lambda);
  rep.extra["depth"] = depth;
  return rep;
}

}  // namespace cpspinor
