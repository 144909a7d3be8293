// Acceptance suite: one gate per published claim the artifact must
// reproduce, each printed as a single pass/fail line.  Everything is exact
// rational arithmetic; there are no tolerances anywhere, only equality.
//
// Run all criteria:            cpspinor_acceptance
// Run a single criterion:      cpspinor_acceptance --criterion N

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cpspinor/characters.hpp"
#include "cpspinor/classifier.hpp"
#include "cpspinor/report.hpp"
#include "cpspinor/rng.hpp"

using namespace cpspinor;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
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

bool criterion1(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (int l : {3, 4, 5, 6}) {
    Rank rk(l);
    Weight sp = s_plus_weight(rk), sm = s_minus_weight(rk), w1 = epsilon(rk, 1);
    Rat half_odd(1 + 2 * l, 2);

    OperatorDescriptor dirac = named_operator(OperatorName::dirac, rk, 1);
    ok &= dirac.source.lambda == sp && dirac.target.lambda == sm;
    ok &= dirac.source.c == half_odd && dirac.target.c == half_odd + 1;

    OperatorDescriptor twistor = named_operator(OperatorName::twistor, rk, 1);
    ok &= twistor.source.lambda == sp && twistor.target.lambda == w1 + sp;
    ok &= twistor.source.c == Rat(1, 2) && twistor.target.c == Rat(3, 2);

    OperatorDescriptor rs = named_operator(OperatorName::rarita_schwinger, rk, 1);
    ok &= rs.source.lambda == w1 + sp && rs.target.lambda == w1 + sm;
    ok &= rs.source.c == half_odd && rs.target.c == half_odd + 1;
  }
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << "Dirac/twistor/Rarita-Schwinger fixtures for l in {3,4,5,6}, " << dt << " s";
  detail = os.str();
  return ok && dt < 1.0;
}

bool criterion2(std::string& detail) {
  bool ok = true;
  for (int l : {3, 4, 5}) {
    Rank rk(l);
    Weight sp = s_plus_weight(rk), sm = s_minus_weight(rk), w1 = epsilon(rk, 1);

    std::vector<Weight> got1 = a_lambda(sp);
    std::vector<Weight> want1 = {w1 + sp, sm};
    ok &= got1.size() == want1.size();
    for (const Weight& w : want1) ok &= std::find(got1.begin(), got1.end(), w) != got1.end();

    RatVec f2(l, Rat(0));
    f2[1] = 1;
    f2[l - 1] = Rat(-1, 2);
    std::vector<Weight> got2 = a_lambda(w1 + sp);
    std::vector<Weight> want2 = {weight_from_fundamental(f2, rk), w1 * Rat(2) + sp, sp, w1 + sm};
    ok &= got2.size() == want2.size();
    for (const Weight& w : want2) ok &= std::find(got2.begin(), got2.end(), w) != got2.end();
  }
  detail = "component sets of -w_l/2 and w_1 - w_l/2 for l in {3,4,5}, as sets";
  return ok;
}

bool criterion3(std::string& detail) {
  Rng rng(20260801);
  Rank l3(3);
  bool ok = true;
  int pairs = 0;
  for (int it = 0; it < 20; ++it) {
    Weight lambda = random_admissible(l3, rng);
    for (const Weight& mu : a_lambda(lambda)) {
      ++pairs;
      Rat c_hat = conformal_weight(lambda, mu);
      int hits = 0;
      for (int k = 0; k < 100; ++k) {
        Rat c = c_hat + (k - 37);  // grid of 100 candidates containing c_hat
        int r = classify(ModuleTriple(lambda, c, 1), ModuleTriple(mu, c + 1, 1));
        if (r == 1) {
          ++hits;
          ok &= (c == c_hat);
        }
      }
      ok &= (hits == 1);
      // d is forced to c + 1
      ok &= classify(ModuleTriple(lambda, c_hat, 1), ModuleTriple(mu, c_hat + 2, 1)) == 0;
      ok &= classify(ModuleTriple(lambda, c_hat, 1), ModuleTriple(mu, c_hat, 1)) == 0;
    }
  }
  std::ostringstream os;
  os << "unique (c,d) on a 100-point grid for " << pairs << " adjacent pairs, seed 20260801";
  detail = os.str();
  return ok;
}

bool criterion4(std::string& detail) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationReport rep = verify_lemma1(3, 20260801);
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << "two psi constructions coincide + 100 seeded evaluations, " << dt << " s";
  detail = os.str();
  return rep.passed() && dt < 10.0;
}

bool criterion5(std::string& detail) {
  VerificationReport rep = verify_formula1(3, 20260801);
  detail = "jet action commutator identity, 100 seeded pairs in p, l=3";
  return rep.passed();
}

bool criterion6(std::string& detail) {
  bool ok = true;
  for (int l : {3, 4, 5}) ok &= verify_grading(l).passed();
  detail = "[Gr,X]=jX, bracket grading, g_1 generates g_+, l in {3,4,5}";
  return ok;
}

bool criterion7(std::string& detail) {
  bool ok = true;
  std::ostringstream os;
  for (int l : {3, 4, 5}) {
    GradedRealization real(l);
    MeasuredConstants mc = measured_constants(real);
    // The reference value from the source derivation, asserted as stated.
    bool gr_match = (mc.gr_norm == Rat(8 * l + 8));
    ok &= gr_match;
    os << "l=" << l << ": (Gr,Gr)_g measured " << rat_str(mc.gr_norm) << " vs reference " << 8 * l + 8
       << (gr_match ? " (match)" : " (MISMATCH)") << ", kappa " << rat_str(mc.kappa_measured) << " vs "
       << rat_str(mc.kappa_paper) << ", dual " << rat_str(mc.dual_ratio) << "/"
       << rat_str(mc.dual_ratio_restricted) << " vs " << rat_str(mc.dual_ratio_paper) << "; ";
    // The report itself must exist and carry both columns.
    VerificationReport rep = verify_constants_report(l);
    ok &= !rep.checks.empty() && rep.passed();
    // Classification is invariant under the normalization ambiguity: the
    // combination entering the spectral identity is exactly 1, so the
    // vanishing locus only sees the <,>-based conformal weight.
    ok &= (mc.kappa_measured * mc.dual_ratio * mc.gr_norm == 1);
  }
  os << "report produced and classification normalization-invariant";
  detail = os.str();
  return ok;
}

bool criterion8(std::string& detail) {
  GradedRealization real(3);
  bool ok = true;
  auto scalar_of = [&](ModuleKind k) {
    return casimir_matrix(real, ModuleRealization::build(real, k, ModuleAlgebra::g0ss)).second;
  };
  Rat s_triv = scalar_of(ModuleKind::trivial);
  Rat s_def = scalar_of(ModuleKind::defining);
  Rat s_adj = scalar_of(ModuleKind::adjoint);
  ok &= (s_triv == 0);
  ok &= (s_def * 16 == s_adj * 7);
  ok &= (s_def != 0);
  std::ostringstream os;
  os << "scalars " << rat_str(s_triv) << " : " << rat_str(s_def) << " : " << rat_str(s_adj)
     << " in exact ratio 0 : 7 : 16";
  detail = os.str();
  return ok;
}

bool criterion9(std::string& detail) {
  VerificationReport rep = verify_lemma2(3);
  detail = "psi spectrum = rho c - kappa c_mu per Casimir component, 5 rational c, vanishing at c_hat";
  return rep.passed();
}

bool criterion10(std::string& detail) {
  namespace fs = std::filesystem;
  fs::path cache = fs::temp_directory_path() / "cpspinor-acceptance-cache";
  fs::remove_all(cache);  // cold cache
  auto t0 = std::chrono::steady_clock::now();
  Rank l3(3);
  bool ok = true;
  Theorem2Report r1 = verify_theorem2(s_plus_weight(l3), 6, cache.string());
  ok &= r1.pass && r1.spinor_cross_checked;
  Theorem2Report r2 = verify_theorem2(epsilon(l3, 1) + s_plus_weight(l3), 6, cache.string());
  ok &= r2.pass;
  std::vector<Weight> partial = a_lambda(s_plus_weight(l3));
  partial.pop_back();
  Theorem2Report bad = verify_theorem2(s_plus_weight(l3), 6, cache.string(), partial);
  ok &= !bad.pass && bad.discrepancy_weight.has_value();
  double dt = seconds_since(t0);
  fs::remove_all(cache);
  std::ostringstream os;
  os << "per-weight equality for two sources (" << r1.weights_compared << "+" << r2.weights_compared
     << " weights), negative control locates ";
  if (bad.discrepancy_weight) {
    os << "(";
    for (int i = 0; i < 3; ++i) os << (i ? "," : "") << rat_str((*bad.discrepancy_weight)[i]);
    os << ") " << bad.discrepancy_lhs << "!=" << bad.discrepancy_rhs;
  } else {
    os << "nothing";
  }
  os << ", cold cache " << dt << " s";
  detail = os.str();
  return ok && dt < 60.0;
}

bool criterion11(std::string& detail) {
  Rank l3(3);
  bool ok = true;
  FormalCharacter rec = freudenthal_character(s_plus_weight(l3), 8);
  FormalCharacter closed = spinor_character(l3, Parity::even, 8);
  ok &= (rec.mult == closed.mult);
  ok &= (closed.max_multiplicity() == 1);
  RatVec f1{1, 0, 0}, f2{0, 1, 0}, f3{2, 0, 0};
  ok &= freudenthal_character(weight_from_fundamental(f1, l3), 8).total_mass() == 6;
  ok &= freudenthal_character(weight_from_fundamental(f2, l3), 8).total_mass() == 14;
  ok &= freudenthal_character(weight_from_fundamental(f3, l3), 10).total_mass() == 21;
  ok &= weyl_dim(weight_from_fundamental(f1, l3)) == 6 && weyl_dim(weight_from_fundamental(f2, l3)) == 14 &&
        weyl_dim(weight_from_fundamental(f3, l3)) == 21;
  std::ostringstream os;
  os << "recursion == closed-form spinor character to depth 8 (" << rec.mult.size()
     << " weights, max multiplicity 1), Weyl dimensions 6/14/21 reproduced";
  detail = os.str();
  return ok;
}

struct Criterion {
  int id;
  const char* title;
  std::function<bool(std::string&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: cpspinor_acceptance [--criterion N]\n";
      return 64;
    }
  }
  if (only < 0 || only > 11) {
    std::cerr << "criterion must be in 1..11\n";
    return 64;
  }

  std::vector<Criterion> criteria = {
      {1, "published fixtures reproduce exactly", criterion1},
      {2, "component-set fixtures", criterion2},
      {3, "uniqueness sweep over a conformal-weight grid", criterion3},
      {4, "the two psi constructions coincide", criterion4},
      {5, "the jet action is a representation", criterion5},
      {6, "grading axioms", criterion6},
      {7, "normalization constants vs the quoted references", criterion7},
      {8, "Casimir scalars on the test modules", criterion8},
      {9, "spectral decomposition of psi", criterion9},
      {10, "tensor decomposition at desk scale", criterion10},
      {11, "character oracle self-validation", criterion11},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    std::string detail;
    bool ok = false;
    try {
      ok = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << ": " << c.title;
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
