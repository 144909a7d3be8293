#include "cpspinor/verma.hpp"

#include <algorithm>

namespace cpspinor {

namespace {

using Mono = std::vector<int>;  // exponents over the ordered positive roots
using State = std::map<Mono, Rat>;

void add_to(State& s, const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto it = s.find(m);
  if (it == s.end()) {
    s.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) s.erase(it);
  }
}

int min_index(const Mono& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > 0) return static_cast<int>(i);
  return -1;
}

}  // namespace

struct VermaShapovalov::Impl {
  int l;
  GradedRealization real;
  int nroots;
  std::vector<Weight> roots;    // positive roots, fixed PBW order
  std::vector<RatMat> e_mat;    // root vectors
  std::vector<RatMat> f_mat;    // transposes
  // Decomposition of an arbitrary g0ss element into (e, f, Cartan) parts:
  // coefficients over e_mat / f_mat and values on the Cartan H_1..H_l.
  struct Decomp {
    RatVec e_coeff, f_coeff;  // size nroots
    RatVec cartan;            // size l: coefficients of H_k
  };
  std::vector<std::vector<Decomp>> br_ef;  // [e_p, f_j]
  std::vector<std::vector<RatVec>> br_ff;  // [f_i, f_j] as f-coefficients

  // Realization index -> classification for decompose().
  struct Slot {
    enum Kind { none, e_vec, f_vec, cartan } kind = none;
    int q = -1;   // root or Cartan index
    Rat scale;    // basis[k] = scale * (e_q | f_q | H_q)
  };
  std::vector<Slot> slot_of;

  explicit Impl(int l_) : l(l_), real(l_) {
    // PBW order: by ascending height, then descending lexicographic root.
    struct Item {
      Weight root;
      int idx;
    };
    std::vector<Item> items;
    for (int k : real.positive_root_indices()) items.push_back({real.root_of(k), k});
    std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
      long ha = *root_height(a.root), hb = *root_height(b.root);
      if (ha != hb) return ha < hb;
      return b.root < a.root;
    });
    nroots = static_cast<int>(items.size());
    slot_of.assign(real.dim(), Slot{});
    for (int q = 0; q < nroots; ++q) {
      roots.push_back(items[q].root);
      e_mat.push_back(real.basis()[items[q].idx]);
      f_mat.push_back(real.basis()[items[q].idx].transposed());
      slot_of[items[q].idx] = Slot{Slot::e_vec, q, Rat(1)};
    }
    for (int q = 0; q < nroots; ++q) {
      RatVec fc = real.coordinates(f_mat[q]);
      for (int k = 0; k < real.dim(); ++k) {
        if (fc[k] == 0) continue;
        if (slot_of[k].kind != Slot::none) throw OracleFailure("transpose of a root vector is not a single basis element");
        slot_of[k] = Slot{Slot::f_vec, q, 1 / fc[k]};
      }
    }
    for (int i = 0; i < l; ++i) slot_of[real.cartan_indices()[i]] = Slot{Slot::cartan, i, Rat(1)};

    br_ef.assign(nroots, std::vector<Decomp>(nroots));
    br_ff.assign(nroots, std::vector<RatVec>(nroots));
    for (int p = 0; p < nroots; ++p)
      for (int j = 0; j < nroots; ++j) br_ef[p][j] = decompose(e_mat[p].commutator(f_mat[j]));
    for (int i = 0; i < nroots; ++i)
      for (int j = 0; j < nroots; ++j) {
        Decomp d = decompose(f_mat[i].commutator(f_mat[j]));
        for (const Rat& x : d.e_coeff)
          if (x != 0) throw OracleFailure("[n_-, n_-] left the lower triangular part");
        for (const Rat& x : d.cartan)
          if (x != 0) throw OracleFailure("[n_-, n_-] met the Cartan");
        br_ff[i][j] = d.f_coeff;
      }
  }

  Decomp decompose(const RatMat& z) const {
    // Express z over {e_q, f_q, H_k}: each realization basis element of
    // g_0^ss is an exact multiple of exactly one of them.
    Decomp d;
    d.e_coeff.assign(nroots, Rat(0));
    d.f_coeff.assign(nroots, Rat(0));
    d.cartan.assign(l, Rat(0));
    RatVec full = real.coordinates(z);
    for (int k = 0; k < real.dim(); ++k) {
      if (full[k] == 0) continue;
      const Slot& s = slot_of[k];
      switch (s.kind) {
        case Slot::e_vec: d.e_coeff[s.q] += full[k] * s.scale; break;
        case Slot::f_vec: d.f_coeff[s.q] += full[k] * s.scale; break;
        case Slot::cartan: d.cartan[s.q] += full[k] * s.scale; break;
        case Slot::none: throw OracleFailure("g0ss element decomposition failed");
      }
    }
    return d;
  }

  Weight mono_depth(const Mono& m) const {
    Rank rk(l, Rank::LowRank::allow);
    Weight d = zero_weight(rk);
    for (int i = 0; i < nroots; ++i)
      if (m[i] > 0) d = d + roots[i] * Rat(m[i]);
    return d;
  }

  // f_{beta_i} . state, renormalized into PBW order.
  State apply_f(int i, const State& s) const {
    State out;
    for (const auto& [m, c] : s) {
      State part = apply_f_mono(i, m);
      for (const auto& [m2, c2] : part) add_to(out, m2, c * c2);
    }
    return out;
  }

  State apply_f_mono(int i, const Mono& m) const {
    int j = min_index(m);
    State out;
    if (j < 0 || i <= j) {
      Mono m2 = m;
      ++m2[i];
      out.emplace(std::move(m2), Rat(1));
      return out;
    }
    Mono rest = m;
    --rest[j];
    // f_i f_j rest = f_j f_i rest + [f_i, f_j] rest
    State si = apply_f_mono(i, rest);
    for (const auto& [m2, c2] : si) {
      State sj = apply_f_mono(j, m2);
      for (const auto& [m3, c3] : sj) add_to(out, m3, c2 * c3);
    }
    const RatVec& br = br_ff[i][j];
    for (int q = 0; q < nroots; ++q) {
      if (br[q] == 0) continue;
      State sq = apply_f_mono(q, rest);
      for (const auto& [m3, c3] : sq) add_to(out, m3, br[q] * c3);
    }
    return out;
  }

  // Value of a Cartan combination on the weight lambda - depth(m).
  Rat cartan_value(const RatVec& cartan, const RatVec& lambda_eps, const Mono& m) const {
    Weight depth = mono_depth(m);
    Rat v = 0;
    for (int k = 0; k < l; ++k)
      if (cartan[k] != 0) v += cartan[k] * (lambda_eps[k] - depth[k]);
    return v;
  }

  State apply_decomp(const Decomp& d, const RatVec& lambda_eps, const Mono& m) const {
    State out;
    for (int q = 0; q < nroots; ++q) {
      if (d.f_coeff[q] == 0) continue;
      State s = apply_f_mono(q, m);
      for (const auto& [m2, c2] : s) add_to(out, m2, d.f_coeff[q] * c2);
    }
    bool any_cartan = false;
    for (const Rat& x : d.cartan)
      if (x != 0) any_cartan = true;
    if (any_cartan) add_to(out, m, cartan_value(d.cartan, lambda_eps, m));
    for (int q = 0; q < nroots; ++q) {
      if (d.e_coeff[q] == 0) continue;
      State s = apply_e_mono(q, lambda_eps, m);
      for (const auto& [m2, c2] : s) add_to(out, m2, d.e_coeff[q] * c2);
    }
    return out;
  }

  State apply_e_mono(int p, const RatVec& lambda_eps, const Mono& m) const {
    int j = min_index(m);
    State out;
    if (j < 0) return out;  // e . v_lambda = 0
    Mono rest = m;
    --rest[j];
    // e_p f_j rest = f_j e_p rest + [e_p, f_j] rest
    State sp = apply_e_mono(p, lambda_eps, rest);
    for (const auto& [m2, c2] : sp) {
      State sj = apply_f_mono(j, m2);
      for (const auto& [m3, c3] : sj) add_to(out, m3, c2 * c3);
    }
    State sb = apply_decomp(br_ef[p][j], lambda_eps, rest);
    for (const auto& [m2, c2] : sb) add_to(out, m2, c2);
    return out;
  }

  std::vector<Mono> weight_space_basis(const Weight& beta) const {
    std::vector<Mono> out;
    auto h = root_height(beta);
    if (!h) throw InvalidInput("depth is not in the positive root cone");
    Mono current(nroots, 0);
    // Roots are height-sorted ascending; recurse from the tallest down.
    enumerate(beta, *h, nroots - 1, current, out);
    return out;
  }

  void enumerate(const Weight& remaining, long height_budget, int idx, Mono& current, std::vector<Mono>& out) const {
    auto h = root_height(remaining);
    if (h && *h == 0) {
      out.push_back(current);
      return;
    }
    if (idx < 0) return;
    long rh = *root_height(roots[idx]);
    long maxrep = height_budget / rh;
    Weight rem = remaining;
    for (long rep = 0; rep <= maxrep; ++rep) {
      if (rep > 0) rem = rem - roots[idx];
      current[idx] = static_cast<int>(rep);
      enumerate(rem, height_budget - rep * rh, idx - 1, current, out);
    }
    current[idx] = 0;
  }

  Rat gram_entry(const Mono& mi, const Mono& mj, const RatVec& lambda_eps) const {
    // <F_I v, F_J v> = coefficient of v in  omega(F_I) F_J v, where omega
    // reverses the word and swaps f for e.
    State s;
    s.emplace(mj, Rat(1));
    for (int q = 0; q < nroots && !s.empty(); ++q)
      for (int rep = 0; rep < mi[q] && !s.empty(); ++rep) {
        State next;
        for (const auto& [m, c] : s) {
          State part = apply_e_mono(q, lambda_eps, m);
          for (const auto& [m2, c2] : part) add_to(next, m2, c * c2);
        }
        s = std::move(next);
      }
    Mono empty(nroots, 0);
    auto it = s.find(empty);
    return it == s.end() ? Rat(0) : it->second;
  }
};

VermaShapovalov::VermaShapovalov(int l) : impl_(std::make_unique<Impl>(l)) {}
VermaShapovalov::~VermaShapovalov() = default;

int VermaShapovalov::l() const { return impl_->l; }

long VermaShapovalov::verma_dim(const Weight& beta) const {
  if (!root_height(beta)) return 0;  // outside the root cone: empty weight space
  return static_cast<long>(impl_->weight_space_basis(beta).size());
}

long VermaShapovalov::multiplicity(const Weight& lambda, const Weight& beta) const {
  if (lambda.rank() != impl_->l) throw InvalidInput("rank mismatch in multiplicity query");
  if (!root_height(beta)) return 0;
  std::vector<Mono> basis = impl_->weight_space_basis(beta);
  const int n = static_cast<int>(basis.size());
  if (n == 0) return 0;
  RatMat gram(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Rat v = impl_->gram_entry(basis[i], basis[j], lambda.coords());
      gram.at(i, j) = v;
      gram.at(j, i) = v;
    }
  return rank(gram);
}

}  // namespace cpspinor
