#include "cpspinor/weights.hpp"

#include <algorithm>
#include <sstream>

namespace cpspinor {

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw InvalidInput("empty rational literal");
  try {
    Rat r(s);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw InvalidInput("malformed rational literal: '" + s + "'");
  }
}

std::string rat_str(const Rat& r) { return r.get_str(); }

Rank::Rank(int l, LowRank low) : l_(l) {
  if (l >= 3) return;
  if (l == 2 && low == LowRank::allow) return;
  std::ostringstream os;
  os << "rank must be >= 3 (got " << l << ")";
  if (l == 2) os << "; pass the low-rank override to run outside the validated hypothesis";
  throw InvalidInput(os.str());
}

Weight::Weight(Rank rank, RatVec coords) : coords_(std::move(coords)) {
  if (static_cast<int>(coords_.size()) != rank.l())
    throw InvalidInput("weight coordinate count does not match the rank");
}

bool Weight::operator<(const Weight& o) const {
  if (coords_.size() != o.coords_.size())
    return coords_.size() < o.coords_.size();
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    int c = cmp(coords_[i], o.coords_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

namespace {
Rank rank_of(const Weight& w) { return Rank(w.rank(), Rank::LowRank::allow); }
}  // namespace

Weight Weight::operator+(const Weight& o) const {
  if (rank() != o.rank()) throw InvalidInput("rank mismatch in weight addition");
  RatVec c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
  return Weight(rank_of(*this), std::move(c));
}

Weight Weight::operator-(const Weight& o) const {
  if (rank() != o.rank()) throw InvalidInput("rank mismatch in weight subtraction");
  RatVec c(coords_);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= o.coords_[i];
  return Weight(rank_of(*this), std::move(c));
}

Weight Weight::operator*(const Rat& s) const {
  RatVec c(coords_);
  for (auto& x : c) x *= s;
  return Weight(rank_of(*this), std::move(c));
}

Weight weight_from_fundamental(const RatVec& coeffs, Rank l) {
  if (static_cast<int>(coeffs.size()) != l.l())
    throw InvalidInput("fundamental coefficient count does not match the rank");
  // epsilon-coordinate j of Sum_i coeffs_i w_i is Sum_{i >= j} coeffs_i.
  RatVec c(coeffs.size());
  Rat tail = 0;
  for (int j = l.l() - 1; j >= 0; --j) {
    tail += coeffs[j];
    c[j] = tail;
  }
  return Weight(l, std::move(c));
}

RatVec fundamental_from_weight(const Weight& w) {
  const int l = w.rank();
  RatVec f(l);
  for (int i = 0; i + 1 < l; ++i) f[i] = w[i] - w[i + 1];
  f[l - 1] = w[l - 1];
  return f;
}

Rat inner(const Weight& a, const Weight& b) {
  if (a.rank() != b.rank()) throw InvalidInput("rank mismatch in inner product");
  Rat s = 0;
  for (int i = 0; i < a.rank(); ++i) s += a[i] * b[i];
  return s;
}

Weight weyl_delta(Rank l) {
  RatVec c(l.l());
  for (int i = 0; i < l.l(); ++i) c[i] = l.l() - i;
  return Weight(l, std::move(c));
}

Weight epsilon(Rank l, int i) {
  if (i < 1 || i > l.l()) throw InvalidInput("epsilon index out of range");
  RatVec c(l.l(), Rat(0));
  c[i - 1] = 1;
  return Weight(l, std::move(c));
}

Weight zero_weight(Rank l) { return Weight(l, RatVec(l.l(), Rat(0))); }

RootData root_data(Rank l) {
  const int n = l.l();
  std::vector<Weight> pos;
  pos.reserve(n * n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      pos.push_back(epsilon(l, i) - epsilon(l, j));
      pos.push_back(epsilon(l, i) + epsilon(l, j));
    }
    pos.push_back(epsilon(l, i) * Rat(2));
  }
  std::sort(pos.begin(), pos.end(), [](const Weight& a, const Weight& b) { return b < a; });
  std::vector<Weight> simple;
  for (int i = 1; i < n; ++i) simple.push_back(epsilon(l, i) - epsilon(l, i + 1));
  simple.push_back(epsilon(l, n) * Rat(2));
  return RootData{l, std::move(pos), std::move(simple)};
}

RatVec simple_root_coords(const Weight& w) {
  // alpha_i = e_i - e_{i+1} for i < l and alpha_l = 2 e_l, so
  // k_m = Sum_{j <= m} w_j for m < l and k_l = (Sum_j w_j + k_{l-1}) / 2.
  const int l = w.rank();
  RatVec k(l);
  Rat partial = 0;
  for (int m = 0; m + 1 < l; ++m) {
    partial += w[m];
    k[m] = partial;
  }
  k[l - 1] = (partial + w[l - 1]) / 2;
  return k;
}

std::optional<long> root_height(const Weight& w) {
  RatVec k = simple_root_coords(w);
  Rat h = 0;
  for (const Rat& x : k) {
    if (!is_nonneg_integer(x)) return std::nullopt;
    h += x;
  }
  return static_cast<long>(h.get_num().get_si());
}

}  // namespace cpspinor
