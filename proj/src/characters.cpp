#include "cpspinor/characters.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

namespace cpspinor {

namespace {
constexpr const char* kCacheVersion = "1";

Rank rank_of(const Weight& w) { return Rank(w.rank(), Rank::LowRank::allow); }
}  // namespace

bool Window::contains(const Weight& nu) const {
  auto h = root_height(top - nu);
  return h && *h <= depth;
}

long FormalCharacter::multiplicity_at(const Weight& nu) const {
  auto it = mult.find(nu);
  return it == mult.end() ? 0 : it->second;
}

long FormalCharacter::total_mass() const {
  long s = 0;
  for (const auto& [w, m] : mult) s += m;
  return s;
}

long FormalCharacter::max_multiplicity() const {
  long s = 0;
  for (const auto& [w, m] : mult) s = std::max(s, m);
  return s;
}

FormalCharacter spinor_character(Rank l, Parity parity, long depth) {
  if (depth < 0) throw InvalidInput("depth must be non-negative");
  const int n = l.l();
  Weight top = (parity == Parity::even) ? s_plus_weight(l) : s_minus_weight(l);
  FormalCharacter out;
  out.window = Window{top, depth};

  // Weight of z^a is -(a_1+1/2, ..., a_l+1/2); enumerate exponent vectors
  // whose weight stays inside the window.  Each unit of a_i costs height
  // l-i+1/2, so total degree is bounded by 2*depth+1.
  std::vector<long> a(n, 0);
  std::function<void(int, long)> rec = [&](int i, long degree) {
    if (i == n) {
      if ((degree % 2 == 0) != (parity == Parity::even)) return;
      RatVec c(n);
      for (int j = 0; j < n; ++j) c[j] = -(Rat(a[j]) + Rat(1, 2));
      Weight nu(l, std::move(c));
      if (!out.window.contains(nu)) return;
      long& m = out.mult[nu];
      if (m != 0) throw OracleFailure("distinct monomials produced the same spinor weight");
      m = 1;
      return;
    }
    for (long v = 0; v <= 2 * depth + 1 - degree; ++v) {
      a[i] = v;
      rec(i + 1, degree + v);
    }
    a[i] = 0;
  };
  rec(0, 0);
  return out;
}

namespace {

// All nu = lambda - Sum k_i alpha_i at the given height, lexicographically
// descending for determinism.
std::vector<Weight> layer_weights(const Weight& lambda, const std::vector<Weight>& simple, long height) {
  std::vector<Weight> out;
  const int n = static_cast<int>(simple.size());
  std::vector<long> k(n, 0);
  std::function<void(int, long)> rec = [&](int i, long remaining) {
    if (i == n - 1) {
      k[i] = remaining;
      Weight nu = lambda;
      for (int j = 0; j < n; ++j)
        if (k[j] > 0) nu = nu - simple[j] * Rat(k[j]);
      out.push_back(nu);
      return;
    }
    for (long v = 0; v <= remaining; ++v) {
      k[i] = v;
      rec(i + 1, remaining - v);
    }
  };
  rec(0, height);
  std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) { return b < a; });
  return out;
}

}  // namespace

FormalCharacter freudenthal_character(const Weight& lambda, long depth, const FreudenthalOptions& opts) {
  if (depth < 0) throw InvalidInput("depth must be non-negative");
  {
    RatVec f = fundamental_from_weight(lambda);
    bool dominant_integral = true;
    for (const Rat& x : f)
      if (!is_nonneg_integer(x)) dominant_integral = false;
    if (!dominant_integral && !in_A(lambda))
      throw DomainError("multiplicity recursion needs an admissible or dominant integral weight: " +
                        a_membership(lambda).violated);
  }
  Rank rk = rank_of(lambda);
  RootData rd = root_data(rk);
  Weight delta = weyl_delta(rk);
  Rat top_norm = inner(lambda + delta, lambda + delta);

  FormalCharacter out;
  out.window = Window{lambda, depth};
  out.mult[lambda] = 1;

  std::optional<VermaShapovalov> shap;  // built on first degenerate point

  for (long h = 1; h <= depth; ++h) {
    for (const Weight& nu : layer_weights(lambda, rd.simple_roots, h)) {
      Rat denom = top_norm - inner(nu + delta, nu + delta);
      Rat rhs = 0;
      for (const Weight& alpha : rd.positive_roots) {
        for (long k = 1;; ++k) {
          Weight up = nu + alpha * Rat(k);
          auto hh = root_height(lambda - up);
          if (!hh) break;  // left the cone; higher k stay outside
          auto it = out.mult.find(up);
          if (it != out.mult.end()) rhs += 2 * it->second * inner(up, alpha);
        }
      }
      long m;
      if (denom == 0) {
        std::ostringstream os;
        os << "zero Freudenthal denominator at nu = (";
        for (int i = 0; i < nu.rank(); ++i) os << (i ? "," : "") << rat_str(nu[i]);
        os << "), height " << h;
        if (opts.strict) throw DegenerateRecursion(os.str());
        if (rhs != 0) throw OracleFailure(os.str() + ": right-hand side does not vanish");
        if (!shap) shap.emplace(rk.l());
        Weight beta = lambda - nu;
        long vd = shap->verma_dim(beta);
        m = shap->multiplicity(lambda, beta);
        out.degenerate_points.push_back({nu, vd, m});
      } else {
        Rat mq = rhs / denom;
        if (!is_integer(mq) || mq < 0)
          throw OracleFailure("multiplicity recursion produced a non-integral or negative value " + rat_str(mq));
        m = static_cast<long>(mq.get_num().get_si());
      }
      if (m != 0) out.mult[nu] = m;
    }
  }
  return out;
}

namespace {

std::string sanitize_token(const std::string& s) {
  std::string t;
  for (char c : s) {
    if (c == '/') t += 'o';
    else if (c == '-') t += 'm';
    else t += c;
  }
  return t;
}

std::string cache_file_name(const Weight& lambda, long depth) {
  RatVec f = fundamental_from_weight(lambda);
  std::string key;
  for (std::size_t i = 0; i < f.size(); ++i) key += (i ? "_" : "") + sanitize_token(rat_str(f[i]));
  std::ostringstream os;
  os << "char_l" << lambda.rank() << "_" << key << "_d" << depth << ".json";
  return os.str();
}

}  // namespace

FormalCharacter freudenthal_character_cached(const Weight& lambda, long depth, const std::string& cache_dir,
                                             const FreudenthalOptions& opts) {
  if (cache_dir.empty()) return freudenthal_character(lambda, depth, opts);
  namespace fs = std::filesystem;
  fs::path path = fs::path(cache_dir) / cache_file_name(lambda, depth);
  Rank rk = rank_of(lambda);
  if (fs::exists(path)) {
    try {
      std::ifstream in(path);
      nlohmann::json j = nlohmann::json::parse(in);
      if (j.at("version").get<std::string>() == kCacheVersion && j.at("rank").get<int>() == lambda.rank() &&
          j.at("depth").get<long>() == depth) {
        FormalCharacter out;
        out.window = Window{lambda, depth};
        for (const auto& entry : j.at("entries")) {
          RatVec c;
          for (const auto& s : entry.at(0)) c.push_back(parse_rat(s.get<std::string>()));
          out.mult[Weight(rk, std::move(c))] = entry.at(1).get<long>();
        }
        for (const auto& d : j.value("degenerate_points", nlohmann::json::array())) {
          RatVec c;
          for (const auto& s : d.at("nu")) c.push_back(parse_rat(s.get<std::string>()));
          out.degenerate_points.push_back(
              {Weight(rk, std::move(c)), d.at("verma_dim").get<long>(), d.at("multiplicity").get<long>()});
        }
        return out;
      }
    } catch (const std::exception&) {
      // fall through to recomputation on any malformed or stale file
    }
  }
  FormalCharacter out = freudenthal_character(lambda, depth, opts);
  std::error_code ec;
  fs::create_directories(cache_dir, ec);
  nlohmann::json j;
  j["version"] = kCacheVersion;
  j["rank"] = lambda.rank();
  {
    nlohmann::json lf = nlohmann::json::array();
    for (const Rat& x : fundamental_from_weight(lambda)) lf.push_back(rat_str(x));
    j["lambda_fundamental"] = lf;
  }
  j["depth"] = depth;
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [w, m] : out.mult) {
    nlohmann::json coords = nlohmann::json::array();
    for (const Rat& x : w.coords()) coords.push_back(rat_str(x));
    entries.push_back(nlohmann::json::array({coords, m}));
  }
  j["entries"] = entries;
  nlohmann::json degs = nlohmann::json::array();
  for (const auto& d : out.degenerate_points) {
    nlohmann::json coords = nlohmann::json::array();
    for (const Rat& x : d.nu.coords()) coords.push_back(rat_str(x));
    degs.push_back({{"nu", coords}, {"verma_dim", d.verma_dim}, {"multiplicity", d.multiplicity}});
  }
  j["degenerate_points"] = degs;
  std::ofstream outf(path);
  outf << j.dump(1) << "\n";
  return out;
}

long height_spread(const FormalCharacter& c) {
  long spread = 0;
  for (const auto& [w, m] : c.mult) {
    auto h = root_height(c.window.top - w);
    if (!h) throw OracleFailure("character entry outside the root cone below its top");
    spread = std::max(spread, *h);
  }
  return spread;
}

FormalCharacter multiply_truncated(const FormalCharacter& a, const FormalCharacter& b_finite, long depth) {
  long spread = height_spread(b_finite);
  long required = depth + spread;
  if (a.window.depth < required) {
    std::ostringstream os;
    os << "left factor depth " << a.window.depth << " is insufficient for product depth " << depth
       << "; need at least " << required;
    throw DepthUnderflow(os.str(), static_cast<int>(required));
  }
  FormalCharacter out;
  out.window = Window{a.window.top + b_finite.window.top, depth};
  for (const auto& [wa, ma] : a.mult)
    for (const auto& [wb, mb] : b_finite.mult) {
      Weight w = wa + wb;
      if (out.window.contains(w)) out.mult[w] += ma * mb;
    }
  return out;
}

Rat weyl_dim(const Weight& lambda) {
  for (const Rat& x : fundamental_from_weight(lambda))
    if (!is_nonneg_integer(x)) throw DomainError("Weyl dimension needs a dominant integral weight");
  Rank rk = rank_of(lambda);
  Weight delta = weyl_delta(rk);
  Rat dim = 1;
  for (const Weight& alpha : root_data(rk).positive_roots)
    dim *= inner(lambda + delta, alpha) / inner(delta, alpha);
  return dim;
}

Theorem2Report verify_theorem2(const Weight& lambda, long depth, const std::string& cache_dir,
                               const std::optional<std::vector<Weight>>& components_override) {
  AMembership am = a_membership(lambda);
  if (!am.ok) throw DomainError("decomposition check requires an admissible weight: " + am.violated);
  Rank rk = rank_of(lambda);
  const int l = rk.l();

  Theorem2Report rep;
  rep.lambda = lambda;
  rep.depth = depth;
  rep.components = components_override ? *components_override : a_lambda(lambda);

  // Complete character of the defining module F(w_1), via the recursion,
  // checked complete against the Weyl dimension.
  Weight w1 = epsilon(rk, 1);
  FormalCharacter def_char = freudenthal_character(w1, 2 * l - 1);
  if (def_char.total_mass() != 2 * l) throw OracleFailure("defining-module character is not complete");

  long spread = height_spread(def_char);
  FormalCharacter lhs_src = freudenthal_character_cached(lambda, depth + spread, cache_dir);
  for (const auto& d : lhs_src.degenerate_points) rep.degenerate_points.push_back(d);

  // Cross-check the left factor against the closed-form spinor character
  // when lambda is one of the two basic spinor weights.
  if (lambda == s_plus_weight(rk) || lambda == s_minus_weight(rk)) {
    Parity p = (lambda == s_plus_weight(rk)) ? Parity::even : Parity::odd;
    FormalCharacter closed = spinor_character(rk, p, depth + spread);
    if (closed.mult != lhs_src.mult) throw OracleFailure("recursion disagrees with the closed-form spinor character");
    rep.spinor_cross_checked = true;
  }

  FormalCharacter lhs = multiply_truncated(lhs_src, def_char, depth);

  std::map<Weight, long> rhs;
  for (const Weight& mu : rep.components) {
    FormalCharacter cm = freudenthal_character_cached(mu, depth, cache_dir);
    for (const auto& d : cm.degenerate_points) rep.degenerate_points.push_back(d);
    for (const auto& [w, m] : cm.mult)
      if (lhs.window.contains(w)) rhs[w] += m;
  }

  // Per-weight exact comparison, descending, first discrepancy reported.
  std::vector<Weight> keys;
  for (const auto& [w, m] : lhs.mult) keys.push_back(w);
  for (const auto& [w, m] : rhs)
    if (!lhs.mult.count(w)) keys.push_back(w);
  std::sort(keys.begin(), keys.end(), [](const Weight& a, const Weight& b) { return b < a; });
  rep.pass = true;
  for (const Weight& w : keys) {
    long ml = lhs.multiplicity_at(w);
    auto it = rhs.find(w);
    long mr = it == rhs.end() ? 0 : it->second;
    ++rep.weights_compared;
    if (ml != mr) {
      rep.pass = false;
      rep.discrepancy_weight = w;
      rep.discrepancy_lhs = ml;
      rep.discrepancy_rhs = mr;
      break;
    }
  }
  return rep;
}

}  // namespace cpspinor
