#include "cpspinor/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <ostream>
#include <sstream>

#include "cpspinor/classifier.hpp"
#include "cpspinor/report.hpp"
#include "cpspinor/serialize.hpp"

namespace cpspinor {

namespace {

constexpr const char* kWatermark = "# low-rank run (l=2): outside the validated hypothesis l >= 3\n";

struct Options {
  int rank = 3;
  bool allow_low_rank = false;
  std::string format = "json";
  std::string cache_dir = ".cpspinor-cache";
  std::uint64_t seed = 20260801;
  std::string lambda_str, source_str, target_str, gamma_str = "+1";
  long depth = 6;
  std::string name_arg, sub_arg;
};

int parse_gamma(const std::string& s) {
  if (s == "+1" || s == "1") return 1;
  if (s == "-1") return -1;
  throw InvalidInput("gamma must be +1 or -1, got '" + s + "'");
}

Rank make_rank(const Options& o) {
  return Rank(o.rank, o.allow_low_rank ? Rank::LowRank::allow : Rank::LowRank::deny);
}

ModuleTriple parse_triple(const std::string& s, Rank l) {
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  if (parts.size() != 3) throw InvalidInput("module triple must be FUND:C:GAMMA, got '" + s + "'");
  return ModuleTriple(weight_from_fundamental_csv(parts[0], l), parse_rat(parts[1]), parse_gamma(parts[2]));
}

void emit(std::ostream& out, const Options& o, const nlohmann::json& j, const std::string& text,
          const std::string& csv = "", const std::string& md = "") {
  if (o.format == "json") {
    nlohmann::json jj = j;
    if (o.rank == 2) {
      if (jj.is_object()) {
        jj["low_rank_watermark"] = true;
      } else {
        jj = nlohmann::json{{"low_rank_watermark", true}, {"items", jj}};
      }
    }
    out << jj.dump(2) << "\n";
    return;
  }
  if (o.rank == 2) out << kWatermark;
  if (o.format == "csv" && !csv.empty()) {
    out << csv;
    return;
  }
  if (o.format == "md" && !md.empty()) {
    out << md;
    return;
  }
  out << text;
}

int run_classify(const Options& o, std::ostream& out) {
  Rank l = make_rank(o);
  ModuleTriple src = parse_triple(o.source_str, l);
  ModuleTriple tgt = parse_triple(o.target_str, l);
  int dim = classify(src, tgt);
  nlohmann::json j;
  j["rank"] = l.l();
  j["source"] = {{"lambda_fundamental", fundamental_csv(src.lambda)}, {"c", rat_str(src.c)}, {"gamma", src.gamma}};
  j["target"] = {{"lambda_fundamental", fundamental_csv(tgt.lambda)}, {"c", rat_str(tgt.c)}, {"gamma", tgt.gamma}};
  j["dim_hom"] = dim;
  std::ostringstream text;
  text << "dim Hom = " << dim << "\n";
  std::ostringstream csv;
  csv << "rank,source,source_c,source_gamma,target,target_c,target_gamma,dim_hom\n"
      << l.l() << ",\"" << fundamental_csv(src.lambda) << "\"," << rat_str(src.c) << ","
      << (src.gamma > 0 ? "+1" : "-1") << ",\"" << fundamental_csv(tgt.lambda) << "\"," << rat_str(tgt.c) << ","
      << (tgt.gamma > 0 ? "+1" : "-1") << "," << dim << "\n";
  std::ostringstream md;
  md << "| rank | source | source_c | source_gamma | target | target_c | target_gamma | dim_hom |\n"
     << "|---|---|---|---|---|---|---|---|\n"
     << "| " << l.l() << " | " << fundamental_csv(src.lambda) << " | " << rat_str(src.c) << " | "
     << (src.gamma > 0 ? "+1" : "-1") << " | " << fundamental_csv(tgt.lambda) << " | " << rat_str(tgt.c) << " | "
     << (tgt.gamma > 0 ? "+1" : "-1") << " | " << dim << " |\n";
  emit(out, o, j, text.str(), csv.str(), md.str());
  return 0;
}

int run_enumerate(const Options& o, std::ostream& out) {
  Rank l = make_rank(o);
  Weight lambda = weight_from_fundamental_csv(o.lambda_str, l);
  std::vector<OperatorDescriptor> ds = enumerate_first_order(lambda, parse_gamma(o.gamma_str));
  nlohmann::json j = nlohmann::json::array();
  for (const OperatorDescriptor& d : ds) j.push_back(descriptor_to_json(d));
  emit(out, o, j, descriptors_to_text(ds), descriptors_to_csv(ds), descriptors_to_markdown(ds));
  return 0;
}

int run_named(const Options& o, std::ostream& out) {
  Rank l = make_rank(o);
  OperatorDescriptor d = named_operator(operator_name_from_str(o.name_arg), l, parse_gamma(o.gamma_str));
  std::vector<OperatorDescriptor> ds{d};
  emit(out, o, descriptor_to_json(d), descriptors_to_text(ds), descriptors_to_csv(ds), descriptors_to_markdown(ds));
  return 0;
}

int run_decompose(const Options& o, std::ostream& out) {
  Rank l = make_rank(o);
  Weight lambda = weight_from_fundamental_csv(o.lambda_str, l);
  std::vector<Weight> comps = a_lambda(lambda);
  nlohmann::json j;
  j["rank"] = l.l();
  j["lambda_fundamental"] = fundamental_csv(lambda);
  nlohmann::json arr = nlohmann::json::array();
  for (const Weight& mu : comps) arr.push_back(fundamental_csv(mu));
  j["components"] = arr;
  std::ostringstream text, csv, md;
  text << "L(" << fundamental_csv(lambda) << ") (x) F(w_1) components:\n";
  for (const Weight& mu : comps) text << "  " << fundamental_csv(mu) << "\n";
  csv << "mu_fundamental\n";
  for (const Weight& mu : comps) csv << "\"" << fundamental_csv(mu) << "\"\n";
  md << "| mu_fundamental |\n|---|\n";
  for (const Weight& mu : comps) md << "| " << fundamental_csv(mu) << " |\n";
  emit(out, o, j, text.str(), csv.str(), md.str());
  return 0;
}

int emit_report(const Options& o, std::ostream& out, const VerificationReport& rep) {
  emit(out, o, rep.to_json(), rep.render_text());
  return rep.passed() ? 0 : 2;
}

int run_verify(const Options& o, std::ostream& out) {
  Rank l = make_rank(o);
  if (o.sub_arg == "grading") return emit_report(o, out, verify_grading(l.l()));
  if (o.sub_arg == "constants") return emit_report(o, out, verify_constants_report(l.l()));
  if (o.sub_arg == "lemma1") return emit_report(o, out, verify_lemma1(l.l(), o.seed));
  if (o.sub_arg == "formula1") return emit_report(o, out, verify_formula1(l.l(), o.seed));
  if (o.sub_arg == "theorem3") return emit_report(o, out, verify_theorem3(l.l(), o.seed));
  if (o.sub_arg == "theorem4") return emit_report(o, out, verify_theorem4(l.l()));
  if (o.sub_arg == "lemma2") return emit_report(o, out, verify_lemma2(l.l()));
  if (o.sub_arg == "theorem2") {
    if (o.lambda_str.empty()) throw InvalidInput("verify theorem2 requires --lambda");
    Weight lambda = weight_from_fundamental_csv(o.lambda_str, l);
    return emit_report(o, out, verify_theorem2_report(lambda, o.depth, o.cache_dir));
  }
  throw InvalidInput("unknown verify subcommand '" + o.sub_arg +
                     "'; expected grading|constants|lemma1|formula1|theorem3|theorem4|lemma2|theorem2");
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"first-order invariant operator classification over higher symplectic spinor modules"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd, bool with_seed = false) {
    cmd->add_option("--rank", o.rank, "rank l (>= 3; 2 needs --allow-low-rank)");
    cmd->add_flag("--allow-low-rank", o.allow_low_rank, "permit rank 2 (output is watermarked)");
    cmd->add_option("--format", o.format, "json|csv|md|text")
        ->check(CLI::IsMember({"json", "csv", "md", "text"}));
    cmd->add_option("--cache-dir", o.cache_dir, "character cache directory");
    if (with_seed) cmd->add_option("--seed", o.seed, "seed for randomized property checks");
  };

  CLI::App* c_classify = app.add_subcommand("classify", "decide dim Hom for a source/target pair");
  add_common(c_classify);
  c_classify->add_option("--source", o.source_str, "FUND:C:GAMMA")->required();
  c_classify->add_option("--target", o.target_str, "FUND:C:GAMMA")->required();

  CLI::App* c_enum = app.add_subcommand("enumerate", "all first-order operators out of L(lambda)");
  add_common(c_enum);
  c_enum->add_option("--lambda", o.lambda_str, "fundamental coefficients, e.g. 0,0,-1/2")->required();
  c_enum->add_option("--gamma", o.gamma_str, "+1|-1");

  CLI::App* c_named = app.add_subcommand("named", "a named operator fixture");
  add_common(c_named);
  c_named->add_option("name", o.name_arg, "dirac|twistor|rarita_schwinger")->required();
  c_named->add_option("--gamma", o.gamma_str, "+1|-1");

  CLI::App* c_dec = app.add_subcommand("decompose", "components of L(lambda) (x) F(w_1)");
  add_common(c_dec);
  c_dec->add_option("--lambda", o.lambda_str, "fundamental coefficients")->required();

  CLI::App* c_const = app.add_subcommand("constants", "measured normalization constants");
  add_common(c_const);

  CLI::App* c_verify = app.add_subcommand("verify", "run one verification oracle");
  add_common(c_verify, true);
  c_verify->add_option("subcheck", o.sub_arg, "grading|constants|lemma1|formula1|theorem3|theorem4|lemma2|theorem2")
      ->required();
  c_verify->add_option("--lambda", o.lambda_str, "fundamental coefficients (theorem2)");
  c_verify->add_option("--depth", o.depth, "truncation depth (theorem2)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 64;
  }

  try {
    if (*c_classify) return run_classify(o, out);
    if (*c_enum) return run_enumerate(o, out);
    if (*c_named) return run_named(o, out);
    if (*c_dec) return run_decompose(o, out);
    if (*c_const) return emit_report(o, out, verify_constants_report(make_rank(o).l()));
    if (*c_verify) return run_verify(o, out);
  } catch (const ZerothOrderError& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return 1;
  } catch (const InvalidInput& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return 64;
  } catch (const DepthUnderflow& e) {
    err << "oracle error: " << e.what() << "\n";
    return 2;
  } catch (const OracleFailure& e) {
    err << "oracle error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 64;
}

}  // namespace cpspinor
