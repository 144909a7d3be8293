#include "cpspinor/serialize.hpp"

#include <sstream>

namespace cpspinor {

nlohmann::json weight_to_json(const Weight& w, WeightBasis basis) {
  nlohmann::json j;
  j["basis"] = basis == WeightBasis::epsilon ? "epsilon" : "fundamental";
  nlohmann::json coords = nlohmann::json::array();
  if (basis == WeightBasis::epsilon) {
    for (const Rat& x : w.coords()) coords.push_back(rat_str(x));
  } else {
    for (const Rat& x : fundamental_from_weight(w)) coords.push_back(rat_str(x));
  }
  j["coords"] = coords;
  return j;
}

Weight weight_from_json(const nlohmann::json& j) {
  std::string basis = j.at("basis").get<std::string>();
  RatVec coords;
  for (const auto& s : j.at("coords")) coords.push_back(parse_rat(s.get<std::string>()));
  Rank l(static_cast<int>(coords.size()), Rank::LowRank::allow);
  if (basis == "epsilon") return Weight(l, std::move(coords));
  if (basis == "fundamental") return weight_from_fundamental(coords, l);
  throw InvalidInput("unknown weight basis tag: '" + basis + "'");
}

namespace {
nlohmann::json triple_to_json(const ModuleTriple& t) {
  nlohmann::json j;
  nlohmann::json lf = nlohmann::json::array();
  for (const Rat& x : fundamental_from_weight(t.lambda)) lf.push_back(rat_str(x));
  j["lambda_fundamental"] = lf;
  j["c"] = rat_str(t.c);
  j["gamma"] = t.gamma;
  return j;
}

ModuleTriple triple_from_json(const nlohmann::json& j) {
  RatVec f;
  for (const auto& s : j.at("lambda_fundamental")) f.push_back(parse_rat(s.get<std::string>()));
  Rank l(static_cast<int>(f.size()), Rank::LowRank::allow);
  return ModuleTriple(weight_from_fundamental(f, l), parse_rat(j.at("c").get<std::string>()), j.at("gamma").get<int>());
}
}  // namespace

nlohmann::json descriptor_to_json(const OperatorDescriptor& d) {
  nlohmann::json j;
  j["rank"] = d.source.lambda.rank();
  j["source"] = triple_to_json(d.source);
  j["target"] = triple_to_json(d.target);
  j["name"] = operator_name_str(d.name);
  return j;
}

OperatorDescriptor descriptor_from_json(const nlohmann::json& j) {
  return OperatorDescriptor(triple_from_json(j.at("source")), triple_from_json(j.at("target")),
                            operator_name_from_str(j.at("name").get<std::string>()));
}

std::string fundamental_csv(const Weight& w) {
  std::ostringstream os;
  RatVec f = fundamental_from_weight(w);
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << rat_str(f[i]);
  return os.str();
}

Weight weight_from_fundamental_csv(const std::string& s, Rank l) {
  RatVec f;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) f.push_back(parse_rat(tok));
  if (static_cast<int>(f.size()) != l.l()) {
    std::ostringstream os;
    os << "expected " << l.l() << " fundamental coefficients, got " << f.size();
    throw InvalidInput(os.str());
  }
  return weight_from_fundamental(f, l);
}

namespace {
std::vector<std::string> descriptor_row(const OperatorDescriptor& d) {
  return {std::to_string(d.source.lambda.rank()),
          fundamental_csv(d.source.lambda),
          rat_str(d.source.c),
          (d.source.gamma > 0 ? "+1" : "-1"),
          fundamental_csv(d.target.lambda),
          rat_str(d.target.c),
          (d.target.gamma > 0 ? "+1" : "-1"),
          operator_name_str(d.name)};
}

const char* kColumns[] = {"rank",          "source_lambda", "source_c",      "source_gamma",
                          "target_lambda", "target_c",      "target_gamma",  "name"};
}  // namespace

std::string descriptors_to_csv(const std::vector<OperatorDescriptor>& ds) {
  std::ostringstream os;
  for (int i = 0; i < 8; ++i) os << (i ? "," : "") << kColumns[i];
  os << "\n";
  for (const OperatorDescriptor& d : ds) {
    std::vector<std::string> row = descriptor_row(d);
    for (int i = 0; i < 8; ++i) {
      if (i) os << ",";
      // weight columns contain commas; quote them
      if (row[i].find(',') != std::string::npos) os << '"' << row[i] << '"';
      else os << row[i];
    }
    os << "\n";
  }
  return os.str();
}

std::string descriptors_to_markdown(const std::vector<OperatorDescriptor>& ds) {
  std::ostringstream os;
  os << "|";
  for (int i = 0; i < 8; ++i) os << " " << kColumns[i] << " |";
  os << "\n|";
  for (int i = 0; i < 8; ++i) os << "---|";
  os << "\n";
  for (const OperatorDescriptor& d : ds) {
    std::vector<std::string> row = descriptor_row(d);
    os << "|";
    for (int i = 0; i < 8; ++i) os << " " << row[i] << " |";
    os << "\n";
  }
  return os.str();
}

std::string descriptors_to_text(const std::vector<OperatorDescriptor>& ds) {
  std::ostringstream os;
  for (const OperatorDescriptor& d : ds) {
    os << operator_name_str(d.name) << ": L(" << fundamental_csv(d.source.lambda) << "; c=" << rat_str(d.source.c)
       << "; gamma=" << (d.source.gamma > 0 ? "+1" : "-1") << ") -> L(" << fundamental_csv(d.target.lambda)
       << "; d=" << rat_str(d.target.c) << "; gamma=" << (d.target.gamma > 0 ? "+1" : "-1") << ")\n";
  }
  return os.str();
}

}  // namespace cpspinor
