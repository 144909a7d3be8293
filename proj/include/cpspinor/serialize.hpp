#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "cpspinor/classifier.hpp"
#include "cpspinor/weights.hpp"

namespace cpspinor {

// Wire formats.  Weights serialize as
//   {"basis": "epsilon"|"fundamental", "coords": ["-1/2", ...]}
// and operator descriptors as
//   {rank, source: {lambda_fundamental, c, gamma}, target: {...}, name}.
// CSV and Markdown tables share one column order:
//   rank, source_lambda, source_c, source_gamma,
//   target_lambda, target_c, target_gamma, name.

enum class WeightBasis { epsilon, fundamental };

nlohmann::json weight_to_json(const Weight& w, WeightBasis basis);
Weight weight_from_json(const nlohmann::json& j);

nlohmann::json descriptor_to_json(const OperatorDescriptor& d);
OperatorDescriptor descriptor_from_json(const nlohmann::json& j);

/// "a,b,c" with rational entries; the CLI's weight-argument format.
std::string fundamental_csv(const Weight& w);
Weight weight_from_fundamental_csv(const std::string& s, Rank l);

std::string descriptors_to_csv(const std::vector<OperatorDescriptor>& ds);
std::string descriptors_to_markdown(const std::vector<OperatorDescriptor>& ds);
std::string descriptors_to_text(const std::vector<OperatorDescriptor>& ds);

}  // namespace cpspinor
