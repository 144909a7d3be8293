#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cpspinor {

// Command grammar:
//   classify  --rank L --source FUND:C:GAMMA --target FUND:C:GAMMA
//   enumerate --rank L --lambda FUND [--gamma +1|-1]
//   named     NAME --rank L [--gamma +1|-1]
//   decompose --rank L --lambda FUND
//   constants --rank L
//   verify    SUB --rank L [--lambda FUND] [--depth D] [--seed N]
//     SUB in {grading, constants, lemma1, formula1, theorem3, theorem4,
//             lemma2, theorem2}
// Common options: --format json|csv|md|text, --cache-dir PATH, --seed N,
// --allow-low-rank.
//
// Exit codes: 0 success; 1 domain error (diagnostic names the violated
// admissibility condition); 2 oracle verification failure; 64 usage error.

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpspinor
