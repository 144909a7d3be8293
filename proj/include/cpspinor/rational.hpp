#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace cpspinor {

// All arithmetic in this library is exact; floating point is never used.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

/// Parse "p/q" or "p" (optional sign) into a canonical rational.
Rat parse_rat(const std::string& s);

/// Canonical string form, "p/q" or "p".
std::string rat_str(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

/// True iff r lies in Z + 1/2.
inline bool is_half_odd_integer(const Rat& r) {
  Rat doubled = r * 2;
  return is_integer(doubled) && !is_integer(r);
}

inline bool is_nonneg_integer(const Rat& r) { return is_integer(r) && r >= 0; }

}  // namespace cpspinor
