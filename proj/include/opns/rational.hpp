#pragma once
#include <gmpxx.h>
#include <string>
#include <vector>

namespace opns {

// Exact rational scalar. Leading-term extraction and linear independence
// must be exact, so the whole core runs on these.
using Rat = mpq_class;

inline Rat ratOf(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "n" or "n/d", with optional leading '-'.
Rat ratFromString(const std::string& s);

std::string ratToString(const Rat& r);

// gcd of numerators over lcm of denominators; 0 for the empty set.
Rat contentOf(const std::vector<Rat>& coeffs);

} // namespace opns
