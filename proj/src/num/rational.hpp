#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

namespace btg::num {

using Int = mpz_class;
using Rat = mpq_class;

// Parses "n", "-n", "n/d" with arbitrary-precision parts. Returns nullopt on
// malformed input or zero denominator.
std::optional<Rat> parse_rat(const std::string& s);

// Canonical form: lowest terms, positive denominator, "n" or "n/d".
std::string rat_to_string(const Rat& q);

inline int sign_of(const Rat& q) { return sgn(q); }
inline int sign_of(const Int& n) { return sgn(n); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

}  // namespace btg::num
