#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace lycas {

// Exact rational scalar. Always kept canonical (lowest terms, positive
// denominator); mpq_class canonicalizes on construction from integers and
// we re-canonicalize after any raw assignment.
using Rat = mpq_class;

inline Rat frac(long num, long den) {
    if (den == 0) throw std::invalid_argument("frac: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Serializes as "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& r);

// Parses exactly the strings rat_str produces: an optional minus sign,
// digits without leading zeros, and for non-integers a "/q" part with
// q >= 2 and gcd(p, q) = 1. Anything else (e.g. "2/4", "5/1", "-0",
// "007") is rejected with an exception naming the offending literal.
Rat parse_rat(const std::string& text);

}  // namespace lycas
