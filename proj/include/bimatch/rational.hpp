#pragma once

#include <gmpxx.h>

#include <string>

#include "bimatch/errors.hpp"

namespace bimatch {

// Exact rational coordinate. mpq_class keeps values canonical (reduced,
// positive denominator), which is all the arithmetic core relies on.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline int sgn(const Rat& r) { return sgn(r.get_num()); }

// Parses "p", "-p" or "p/q" with integer p, q (q > 0 after canonicalization).
Rat parse_rat(const std::string& text);

// Serializes without loss: "p" or "p/q".
std::string format_rat(const Rat& r);

}  // namespace bimatch
