#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace supervogan {

// Exact rational scalar. All arithmetic in the library is exact; no
// floating point appears anywhere in the algebraic layers.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Renders as "p" for integers and "p/q" otherwise.
inline std::string rat_to_string(const Rat& q) {
  return q.get_str();
}

// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rat q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("malformed rational literal: \"" + s + "\"");
  if (q.get_den() == 0)
    throw std::invalid_argument("rational literal with zero denominator: \"" + s + "\"");
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline long to_long(const Rat& q) {
  if (!is_integer(q)) throw std::invalid_argument("rational is not an integer: " + rat_to_string(q));
  if (!q.get_num().fits_slong_p()) throw std::overflow_error("rational exceeds long range");
  return q.get_num().get_si();
}

}  // namespace supervogan
