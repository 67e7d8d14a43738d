#ifndef TRICOLOR_RAT_HPP
#define TRICOLOR_RAT_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "tricolor/errors.hpp"

namespace tricolor {

// Exact arithmetic backend. All LP weights, arrangement coordinates and
// closed-form constants live in Rat; doubles are used for search heuristics
// and as a filter in front of exact predicates.
using Rat = mpq_class;
using Int = mpz_class;

inline double to_double(const Rat& q) { return q.get_d(); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Rat r = 1;
  Rat b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

inline Int int_pow(unsigned long base, unsigned long e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

// Exact conversion: every finite double is a binary rational.
inline Rat rat_of(double x) { return Rat(x); }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Parses a plain decimal (optional sign, digits, optional fraction part,
// optional e-exponent) into an exact rational.
Rat rat_from_decimal(std::string_view s);

}  // namespace tricolor

#endif
