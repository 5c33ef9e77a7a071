#pragma once

#include <gmpxx.h>

#include <string>

namespace dpc {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer big(long long v) { return Integer(static_cast<long>(v)); }

inline Rational make_rational(long long num, long long den = 1) {
  Rational q(Integer(std::to_string(num)), Integer(std::to_string(den)));
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace dpc
