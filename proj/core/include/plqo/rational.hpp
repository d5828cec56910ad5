#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace plqo {

/// Exact rational number; always kept in canonical (reduced) form.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n", "-n", "n/m" or a finite decimal such as "0.25".
Rational parse_rational(std::string_view text);

/// "n" for integers, "n/m" otherwise.
std::string to_string(const Rational& q);

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace plqo
