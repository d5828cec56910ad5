#pragma once

// Exact real numbers of the form sum c_d * sqrt(d) with rational c_d and
// distinct squarefree d >= 1, closed under the field operations, and complex
// numbers over them.

#include "plqo/rational.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace plqo {

class RadicalScalar {
 public:
  RadicalScalar() = default;
  RadicalScalar(const Rational& q);  // NOLINT(google-explicit-constructor)
  RadicalScalar(long n) : RadicalScalar(Rational(n)) {}  // NOLINT

  /// sqrt(q) for q >= 0, reduced to c*sqrt(d). Throws Internal for q < 0 and
  /// BudgetExceeded when the squarefree part cannot be extracted cheaply.
  static RadicalScalar sqrt(const Rational& q);

  /// Accepts the output of to_string: terms like `3/4`, `-1/2*sqrt(2)`,
  /// `sqrt(6)` joined by + or -.
  static RadicalScalar parse(std::string_view text);

  /// Sorted by d; d = 1 carries the rational part.
  const std::vector<std::pair<Integer, Rational>>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_rational() const noexcept;
  /// The coefficient of sqrt(1).
  Rational rational_part() const;
  /// Exact sign: -1, 0 or 1.
  int sign() const;
  double to_double() const;
  std::string to_string() const;

  RadicalScalar operator-() const;
  RadicalScalar& operator+=(const RadicalScalar& o);
  RadicalScalar& operator-=(const RadicalScalar& o);
  RadicalScalar& operator*=(const RadicalScalar& o);
  /// Throws DivisionByZero for a zero divisor.
  RadicalScalar inverse() const;
  RadicalScalar& operator/=(const RadicalScalar& o) { return *this *= o.inverse(); }

  friend RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) { return a += b; }
  friend RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) { return a -= b; }
  friend RadicalScalar operator*(RadicalScalar a, const RadicalScalar& b) { return a *= b; }
  friend RadicalScalar operator/(RadicalScalar a, const RadicalScalar& b) { return a /= b; }
  friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator<(const RadicalScalar& a, const RadicalScalar& b) {
    return (a - b).sign() < 0;
  }
  friend bool operator<=(const RadicalScalar& a, const RadicalScalar& b) {
    return (a - b).sign() <= 0;
  }

 private:
  void add_term(const Integer& d, const Rational& c);

  std::vector<std::pair<Integer, Rational>> terms_;
};

/// n = s^2 * d with d squarefree; returns {s, d}.
std::pair<Integer, Integer> squarefree_decompose(const Integer& n);

class ComplexScalar {
 public:
  ComplexScalar() = default;
  ComplexScalar(RadicalScalar re, RadicalScalar im = {})  // NOLINT
      : re_(std::move(re)), im_(std::move(im)) {}
  ComplexScalar(const Rational& q) : re_(q) {}  // NOLINT
  ComplexScalar(long n) : re_(n) {}             // NOLINT

  const RadicalScalar& re() const noexcept { return re_; }
  const RadicalScalar& im() const noexcept { return im_; }
  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  ComplexScalar conj() const { return {re_, -im_}; }
  /// re^2 + im^2.
  RadicalScalar norm() const { return re_ * re_ + im_ * im_; }
  ComplexScalar inverse() const;
  std::string to_string() const;

  ComplexScalar operator-() const { return {-re_, -im_}; }
  ComplexScalar& operator+=(const ComplexScalar& o);
  ComplexScalar& operator-=(const ComplexScalar& o);
  ComplexScalar& operator*=(const ComplexScalar& o);

  friend ComplexScalar operator+(ComplexScalar a, const ComplexScalar& b) { return a += b; }
  friend ComplexScalar operator-(ComplexScalar a, const ComplexScalar& b) { return a -= b; }
  friend ComplexScalar operator*(ComplexScalar a, const ComplexScalar& b) { return a *= b; }
  friend bool operator==(const ComplexScalar& a, const ComplexScalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  RadicalScalar re_;
  RadicalScalar im_;
};

}  // namespace plqo
