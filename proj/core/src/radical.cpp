#include "plqo/radical.hpp"

#include "plqo/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>

namespace plqo {

namespace {

constexpr unsigned long kTrialLimit = 2'000'000;

}  // namespace

std::pair<Integer, Integer> squarefree_decompose(const Integer& n) {
  if (n <= 0) throw Error(ErrorCode::Internal, "squarefree part of a non-positive integer");
  Integer rem = n;
  Integer s = 1;
  Integer d = 1;
  for (unsigned long p = 2;; ++p) {
    Integer pp(p);
    if (pp * pp * pp > rem) break;
    if (p > kTrialLimit)
      throw Error(ErrorCode::BudgetExceeded, "integer too large to extract its square part");
    unsigned e = 0;
    while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
      rem /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) d *= p;
  }
  // rem now has at most two prime factors, each larger than the last trial.
  if (mpz_perfect_square_p(rem.get_mpz_t())) {
    Integer r;
    mpz_sqrt(r.get_mpz_t(), rem.get_mpz_t());
    s *= r;
  } else {
    d *= rem;
  }
  return {s, d};
}

RadicalScalar::RadicalScalar(const Rational& q) {
  if (q != 0) terms_.emplace_back(Integer(1), q);
}

void RadicalScalar::add_term(const Integer& d, const Rational& c) {
  if (c == 0) return;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), d,
                             [](const auto& t, const Integer& key) { return t.first < key; });
  if (it != terms_.end() && it->first == d) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {d, c});
  }
}

RadicalScalar RadicalScalar::sqrt(const Rational& q) {
  if (q < 0) throw Error(ErrorCode::Internal, "square root of a negative rational");
  if (q == 0) return {};
  // sqrt(a/b) = sqrt(a*b) / b.
  const Integer ab = q.get_num() * q.get_den();
  auto [s, d] = squarefree_decompose(ab);
  RadicalScalar out;
  Rational c(s, q.get_den());
  c.canonicalize();
  out.add_term(d, c);
  return out;
}

bool RadicalScalar::is_rational() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 1);
}

Rational RadicalScalar::rational_part() const {
  if (!terms_.empty() && terms_[0].first == 1) return terms_[0].second;
  return 0;
}

int RadicalScalar::sign() const {
  if (terms_.empty()) return 0;
  if (is_rational()) return sgn(terms_[0].second);
  // Distinct squarefree roots are linearly independent over Q, so a non-empty
  // sum is non-zero and interval refinement terminates.
  for (unsigned long bits = 32;; bits *= 2) {
    Rational lo = 0;
    Rational hi = 0;
    Integer scale = 1;
    scale <<= bits;
    for (const auto& [d, c] : terms_) {
      if (d == 1) {
        lo += c;
        hi += c;
        continue;
      }
      Integer big = d * scale * scale;
      Integer r;
      mpz_sqrt(r.get_mpz_t(), big.get_mpz_t());
      Rational rl(r, scale);
      Rational rh(r + 1, scale);
      rl.canonicalize();
      rh.canonicalize();
      if (c > 0) {
        lo += c * rl;
        hi += c * rh;
      } else {
        lo += c * rh;
        hi += c * rl;
      }
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
  }
}

double RadicalScalar::to_double() const {
  double acc = 0;
  for (const auto& [d, c] : terms_) acc += c.get_d() * std::sqrt(d.get_d());
  return acc;
}

std::string RadicalScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    const Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (d == 1) {
      out += plqo::to_string(mag);
    } else {
      if (mag != 1) out += plqo::to_string(mag) + "*";
      out += "sqrt(" + d.get_str() + ")";
    }
    first = false;
  }
  return out;
}

RadicalScalar RadicalScalar::parse(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto bad = [&]() -> Error {
    return Error(ErrorCode::Parse, "not an exact scalar: '" + std::string(text) + "'");
  };
  auto starts = [&](std::string_view lit) { return text.substr(i, lit.size()) == lit; };
  auto number = [&]() {
    const std::size_t b = i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) ||
                               text[i] == '/' || text[i] == '.'))
      ++i;
    if (b == i) throw bad();
    return parse_rational(text.substr(b, i - b));
  };
  auto root = [&]() {
    i += 5;  // "sqrt("
    skip();
    Rational arg = number();
    skip();
    if (i >= text.size() || text[i] != ')') throw bad();
    ++i;
    return RadicalScalar::sqrt(arg);
  };

  RadicalScalar out;
  bool any = false;
  skip();
  while (i < text.size()) {
    Rational sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (text[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (any) {
      throw bad();
    }
    RadicalScalar term;
    if (starts("sqrt(")) {
      term = root();
    } else {
      term = RadicalScalar(number());
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
        if (!starts("sqrt(")) throw bad();
        term *= root();
      }
    }
    out += RadicalScalar(sign) * term;
    any = true;
    skip();
  }
  if (!any) throw bad();
  return out;
}

RadicalScalar RadicalScalar::operator-() const {
  RadicalScalar out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

RadicalScalar& RadicalScalar::operator*=(const RadicalScalar& o) {
  RadicalScalar out;
  for (const auto& [d1, c1] : terms_) {
    for (const auto& [d2, c2] : o.terms_) {
      // sqrt(d1)*sqrt(d2) = g*sqrt(d1*d2/g^2) with g = gcd(d1, d2); the
      // remaining product is squarefree.
      Integer g = gcd(d1, d2);
      Integer d = (d1 / g) * (d2 / g);
      out.add_term(d, c1 * c2 * Rational(g));
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

RadicalScalar RadicalScalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_rational()) return RadicalScalar(Rational(1) / terms_[0].second);
  // Pick a prime p dividing some radicand; write x = a + b*sqrt(p) with a, b
  // free of p. Then 1/x = (a - b*sqrt(p)) / (a^2 - p*b^2), and the
  // denominator involves fewer primes.
  Integer radicand = 0;
  for (const auto& [d, c] : terms_)
    if (d != 1) {
      radicand = d;
      break;
    }
  Integer p = 2;
  while (!mpz_divisible_p(radicand.get_mpz_t(), p.get_mpz_t())) mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  RadicalScalar a;
  RadicalScalar b;
  for (const auto& [d, c] : terms_) {
    if (mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()))
      b.add_term(d / p, c);
    else
      a.add_term(d, c);
  }
  RadicalScalar sp;
  sp.add_term(p, 1);
  RadicalScalar conj = a - b * sp;
  RadicalScalar denom = a * a - RadicalScalar(Rational(p)) * b * b;
  return conj * denom.inverse();
}

ComplexScalar ComplexScalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const RadicalScalar n = norm().inverse();
  return {re_ * n, -(im_ * n)};
}

std::string ComplexScalar::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  return "(" + re_.to_string() + ") + (" + im_.to_string() + ")i";
}

ComplexScalar& ComplexScalar::operator+=(const ComplexScalar& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ComplexScalar& ComplexScalar::operator-=(const ComplexScalar& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ComplexScalar& ComplexScalar::operator*=(const ComplexScalar& o) {
  RadicalScalar r = re_ * o.re_ - im_ * o.im_;
  RadicalScalar i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

}  // namespace plqo
