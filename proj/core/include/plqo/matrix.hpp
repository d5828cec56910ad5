#pragma once

// Dense square and rectangular matrices over an arbitrary scalar type, plus the
// scalar policies used by the exact and floating-point structure variants.

#include "plqo/errors.hpp"
#include "plqo/radical.hpp"

#include <cmath>
#include <complex>
#include <string>
#include <vector>

namespace plqo {

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<ComplexScalar> {
  using Real = RadicalScalar;
  static constexpr bool exact = true;

  static ComplexScalar from_rational(const Rational& q) { return ComplexScalar(q); }
  static ComplexScalar conj(const ComplexScalar& z) { return z.conj(); }
  static bool is_zero(const ComplexScalar& z, double /*tol*/) { return z.is_zero(); }
  static bool is_real(const ComplexScalar& z, double /*tol*/) { return z.im().is_zero(); }
  static Real real(const ComplexScalar& z) { return z.re(); }
  static Real real_from_rational(const Rational& q) { return RadicalScalar(q); }
  /// Sign of a - q.
  static int compare(const Real& a, const Rational& q, double /*tol*/) {
    return (a - RadicalScalar(q)).sign();
  }
  static int compare(const Real& a, const Real& b, double /*tol*/) { return (a - b).sign(); }
  static double to_double(const Real& a) { return a.to_double(); }
  static std::string to_string(const Real& a) { return a.to_string(); }
};

template <>
struct ScalarTraits<std::complex<double>> {
  using Real = double;
  static constexpr bool exact = false;

  static std::complex<double> from_rational(const Rational& q) { return {q.get_d(), 0.0}; }
  static std::complex<double> conj(const std::complex<double>& z) { return std::conj(z); }
  static bool is_zero(const std::complex<double>& z, double tol) { return std::abs(z) <= tol; }
  static bool is_real(const std::complex<double>& z, double tol) {
    return std::abs(z.imag()) <= tol;
  }
  static Real real(const std::complex<double>& z) { return z.real(); }
  static Real real_from_rational(const Rational& q) { return q.get_d(); }
  static int compare(const Real& a, const Rational& q, double tol) {
    return compare(a, q.get_d(), tol);
  }
  static int compare(const Real& a, const Real& b, double tol) {
    if (std::abs(a - b) <= tol) return 0;
    return a < b ? -1 : 1;
  }
  static double to_double(const Real& a) { return a; }
  static std::string to_string(const Real& a) { return std::to_string(a); }
};

template <class S>
class Matrix {
 public:
  using Traits = ScalarTraits<S>;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Traits::from_rational(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  S& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const S& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix adjoint() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m(c, r) = Traits::conj((*this)(r, c));
    return m;
  }

  bool is_zero(double tol) const {
    for (const auto& s : data_)
      if (!Traits::is_zero(s, tol)) return false;
    return true;
  }

  /// Entrywise comparison within `tol` (exact equality for exact scalars).
  bool approx_equal(const Matrix& o, double tol) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!Traits::is_zero(data_[i] - o.data_[i], tol)) return false;
    return true;
  }

  std::vector<S> apply(const std::vector<S>& v) const {
    if (v.size() != cols_) throw Error(ErrorCode::DimMismatch, "vector length mismatch");
    std::vector<S> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      S acc{};
      for (std::size_t c = 0; c < cols_; ++c) {
        const S& a = (*this)(r, c);
        if (Traits::is_zero(a, 0.0) || Traits::is_zero(v[c], 0.0)) continue;
        acc += a * v[c];
      }
      out[r] = std::move(acc);
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimMismatch, "matrix product shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const S& x = a(i, k);
        if (Traits::is_zero(x, 0.0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const S& y = b(k, j);
          if (Traits::is_zero(y, 0.0)) continue;
          m(i, j) += x * y;
        }
      }
    return m;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const S& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw Error(ErrorCode::DimMismatch, "matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <class S>
S inner(const std::vector<S>& a, const std::vector<S>& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimMismatch, "vector length mismatch");
  S acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += ScalarTraits<S>::conj(a[i]) * b[i];
  return acc;
}

}  // namespace plqo
