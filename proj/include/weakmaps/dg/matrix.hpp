#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wm::dg {

using Rational = mpq_class;

/// Dense row-major matrix of exact rationals.  Products skip zero entries,
/// which keeps the mostly-permutation matrices of the bar construction cheap.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  [[nodiscard]] std::size_t rows() const { return r_; }
  [[nodiscard]] std::size_t cols() const { return c_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::size_t rank() const;
  [[nodiscard]] Matrix transpose() const;
  /// Inverse of a square matrix, or nullopt when singular.
  [[nodiscard]] std::optional<Matrix> inverse() const;

  [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  /// Copies column `src` of `m` into column `dst` of this matrix.
  void set_column(std::size_t dst, const Matrix& m, std::size_t src);

  /// [[a, b], [c, d]] with entries as integers or p/q.
  [[nodiscard]] std::string str() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  Matrix& operator+=(const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
  }

 private:
  std::size_t r_ = 0;
  std::size_t c_ = 0;
  std::vector<Rational> a_;
};

/// Parses "3", "-1/2" or "0".
Rational parse_rational(const std::string& s);
std::string format_rational(const Rational& q);

}  // namespace wm::dg
