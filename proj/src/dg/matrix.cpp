#include "weakmaps/dg/matrix.hpp"

#include "weakmaps/report.hpp"

namespace wm::dg {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_)
    if (sgn(x) != 0) return false;
  return true;
}

std::size_t Matrix::rank() const {
  std::vector<Rational> a = a_;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < c_ && rank < r_; ++col) {
    std::size_t piv = rank;
    while (piv < r_ && sgn(a[piv * c_ + col]) == 0) ++piv;
    if (piv == r_) continue;
    if (piv != rank)
      for (std::size_t j = 0; j < c_; ++j) std::swap(a[piv * c_ + j], a[rank * c_ + j]);
    const Rational inv = 1 / a[rank * c_ + col];
    for (std::size_t i = rank + 1; i < r_; ++i) {
      if (sgn(a[i * c_ + col]) == 0) continue;
      const Rational f = a[i * c_ + col] * inv;
      for (std::size_t j = col; j < c_; ++j)
        if (sgn(a[rank * c_ + j]) != 0) a[i * c_ + j] -= f * a[rank * c_ + j];
    }
    ++rank;
  }
  return rank;
}

Matrix Matrix::transpose() const {
  Matrix t(c_, r_);
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::optional<Matrix> Matrix::inverse() const {
  if (r_ != c_) return std::nullopt;
  const std::size_t n = r_;
  Matrix a = *this;
  Matrix inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && sgn(a(piv, col)) == 0) ++piv;
    if (piv == n) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(piv, j), a(col, j));
      std::swap(inv(piv, j), inv(col, j));
    }
    const Rational s = 1 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= s;
      inv(col, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || sgn(a(i, col)) == 0) continue;
      const Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

void Matrix::set_column(std::size_t dst, const Matrix& m, std::size_t src) {
  for (std::size_t i = 0; i < r_; ++i) (*this)(i, dst) = m(i, src);
}

std::string Matrix::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < r_; ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < c_; ++j) {
      if (j) out += ", ";
      out += format_rational((*this)(i, j));
    }
    out += "]";
  }
  return out + "]";
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.c_ != b.r_)
    throw CompositionError("matrix shapes " + std::to_string(a.r_) + "x" + std::to_string(a.c_) + " and " +
                           std::to_string(b.r_) + "x" + std::to_string(b.c_) + " do not multiply");
  Matrix c(a.r_, b.c_);
  for (std::size_t i = 0; i < a.r_; ++i)
    for (std::size_t k = 0; k < a.c_; ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.c_; ++j) {
        const Rational& y = b(k, j);
        if (sgn(y) != 0) c(i, j) += x * y;
      }
    }
  return c;
}

Matrix& Matrix::operator+=(const Matrix& b) {
  if (r_ != b.r_ || c_ != b.c_) throw CompositionError("matrix shapes differ in a sum");
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (sgn(b.a_[i]) != 0) a_[i] += b.a_[i];
  return *this;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix c = a;
  c += b;
  return c;
}

Matrix operator-(const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.a_) x = -x;
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Rational& s, const Matrix& a) {
  Matrix c = a;
  for (auto& x : c.a_) x *= s;
  return c;
}

Rational parse_rational(const std::string& s) {
  try {
    Rational q(s, 10);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw ParseError("not a rational number: '" + s + "'");
  }
}

std::string format_rational(const Rational& q) { return q.get_str(); }

}  // namespace wm::dg
