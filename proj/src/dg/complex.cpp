#include "weakmaps/dg/complex.hpp"

#include <algorithm>
#include <numeric>

namespace wm::dg {

namespace {

bool odd(long long x) { return (x % 2 + 2) % 2 == 1; }

void check_pattern(const std::vector<int>& src, const std::vector<int>& tgt, int degree, const Matrix& m,
                   const char* what) {
  if (m.rows() != tgt.size() || m.cols() != src.size())
    throw Error(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                ", expected " + std::to_string(tgt.size()) + "x" + std::to_string(src.size()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (sgn(m(i, j)) != 0 && tgt[i] != src[j] + degree)
        throw Error(std::string(what) + ": entry (" + std::to_string(i) + "," + std::to_string(j) +
                    ") maps degree " + std::to_string(src[j]) + " to degree " + std::to_string(tgt[i]));
}

}  // namespace

ChainComplex::ChainComplex(std::vector<int> degrees, Matrix d) : deg_(std::move(degrees)), d_(std::move(d)) {
  if (!std::is_sorted(deg_.begin(), deg_.end())) throw Error("complex basis degrees must be ascending");
  check_pattern(deg_, deg_, -1, d_, "boundary");
  if (!(d_ * d_).is_zero()) throw Error("boundary does not square to zero");
}

std::vector<int> ChainComplex::support() const {
  std::vector<int> s = deg_;
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::size_t ChainComplex::dim_at(int k) const {
  auto [lo, hi] = std::equal_range(deg_.begin(), deg_.end(), k);
  return static_cast<std::size_t>(hi - lo);
}

std::size_t ChainComplex::offset(int k) const {
  return static_cast<std::size_t>(std::lower_bound(deg_.begin(), deg_.end(), k) - deg_.begin());
}

Matrix ChainComplex::boundary(int k) const { return d_.block(offset(k - 1), offset(k), dim_at(k - 1), dim_at(k)); }

std::string ChainComplex::str() const {
  std::string out = "{";
  bool first = true;
  for (int k : support()) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(k) + ":" + std::to_string(dim_at(k));
  }
  return out + "}";
}

ComplexPtr make_complex(std::vector<int> degrees, Matrix d) {
  return std::make_shared<const ChainComplex>(std::move(degrees), std::move(d));
}

ComplexPtr complex_from_pieces(const std::vector<std::pair<int, std::size_t>>& dims,
                               const std::vector<std::pair<int, Matrix>>& boundaries) {
  std::vector<std::pair<int, std::size_t>> sorted = dims;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> deg;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i && sorted[i].first == sorted[i - 1].first) throw Error("degree listed twice: " + std::to_string(sorted[i].first));
    deg.insert(deg.end(), sorted[i].second, sorted[i].first);
  }
  Matrix d(deg.size(), deg.size());
  auto off = [&](int k) { return static_cast<std::size_t>(std::lower_bound(deg.begin(), deg.end(), k) - deg.begin()); };
  auto cnt = [&](int k) {
    auto [lo, hi] = std::equal_range(deg.begin(), deg.end(), k);
    return static_cast<std::size_t>(hi - lo);
  };
  for (const auto& [k, b] : boundaries) {
    if (b.rows() == 0 && b.cols() == 0) continue;
    if (b.rows() != cnt(k - 1) || b.cols() != cnt(k))
      throw Error("boundary in degree " + std::to_string(k) + " is " + std::to_string(b.rows()) + "x" +
                  std::to_string(b.cols()) + ", expected " + std::to_string(cnt(k - 1)) + "x" + std::to_string(cnt(k)));
    d.set_block(off(k - 1), off(k), b);
  }
  return make_complex(std::move(deg), std::move(d));
}

ComplexPtr graded_space(std::vector<int> degrees) {
  std::sort(degrees.begin(), degrees.end());
  const std::size_t n = degrees.size();
  return make_complex(std::move(degrees), Matrix(n, n));
}

ComplexPtr unit_complex() {
  static const ComplexPtr I = make_complex({0}, Matrix(1, 1));
  return I;
}

bool same_complex(const ComplexPtr& a, const ComplexPtr& b) {
  return a == b || (a && b && a->degrees() == b->degrees() && a->d() == b->d());
}

std::string GradedMap::str() const {
  std::string out = "deg " + std::to_string(degree) + " {";
  bool first = true;
  for (int k : src->support()) {
    const Matrix blk = m.block(tgt->offset(k + degree), src->offset(k), tgt->dim_at(k + degree), src->dim_at(k));
    if (blk.rows() == 0 || blk.is_zero()) continue;
    if (!first) out += ", ";
    first = false;
    out += std::to_string(k) + ":" + blk.str();
  }
  return out + "}";
}

GradedMap make_map(ComplexPtr src, ComplexPtr tgt, int degree, Matrix m) {
  check_pattern(src->degrees(), tgt->degrees(), degree, m, "graded map");
  return GradedMap{std::move(src), std::move(tgt), degree, std::move(m)};
}

GradedMap identity(const ComplexPtr& X) { return GradedMap{X, X, 0, Matrix::identity(X->dim())}; }

GradedMap zero_map(const ComplexPtr& src, const ComplexPtr& tgt, int degree) {
  return GradedMap{src, tgt, degree, Matrix(tgt->dim(), src->dim())};
}

GradedMap compose(const GradedMap& g, const GradedMap& f) {
  if (!same_complex(f.tgt, g.src))
    throw CompositionError("graded maps do not compose: target " + f.tgt->str() + " vs source " + g.src->str());
  return GradedMap{f.src, g.tgt, f.degree + g.degree, g.m * f.m};
}

static void require_parallel(const GradedMap& f, const GradedMap& g) {
  if (!same_complex(f.src, g.src) || !same_complex(f.tgt, g.tgt) || f.degree != g.degree)
    throw CompositionError("graded maps are not parallel");
}

GradedMap operator+(const GradedMap& f, const GradedMap& g) {
  require_parallel(f, g);
  return GradedMap{f.src, f.tgt, f.degree, f.m + g.m};
}

GradedMap operator-(const GradedMap& f, const GradedMap& g) {
  require_parallel(f, g);
  return GradedMap{f.src, f.tgt, f.degree, f.m - g.m};
}

GradedMap operator-(const GradedMap& f) { return GradedMap{f.src, f.tgt, f.degree, -f.m}; }

GradedMap operator*(const Rational& s, const GradedMap& f) { return GradedMap{f.src, f.tgt, f.degree, s * f.m}; }

bool operator==(const GradedMap& f, const GradedMap& g) {
  return f.degree == g.degree && same_complex(f.src, g.src) && same_complex(f.tgt, g.tgt) && f.m == g.m;
}

GradedMap differential(const GradedMap& f) {
  Matrix m = f.tgt->d() * f.m;
  if (odd(f.degree))
    m += f.m * f.src->d();
  else
    m += -(f.m * f.src->d());
  return GradedMap{f.src, f.tgt, f.degree - 1, std::move(m)};
}

bool is_chain_map(const GradedMap& f) { return f.degree == 0 && differential(f).is_zero(); }

TensorPtr tensor(const ComplexPtr& X, const ComplexPtr& Y) {
  auto t = std::make_shared<TensorProduct>();
  t->left = X;
  t->right = Y;
  const std::size_t nx = X->dim(), ny = Y->dim();
  std::vector<std::pair<std::uint32_t, std::uint32_t>> f;
  f.reserve(nx * ny);
  for (std::uint32_t i = 0; i < nx; ++i)
    for (std::uint32_t j = 0; j < ny; ++j) f.emplace_back(i, j);
  std::stable_sort(f.begin(), f.end(), [&](const auto& a, const auto& b) {
    return X->degree(a.first) + Y->degree(a.second) < X->degree(b.first) + Y->degree(b.second);
  });
  t->factors = f;
  t->index.assign(nx * ny, 0);
  std::vector<int> deg(f.size());
  for (std::size_t p = 0; p < f.size(); ++p) {
    t->index[f[p].first * ny + f[p].second] = static_cast<std::uint32_t>(p);
    deg[p] = X->degree(f[p].first) + Y->degree(f[p].second);
  }
  Matrix d(f.size(), f.size());
  const Matrix& dx = X->d();
  const Matrix& dy = Y->d();
  for (std::size_t p = 0; p < f.size(); ++p) {
    const auto [i, j] = f[p];
    for (std::size_t k = 0; k < nx; ++k)
      if (sgn(dx(k, i)) != 0) d(t->index[k * ny + j], p) += dx(k, i);
    const bool neg = odd(X->degree(i));
    for (std::size_t l = 0; l < ny; ++l)
      if (sgn(dy(l, j)) != 0) {
        if (neg)
          d(t->index[i * ny + l], p) -= dy(l, j);
        else
          d(t->index[i * ny + l], p) += dy(l, j);
      }
  }
  t->complex = make_complex(std::move(deg), std::move(d));
  return t;
}

GradedMap tensor_map(const TensorProduct& S, const TensorProduct& T, const GradedMap& f, const GradedMap& g) {
  if (!same_complex(f.src, S.left) || !same_complex(g.src, S.right) || !same_complex(f.tgt, T.left) ||
      !same_complex(g.tgt, T.right))
    throw CompositionError("tensor_map: factors do not match the tensor products");
  Matrix m(T.complex->dim(), S.complex->dim());
  const std::size_t n_src = S.factors.size();
  for (std::size_t c = 0; c < n_src; ++c) {
    const auto [i, j] = S.factors[c];
    const bool neg = odd(static_cast<long long>(g.degree) * S.left->degree(i));
    for (std::size_t k = 0; k < f.m.rows(); ++k) {
      const Rational& a = f.m(k, i);
      if (sgn(a) == 0) continue;
      for (std::size_t l = 0; l < g.m.rows(); ++l) {
        const Rational& b = g.m(l, j);
        if (sgn(b) == 0) continue;
        if (neg)
          m(T.at(k, l), c) -= a * b;
        else
          m(T.at(k, l), c) += a * b;
      }
    }
  }
  return GradedMap{S.complex, T.complex, f.degree + g.degree, std::move(m)};
}

GradedMap symmetry(const TensorProduct& XY, const TensorProduct& YX) {
  if (!same_complex(XY.left, YX.right) || !same_complex(XY.right, YX.left))
    throw CompositionError("symmetry: tensor factors are not swapped");
  Matrix m(YX.complex->dim(), XY.complex->dim());
  for (std::size_t c = 0; c < XY.factors.size(); ++c) {
    const auto [i, j] = XY.factors[c];
    const bool neg = odd(static_cast<long long>(XY.left->degree(i)) * XY.right->degree(j));
    m(YX.at(j, i), c) = neg ? -1 : 1;
  }
  return GradedMap{XY.complex, YX.complex, 0, std::move(m)};
}

GradedMap associator(const TensorProduct& X_YZ, const TensorProduct& YZ, const TensorProduct& XY,
                     const TensorProduct& XY_Z) {
  if (!same_complex(X_YZ.right, YZ.complex) || !same_complex(XY_Z.left, XY.complex) ||
      !same_complex(X_YZ.left, XY.left) || !same_complex(YZ.left, XY.right) || !same_complex(YZ.right, XY_Z.right))
    throw CompositionError("associator: tensor products do not match");
  Matrix m(XY_Z.complex->dim(), X_YZ.complex->dim());
  for (std::size_t c = 0; c < X_YZ.factors.size(); ++c) {
    const auto [x, yz] = X_YZ.factors[c];
    const auto [y, z] = YZ.factors[yz];
    m(XY_Z.at(XY.at(x, y), z), c) = 1;
  }
  return GradedMap{X_YZ.complex, XY_Z.complex, 0, std::move(m)};
}

GradedMap left_unitor(const TensorProduct& IX) {
  if (IX.left->dim() != 1 || IX.left->degree(0) != 0) throw CompositionError("left_unitor: left factor is not I");
  Matrix m(IX.right->dim(), IX.complex->dim());
  for (std::size_t c = 0; c < IX.factors.size(); ++c) m(IX.factors[c].second, c) = 1;
  return GradedMap{IX.complex, IX.right, 0, std::move(m)};
}

GradedMap right_unitor(const TensorProduct& XI) {
  if (XI.right->dim() != 1 || XI.right->degree(0) != 0) throw CompositionError("right_unitor: right factor is not I");
  Matrix m(XI.left->dim(), XI.complex->dim());
  for (std::size_t c = 0; c < XI.factors.size(); ++c) m(XI.factors[c].first, c) = 1;
  return GradedMap{XI.complex, XI.left, 0, std::move(m)};
}

HomologicalLali identity_lali(const ComplexPtr& X) { return {identity(X), identity(X), zero_map(X, X, 1)}; }

namespace {

void eq(Report& r, const std::string& name, const std::string& at, const GradedMap& lhs, const GradedMap& rhs) {
  r.check(name, at, lhs == rhs, [&] { return std::pair{lhs.str(), rhs.str()}; });
}

}  // namespace

Report validate_lali(const HomologicalLali& l, const std::string& at) {
  Report r;
  const auto& A = l.g.src;
  const auto& B = l.g.tgt;
  const bool shapes = l.g.degree == 0 && l.q.degree == 0 && l.xi.degree == 1 && same_complex(l.q.src, B) &&
                      same_complex(l.q.tgt, A) && same_complex(l.xi.src, A) && same_complex(l.xi.tgt, A);
  r.check("lali.shape", at, shapes, [] { return std::pair<std::string, std::string>{"mismatched", "g:A→B q:B→A ξ:A→₁A"}; });
  if (!shapes) return r;
  eq(r, "lali.g_chain", at, differential(l.g), zero_map(A, B, -1));
  eq(r, "lali.q_chain", at, differential(l.q), zero_map(B, A, -1));
  eq(r, "lali.gq", at, compose(l.g, l.q), identity(B));
  eq(r, "lali.dxi", at, differential(l.xi), identity(A) - compose(l.q, l.g));
  eq(r, "lali.gxi", at, compose(l.g, l.xi), zero_map(A, B, 1));
  eq(r, "lali.xiq", at, compose(l.xi, l.q), zero_map(B, A, 1));
  eq(r, "lali.xixi", at, compose(l.xi, l.xi), zero_map(A, A, 2));
  return r;
}

HomologicalLali compose_lali(const HomologicalLali& outer, const HomologicalLali& inner) {
  return {compose(outer.g, inner.g), compose(inner.q, outer.q),
          inner.xi + compose(inner.q, compose(outer.xi, inner.g))};
}

Report check_lali_morphism(const HomologicalLali& l, const HomologicalLali& l2, const GradedMap& u,
                           const GradedMap& v, const std::string& at) {
  Report r;
  eq(r, "lali-morphism.g", at, compose(l2.g, u), compose(v, l.g));
  eq(r, "lali-morphism.q", at, compose(u, l.q), compose(l2.q, v));
  eq(r, "lali-morphism.xi", at, compose(u, l.xi), compose(l2.xi, u));
  return r;
}

std::vector<std::pair<int, std::size_t>> homology_ranks(const ChainComplex& X, int lo, int hi) {
  std::vector<std::pair<int, std::size_t>> out;
  for (int k = lo; k <= hi; ++k) {
    const std::size_t n = X.dim_at(k);
    const std::size_t out_rank = n == 0 || X.dim_at(k - 1) == 0 ? 0 : X.boundary(k).rank();
    const std::size_t in_rank = n == 0 || X.dim_at(k + 1) == 0 ? 0 : X.boundary(k + 1).rank();
    out.emplace_back(k, n - out_rank - in_rank);
  }
  return out;
}

std::vector<std::pair<int, std::size_t>> homology_ranks(const ChainComplex& X) {
  const auto s = X.support();
  if (s.empty()) return {};
  return homology_ranks(X, s.front(), s.back());
}

}  // namespace wm::dg
