#include "weakmaps/dg/random.hpp"

#include <algorithm>
#include <numeric>

namespace wm::dg {

Rational random_small(Rng& rng) { return Rational(static_cast<long>(rng() % 5) - 2); }

Matrix random_invertible(Rng& rng, std::size_t n) {
  for (;;) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_small(rng);
    if (m.rank() == n) return m;
  }
}

std::pair<ComplexPtr, GradedMap> random_conjugate(Rng& rng, const ComplexPtr& X) {
  const std::size_t n = X->dim();
  Matrix P(n, n);
  for (int k : X->support()) P.set_block(X->offset(k), X->offset(k), random_invertible(rng, X->dim_at(k)));
  const Matrix Pinv = *P.inverse();
  ComplexPtr Y = make_complex(X->degrees(), P * X->d() * Pinv);
  return {Y, GradedMap{X, Y, 0, P}};
}

DirectSum direct_sum(const ComplexPtr& X, const ComplexPtr& Y) {
  const std::size_t nx = X->dim(), ny = Y->dim();
  std::vector<std::pair<int, std::size_t>> order;  // (degree, source index) with Y indices offset by nx
  for (std::size_t i = 0; i < nx; ++i) order.emplace_back(X->degree(i), i);
  for (std::size_t j = 0; j < ny; ++j) order.emplace_back(Y->degree(j), nx + j);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::size_t> pos(nx + ny);
  std::vector<int> deg;
  for (std::size_t p = 0; p < order.size(); ++p) {
    pos[order[p].second] = p;
    deg.push_back(order[p].first);
  }
  Matrix d(nx + ny, nx + ny);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t k = 0; k < nx; ++k) d(pos[i], pos[k]) = X->d()(i, k);
  for (std::size_t i = 0; i < ny; ++i)
    for (std::size_t k = 0; k < ny; ++k) d(pos[nx + i], pos[nx + k]) = Y->d()(i, k);
  ComplexPtr S = make_complex(std::move(deg), std::move(d));
  Matrix in1(nx + ny, nx), in2(nx + ny, ny), pr1(nx, nx + ny), pr2(ny, nx + ny);
  for (std::size_t i = 0; i < nx; ++i) in1(pos[i], i) = pr1(i, pos[i]) = 1;
  for (std::size_t j = 0; j < ny; ++j) in2(pos[nx + j], j) = pr2(j, pos[nx + j]) = 1;
  return {S, GradedMap{X, S, 0, in1}, GradedMap{Y, S, 0, in2}, GradedMap{S, X, 0, pr1}, GradedMap{S, Y, 0, pr2}};
}

ComplexPtr random_complex(Rng& rng, int lo, int hi, std::size_t max_dim) {
  const std::size_t target = 1 + rng() % std::max<std::size_t>(max_dim, 1);
  std::vector<int> deg;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  // (from, to) indices into deg
  std::vector<int> raw;
  struct Block {
    int k;
    bool pair;
  };
  std::vector<Block> blocks;
  std::size_t used = 0;
  while (used < target) {
    const int k = lo + static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1));
    const bool pair = k > lo && used + 2 <= target && rng() % 2 == 0;
    blocks.push_back({k, pair});
    used += pair ? 2 : 1;
  }
  for (const auto& b : blocks) {
    raw.push_back(b.k);
    if (b.pair) {
      raw.push_back(b.k - 1);
      arrows.emplace_back(raw.size() - 2, raw.size() - 1);
    }
  }
  std::vector<std::size_t> idx(raw.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return raw[a] < raw[b]; });
  std::vector<std::size_t> pos(raw.size());
  for (std::size_t p = 0; p < idx.size(); ++p) {
    pos[idx[p]] = p;
    deg.push_back(raw[idx[p]]);
  }
  Matrix d(raw.size(), raw.size());
  for (const auto& [from, to] : arrows) d(pos[to], pos[from]) = 1;
  return random_conjugate(rng, make_complex(std::move(deg), std::move(d))).first;
}

GradedMap random_map(Rng& rng, const ComplexPtr& src, const ComplexPtr& tgt, int degree) {
  Matrix m(tgt->dim(), src->dim());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (tgt->degree(i) == src->degree(j) + degree) m(i, j) = random_small(rng);
  return GradedMap{src, tgt, degree, std::move(m)};
}

std::pair<ComplexPtr, GradedMap> random_contractible(Rng& rng, int lo, int hi, std::size_t pairs) {
  std::vector<int> raw;
  for (std::size_t p = 0; p < pairs; ++p) {
    const int k = lo + 1 + static_cast<int>(rng() % static_cast<unsigned>(std::max(hi - lo, 1)));
    raw.push_back(k);
    raw.push_back(k - 1);
  }
  std::vector<std::size_t> idx(raw.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return raw[a] < raw[b]; });
  std::vector<std::size_t> pos(raw.size());
  std::vector<int> deg;
  for (std::size_t p = 0; p < idx.size(); ++p) {
    pos[idx[p]] = p;
    deg.push_back(raw[idx[p]]);
  }
  Matrix d(raw.size(), raw.size()), h(raw.size(), raw.size());
  for (std::size_t p = 0; p < pairs; ++p) {
    d(pos[2 * p + 1], pos[2 * p]) = 1;
    h(pos[2 * p], pos[2 * p + 1]) = 1;
  }
  ComplexPtr C = make_complex(std::move(deg), std::move(d));
  return {C, GradedMap{C, C, 1, std::move(h)}};
}

HomologicalLali random_lali(Rng& rng, const ComplexPtr& B, int lo, int hi) {
  auto [C, h] = random_contractible(rng, lo, hi, 1 + rng() % 2);
  const DirectSum S = direct_sum(B, C);
  const GradedMap phi = differential(random_map(rng, B, C, 1));
  const GradedMap g = S.pr1;
  const GradedMap q = S.in1 + compose(S.in2, phi);
  const GradedMap xi = compose(S.in2, compose(h, S.pr2 - compose(phi, S.pr1)));
  return {g, q, xi};
}

}  // namespace wm::dg
