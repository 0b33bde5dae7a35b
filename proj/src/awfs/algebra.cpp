#include "weakmaps/awfs/algebra.hpp"

namespace wm::awfs {

using fincat::FinSetCategory;
using fincat::Function;
using fincat::Set;

std::vector<FinAlgebra> algebra_structures(const FinSetCategory&, const FinAwfs& A, const Function& g) {
  const auto& P = split_comonad(A);
  const Set pb = P.functor.obj(g.cod);
  const Function eps = P.counit(g.cod);
  std::vector<std::vector<std::uint32_t>> choices(pb.size());
  for (std::size_t y = 0; y < pb.size(); ++y)
    for (std::uint32_t x = 0; x < g.dom.size(); ++x)
      if (g(x) == eps(y)) choices[y].push_back(x);
  std::vector<FinAlgebra> out;
  for (const auto& ch : choices)
    if (ch.empty()) return out;
  std::vector<std::size_t> pos(pb.size(), 0);
  while (true) {
    std::vector<std::uint32_t> m(pb.size());
    for (std::size_t y = 0; y < pb.size(); ++y) m[y] = choices[y][pos[y]];
    out.push_back({g, Function(pb, g.dom, std::move(m))});
    std::size_t y = pb.size();
    while (true) {
      if (y == 0) return out;
      --y;
      if (++pos[y] < choices[y].size()) break;
      pos[y] = 0;
    }
  }
}

std::vector<FinAlgebra> all_algebras(const FinSetCategory& c, const FinAwfs& A, const std::vector<Set>& objects) {
  std::vector<FinAlgebra> out;
  for (const auto& a : objects)
    for (const auto& b : objects)
      for (const auto& g : c.hom(a, b))
        for (auto& alg : algebra_structures(c, A, g)) out.push_back(std::move(alg));
  return out;
}

std::vector<FinCoalgebra> coalgebra_structures(const FinSetCategory& c, const FinAwfs& A, const Function& f) {
  std::vector<FinCoalgebra> out;
  const Function lf = A.lambda(f);
  const Function rf = A.rho(f);
  const Function d = A.comult(f);
  for (const auto& s : c.hom(f.cod, A.E(f))) {
    if (!(c.compose(s, f) == lf) || !(c.compose(rf, s) == c.identity(f.cod))) continue;
    if (c.compose(d, s) == c.compose(A.E_map(f, lf, c.identity(f.dom), s), s)) out.push_back({f, s});
  }
  return out;
}

CartesianLift cartesian_lift(const FinSetCategory& c, const FinAwfs& A, const FinAlgebra& g, const Function& v) {
  const auto& P = split_comonad(A);
  const auto pb = c.pullback(v, g.g);
  const Function cone2 = c.compose(g.sigma, P.functor.map(v));
  auto s = c.mediate(pb, v, g.g, P.counit(v.dom), cone2);
  if (!s) throw Error("cartesian_lift: the section cone does not commute");
  return {{pb.p1, *s}, pb.p2, v};
}

bool is_pullback_square(const FinSetCategory& c, const Function& f, const Function& g, const Function& u,
                        const Function& v) {
  if (!(c.compose(g, u) == c.compose(v, f))) return false;
  // x ↦ (f x, u x) must hit every pair (b, y) with v b = g y exactly once.
  for (std::uint32_t b = 0; b < f.cod.size(); ++b)
    for (std::uint32_t y = 0; y < g.dom.size(); ++y) {
      if (v(b) != g(y)) continue;
      std::size_t hits = 0;
      for (std::size_t x = 0; x < f.dom.size(); ++x)
        if (f(x) == b && u(x) == y) ++hits;
      if (hits != 1) return false;
    }
  return true;
}

FinAlgebra cartesian_lift(const FinSetCategory& c, const FinAwfs& A, const FinAlgebra& g, const Function& f,
                          const Function& u, const Function& v) {
  if (!is_pullback_square(c, f, g.g, u, v)) throw Error("cartesian_lift: square is not a pullback");
  const auto& P = split_comonad(A);
  const Function eps = P.counit(f.cod);
  const Function top = c.compose(g.sigma, P.functor.map(v));
  std::vector<std::uint32_t> m(eps.dom.size());
  for (std::size_t y = 0; y < m.size(); ++y) {
    for (std::uint32_t x = 0; x < f.dom.size(); ++x)
      if (f(x) == eps(y) && u(x) == top(y)) m[y] = x;
  }
  return {f, Function(eps.dom, f.dom, std::move(m))};
}

}  // namespace wm::awfs
