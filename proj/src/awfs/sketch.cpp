#include "weakmaps/awfs/sketch.hpp"

namespace wm::awfs {

using fincat::FinSetCategory;
using fincat::Function;
using fincat::Set;

bool is_split_mono(const FinSetCategory& c, const FinMonad& T, const SplitMono& m) {
  if (!(m.j.cod == m.k.dom) || !(m.k.cod == T.functor.obj(m.j.dom))) return false;
  return c.compose(m.k, m.j) == T.unit(m.j.dom);
}

bool is_t_algebra(const FinSetCategory& c, const FinMonad& T, const TAlgebra& A) {
  const auto& a = A.action;
  if (!(a.dom == T.functor.obj(A.carrier)) || !(a.cod == A.carrier)) return false;
  return c.compose(a, T.unit(A.carrier)) == c.identity(A.carrier) &&
         c.compose(a, T.mult(A.carrier)) == c.compose(a, T.functor.map(a));
}

Function sketch_canonical_lift(const FinSetCategory& c, const FinMonad& T, const SplitMono& m, const TAlgebra& A,
                               const Function& h) {
  if (!is_split_mono(c, T, m)) throw Error("sketch_canonical_lift: (j, k) is not a T-split mono");
  return fincat::compose_all(c, {A.action, T.functor.map(h), m.k});
}

bool model_by_squares(const FinSetCategory& c, const FinMonad& T, const Sketch& s, const TAlgebra& A,
                      const Function& f) {
  for (const auto& cell : s.cells) {
    const Function fphi = c.compose(f, cell.phi);
    const Function right = c.compose(A.action, T.functor.map(c.compose(fphi, cell.mono.j)));
    if (!(c.compose(right, cell.mono.k) == fphi)) return false;
  }
  return true;
}

bool model_by_lifting_triangles(const FinSetCategory& c, const FinMonad& T, const Sketch& s, const TAlgebra& A,
                                const Function& f) {
  for (const auto& cell : s.cells) {
    const Function psi = c.compose(cell.phi, cell.mono.j);
    const Function h = c.compose(f, psi);
    const Function lift = sketch_canonical_lift(c, T, cell.mono, A, h);
    if (!(c.compose(lift, cell.mono.j) == h)) return false;
    if (!(lift == c.compose(f, cell.phi))) return false;
  }
  return true;
}

std::vector<SplitMono> all_split_monos(const FinSetCategory& c, const FinMonad& T, const std::vector<Set>& objects) {
  std::vector<SplitMono> out;
  for (const auto& a : objects)
    for (const auto& d : objects)
      for (const auto& j : c.hom(a, d))
        for (const auto& k : c.hom(d, T.functor.obj(a)))
          if (c.compose(k, j) == T.unit(a)) out.push_back({j, k});
  return out;
}

std::vector<TAlgebra> all_t_algebras(const FinSetCategory& c, const FinMonad& T, const std::vector<Set>& carriers) {
  std::vector<TAlgebra> out;
  for (const auto& x : carriers)
    for (const auto& a : c.hom(T.functor.obj(x), x)) {
      TAlgebra alg{x, a};
      if (is_t_algebra(c, T, alg)) out.push_back(std::move(alg));
    }
  return out;
}

}  // namespace wm::awfs
