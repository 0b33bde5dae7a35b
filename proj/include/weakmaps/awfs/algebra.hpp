#pragma once

#include <optional>
#include <string>
#include <vector>

#include "weakmaps/awfs/awfs.hpp"
#include "weakmaps/fincat/finset.hpp"

namespace wm::awfs {

/// An R-algebra of a (P-)split-epi AWFS: g: A → B with a Kleisli section
/// σ: PB → A, g·σ = ε_B.  For the split-epi family P is the identity and σ is
/// an ordinary section.
template <class C>
struct RAlgebra {
  typename C::Arrow g;
  typename C::Arrow sigma;
};

/// An L-coalgebra (f, s): s: B → Ef with s·f = λf and ρf·s = 1.
template <class C>
struct LCoalgebra {
  typename C::Arrow f;
  typename C::Arrow s;
};

template <class C>
const ComonadData<C>& split_comonad(const AwfsData<C>& A) {
  if (!A.split_comonad) throw Error("AWFS '" + A.name + "' has no split-epi structure");
  return *A.split_comonad;
}

/// The generic structure map p = ⟨1_A, σ⟩: Eg = A + PB → A.
template <HasCoproducts C>
typename C::Arrow structure_map(const C& c, const RAlgebra<C>& alg) {
  return c.copair(c.identity(c.dom(alg.g)), alg.sigma);
}

template <HasCoproducts C>
RAlgebra<C> identity_algebra(const C& c, const AwfsData<C>& A, const typename C::Object& b) {
  return {c.identity(b), split_comonad(A).counit(b)};
}

/// The free algebra ρf: Ef → B with section ι_PB.
template <HasCoproducts C>
RAlgebra<C> free_algebra(const C& c, const AwfsData<C>& A, const typename C::Arrow& f) {
  const auto& P = split_comonad(A);
  return {A.rho(f), c.coproduct(c.dom(f), P.functor.obj(c.cod(f))).inr};
}

/// The free coalgebra (λf, Δ_f).
template <class C>
LCoalgebra<C> free_coalgebra(const AwfsData<C>& A, const typename C::Arrow& f) {
  return {A.lambda(f), A.comult(f)};
}

/// Section equation and the Eilenberg–Moore equations of p = ⟨1, σ⟩:
/// p·λg = 1, g·p = ρg, p·μ_g = p·E(p, 1).
template <HasCoproducts C>
Report validate_r_algebra(const C& c, const AwfsData<C>& A, const RAlgebra<C>& alg) {
  Report report;
  const auto& P = split_comonad(A);
  const auto& g = alg.g;
  const std::string at = c.show(g);
  auto eq = [&](const char* name, auto lhs, auto rhs) { fincat::check_arrows(report, c, name, at, lhs, rhs); };
  eq("algebra.section", [&] { return c.compose(g, alg.sigma); }, [&] { return P.counit(c.cod(g)); });
  eq("algebra.unit", [&] { return c.compose(structure_map(c, alg), A.lambda(g)); },
     [&] { return c.identity(c.dom(g)); });
  eq("algebra.over_base", [&] { return c.compose(g, structure_map(c, alg)); }, [&] { return A.rho(g); });
  eq("algebra.assoc", [&] { return c.compose(structure_map(c, alg), A.mult(g)); },
     [&] {
       const auto p = structure_map(c, alg);
       return c.compose(p, A.E_map(A.rho(A.rho(g)), A.rho(g), p, c.identity(c.cod(g))));
     });
  return report;
}

/// (u,v): 𝕒 → 𝕓 is a square of the double category of algebras iff
/// b·u = v·a and u·σ_a = σ_b·Pv.
template <ComputableCategory C>
bool is_square(const C& c, const AwfsData<C>& A, const RAlgebra<C>& a, const RAlgebra<C>& b,
               const typename C::Arrow& u, const typename C::Arrow& v) {
  const auto& P = split_comonad(A);
  return c.equal(c.compose(b.g, u), c.compose(v, a.g)) &&
         c.equal(c.compose(u, a.sigma), c.compose(b.sigma, P.functor.map(v)));
}

/// The same predicate phrased through structure maps: u·p_a = p_b·E(u,v).
template <HasCoproducts C>
bool is_em_square(const C& c, const AwfsData<C>& A, const RAlgebra<C>& a, const RAlgebra<C>& b,
                  const typename C::Arrow& u, const typename C::Arrow& v) {
  if (!c.equal(c.compose(b.g, u), c.compose(v, a.g))) return false;
  return c.equal(c.compose(u, structure_map(c, a)),
                 c.compose(structure_map(c, b), A.E_map(a.g, b.g, u, v)));
}

/// Vertical composite of 𝕘: A → B and 𝕙: B → C: (h·g, σ_g·Pσ_h·Δ_C).
template <ComputableCategory C>
RAlgebra<C> r_algebra_compose(const C& c, const AwfsData<C>& A, const RAlgebra<C>& g, const RAlgebra<C>& h) {
  if (!c.same_object(c.cod(g.g), c.dom(h.g)))
    throw CompositionError("algebras do not compose: " + c.show(g.g) + " then " + c.show(h.g));
  const auto& P = split_comonad(A);
  return {c.compose(h.g, g.g), fincat::compose_all(c, {g.sigma, P.functor.map(h.sigma), P.comult(c.cod(h.g))})};
}

/// j = p·E(u,v)·s for a coalgebra (f,s), an algebra 𝕘 and a commuting square
/// (u,v): f → g.  Throws Error on a non-commuting square.
template <HasCoproducts C>
typename C::Arrow canonical_filler(const C& c, const AwfsData<C>& A, const LCoalgebra<C>& coalg,
                                   const RAlgebra<C>& alg, const typename C::Arrow& u, const typename C::Arrow& v) {
  if (!c.equal(c.compose(alg.g, u), c.compose(v, coalg.f)))
    throw Error("canonical_filler: square does not commute");
  return fincat::compose_all(c, {structure_map(c, alg), A.E_map(coalg.f, alg.g, u, v), coalg.s});
}

/// φ_𝕗 = canonical filler of (!_A, ε^Q_B): λ!_B → 𝕗 against the free coalgebra
/// on !_B; an arrow QB → A with f·φ = ε^Q_B.
template <class C>
  requires HasCoproducts<C> && HasInitial<C>
typename C::Arrow phi(const C& c, const AwfsData<C>& A, const RAlgebra<C>& alg) {
  const auto b = c.cod(alg.g);
  const auto bang = c.initial_map(b);
  return canonical_filler(c, A, free_coalgebra(A, bang), alg, c.initial_map(c.dom(alg.g)), A.rho(bang));
}

/// Right-connectedness: (f, 1_B) is a square 𝕗 → 𝟙_B.
template <HasCoproducts C>
bool right_connected(const C& c, const AwfsData<C>& A, const RAlgebra<C>& alg) {
  const auto b = c.cod(alg.g);
  return is_square(c, A, alg, identity_algebra(c, A, b), alg.g, c.identity(b));
}

// FinSet specifics.

using FinAwfs = AwfsData<fincat::FinSetCategory>;
using FinAlgebra = RAlgebra<fincat::FinSetCategory>;
using FinCoalgebra = LCoalgebra<fincat::FinSetCategory>;

/// Every algebra structure σ: PB → A on g, in lexicographic order.
std::vector<FinAlgebra> algebra_structures(const fincat::FinSetCategory& c, const FinAwfs& A,
                                           const fincat::Function& g);
/// Every algebra g: A → B with |A|, |B| drawn from `objects`.
std::vector<FinAlgebra> all_algebras(const fincat::FinSetCategory& c, const FinAwfs& A,
                                     const std::vector<fincat::Set>& objects);

/// Every L-coalgebra structure s: B → Ef on f: s·f = λf, ρf·s = 1 and
/// Δ_f·s = E(1, s)·s.
std::vector<FinCoalgebra> coalgebra_structures(const fincat::FinSetCategory& c, const FinAwfs& A,
                                               const fincat::Function& f);

struct CartesianLift {
  FinAlgebra algebra;  ///< structure on f
  fincat::Function u;  ///< top of the square f → g
  fincat::Function v;  ///< bottom of the square
};

/// Pulls 𝕘: C → D back along v: B → D using the chosen pullback; the
/// structure on the projection f solves f·s = ε_B and u·s = σ·Pv.
CartesianLift cartesian_lift(const fincat::FinSetCategory& c, const FinAwfs& A, const FinAlgebra& g,
                             const fincat::Function& v);

/// Structure on f induced by a given square (u, v): f → g, which must be a
/// pullback; throws Error otherwise.
FinAlgebra cartesian_lift(const fincat::FinSetCategory& c, const FinAwfs& A, const FinAlgebra& g,
                          const fincat::Function& f, const fincat::Function& u, const fincat::Function& v);

/// True when the square (u, v): f → g of functions is a pullback.
bool is_pullback_square(const fincat::FinSetCategory& c, const fincat::Function& f, const fincat::Function& g,
                        const fincat::Function& u, const fincat::Function& v);

}  // namespace wm::awfs
