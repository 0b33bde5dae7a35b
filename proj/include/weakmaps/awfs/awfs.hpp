#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weakmaps/fincat/category.hpp"
#include "weakmaps/fincat/comonad.hpp"

namespace wm::awfs {

using fincat::CheckGroup;
using fincat::ComonadData;
using fincat::ComputableCategory;
using fincat::HasCoproducts;
using fincat::HasInitial;

/// A functorial factorisation with comultiplication and multiplication
/// components.  For f: A → B:
///   λf: A → Ef,  ρf: Ef → B,  Δ_f: Ef → E(λf),  μ_f: E(ρf) → Ef,
/// and for a commuting square (h,k): f → g, E(h,k): Ef → Eg.
template <class C>
struct AwfsData {
  using Object = typename C::Object;
  using Arrow = typename C::Arrow;

  std::string name;
  std::function<Object(const Arrow&)> E;
  std::function<Arrow(const Arrow&)> lambda;
  std::function<Arrow(const Arrow&)> rho;
  /// E(h,k) for the square (h,k): f → g.
  std::function<Arrow(const Arrow& f, const Arrow& g, const Arrow& h, const Arrow& k)> E_map;
  std::function<Arrow(const Arrow&)> comult;
  std::function<Arrow(const Arrow&)> mult;
  /// The comonad whose Kleisli sections are the algebra structures; present
  /// for the (P-)split-epi families.
  std::optional<ComonadData<C>> split_comonad;
};

/// Ef = A + PB, λf = ι_A, ρf = ⟨f, ε_B⟩, E(h,k) = h + Pk,
/// Δ_f = (1 + Pι_PB)·(1 + Δ_B), μ_f = ⟨1, ι_PB⟩.
template <HasCoproducts C>
AwfsData<C> p_split_epi_awfs(const C& c, const ComonadData<C>& P) {
  AwfsData<C> A;
  A.name = "P-split-epi";
  A.split_comonad = P;
  A.E = [c, P](const auto& f) { return c.coproduct(c.dom(f), P.functor.obj(c.cod(f))).object; };
  A.lambda = [c, P](const auto& f) { return c.coproduct(c.dom(f), P.functor.obj(c.cod(f))).inl; };
  A.rho = [c, P](const auto& f) { return c.copair(f, P.counit(c.cod(f))); };
  A.E_map = [c, P](const auto&, const auto&, const auto& h, const auto& k) {
    return fincat::coproduct_map(c, h, P.functor.map(k));
  };
  A.comult = [c, P](const auto& f) {
    const auto a = c.dom(f);
    const auto pb = P.functor.obj(c.cod(f));
    const auto iota = c.coproduct(a, pb).inr;
    return c.compose(fincat::coproduct_map(c, c.identity(a), P.functor.map(iota)),
                     fincat::coproduct_map(c, c.identity(a), P.comult(c.cod(f))));
  };
  A.mult = [c, P](const auto& f) {
    const auto ef = c.coproduct(c.dom(f), P.functor.obj(c.cod(f)));
    return c.copair(c.identity(ef.object), ef.inr);
  };
  return A;
}

/// Ef = A + B, λf = ι_A, ρf = ⟨f, 1⟩, E(h,k) = h + k, μ_f = ⟨1, ι_B⟩ and
/// Δ_f = 1_A + ι_B.
template <HasCoproducts C>
AwfsData<C> split_epi_awfs(const C& c, const ComonadData<C>& identity) {
  AwfsData<C> A;
  A.name = "split-epi";
  A.split_comonad = identity;
  A.E = [c](const auto& f) { return c.coproduct(c.dom(f), c.cod(f)).object; };
  A.lambda = [c](const auto& f) { return c.coproduct(c.dom(f), c.cod(f)).inl; };
  A.rho = [c](const auto& f) { return c.copair(f, c.identity(c.cod(f))); };
  A.E_map = [c](const auto&, const auto&, const auto& h, const auto& k) {
    return fincat::coproduct_map(c, h, k);
  };
  A.comult = [c](const auto& f) {
    const auto a = c.dom(f);
    return fincat::coproduct_map(c, c.identity(a), c.coproduct(a, c.cod(f)).inr);
  };
  A.mult = [c](const auto& f) {
    const auto ef = c.coproduct(c.dom(f), c.cod(f));
    return c.copair(c.identity(ef.object), ef.inr);
  };
  return A;
}

/// Checks, per arrow f of the fragment:
///   factorisation      ρf·λf = f
///   E.identity         E(1,1) = 1
///   comonad.square     Δ_f·λf = λ(λf)
///   comonad.counit.left   ρ(λf)·Δ_f = 1
///   comonad.counit.right  E(1,ρf)·Δ_f = 1
///   comonad.coassoc    Δ_{λf}·Δ_f = E(1,Δ_f)·Δ_f
///   monad.square       ρf·μ_f = ρ(ρf)
///   monad.unit.left    μ_f·λ(ρf) = 1
///   monad.unit.right   μ_f·E(λf,1) = 1
///   monad.assoc        μ_f·μ_{ρf} = μ_f·E(μ_f,1)
///   dist.middle        ρ(λf)·Δ_f = μ_f·λ(ρf)
///   dist.law           Δ_f·μ_f = μ_{λf}·E(Δ_f,μ_f)·Δ_{ρf}
/// and per commuting square (h,k): f → g between fragment arrows the
/// naturality of λ, ρ, Δ and μ.  `E.composition` covers composable square
/// pairs among the arrows accepted by `functoriality_filter` (the number of
/// pairs grows quickly, so callers restrict it); no filter skips it.
template <ComputableCategory C>
Report validate_awfs(const C& c, const AwfsData<C>& A, const std::vector<typename C::Arrow>& fragment,
                     const std::function<bool(const typename C::Arrow&)>& functoriality_filter = {}) {
  using Arrow = typename C::Arrow;
  Report report;
  auto id = [&](const auto& o) { return c.identity(o); };
  for (const auto& f : fragment) {
    const std::string at = c.show(f);
    const auto a = c.dom(f);
    const auto b = c.cod(f);
    auto eq = [&](const char* name, auto lhs, auto rhs) { fincat::check_arrows(report, c, name, at, lhs, rhs); };
    eq("factorisation", [&] { return c.compose(A.rho(f), A.lambda(f)); }, [&] { return f; });
    eq("E.identity", [&] { return A.E_map(f, f, id(a), id(b)); }, [&] { return id(A.E(f)); });
    eq("comonad.square", [&] { return c.compose(A.comult(f), A.lambda(f)); },
       [&] { return A.lambda(A.lambda(f)); });
    eq("comonad.counit.left", [&] { return c.compose(A.rho(A.lambda(f)), A.comult(f)); },
       [&] { return id(A.E(f)); });
    eq("comonad.counit.right",
       [&] { return c.compose(A.E_map(A.lambda(f), f, id(a), A.rho(f)), A.comult(f)); },
       [&] { return id(A.E(f)); });
    eq("comonad.coassoc", [&] { return c.compose(A.comult(A.lambda(f)), A.comult(f)); },
       [&] {
         const auto lf = A.lambda(f);
         return c.compose(A.E_map(lf, A.lambda(lf), id(a), A.comult(f)), A.comult(f));
       });
    eq("monad.square", [&] { return c.compose(A.rho(f), A.mult(f)); }, [&] { return A.rho(A.rho(f)); });
    eq("monad.unit.left", [&] { return c.compose(A.mult(f), A.lambda(A.rho(f))); },
       [&] { return id(A.E(f)); });
    eq("monad.unit.right", [&] { return c.compose(A.mult(f), A.E_map(f, A.rho(f), A.lambda(f), id(b))); },
       [&] { return id(A.E(f)); });
    eq("monad.assoc", [&] { return c.compose(A.mult(f), A.mult(A.rho(f))); },
       [&] {
         const auto rf = A.rho(f);
         return c.compose(A.mult(f), A.E_map(A.rho(rf), rf, A.mult(f), id(b)));
       });
    eq("dist.middle", [&] { return c.compose(A.rho(A.lambda(f)), A.comult(f)); },
       [&] { return c.compose(A.mult(f), A.lambda(A.rho(f))); });
    eq("dist.law", [&] { return c.compose(A.comult(f), A.mult(f)); },
       [&] {
         const auto lf = A.lambda(f);
         const auto rf = A.rho(f);
         const auto mid = A.E_map(A.lambda(rf), A.rho(lf), A.comult(f), A.mult(f));
         return fincat::compose_all(c, {A.mult(lf), mid, A.comult(rf)});
       });
  }

  // Squares (h,k): f → g.
  struct Square {
    Arrow h, k;
  };
  std::vector<std::vector<std::vector<Square>>> squares(fragment.size(),
                                                       std::vector<std::vector<Square>>(fragment.size()));
  for (std::size_t i = 0; i < fragment.size(); ++i) {
    const auto& f = fragment[i];
    for (std::size_t j = 0; j < fragment.size(); ++j) {
      const auto& g = fragment[j];
      const auto hs = c.hom(c.dom(f), c.dom(g));
      const auto ks = c.hom(c.cod(f), c.cod(g));
      for (const auto& h : hs)
        for (const auto& k : ks)
          if (c.equal(c.compose(g, h), c.compose(k, f))) squares[i][j].push_back({h, k});
    }
  }
  for (std::size_t i = 0; i < fragment.size(); ++i) {
    const auto& f = fragment[i];
    const std::string at = c.show(f) + " -> *";
    CheckGroup lam(report, "lambda.natural", at);
    CheckGroup rho(report, "rho.natural", at);
    CheckGroup del(report, "comult.natural", at);
    CheckGroup mu(report, "mult.natural", at);
    for (std::size_t j = 0; j < fragment.size(); ++j) {
      const auto& g = fragment[j];
      for (const auto& [h, k] : squares[i][j]) {
        auto w = [&] { return "(" + c.show(h) + ", " + c.show(k) + ") : " + c.show(f) + " -> " + c.show(g); };
        const auto e = A.E_map(f, g, h, k);
        lam.arrows(c, w, [&] { return c.compose(e, A.lambda(f)); }, [&] { return c.compose(A.lambda(g), h); });
        rho.arrows(c, w, [&] { return c.compose(A.rho(g), e); }, [&] { return c.compose(k, A.rho(f)); });
        del.arrows(
            c, w, [&] { return c.compose(A.comult(g), e); },
            [&] { return c.compose(A.E_map(A.lambda(f), A.lambda(g), h, e), A.comult(f)); });
        mu.arrows(
            c, w, [&] { return c.compose(A.mult(g), A.E_map(A.rho(f), A.rho(g), e, k)); },
            [&] { return c.compose(e, A.mult(f)); });
      }
    }
  }

  if (functoriality_filter) {
    std::vector<std::size_t> small;
    for (std::size_t i = 0; i < fragment.size(); ++i)
      if (functoriality_filter(fragment[i])) small.push_back(i);
    for (auto i : small) {
      CheckGroup comp(report, "E.composition", c.show(fragment[i]) + " -> * -> *");
      for (auto j : small)
        for (auto l : small)
          for (const auto& s1 : squares[i][j])
            for (const auto& s2 : squares[j][l]) {
              const auto& f = fragment[i];
              const auto& g = fragment[j];
              const auto& x = fragment[l];
              comp.arrows(
                  c, [&] { return "(" + c.show(s2.h) + ", " + c.show(s2.k) + ") . (" + c.show(s1.h) + ", " + c.show(s1.k) + ")"; },
                  [&] { return A.E_map(f, x, c.compose(s2.h, s1.h), c.compose(s2.k, s1.k)); },
                  [&] { return c.compose(A.E_map(g, x, s2.h, s2.k), A.E_map(f, g, s1.h, s1.k)); });
            }
    }
  }
  return report;
}

/// QB = E(!_B), ε_B = ρ(!_B), Qk = E(1_0, k).  The comultiplication is
/// Δ_{!_B}: QB → E(λ!_B) followed by the comparison E(1_0, 1_QB): E(λ!_B) →
/// E(!_QB) = QQB (an identity whenever λ!_B and !_QB coincide as arrows).
template <class C>
  requires HasInitial<C>
ComonadData<C> cofibrant_replacement(const C& c, const AwfsData<C>& A) {
  ComonadData<C> Q;
  Q.functor.name = "Q";
  Q.functor.on_object = [c, A](const auto& b) { return A.E(c.initial_map(b)); };
  Q.functor.on_arrow = [c, A](const auto& k) {
    return A.E_map(c.initial_map(c.dom(k)), c.initial_map(c.cod(k)), c.identity(c.initial()), k);
  };
  Q.counit = [c, A](const auto& b) { return A.rho(c.initial_map(b)); };
  Q.comult = [c, A](const auto& b) {
    const auto bang = c.initial_map(b);
    const auto qb = A.E(bang);
    const auto lam = A.lambda(bang);
    const auto comparison = A.E_map(lam, c.initial_map(qb), c.identity(c.initial()), c.identity(qb));
    return c.compose(comparison, A.comult(bang));
  };
  return Q;
}

/// A natural transformation between two comonads on the same category, with
/// a chosen inverse.
template <class C>
struct ComonadIso {
  std::function<typename C::Arrow(const typename C::Object&)> forward;
  std::function<typename C::Arrow(const typename C::Object&)> backward;
};

/// θ_B = ⟨!_PB, 1⟩: 0 + PB → PB, inverse ι_PB, for a (P-)split-epi AWFS.
template <class C>
  requires HasInitial<C> && HasCoproducts<C>
ComonadIso<C> initial_coproduct_iso(const C& c, const ComonadData<C>& P) {
  ComonadIso<C> iso;
  iso.forward = [c, P](const auto& b) {
    const auto pb = P.functor.obj(b);
    return c.copair(c.initial_map(pb), c.identity(pb));
  };
  iso.backward = [c, P](const auto& b) { return c.coproduct(c.initial(), P.functor.obj(b)).inr; };
  return iso;
}

/// Checks that θ: Q → P is an isomorphism of comonads on the fragment:
/// invertibility, naturality, counit compatibility ε^P·θ = ε^Q and
/// comultiplication compatibility Δ^P·θ = θ_P·Qθ·Δ^Q.
template <ComputableCategory C>
Report validate_comonad_iso(const C& c, const ComonadData<C>& Q, const ComonadData<C>& P, const ComonadIso<C>& theta,
                            const std::vector<typename C::Object>& fragment) {
  Report report;
  for (const auto& b : fragment) {
    const std::string at = c.show_object(b);
    auto eq = [&](const char* name, auto lhs, auto rhs) { fincat::check_arrows(report, c, name, at, lhs, rhs); };
    eq("iso.left_inverse", [&] { return c.compose(theta.backward(b), theta.forward(b)); },
       [&] { return c.identity(Q.functor.obj(b)); });
    eq("iso.right_inverse", [&] { return c.compose(theta.forward(b), theta.backward(b)); },
       [&] { return c.identity(P.functor.obj(b)); });
    eq("iso.counit", [&] { return c.compose(P.counit(b), theta.forward(b)); }, [&] { return Q.counit(b); });
    eq("iso.comult", [&] { return c.compose(P.comult(b), theta.forward(b)); },
       [&] {
         return fincat::compose_all(
             c, {theta.forward(P.functor.obj(b)), Q.functor.map(theta.forward(b)), Q.comult(b)});
       });
  }
  for (const auto& a : fragment)
    for (const auto& b : fragment) {
      CheckGroup nat(report, "iso.natural", c.show_object(a) + " -> " + c.show_object(b));
      for (const auto& k : c.hom(a, b))
        nat.arrows(
            c, [&] { return std::string(c.show(k)); },
            [&] { return c.compose(theta.forward(b), Q.functor.map(k)); },
            [&] { return c.compose(P.functor.map(k), theta.forward(a)); });
    }
  return report;
}

}  // namespace wm::awfs
