#pragma once

#include <functional>
#include <string>
#include <vector>

#include "weakmaps/fincat/category.hpp"
#include "weakmaps/fincat/finset.hpp"

namespace wm::fincat {

/// An endofunctor given by its object and arrow maps.  Either map may throw
/// Error when data for an object or arrow is missing.
template <class C>
struct FunctorData {
  std::string name;
  std::function<typename C::Object(const typename C::Object&)> on_object;
  std::function<typename C::Arrow(const typename C::Arrow&)> on_arrow;

  typename C::Object obj(const typename C::Object& o) const { return on_object(o); }
  typename C::Arrow map(const typename C::Arrow& a) const { return on_arrow(a); }
};

/// P with counit ε: PA → A and comultiplication Δ: PA → PPA.
template <class C>
struct ComonadData {
  FunctorData<C> functor;
  std::function<typename C::Arrow(const typename C::Object&)> counit;
  std::function<typename C::Arrow(const typename C::Object&)> comult;
};

/// T with unit η: A → TA and multiplication μ: TTA → TA.
template <class C>
struct MonadData {
  FunctorData<C> functor;
  std::function<typename C::Arrow(const typename C::Object&)> unit;
  std::function<typename C::Arrow(const typename C::Object&)> mult;
};

/// Identity and composition preservation on every arrow of the fragment.
template <ComputableCategory C>
void validate_functor(Report& report, const C& c, const FunctorData<C>& F,
                      const std::vector<typename C::Object>& fragment) {
  for (const auto& a : fragment) {
    check_arrows(report, c, F.name + ".identity", c.show_object(a),
                 [&] { return F.map(c.identity(a)); }, [&] { return c.identity(F.obj(a)); });
  }
  for (const auto& a : fragment)
    for (const auto& b : fragment)
      for (const auto& x : fragment) {
        CheckGroup group(report, F.name + ".composition",
                         c.show_object(a) + " -> " + c.show_object(b) + " -> " + c.show_object(x));
        for (const auto& f : c.hom(a, b))
          for (const auto& g : c.hom(b, x))
            group.arrows(
                c, [&] { return "(" + c.show(g) + ", " + c.show(f) + ")"; },
                [&] { return F.map(c.compose(g, f)); }, [&] { return c.compose(F.map(g), F.map(f)); });
      }
}

/// Functoriality, naturality of ε and Δ, both counit laws and coassociativity
/// on the fragment.
template <ComputableCategory C>
Report validate_comonad(const C& c, const ComonadData<C>& P,
                        const std::vector<typename C::Object>& fragment) {
  Report report;
  const auto& F = P.functor;
  validate_functor(report, c, F, fragment);
  for (const auto& a : fragment) {
    const std::string at = c.show_object(a);
    check_arrows(report, c, "comonad.counit.left", at,
                 [&] { return c.compose(P.counit(F.obj(a)), P.comult(a)); },
                 [&] { return c.identity(F.obj(a)); });
    check_arrows(report, c, "comonad.counit.right", at,
                 [&] { return c.compose(F.map(P.counit(a)), P.comult(a)); },
                 [&] { return c.identity(F.obj(a)); });
    check_arrows(report, c, "comonad.coassoc", at,
                 [&] { return c.compose(P.comult(F.obj(a)), P.comult(a)); },
                 [&] { return c.compose(F.map(P.comult(a)), P.comult(a)); });
  }
  for (const auto& a : fragment)
    for (const auto& b : fragment) {
      const std::string at = c.show_object(a) + " -> " + c.show_object(b);
      CheckGroup counit(report, "comonad.counit.natural", at);
      CheckGroup comult(report, "comonad.comult.natural", at);
      for (const auto& f : c.hom(a, b)) {
        auto w = [&] { return std::string(c.show(f)); };
        counit.arrows(c, w, [&] { return c.compose(P.counit(b), F.map(f)); },
                      [&] { return c.compose(f, P.counit(a)); });
        comult.arrows(c, w, [&] { return c.compose(P.comult(b), F.map(f)); },
                      [&] { return c.compose(F.map(F.map(f)), P.comult(a)); });
      }
    }
  return report;
}

/// Dual of validate_comonad.
template <ComputableCategory C>
Report validate_monad(const C& c, const MonadData<C>& T, const std::vector<typename C::Object>& fragment) {
  Report report;
  const auto& F = T.functor;
  validate_functor(report, c, F, fragment);
  for (const auto& a : fragment) {
    const std::string at = c.show_object(a);
    check_arrows(report, c, "monad.unit.left", at, [&] { return c.compose(T.mult(a), T.unit(F.obj(a))); },
                 [&] { return c.identity(F.obj(a)); });
    check_arrows(report, c, "monad.unit.right", at, [&] { return c.compose(T.mult(a), F.map(T.unit(a))); },
                 [&] { return c.identity(F.obj(a)); });
    check_arrows(report, c, "monad.assoc", at, [&] { return c.compose(T.mult(a), T.mult(F.obj(a))); },
                 [&] { return c.compose(T.mult(a), F.map(T.mult(a))); });
  }
  for (const auto& a : fragment)
    for (const auto& b : fragment) {
      const std::string at = c.show_object(a) + " -> " + c.show_object(b);
      CheckGroup unit(report, "monad.unit.natural", at);
      CheckGroup mult(report, "monad.mult.natural", at);
      for (const auto& f : c.hom(a, b)) {
        auto w = [&] { return std::string(c.show(f)); };
        unit.arrows(c, w, [&] { return c.compose(T.unit(b), f); },
                    [&] { return c.compose(F.map(f), T.unit(a)); });
        mult.arrows(c, w, [&] { return c.compose(T.mult(b), F.map(F.map(f))); },
                    [&] { return c.compose(F.map(f), T.mult(a)); });
      }
    }
  return report;
}

/// An arrow A ⇝ B of the co-Kleisli category: an arrow PA → B of the base,
/// together with its nominal domain A.
template <class C>
struct KleisliArrow {
  typename C::Object dom;
  typename C::Arrow arrow;
};

/// The co-Kleisli category of a comonad: composite of f: PA→B and g: PB→C is
/// g·Pf·Δ_A, identities are counits.
template <ComputableCategory C>
class CoKleisli {
 public:
  using Object = typename C::Object;
  using Arrow = KleisliArrow<C>;

  CoKleisli(C base, ComonadData<C> P) : base_(std::move(base)), P_(std::move(P)) {}

  [[nodiscard]] const C& base() const { return base_; }
  [[nodiscard]] const ComonadData<C>& comonad() const { return P_; }

  [[nodiscard]] std::vector<Arrow> hom(const Object& a, const Object& b) const {
    std::vector<Arrow> out;
    for (auto& f : base_.hom(P_.functor.obj(a), b)) out.push_back({a, std::move(f)});
    return out;
  }
  [[nodiscard]] Arrow compose(const Arrow& g, const Arrow& f) const {
    if (!base_.same_object(cod(f), g.dom))
      throw CompositionError("cannot compose " + show(g) + " after " + show(f));
    return {f.dom, compose_all(base_, {g.arrow, P_.functor.map(f.arrow), P_.comult(f.dom)})};
  }
  [[nodiscard]] Arrow identity(const Object& a) const { return {a, P_.counit(a)}; }
  [[nodiscard]] Object dom(const Arrow& f) const { return f.dom; }
  [[nodiscard]] Object cod(const Arrow& f) const { return base_.cod(f.arrow); }
  [[nodiscard]] bool equal(const Arrow& f, const Arrow& g) const {
    return base_.same_object(f.dom, g.dom) && base_.equal(f.arrow, g.arrow);
  }
  [[nodiscard]] bool same_object(const Object& a, const Object& b) const { return base_.same_object(a, b); }
  [[nodiscard]] std::string show(const Arrow& f) const { return "kl" + base_.show(f.arrow); }
  [[nodiscard]] std::string show_object(const Object& a) const { return base_.show_object(a); }

  /// The cofree functor C → Kl(P): f ↦ f·ε.
  [[nodiscard]] Arrow cofree(const typename C::Arrow& f) const {
    return {base_.dom(f), base_.compose(f, P_.counit(base_.dom(f)))};
  }

 private:
  C base_;
  ComonadData<C> P_;
};

// FinSet builtins.

ComonadData<FinSetCategory> identity_comonad(const FinSetCategory& c);
/// P(X) = X×S with (x,s) ordered x-major; ε the projection, Δ(x,s) = ((x,s),s).
ComonadData<FinSetCategory> coreader_comonad(const FinSetCategory& c, const Set& S);
MonadData<FinSetCategory> identity_monad(const FinSetCategory& c);
/// T(X) = X+E; η the left injection, μ = ⟨1, ι_E⟩.
MonadData<FinSetCategory> exception_monad(const FinSetCategory& c, const Set& E);

}  // namespace wm::fincat
