#include "weakmaps/fincat/comonad.hpp"

namespace wm::fincat {

ComonadData<FinSetCategory> identity_comonad(const FinSetCategory& c) {
  ComonadData<FinSetCategory> P;
  P.functor.name = "Id";
  P.functor.on_object = [](const Set& x) { return x; };
  P.functor.on_arrow = [](const Function& f) { return f; };
  P.counit = [c](const Set& x) { return c.identity(x); };
  P.comult = [c](const Set& x) { return c.identity(x); };
  return P;
}

ComonadData<FinSetCategory> coreader_comonad(const FinSetCategory& c, const Set& S) {
  ComonadData<FinSetCategory> P;
  P.functor.name = "Coreader";
  P.functor.on_object = [c, S](const Set& x) { return c.product(x, S).object; };
  P.functor.on_arrow = [c, S](const Function& f) { return c.product_map(f, c.identity(S)); };
  P.counit = [c, S](const Set& x) { return c.product(x, S).p1; };
  P.comult = [c, S](const Set& x) {
    const auto px = c.product(x, S);
    const auto ppx = c.product(px.object, S);
    std::vector<std::uint32_t> m(px.object.size());
    for (std::size_t k = 0; k < m.size(); ++k)
      m[k] = static_cast<std::uint32_t>(k * S.size() + px.p2(k));
    return Function(px.object, ppx.object, std::move(m));
  };
  return P;
}

MonadData<FinSetCategory> identity_monad(const FinSetCategory& c) {
  MonadData<FinSetCategory> T;
  T.functor.name = "Id";
  T.functor.on_object = [](const Set& x) { return x; };
  T.functor.on_arrow = [](const Function& f) { return f; };
  T.unit = [c](const Set& x) { return c.identity(x); };
  T.mult = [c](const Set& x) { return c.identity(x); };
  return T;
}

MonadData<FinSetCategory> exception_monad(const FinSetCategory& c, const Set& E) {
  MonadData<FinSetCategory> T;
  T.functor.name = "Exception";
  T.functor.on_object = [c, E](const Set& x) { return c.coproduct(x, E).object; };
  T.functor.on_arrow = [c, E](const Function& f) { return coproduct_map(c, f, c.identity(E)); };
  T.unit = [c, E](const Set& x) { return c.coproduct(x, E).inl; };
  T.mult = [c, E](const Set& x) {
    const auto tx = c.coproduct(x, E);
    return c.copair(c.identity(tx.object), tx.inr);
  };
  return T;
}

}  // namespace wm::fincat
