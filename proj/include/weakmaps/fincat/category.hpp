#pragma once

#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <utility>
#include <string>
#include <vector>

#include "weakmaps/report.hpp"

namespace wm::fincat {

/// A category with enumerable finite hom-sets and decidable arrow equality.
template <class C>
concept ComputableCategory = requires(const C& c, const typename C::Object& o,
                                      const typename C::Arrow& a) {
  typename C::Object;
  typename C::Arrow;
  { c.hom(o, o) } -> std::same_as<std::vector<typename C::Arrow>>;
  { c.compose(a, a) } -> std::same_as<typename C::Arrow>;
  { c.identity(o) } -> std::same_as<typename C::Arrow>;
  { c.dom(a) } -> std::convertible_to<typename C::Object>;
  { c.cod(a) } -> std::convertible_to<typename C::Object>;
  { c.equal(a, a) } -> std::same_as<bool>;
  { c.same_object(o, o) } -> std::same_as<bool>;
  { c.show(a) } -> std::convertible_to<std::string>;
  { c.show_object(o) } -> std::convertible_to<std::string>;
};

template <class Object, class Arrow>
struct Coproduct {
  Object object;
  Arrow inl;
  Arrow inr;
};

template <class Object, class Arrow>
struct Pullback {
  Object object;
  Arrow p1;
  Arrow p2;
};

/// Chosen binary coproducts with copairing ⟨f,g⟩: A+B → X.
template <class C>
concept HasCoproducts = ComputableCategory<C> && requires(const C& c, const typename C::Object& o,
                                                          const typename C::Arrow& a) {
  { c.coproduct(o, o) } -> std::same_as<Coproduct<typename C::Object, typename C::Arrow>>;
  { c.copair(a, a) } -> std::same_as<typename C::Arrow>;
};

/// Chosen initial object with its unique maps.
template <class C>
concept HasInitial = ComputableCategory<C> && requires(const C& c, const typename C::Object& o) {
  { c.initial() } -> std::convertible_to<typename C::Object>;
  { c.initial_map(o) } -> std::same_as<typename C::Arrow>;
};

/// f + g : A+B → C+D, built from copairing.
template <HasCoproducts C>
typename C::Arrow coproduct_map(const C& c, const typename C::Arrow& f, const typename C::Arrow& g) {
  auto target = c.coproduct(c.cod(f), c.cod(g));
  return c.copair(c.compose(target.inl, f), c.compose(target.inr, g));
}

/// Composes a chain right-to-left: compose_all(c, {h, g, f}) = h·g·f.
template <ComputableCategory C>
typename C::Arrow compose_all(const C& c, std::initializer_list<typename C::Arrow> arrows) {
  auto it = std::rbegin(arrows);
  typename C::Arrow acc = *it;
  for (++it; it != std::rend(arrows); ++it) acc = c.compose(*it, acc);
  return acc;
}

/// Evaluates `lhs()` and `rhs()` and records whether they agree.  Ill-typed
/// composites are recorded as failures rather than propagated.
template <ComputableCategory C, class L, class R>
void check_arrows(Report& report, const C& c, std::string name, std::string at, L&& lhs, R&& rhs) {
  try {
    auto l = lhs();
    auto r = rhs();
    const bool ok = c.equal(l, r);
    report.check(std::move(name), std::move(at), ok,
                 [&] { return std::pair{std::string(c.show(l)), std::string(c.show(r))}; });
  } catch (const CompositionError& e) {
    report.fail(std::move(name), std::move(at), std::string("ill-typed: ") + e.what(), "-");
  }
}

/// Aggregates many instances of one equation into a single report line: PASS
/// with the instance count, or FAIL naming the first violating instance.
class CheckGroup {
 public:
  CheckGroup(Report& report, std::string name, std::string at)
      : report_(report), name_(std::move(name)), at_(std::move(at)) {}
  CheckGroup(const CheckGroup&) = delete;
  CheckGroup& operator=(const CheckGroup&) = delete;
  ~CheckGroup() { finish(); }

  /// `witness` is a callable producing the instance description; it is only
  /// invoked on failure.
  template <ComputableCategory C, class W, class L, class R>
  void arrows(const C& c, W&& witness, L&& lhs, R&& rhs) {
    ++count_;
    if (failed_) return;
    try {
      auto l = lhs();
      auto r = rhs();
      if (!c.equal(l, r)) record(witness(), c.show(l), c.show(r));
    } catch (const CompositionError& e) {
      record(witness(), std::string("ill-typed: ") + e.what(), "-");
    }
  }

  template <class W>
  void boolean(W&& witness, bool ok, const std::string& lhs = "false",
               const std::string& rhs = "true") {
    ++count_;
    if (!failed_ && !ok) record(witness(), lhs, rhs);
  }

  void finish() {
    if (done_) return;
    done_ = true;
    if (failed_)
      report_.fail(name_, witness_, lhs_, rhs_);
    else
      report_.pass(name_, at_ + " [n=" + std::to_string(count_) + "]");
  }

  [[nodiscard]] bool failed() const { return failed_; }

 private:
  void record(const std::string& witness, std::string lhs, std::string rhs) {
    failed_ = true;
    witness_ = witness;
    lhs_ = std::move(lhs);
    rhs_ = std::move(rhs);
  }

  Report& report_;
  std::string name_;
  std::string at_;
  std::size_t count_ = 0;
  bool failed_ = false;
  bool done_ = false;
  std::string witness_;
  std::string lhs_;
  std::string rhs_;
};

/// Checks unit and associativity laws on every composable pair/triple among
/// the fragment objects.  One line per object pair (units) and per object
/// quadruple (associativity); a failure names the offending arrows.
template <ComputableCategory C>
Report validate_category(const C& c, const std::vector<typename C::Object>& fragment) {
  Report report;
  for (const auto& a : fragment) {
    for (const auto& b : fragment) {
      const auto homs = c.hom(a, b);
      const std::string at = c.show_object(a) + " -> " + c.show_object(b);
      CheckGroup left(report, "unit.left", at);
      CheckGroup right(report, "unit.right", at);
      for (const auto& f : homs) {
        auto w = [&] { return std::string(c.show(f)); };
        left.arrows(c, w, [&] { return c.compose(c.identity(b), f); }, [&] { return f; });
        right.arrows(c, w, [&] { return c.compose(f, c.identity(a)); }, [&] { return f; });
      }
    }
  }
  for (const auto& a : fragment)
    for (const auto& b : fragment)
      for (const auto& x : fragment)
        for (const auto& d : fragment) {
          const auto fs = c.hom(a, b);
          const auto gs = c.hom(b, x);
          const auto hs = c.hom(x, d);
          CheckGroup assoc(report, "assoc",
                           c.show_object(a) + " -> " + c.show_object(b) + " -> " +
                               c.show_object(x) + " -> " + c.show_object(d));
          for (const auto& f : fs)
            for (const auto& g : gs)
              for (const auto& h : hs) {
                assoc.arrows(
                    c, [&] { return "(" + c.show(h) + ", " + c.show(g) + ", " + c.show(f) + ")"; },
                    [&] { return c.compose(c.compose(h, g), f); },
                    [&] { return c.compose(h, c.compose(g, f)); });
              }
        }
  return report;
}

}  // namespace wm::fincat
