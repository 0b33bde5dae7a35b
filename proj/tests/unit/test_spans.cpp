#include <doctest.h>

#include <chrono>
#include <set>
#include <tuple>

#include "weakmaps/spans/spans.hpp"

using namespace wm;
using namespace wm::fincat;
using namespace wm::awfs;
using namespace wm::spans;

namespace {

const FinSetCategory C;

Set set_of(std::initializer_list<const char*> xs) { return Set(std::vector<std::string>(xs.begin(), xs.end())); }

WeakMapCategory split_epi_weak() { return weak_maps_kleisli(C, split_epi_awfs(C, identity_comonad(C))); }
WeakMapCategory coreader_weak(std::size_t n) {
  return weak_maps_kleisli(C, p_split_epi_awfs(C, coreader_comonad(C, Set::range(n))));
}

std::string row_field(const Report& r, const std::string& key) {
  for (const auto& [table, fields] : r.rows())
    for (const auto& [k, v] : fields)
      if (k == key) return v;
  return "";
}

bool same_apex_and_legs(const ASpan& s, const ASpan& t) {
  return s.left.g == t.left.g && s.left.sigma == t.left.sigma && s.right == t.right;
}

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

}  // namespace

TEST_CASE("weak maps as a Kleisli category") {
  SUBCASE("split-epi gives FinSet back") {
    const auto W = split_epi_weak();
    for (const auto& a : sets_up_to(2))
      for (const auto& b : sets_up_to(2)) {
        const auto h = W.hom(a, b);
        CHECK(h.size() == power(b.size(), a.size()));
        // The cofree functor is a bijection on each hom-set.
        std::set<std::vector<std::uint32_t>> images;
        for (const auto& f : C.hom(a, b)) images.insert(W.cofree(f).arrow.map);
        CHECK(images.size() == h.size());
      }
    for (const auto& f : C.hom(Set::range(2), Set::range(2)))
      for (const auto& g : C.hom(Set::range(2), Set::range(2)))
        CHECK(W.equal(W.compose(W.cofree(g), W.cofree(f)), W.cofree(C.compose(g, f))));
  }
  SUBCASE("coreader with two states") {
    const auto W = coreader_weak(2);
    CHECK(W.hom(set_of({"x"}), set_of({"u", "v"})).size() == 4);
    CHECK(validate_category(W, sets_up_to(2)).ok());
    for (const auto& a : sets_up_to(2))
      for (const auto& b : sets_up_to(2)) {
        std::set<std::vector<std::uint32_t>> images;
        const auto fs = C.hom(a, b);
        for (const auto& f : fs) images.insert(W.cofree(f).arrow.map);
        CHECK(images.size() == fs.size());
      }
  }
  SUBCASE("phi splits the counit and is the counit at identities") {
    for (const auto& W : {split_epi_weak(), coreader_weak(2)}) {
      for (const auto& b : sets_up_to(2))
        CHECK(W.phi(identity_algebra(C, W.awfs(), b)) == W.Q().counit(b));
      for (const auto& alg : all_algebras(C, W.awfs(), sets_up_to(2))) {
        const auto phi = W.phi(alg);
        CHECK(C.compose(alg.g, phi) == W.Q().counit(alg.g.cod));
        // φ = σ·θ with θ = ⟨!, 1⟩: 0 + PB → PB.
        const auto theta = initial_coproduct_iso(C, *W.awfs().split_comonad).forward(alg.g.cod);
        CHECK(phi == C.compose(alg.sigma, theta));
      }
    }
  }
}

TEST_CASE("span and Kleisli round trips") {
  for (const auto& W : {split_epi_weak(), coreader_weak(2)}) {
    for (const auto& a : sets_up_to(2)) {
      const auto eps = W.Q().counit(a);
      const auto canon = kleisli_to_span(W, a, eps);
      CHECK(canon.left.g == W.awfs().rho(C.initial_map(a)));
      CHECK(span_to_kleisli(W, identity_span(W, a)) == eps);
      CHECK(span_to_kleisli(W, canon) == eps);
      for (const auto& b : sets_up_to(2))
        for (const auto& f : C.hom(W.Q().functor.obj(a), b)) CHECK(span_to_kleisli(W, kleisli_to_span(W, a, f)) == f);
    }
  }
  SUBCASE("constant map out of the coreader image") {
    const auto W = coreader_weak(2);
    const Set x = set_of({"x"});
    const Set uv = set_of({"u", "v"});
    const auto qx = W.Q().functor.obj(x);
    const auto f = Function(qx, uv, std::vector<std::uint32_t>(qx.size(), 0));
    const auto s = kleisli_to_span(W, x, f);
    CHECK(s.apex().size() == 2);
    CHECK(s.apex().labels() == std::vector<std::string>{"R:(x,0)", "R:(x,1)"});
    CHECK(s.left.sigma == C.coproduct(C.initial(), W.awfs().split_comonad->functor.obj(x)).inr);
  }
  SUBCASE("a Kleisli map with the wrong domain is rejected") {
    const auto W = coreader_weak(2);
    CHECK_THROWS_AS((void)kleisli_to_span(W, Set::range(1), C.identity(Set::range(1))), Error);
  }
}

TEST_CASE("span maps leave the Kleisli image unchanged") {
  for (const auto& W : {split_epi_weak(), coreader_weak(2)})
    for (const auto& a : sets_up_to(2))
      for (const auto& b : sets_up_to(2)) {
        const auto reps = enumerate_spans(W, a, b, 3);
        std::size_t maps = 0;
        for (const auto& s : reps)
          for (const auto& t : reps)
            for (const auto& r : span_maps(C, s, t)) {
              ++maps;
              CHECK(is_span_map(C, s, t, r));
              CHECK(span_to_kleisli(W, s) == span_to_kleisli(W, t));
            }
        if (a.size() > 0 && b.size() > 0) CHECK(maps > 0);
      }
}

TEST_CASE("enumerated spans are pairwise non-isomorphic and normal") {
  const auto W = coreader_weak(2);
  const auto reps = enumerate_spans(W, Set::range(2), Set::range(1), 4);
  std::set<SpanShape> shapes;
  for (const auto& s : reps) {
    CHECK(validate_r_algebra(C, W.awfs(), s.left).ok());
    CHECK(shapes.insert(span_shape(W, s)).second);
    const auto n = normalize(W, s);
    CHECK(n.left.g == s.left.g);
    CHECK(n.right == s.right);
  }
  // Brute-force oracle for a small case: count spans up to isomorphism by
  // enumerating every (X, g, σ, f) with |X| = 2 and merging isomorphic ones.
  const Set a = Set::range(1);
  const Set b = Set::range(2);
  const auto Pa = W.awfs().split_comonad->functor.obj(a);
  const auto eps = W.Q().counit(a);
  std::vector<ASpan> raw;
  const Set X = Set::range(2);
  for (const auto& g : C.hom(X, a))
    for (const auto& sigma : C.hom(Pa, X))
      if (C.compose(g, sigma) == W.awfs().split_comonad->counit(a))
        for (const auto& f : C.hom(X, b)) raw.push_back({{g, sigma}, f});
  std::vector<ASpan> classes;
  for (const auto& s : raw) {
    bool seen = false;
    for (const auto& t : classes) {
      for (const auto& r : span_maps(C, s, t))
        if (std::set<std::uint32_t>(r.map.begin(), r.map.end()).size() == X.size()) seen = true;
      if (seen) break;
    }
    if (!seen) classes.push_back(s);
  }
  std::size_t enumerated = 0;
  for (const auto& s : enumerate_spans(W, a, b, 2))
    if (s.apex().size() == 2) ++enumerated;
  CHECK(enumerated == classes.size());
  (void)eps;
}

TEST_CASE("span composition") {
  SUBCASE("identity spans are units up to a span map") {
    for (const auto& W : {split_epi_weak(), coreader_weak(2)})
      for (const auto& s : enumerate_spans(W, Set::range(1), Set::range(2), 3)) {
        const auto left = span_compose(W, identity_span(W, Set::range(1)), s);
        const auto right = span_compose(W, s, identity_span(W, Set::range(2)));
        CHECK(find_span_map(C, left, s));
        CHECK(find_span_map(C, right, s));
        CHECK(std::holds_alternative<Equivalent>(span_equiv(W, left, s)));
      }
  }
  SUBCASE("apex of a composite over singletons is the pullback") {
    const auto W = coreader_weak(2);
    const Set one = Set::range(1);
    for (const auto& s1 : enumerate_spans(W, one, one, 3))
      for (const auto& s2 : enumerate_spans(W, one, one, 3)) {
        // Every pair of apex points agrees over the singleton.
        CHECK(span_compose(W, s1, s2).apex().size() == s1.apex().size() * s2.apex().size());
      }
    const Set two = Set::range(2);
    for (const auto& s1 : enumerate_spans(W, one, two, 3))
      for (const auto& s2 : enumerate_spans(W, two, one, 3)) {
        std::size_t n = 0;
        for (std::size_t x = 0; x < s1.apex().size(); ++x)
          for (std::size_t y = 0; y < s2.apex().size(); ++y)
            if (s1.right(x) == s2.left.g(y)) ++n;
        CHECK(span_compose(W, s1, s2).apex().size() == n);
      }
  }
  SUBCASE("associativity up to an invertible span map") {
    const auto W = coreader_weak(2);
    const Set one = Set::range(1);
    const Set two = Set::range(2);
    const auto r1 = enumerate_spans(W, one, two, 3);
    const auto r2 = enumerate_spans(W, two, two, 4);
    const auto r3 = enumerate_spans(W, two, one, 3);
    const auto& s1 = r1.back();
    const auto& s2 = r2[r2.size() / 2];
    const auto& s3 = r3.back();
    const auto x = span_compose(W, span_compose(W, s1, s2), s3);
    const auto y = span_compose(W, s1, span_compose(W, s2, s3));
    REQUIRE(x.apex().size() == y.apex().size());
    auto m = find_span_iso(C, x, y);
    REQUIRE(m);
    CHECK(is_span_map(C, x, y, *m));
    CHECK(std::set<std::uint32_t>(m->map.begin(), m->map.end()).size() == y.apex().size());
  }
  SUBCASE("the Kleisli image of a composite is the Kleisli composite") {
    for (const auto& W : {split_epi_weak(), coreader_weak(2)}) {
      const Set one = Set::range(1);
      const Set two = Set::range(2);
      std::size_t pairs = 0;
      for (const auto& [a, b, c] : {std::tuple{one, two, one}, std::tuple{two, one, two}, std::tuple{two, two, one}})
        for (const auto& s1 : enumerate_spans(W, a, b, 3))
          for (const auto& s2 : enumerate_spans(W, b, c, 3)) {
            ++pairs;
            const auto k1 = WeakMapCategory::Arrow{a, span_to_kleisli(W, s1)};
            const auto k2 = WeakMapCategory::Arrow{b, span_to_kleisli(W, s2)};
            CHECK(span_to_kleisli(W, span_compose(W, s1, s2)) == W.compose(k2, k1).arrow);
          }
      CHECK(pairs > 100);
    }
  }
  SUBCASE("mismatched spans do not compose") {
    const auto W = coreader_weak(2);
    CHECK_THROWS_AS((void)span_compose(W, identity_span(W, Set::range(1)), identity_span(W, Set::range(2))),
                    CompositionError);
  }
}

TEST_CASE("right-connectedness as a span map") {
  for (const auto& W : {split_epi_weak(), coreader_weak(2)})
    for (const auto& alg : all_algebras(C, W.awfs(), sets_up_to(2))) {
      const ASpan s{alg, alg.g};
      CHECK(is_span_map(C, s, identity_span(W, alg.g.cod), alg.g));
    }
}

TEST_CASE("span equivalence") {
  const auto W = coreader_weak(2);
  const Set x = set_of({"x"});
  const Set uv = set_of({"u", "v"});
  SUBCASE("a span is equivalent to itself with no steps") {
    const auto s = enumerate_spans(W, x, uv, 3).back();
    auto r = span_equiv(W, s, s);
    REQUIRE(std::holds_alternative<Equivalent>(r));
    CHECK(std::get<Equivalent>(r).witness.empty());
  }
  SUBCASE("a span map gives a one-step witness") {
    const auto reps = enumerate_spans(W, x, uv, 4);
    std::size_t tried = 0;
    for (const auto& s : reps)
      for (const auto& t : reps) {
        if (&s == &t) continue;
        auto r = find_span_map(C, s, t);
        if (!r) continue;
        ++tried;
        auto e = span_equiv(W, s, t);
        REQUIRE(std::holds_alternative<Equivalent>(e));
        const auto& w = std::get<Equivalent>(e).witness;
        REQUIRE(w.size() == 1);
        CHECK(w[0].forward);
        CHECK(is_span_map(C, s, t, w[0].map));
      }
    CHECK(tried > 0);
  }
  SUBCASE("zigzags are followed") {
    // Two spans with the same image but no direct map between them.
    const auto reps = enumerate_spans(W, x, uv, 4);
    std::size_t found = 0;
    for (const auto& s : reps)
      for (const auto& t : reps) {
        if (&s == &t || find_span_map(C, s, t) || find_span_map(C, t, s)) continue;
        if (!(span_to_kleisli(W, s) == span_to_kleisli(W, t))) continue;
        auto e = span_equiv(W, s, t);
        REQUIRE(std::holds_alternative<Equivalent>(e));
        const auto& w = std::get<Equivalent>(e).witness;
        CHECK(w.size() >= 2);
        const ASpan* cur = &s;
        for (const auto& step : w) {
          CHECK(same_apex_and_legs(*cur, step.from));
          CHECK(step.forward ? is_span_map(C, step.from, step.to, step.map)
                             : is_span_map(C, step.to, step.from, step.map));
          cur = &step.to;
        }
        if (++found > 20) return;
      }
    CHECK(found > 0);
  }
  SUBCASE("distinct canonical spans are not found equivalent") {
    const auto qx = W.Q().functor.obj(x);
    const auto f = Function(qx, uv, {0, 0});
    const auto g = Function(qx, uv, {0, 1});
    const auto s = kleisli_to_span(W, x, f);
    const auto t = kleisli_to_span(W, x, g);
    CHECK_FALSE(span_to_kleisli(W, s) == span_to_kleisli(W, t));
    auto e = span_equiv(W, s, t);
    REQUIRE(std::holds_alternative<NotFoundWithinBounds>(e));
    CHECK(std::get<NotFoundWithinBounds>(e).max_apex == 4);
    CHECK(std::get<NotFoundWithinBounds>(e).zigzag == 4);
  }
}

TEST_CASE("hom comparison") {
  SUBCASE("split-epi at size 2") {
    const auto W = split_epi_weak();
    for (const auto& a : sets_up_to(2))
      for (const auto& b : sets_up_to(2)) {
        auto r = compare_hom(W, a, b);
        CHECK(r.ok());
        CHECK(row_field(r, "kleisli_count") == std::to_string(power(b.size(), a.size())));
      }
  }
  SUBCASE("coreader, singletons") {
    auto r = compare_hom(coreader_weak(2), Set::range(1), Set::range(1));
    CHECK(r.ok());
    CHECK(row_field(r, "kleisli_count") == "1");
    CHECK(row_field(r, "bounded_span_class_count") == "1");
  }
  SUBCASE("coreader, one to two with bound 6") {
    auto r = compare_hom(coreader_weak(2), Set::range(1), Set::range(2), {6, 4});
    CHECK(r.ok());
    CHECK(row_field(r, "kleisli_count") == "4");
    CHECK(row_field(r, "bounded_span_class_count") == "4");
  }
}
