#include <doctest.h>

#include <set>
#include <tuple>

#include "weakmaps/fincat/comonad.hpp"
#include "weakmaps/fincat/finset.hpp"
#include "weakmaps/fincat/io.hpp"
#include "weakmaps/fincat/table.hpp"

using namespace wm;
using namespace wm::fincat;

namespace {

Set set_of(std::initializer_list<const char*> xs) {
  std::vector<std::string> v(xs.begin(), xs.end());
  return Set(v);
}

// The additive monoid Z/3 as a one-object table category.
TableCategory z3() {
  std::map<std::string, TableCategory::ArrowInfo> arrows;
  std::map<std::pair<std::string, std::string>, std::string> comp;
  for (int g = 0; g < 3; ++g) {
    arrows[std::to_string(g)] = {"*", "*"};
    for (int f = 0; f < 3; ++f) comp[{std::to_string(g), std::to_string(f)}] = std::to_string((g + f) % 3);
  }
  return TableCategory({"*"}, arrows, comp, {{"*", "0"}});
}

// A full subcategory of FinSet written out as a table, with the chosen
// coproduct {a}+{a} = {L:a,R:a} and initial ∅ declared.
nlohmann::json finset_table(const std::vector<Set>& objs) {
  FinSetCategory c;
  nlohmann::json j;
  std::map<std::string, std::string> ids;
  std::vector<Function> all;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < objs.size(); ++i) j["objects"].push_back("o" + std::to_string(i));
  auto obj_name = [&](const Set& s) {
    for (std::size_t i = 0; i < objs.size(); ++i)
      if (objs[i] == s) return "o" + std::to_string(i);
    return std::string("?");
  };
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (const auto& f : c.hom(a, b)) {
        names.push_back(f.str());
        all.push_back(f);
        j["arrows"].push_back({{"id", f.str()}, {"dom", obj_name(a)}, {"cod", obj_name(b)}});
      }
  for (const auto& f : all)
    for (const auto& g : all)
      if (f.cod == g.dom) j["compose"].push_back({g.str(), f.str(), c.compose(g, f).str()});
  for (const auto& a : objs) j["identities"][obj_name(a)] = c.identity(a).str();
  return j;
}

}  // namespace

TEST_CASE("finset fragment with the empty set passes the category laws") {
  FinSetCategory c;
  auto r = validate_category(c, {Set{}, set_of({"a"}), set_of({"x", "y"})});
  CHECK(r.ok());
  CHECK(r.passes() > 0);
}

TEST_CASE("empty fragment passes vacuously") {
  FinSetCategory c;
  auto r = validate_category(c, {});
  CHECK(r.ok());
  CHECK(r.checks().empty());
}

TEST_CASE("corrupted composition table is caught and the triple is named") {
  auto c = z3();
  CHECK(validate_category(c, {"*"}).ok());
  c.set_composite("1", "1", "0");
  // Oracle: brute-force every triple against the corrupted table.
  std::set<std::string> bad;
  for (const auto& f : c.hom("*", "*"))
    for (const auto& g : c.hom("*", "*"))
      for (const auto& h : c.hom("*", "*"))
        if (c.compose(c.compose(h, g), f) != c.compose(h, c.compose(g, f)))
          bad.insert("(" + h + ", " + g + ", " + f + ")");
  REQUIRE_FALSE(bad.empty());
  auto r = validate_category(c, {"*"});
  REQUIRE(r.has_failure("assoc"));
  for (const auto& chk : r.checks())
    if (chk.status == Status::Fail && chk.name == "assoc") CHECK(bad.count(chk.at) == 1);
}

TEST_CASE("hom-sets are enumerated lexicographically") {
  FinSetCategory c;
  auto h = c.hom(Set::range(2), Set::range(2));
  REQUIRE(h.size() == 4);
  CHECK(h[0].map == std::vector<std::uint32_t>{0, 0});
  CHECK(h[1].map == std::vector<std::uint32_t>{0, 1});
  CHECK(h[2].map == std::vector<std::uint32_t>{1, 0});
  CHECK(h[3].map == std::vector<std::uint32_t>{1, 1});
  CHECK(c.hom(Set{}, Set::range(3)).size() == 1);
  CHECK(c.hom(Set::range(2), Set{}).empty());
}

TEST_CASE("composition of mismatched functions throws") {
  FinSetCategory c;
  CHECK_THROWS_AS((void)c.compose(c.identity(Set::range(2)), c.identity(Set::range(3))), CompositionError);
}

TEST_CASE("coproducts") {
  FinSetCategory c;
  auto sum = c.coproduct(set_of({"a"}), set_of({"x", "y"}));
  CHECK(sum.object.size() == 3);
  CHECK(sum.object.labels() == std::vector<std::string>{"L:a", "R:x", "R:y"});

  SUBCASE("empty summand gives a recorded bijection") {
    const Set b = set_of({"x", "y"});
    auto iso = c.strip_initial_left(b);
    CHECK(iso.dom.labels() == std::vector<std::string>{"R:x", "R:y"});
    CHECK(iso.cod == b);
    CHECK(iso.map == std::vector<std::uint32_t>{0, 1});
  }

  SUBCASE("copairing with the identity") {
    const Set a = set_of({"a"});
    const Set b = set_of({"x", "y"});
    auto f = Function::from_labels(a, b, {{"a", "x"}});
    auto h = c.copair(f, c.identity(b));
    // a↦x, x↦x, y↦y
    CHECK(h.cod.label(h(*h.dom.index_of("L:a"))) == "x");
    CHECK(h.cod.label(h(*h.dom.index_of("R:x"))) == "x");
    CHECK(h.cod.label(h(*h.dom.index_of("R:y"))) == "y");
  }

  SUBCASE("injections are jointly epic") {
    const Set a = Set::range(2);
    const Set b = Set::range(1);
    auto s = c.coproduct(a, b);
    for (const auto& h1 : c.hom(s.object, Set::range(2)))
      for (const auto& h2 : c.hom(s.object, Set::range(2))) {
        const bool agree = c.compose(h1, s.inl) == c.compose(h2, s.inl) && c.compose(h1, s.inr) == c.compose(h2, s.inr);
        CHECK(agree == (h1 == h2));
      }
  }
}

TEST_CASE("pullbacks") {
  FinSetCategory c;
  SUBCASE("of identities is the diagonal") {
    const Set x = set_of({"p", "q", "r"});
    auto pb = c.pullback(c.identity(x), c.identity(x));
    CHECK(pb.object.labels() == std::vector<std::string>{"(p,p)", "(q,q)", "(r,r)"});
    CHECK(pb.p1 == pb.p2);
  }
  SUBCASE("over a point is the product") {
    const Set xy = set_of({"x", "y"});
    const Set pt = set_of({"*"});
    auto bang = Function(xy, pt, {0, 0});
    auto pb = c.pullback(bang, bang);
    CHECK(pb.object.size() == 4);
    auto med = c.mediate(pb, bang, bang, pb.p1, pb.p2);
    REQUIRE(med);
    CHECK(*med == c.identity(pb.object));
  }
  SUBCASE("non-commuting cone has no mediating map") {
    const Set two = Set::range(2);
    auto f = Function(two, two, {0, 1});
    auto g = Function(two, two, {0, 0});
    auto pb = c.pullback(f, g);
    auto x1 = Function(Set::range(1), two, {1});
    auto x2 = Function(Set::range(1), two, {0});
    CHECK_FALSE(c.mediate(pb, f, g, x1, x2));
  }
  SUBCASE("universal property against every cone at size 2") {
    const std::vector<Set> objs{Set{}, Set::range(1), Set::range(2)};
    for (const auto& a : objs)
      for (const auto& b : objs)
        for (const auto& z : objs)
          for (const auto& f : c.hom(a, z))
            for (const auto& g : c.hom(b, z)) {
              auto pb = c.pullback(f, g);
              CHECK(c.compose(f, pb.p1) == c.compose(g, pb.p2));
              for (const auto& x : objs)
                for (const auto& x1 : c.hom(x, a))
                  for (const auto& x2 : c.hom(x, b)) {
                    if (!(c.compose(f, x1) == c.compose(g, x2))) continue;
                    std::size_t n = 0;
                    for (const auto& h : c.hom(x, pb.object))
                      if (c.compose(pb.p1, h) == x1 && c.compose(pb.p2, h) == x2) ++n;
                    CHECK(n == 1);
                    auto med = c.mediate(pb, f, g, x1, x2);
                    REQUIRE(med);
                    CHECK(c.compose(pb.p1, *med) == x1);
                    CHECK(c.compose(pb.p2, *med) == x2);
                  }
            }
  }
}

TEST_CASE("comonads on FinSet") {
  FinSetCategory c;
  const std::vector<Set> frag{Set{}, Set::range(1), Set::range(2), Set::range(3)};
  const Set S = set_of({"s", "t"});

  CHECK(validate_comonad(c, identity_comonad(c), frag).ok());

  SUBCASE("coreader laws hold and agree with pointwise evaluation") {
    auto P = coreader_comonad(c, S);
    CHECK(validate_comonad(c, P, frag).ok());
    // Oracle: Δ(x,s) = ((x,s),s) and ε(x,s) = x, read off the labels.
    for (const auto& x : frag) {
      auto d = P.comult(x);
      auto e = P.counit(x);
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t k = 0; k < S.size(); ++k) {
          const std::string xs = "(" + x.label(i) + "," + S.label(k) + ")";
          const auto idx = *d.dom.index_of(xs);
          CHECK(d.cod.label(d(idx)) == "(" + xs + "," + S.label(k) + ")");
          CHECK(e.cod.label(e(idx)) == x.label(i));
        }
    }
  }

  SUBCASE("a wrong comultiplication breaks coassociativity") {
    auto P = coreader_comonad(c, S);
    auto good = P.comult;
    P.comult = [c, S, good](const Set& x) {
      auto d = good(x);
      // ((x,s),s) becomes ((x,s),swap s)
      for (auto& v : d.map) v = (v % 2 == 0) ? v + 1 : v - 1;
      return d;
    };
    // Oracle on one element: ΔP·Δ(x,s) = (((x,s),s'),s) whereas
    // PΔ·Δ(x,s) = (((x,s),s'),s'), so the two sides differ.
    auto r = validate_comonad(c, P, {Set::range(1)});
    CHECK(r.has_failure("comonad.coassoc"));
  }
}

TEST_CASE("co-Kleisli category") {
  FinSetCategory c;
  SUBCASE("identity comonad gives back FinSet") {
    CoKleisli<FinSetCategory> k(c, identity_comonad(c));
    for (std::size_t n = 0; n <= 2; ++n)
      for (std::size_t m = 0; m <= 2; ++m) {
        auto hk = k.hom(Set::range(n), Set::range(m));
        auto hc = c.hom(Set::range(n), Set::range(m));
        REQUIRE(hk.size() == hc.size());
        for (std::size_t i = 0; i < hk.size(); ++i) CHECK(hk[i].arrow == hc[i]);
      }
    for (const auto& f : c.hom(Set::range(2), Set::range(2)))
      for (const auto& g : c.hom(Set::range(2), Set::range(2)))
        CHECK(k.compose(KleisliArrow<FinSetCategory>{Set::range(2), g}, KleisliArrow<FinSetCategory>{Set::range(2), f}).arrow ==
              c.compose(g, f));
  }
  SUBCASE("coreader with two states") {
    const Set S = set_of({"s", "t"});
    CoKleisli<FinSetCategory> k(c, coreader_comonad(c, S));
    // Set({x}×S, {u,v}) has 2^2 elements.
    CHECK(k.hom(set_of({"x"}), set_of({"u", "v"})).size() == 4);
    CHECK(validate_category(k, {Set{}, Set::range(1), Set::range(2)}).ok());
  }
}

TEST_CASE("exception monad") {
  FinSetCategory c;
  const std::vector<Set> frag{Set{}, Set::range(1), Set::range(2)};
  CHECK(validate_monad(c, exception_monad(c, set_of({"e"})), frag).ok());
  CHECK(validate_monad(c, exception_monad(c, set_of({"e", "f"})), frag).ok());
  CHECK(validate_monad(c, identity_monad(c), frag).ok());
}

TEST_CASE("table categories from JSON") {
  const std::vector<Set> objs{Set{}, set_of({"a"}), set_of({"L:a", "R:a"})};
  auto j = finset_table(objs);
  FinSetCategory fs;
  auto sum = fs.coproduct(objs[1], objs[1]);
  j["limits"]["initial"] = {{"object", "o0"}, {"maps", {{"o0", fs.initial_map(objs[0]).str()},
                                                       {"o1", fs.initial_map(objs[1]).str()},
                                                       {"o2", fs.initial_map(objs[2]).str()}}}};
  j["limits"]["coproducts"].push_back({{"left", "o1"}, {"right", "o1"}, {"object", "o2"},
                                       {"inl", Function(objs[1], objs[2], {0}).str()},
                                       {"inr", Function(objs[1], objs[2], {1}).str()}});
  auto c = category_from_json(j);
  CHECK(validate_category(c, c.objects()).ok());
  CHECK(c.validate_limits().ok());
  (void)sum;

  SUBCASE("copairing is the unique mediating arrow") {
    auto id1 = c.identity("o1");
    auto h = c.copair(id1, id1);
    CHECK(c.dom(h) == "o2");
    CHECK(c.compose(h, Function(objs[1], objs[2], {0}).str()) == id1);
  }
  SUBCASE("a bogus coproduct declaration fails validation") {
    auto bad = j;
    bad["limits"]["coproducts"][0]["inr"] = Function(objs[1], objs[2], {0}).str();
    auto c2 = category_from_json(bad);
    CHECK(c2.validate_limits().has_failure("coproduct.universal"));
  }
  SUBCASE("missing coproduct is an error") {
    CHECK_THROWS_AS((void)c.coproduct("o2", "o2"), Error);
  }
  SUBCASE("missing composite is rejected at load") {
    auto bad = j;
    bad["compose"].erase(0);
    CHECK_THROWS_AS((void)category_from_json(bad), ParseError);
  }
}

TEST_CASE("builtin comonad and monad documents") {
  FinSetCategory c;
  auto P = finset_comonad_from_json(nlohmann::json::parse(R"({"builtin":{"kind":"coreader","S":["s","t"]}})"), c);
  CHECK(P.functor.obj(Set::range(2)).size() == 4);
  auto T = finset_monad_from_json(nlohmann::json::parse(R"({"kind":"exception","E":["e"]})"), c);
  CHECK(T.functor.obj(Set::range(2)).size() == 3);
  CHECK_THROWS_AS(finset_monad_from_json(nlohmann::json::parse(R"({"kind":"state"})"), c), ParseError);
}

TEST_CASE("table comonad with missing data reports an error") {
  auto c = z3();
  auto j = nlohmann::json::parse(R"({"functor":{"obj_map":{"*":"*"},"arr_map":{"0":"0","1":"1"}},
                                     "counit":{"*":"0"},"comult":{"*":"0"}})");
  auto P = table_comonad_from_json(j, c);
  CHECK_THROWS_AS(validate_comonad(c, P, {"*"}), Error);
  j["functor"]["arr_map"]["2"] = "2";
  CHECK(validate_comonad(c, table_comonad_from_json(j, c), {"*"}).ok());
}
