#include "weakmaps/spans/spans.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

namespace wm::spans {

using fincat::CheckGroup;

WeakMapCategory::WeakMapCategory(FinSetCategory c, FinAwfs A)
    : A_(std::move(A)), kl_(c, awfs::cofibrant_replacement(c, A_)) {}

WeakMapCategory weak_maps_kleisli(const FinSetCategory& c, const FinAwfs& A) { return WeakMapCategory(c, A); }

std::string ASpan::str() const {
  return "(" + left.g.str() + " | " + left.sigma.str() + ", " + right.str() + ")";
}

namespace {

// Calls `visit` on each span map s → t until it returns false.
void for_each_span_map(const ASpan& s, const ASpan& t, const std::function<bool(const Function&)>& visit,
                       bool injective = false) {
  const auto& a = s.left.g;
  const auto& f = s.right;
  const auto& b = t.left.g;
  const auto& g = t.right;
  if (!(a.cod == b.cod) || !(f.cod == g.cod) || !(s.left.sigma.dom == t.left.sigma.dom)) return;
  if (injective && a.dom.size() > b.dom.size()) return;
  const std::size_t nx = a.dom.size();
  std::vector<std::vector<std::uint32_t>> cands(nx);
  std::vector<int> forced(nx, -1);
  const auto& sa = s.left.sigma;
  const auto& sb = t.left.sigma;
  for (std::size_t y = 0; y < sa.map.size(); ++y) {
    const auto x = sa(y);
    const auto want = static_cast<int>(sb(y));
    if (forced[x] >= 0 && forced[x] != want) return;
    forced[x] = want;
  }
  for (std::size_t x = 0; x < nx; ++x) {
    if (forced[x] >= 0) {
      const auto y = static_cast<std::uint32_t>(forced[x]);
      if (b(y) != a(x) || g(y) != f(x)) return;
      cands[x].push_back(y);
      continue;
    }
    for (std::uint32_t y = 0; y < b.dom.size(); ++y)
      if (b(y) == a(x) && g(y) == f(x)) cands[x].push_back(y);
    if (cands[x].empty()) return;
  }
  std::vector<std::uint32_t> m(nx);
  std::vector<bool> used(b.dom.size(), false);
  bool go = true;
  std::function<void(std::size_t)> rec = [&](std::size_t x) {
    if (!go) return;
    if (x == nx) {
      go = visit(Function(a.dom, b.dom, m));
      return;
    }
    for (auto y : cands[x]) {
      if (injective && used[y]) continue;
      m[x] = y;
      used[y] = true;
      rec(x + 1);
      used[y] = false;
      if (!go) return;
    }
  };
  rec(0);
}

std::size_t default_apex(const WeakMapCategory& W, const Set& a, const Bounds& b) {
  return b.max_apex ? b.max_apex : W.Q().functor.obj(a).size() + 2;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t i, std::size_t j) { parent[find(i)] = find(j); }
};

bool same_span(const ASpan& s, const ASpan& t) {
  return s.left.g == t.left.g && s.left.sigma == t.left.sigma && s.right == t.right;
}

}  // namespace

bool is_span_map(const FinSetCategory& c, const ASpan& s, const ASpan& t, const Function& r) {
  if (!(r.dom == s.apex()) || !(r.cod == t.apex())) return false;
  return c.compose(t.left.g, r) == s.left.g && c.compose(t.right, r) == s.right &&
         c.compose(r, s.left.sigma) == t.left.sigma;
}

std::vector<Function> span_maps(const FinSetCategory&, const ASpan& s, const ASpan& t) {
  std::vector<Function> out;
  for_each_span_map(s, t, [&](const Function& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

std::optional<Function> find_span_map(const FinSetCategory&, const ASpan& s, const ASpan& t) {
  std::optional<Function> out;
  for_each_span_map(s, t, [&](const Function& r) {
    out = r;
    return false;
  });
  return out;
}

std::optional<Function> find_span_iso(const FinSetCategory&, const ASpan& s, const ASpan& t) {
  if (s.apex().size() != t.apex().size()) return std::nullopt;
  std::optional<Function> out;
  for_each_span_map(
      s, t,
      [&](const Function& r) {
        out = r;
        return false;
      },
      true);
  return out;
}

ASpan identity_span(const WeakMapCategory& W, const Set& a) {
  return {awfs::identity_algebra(W.base(), W.awfs(), a), W.base().identity(a)};
}

ASpan span_compose(const WeakMapCategory& W, const ASpan& s1, const ASpan& s2) {
  const auto& c = W.base();
  if (!(s1.right.cod == s2.left.g.cod))
    throw CompositionError("spans do not compose: " + s1.right.cod.str() + " vs " + s2.left.g.cod.str());
  const auto lift = awfs::cartesian_lift(c, W.awfs(), s2.left, s1.right);
  return {awfs::r_algebra_compose(c, W.awfs(), lift.algebra, s1.left), c.compose(s2.right, lift.u)};
}

ASpan kleisli_to_span(const WeakMapCategory& W, const Set& a, const Function& f) {
  const auto& c = W.base();
  if (!(f.dom == W.Q().functor.obj(a))) throw Error("kleisli_to_span: " + f.str() + " does not start at Q" + a.str());
  return {awfs::free_algebra(c, W.awfs(), c.initial_map(a)), f};
}

Function span_to_kleisli(const WeakMapCategory& W, const ASpan& s) {
  return W.base().compose(s.right, W.phi(s.left));
}

SpanShape span_shape(const WeakMapCategory&, const ASpan& s) {
  SpanShape sh;
  const auto& sigma = s.left.sigma;
  std::vector<int> block(s.apex().size(), -1);
  sh.block_of.reserve(sigma.map.size());
  for (std::size_t y = 0; y < sigma.map.size(); ++y) {
    const auto x = sigma(y);
    if (block[x] < 0) {
      block[x] = static_cast<int>(sh.block_value.size());
      sh.block_value.push_back(s.right(x));
    }
    sh.block_of.push_back(static_cast<std::uint32_t>(block[x]));
  }
  for (std::size_t x = 0; x < block.size(); ++x)
    if (block[x] < 0) sh.extras.emplace_back(s.left.g(x), s.right(x));
  std::sort(sh.extras.begin(), sh.extras.end());
  return sh;
}

ASpan span_from_shape(const WeakMapCategory& W, const Set& a, const Set& b, const SpanShape& shape) {
  const auto& P = awfs::split_comonad(W.awfs());
  const Set pa = P.functor.obj(a);
  const Function eps = P.counit(a);
  if (shape.block_of.size() != pa.size()) throw Error("span shape does not cover PA");
  const std::size_t k = shape.block_value.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("b" + std::to_string(i));
  for (std::size_t i = 0; i < shape.extras.size(); ++i) labels.push_back("x" + std::to_string(i));
  const Set X(std::move(labels));
  std::vector<std::uint32_t> g(X.size()), f(X.size());
  std::vector<bool> seen(k, false);
  for (std::size_t y = 0; y < pa.size(); ++y) {
    const auto i = shape.block_of[y];
    if (i >= k) throw Error("span shape block out of range");
    if (seen[i] && g[i] != eps(y)) throw Error("span shape block straddles two counit fibres");
    g[i] = eps(y);
    seen[i] = true;
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!seen[i]) throw Error("span shape has an empty block");
    f[i] = shape.block_value[i];
  }
  for (std::size_t i = 0; i < shape.extras.size(); ++i) {
    g[k + i] = shape.extras[i].first;
    f[k + i] = shape.extras[i].second;
  }
  return {{Function(X, a, std::move(g)), Function(pa, X, shape.block_of)}, Function(X, b, std::move(f))};
}

ASpan normalize(const WeakMapCategory& W, const ASpan& s) {
  return span_from_shape(W, s.left.g.cod, s.right.cod, span_shape(W, s));
}

std::vector<ASpan> enumerate_spans(const WeakMapCategory& W, const Set& a, const Set& b, std::size_t max_apex) {
  const auto& P = awfs::split_comonad(W.awfs());
  const Function eps = P.counit(a);
  const std::size_t n = eps.dom.size();
  const std::size_t types = a.size() * b.size();
  std::vector<ASpan> out;

  std::vector<std::uint32_t> block_of(n);
  std::vector<std::uint32_t> block_fibre;
  std::function<void(std::size_t)> partitions = [&](std::size_t y) {
    if (y == n) {
      const std::size_t k = block_fibre.size();
      if (k > 0 && b.size() == 0) return;
      std::vector<std::uint32_t> values(k, 0);
      while (true) {
        // Multisets of extra points as nondecreasing type sequences.
        for (std::size_t m = 0; k + m <= max_apex; ++m) {
          if (m > 0 && types == 0) break;
          std::vector<std::size_t> seq(m, 0);
          while (true) {
            SpanShape sh{block_of, values, {}};
            for (auto t : seq)
              sh.extras.emplace_back(static_cast<std::uint32_t>(t / b.size()), static_cast<std::uint32_t>(t % b.size()));
            out.push_back(span_from_shape(W, a, b, sh));
            std::size_t i = m;
            while (i > 0 && seq[i - 1] + 1 == types) --i;
            if (i == 0) break;
            ++seq[i - 1];
            for (std::size_t j = i; j < m; ++j) seq[j] = seq[i - 1];
          }
        }
        std::size_t i = k;
        while (i > 0 && values[i - 1] + 1 == b.size()) values[--i] = 0;
        if (i == 0) break;
        ++values[i - 1];
      }
      return;
    }
    for (std::uint32_t j = 0; j < block_fibre.size(); ++j)
      if (block_fibre[j] == eps(y)) {
        block_of[y] = j;
        partitions(y + 1);
      }
    if (block_fibre.size() < max_apex) {
      block_of[y] = static_cast<std::uint32_t>(block_fibre.size());
      block_fibre.push_back(eps(y));
      partitions(y + 1);
      block_fibre.pop_back();
    }
  };
  partitions(0);
  return out;
}

EquivResult span_equiv(const WeakMapCategory& W, const ASpan& s1, const ASpan& s2, Bounds bounds) {
  const auto& c = W.base();
  if (!(s1.left.g.cod == s2.left.g.cod) || !(s1.right.cod == s2.right.cod))
    throw Error("span_equiv: spans have different boundaries");
  if (same_span(s1, s2)) return Equivalent{};
  if (auto r = find_span_map(c, s1, s2)) return Equivalent{{{s1, s2, *r, true}}};
  if (auto r = find_span_map(c, s2, s1)) return Equivalent{{{s1, s2, *r, false}}};

  const Set& a = s1.left.g.cod;
  const Set& b = s1.right.cod;
  const std::size_t max_apex = default_apex(W, a, bounds);
  const auto reps = enumerate_spans(W, a, b, max_apex);
  NotFoundWithinBounds none{max_apex, bounds.zigzag, 0};
  if (bounds.zigzag < 2) return none;

  // A span mapping to both, then a span both map to.
  for (const auto& x : reps) {
    auto r1 = find_span_map(c, x, s1);
    if (!r1) continue;
    if (auto r2 = find_span_map(c, x, s2)) return Equivalent{{{s1, x, *r1, false}, {x, s2, *r2, true}}};
  }
  for (const auto& x : reps) {
    auto r1 = find_span_map(c, s1, x);
    if (!r1) continue;
    if (auto r2 = find_span_map(c, s2, x)) return Equivalent{{{s1, x, *r1, true}, {x, s2, *r2, false}}};
  }

  // Breadth-first over the representatives, with s1 and s2 as extra nodes.
  std::vector<ASpan> nodes{s1, s2};
  nodes.insert(nodes.end(), reps.begin(), reps.end());
  struct Edge {
    std::size_t prev;
    Function map;
    bool forward;
  };
  std::vector<std::optional<Edge>> via(nodes.size());
  std::vector<std::size_t> depth(nodes.size(), SIZE_MAX);
  depth[0] = 0;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const auto i = queue.front();
    queue.pop_front();
    ++none.explored;
    if (depth[i] == bounds.zigzag) continue;
    for (std::size_t j = 1; j < nodes.size(); ++j) {
      if (depth[j] != SIZE_MAX) continue;
      std::optional<Edge> e;
      if (auto r = find_span_map(c, nodes[i], nodes[j]))
        e = Edge{i, *r, true};
      else if (auto r2 = find_span_map(c, nodes[j], nodes[i]))
        e = Edge{i, *r2, false};
      if (!e) continue;
      depth[j] = depth[i] + 1;
      via[j] = std::move(e);
      if (j == 1) {
        std::vector<ZigzagStep> steps;
        for (std::size_t k = 1; k != 0; k = via[k]->prev)
          steps.push_back({nodes[via[k]->prev], nodes[k], via[k]->map, via[k]->forward});
        std::reverse(steps.begin(), steps.end());
        return Equivalent{std::move(steps)};
      }
      queue.push_back(j);
    }
  }
  return none;
}

Report compare_hom(const WeakMapCategory& W, const Set& a, const Set& b, Bounds bounds) {
  const auto& c = W.base();
  Report report;
  const std::string at = a.str() + " -> " + b.str();
  const std::size_t max_apex = default_apex(W, a, bounds);
  const Set qa = W.Q().functor.obj(a);
  const auto homs = c.hom(qa, b);

  bool roundtrip_ok = true;
  {
    CheckGroup g(report, "compare.roundtrip", at);
    for (const auto& f : homs)
      g.arrows(c, [&] { return f.str(); }, [&] { return span_to_kleisli(W, kleisli_to_span(W, a, f)); },
               [&] { return f; });
    roundtrip_ok = !g.failed();
  }

  const auto reps = enumerate_spans(W, a, b, max_apex);
  std::vector<Function> images;
  images.reserve(reps.size());
  for (const auto& s : reps) images.push_back(span_to_kleisli(W, s));

  bool invariance_ok = true;
  {
    CheckGroup g(report, "compare.invariance", at + " apex<=" + std::to_string(std::min<std::size_t>(max_apex, 4)));
    for (std::size_t i = 0; i < reps.size(); ++i) {
      if (reps[i].apex().size() > 4) continue;
      for (std::size_t j = 0; j < reps.size(); ++j) {
        if (reps[j].apex().size() > 4) continue;
        for_each_span_map(reps[i], reps[j], [&](const Function& r) {
          g.boolean([&] { return reps[i].str() + " -> " + reps[j].str() + " via " + r.str(); },
                    images[i] == images[j], images[i].str(), images[j].str());
          return !g.failed();
        });
      }
    }
    invariance_ok = !g.failed();
  }

  std::map<SpanShape, std::size_t> index;
  for (std::size_t i = 0; i < reps.size(); ++i) index.emplace(span_shape(W, reps[i]), i);
  UnionFind uf(reps.size());
  bool reach_ok = true;
  std::size_t inconclusive = 0;
  {
    CheckGroup g(report, "compare.reach", at + " apex<=" + std::to_string(max_apex));
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const auto canon = kleisli_to_span(W, a, images[i]);
      bool ok = is_span_map(c, canon, reps[i], W.phi(reps[i].left));
      if (!ok) {
        ok = std::holds_alternative<Equivalent>(span_equiv(W, canon, reps[i], bounds));
        if (!ok) ++inconclusive;
      }
      g.boolean([&] { return reps[i].str() + " not connected to the canonical span of " + images[i].str(); }, ok,
                "not found within bounds", "connected");
      if (ok) uf.unite(i, index.at(span_shape(W, canon)));
    }
    reach_ok = !g.failed();
  }

  std::size_t classes = 0;
  for (std::size_t i = 0; i < reps.size(); ++i)
    if (uf.find(i) == i) ++classes;
  report.check("compare.class_count", at, classes == homs.size(),
               [&] { return std::pair{std::to_string(classes), std::to_string(homs.size())}; });

  report.row("hom", {{"A", a.str()},
                     {"B", b.str()},
                     {"kleisli_count", std::to_string(homs.size())},
                     {"bounded_span_class_count", std::to_string(classes)},
                     {"spans", std::to_string(reps.size())},
                     {"max_apex", std::to_string(max_apex)},
                     {"roundtrip", roundtrip_ok ? "OK" : "FAIL"},
                     {"invariance", invariance_ok ? "OK" : "FAIL"},
                     {"reach", reach_ok ? "OK" : "FAIL"},
                     {"inconclusive", std::to_string(inconclusive)}});
  return report;
}

}  // namespace wm::spans
