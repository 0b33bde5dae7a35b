#include "weakmaps/fincat/finset.hpp"

#include <algorithm>
#include <unordered_set>

namespace wm::fincat {

namespace {

const std::shared_ptr<const std::vector<std::string>>& empty_labels() {
  static const auto empty = std::make_shared<const std::vector<std::string>>();
  return empty;
}

}  // namespace

Set::Set() : labels_(empty_labels()) {}

Set::Set(std::vector<std::string> labels) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels)
    if (!seen.insert(l).second) throw Error("duplicate set element '" + l + "'");
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

Set Set::range(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Set(std::move(labels));
}

std::optional<std::size_t> Set::index_of(std::string_view label) const {
  const auto& ls = *labels_;
  for (std::size_t i = 0; i < ls.size(); ++i)
    if (ls[i] == label) return i;
  return std::nullopt;
}

std::string Set::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < labels_->size(); ++i) {
    if (i) out += ',';
    out += (*labels_)[i];
  }
  return out + "}";
}

Function::Function(Set d, Set c, std::vector<std::uint32_t> m)
    : dom(std::move(d)), cod(std::move(c)), map(std::move(m)) {
  if (map.size() != dom.size()) throw Error("function graph does not cover its domain");
  for (auto v : map)
    if (v >= cod.size()) throw Error("function value outside codomain");
}

Function Function::from_labels(const Set& dom, const Set& cod,
                               const std::vector<std::pair<std::string, std::string>>& graph) {
  std::vector<std::uint32_t> m(dom.size(), 0);
  std::vector<bool> set(dom.size(), false);
  for (const auto& [x, y] : graph) {
    auto i = dom.index_of(x);
    auto j = cod.index_of(y);
    if (!i || !j) throw Error("unknown element in function graph: " + x + " -> " + y);
    m[*i] = static_cast<std::uint32_t>(*j);
    set[*i] = true;
  }
  if (std::find(set.begin(), set.end(), false) != set.end())
    throw Error("function graph does not cover its domain");
  return Function(dom, cod, std::move(m));
}

std::string Function::str() const {
  std::string out = dom.str() + "->" + cod.str() + "[";
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (i) out += ',';
    out += dom.label(i) + ":" + cod.label(map[i]);
  }
  return out + "]";
}

std::vector<Function> FinSetCategory::hom(const Set& a, const Set& b) const {
  std::vector<Function> out;
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n == 0) {
    out.emplace_back(a, b, std::vector<std::uint32_t>{});
    return out;
  }
  if (m == 0) return out;
  std::vector<std::uint32_t> cur(n, 0);
  while (true) {
    out.emplace_back(a, b, cur);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++cur[i] < m) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
  }
}

Function FinSetCategory::compose(const Function& g, const Function& f) const {
  if (!(f.cod == g.dom))
    throw CompositionError("cannot compose " + g.str() + " after " + f.str());
  std::vector<std::uint32_t> m(f.map.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g.map[f.map[i]];
  return Function(f.dom, g.cod, std::move(m));
}

Function FinSetCategory::identity(const Set& a) const {
  std::vector<std::uint32_t> m(a.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint32_t>(i);
  return Function(a, a, std::move(m));
}

Function FinSetCategory::initial_map(const Set& x) const { return Function(Set{}, x, {}); }

SetCoproduct FinSetCategory::coproduct(const Set& a, const Set& b) const {
  const auto key = std::pair{a.id(), b.id()};
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->sums.find(key); it != cache_->sums.end()) return it->second.second;
  }
  std::vector<std::string> labels;
  labels.reserve(a.size() + b.size());
  for (const auto& l : a.labels()) labels.push_back("L:" + l);
  for (const auto& l : b.labels()) labels.push_back("R:" + l);
  Set sum(std::move(labels));
  std::vector<std::uint32_t> inl(a.size());
  std::vector<std::uint32_t> inr(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) inl[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < b.size(); ++i) inr[i] = static_cast<std::uint32_t>(a.size() + i);
  SetCoproduct out{sum, Function(a, sum, std::move(inl)), Function(b, sum, std::move(inr))};
  std::lock_guard lock(cache_->mutex);
  return cache_->sums.try_emplace(key, std::pair{a, b}, out).first->second.second;
}

Function FinSetCategory::copair(const Function& f, const Function& g) const {
  if (!(f.cod == g.cod))
    throw CompositionError("copairing needs a common codomain: " + f.str() + " / " + g.str());
  auto sum = coproduct(f.dom, g.dom);
  std::vector<std::uint32_t> m;
  m.reserve(f.map.size() + g.map.size());
  m.insert(m.end(), f.map.begin(), f.map.end());
  m.insert(m.end(), g.map.begin(), g.map.end());
  return Function(sum.object, f.cod, std::move(m));
}

SetPullback FinSetCategory::pullback(const Function& f, const Function& g) const {
  if (!(f.cod == g.cod)) throw CompositionError("pullback needs a cospan: " + f.str() + " / " + g.str());
  std::vector<std::string> labels;
  std::vector<std::uint32_t> p1;
  std::vector<std::uint32_t> p2;
  for (std::size_t i = 0; i < f.dom.size(); ++i)
    for (std::size_t j = 0; j < g.dom.size(); ++j)
      if (f.map[i] == g.map[j]) {
        labels.push_back("(" + f.dom.label(i) + "," + g.dom.label(j) + ")");
        p1.push_back(static_cast<std::uint32_t>(i));
        p2.push_back(static_cast<std::uint32_t>(j));
      }
  Set obj(std::move(labels));
  return {obj, Function(obj, f.dom, std::move(p1)), Function(obj, g.dom, std::move(p2))};
}

std::optional<Function> FinSetCategory::mediate(const SetPullback& pb, const Function& f,
                                                const Function& g, const Function& x1,
                                                const Function& x2) const {
  if (!(x1.dom == x2.dom) || !(x1.cod == f.dom) || !(x2.cod == g.dom))
    throw CompositionError("cone does not match the pullback legs");
  std::vector<std::uint32_t> m(x1.dom.size());
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (f.map[x1.map[x]] != g.map[x2.map[x]]) return std::nullopt;
    bool found = false;
    for (std::size_t k = 0; k < pb.object.size(); ++k) {
      if (pb.p1.map[k] == x1.map[x] && pb.p2.map[k] == x2.map[x]) {
        m[x] = static_cast<std::uint32_t>(k);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return Function(x1.dom, pb.object, std::move(m));
}

SetPullback FinSetCategory::product(const Set& a, const Set& b) const {
  const auto key = std::pair{a.id(), b.id()};
  {
    std::lock_guard lock(cache_->mutex);
    if (auto it = cache_->products.find(key); it != cache_->products.end())
      return it->second.second;
  }
  std::vector<std::string> labels;
  std::vector<std::uint32_t> p1;
  std::vector<std::uint32_t> p2;
  labels.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
      p1.push_back(static_cast<std::uint32_t>(i));
      p2.push_back(static_cast<std::uint32_t>(j));
    }
  Set obj(std::move(labels));
  SetPullback out{obj, Function(obj, a, std::move(p1)), Function(obj, b, std::move(p2))};
  std::lock_guard lock(cache_->mutex);
  return cache_->products.try_emplace(key, std::pair{a, b}, out).first->second.second;
}

Function FinSetCategory::product_map(const Function& f, const Function& g) const {
  auto src = product(f.dom, g.dom);
  auto tgt = product(f.cod, g.cod);
  const std::size_t gs = g.cod.size();
  std::vector<std::uint32_t> m(src.object.size());
  for (std::size_t k = 0; k < m.size(); ++k)
    m[k] = static_cast<std::uint32_t>(f.map[src.p1.map[k]] * gs + g.map[src.p2.map[k]]);
  return Function(src.object, tgt.object, std::move(m));
}

Function FinSetCategory::strip_initial_left(const Set& x) const {
  auto sum = coproduct(Set{}, x);
  std::vector<std::uint32_t> m(x.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = static_cast<std::uint32_t>(i);
  return Function(sum.object, x, std::move(m));
}

std::vector<Set> sets_up_to(std::size_t n) {
  std::vector<Set> out;
  for (std::size_t k = 0; k <= n; ++k) out.push_back(Set::range(k));
  return out;
}

std::vector<Function> all_functions(const FinSetCategory& c, const std::vector<Set>& objects) {
  std::vector<Function> out;
  for (const auto& a : objects)
    for (const auto& b : objects)
      for (auto& f : c.hom(a, b)) out.push_back(std::move(f));
  return out;
}

}  // namespace wm::fincat
