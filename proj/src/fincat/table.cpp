#include "weakmaps/fincat/table.hpp"

#include <algorithm>

namespace wm::fincat {

TableCategory::TableCategory(std::vector<std::string> objects, std::map<std::string, ArrowInfo> arrows,
                             std::map<std::pair<std::string, std::string>, std::string> composites,
                             std::map<std::string, std::string> identities)
    : objects_(std::move(objects)),
      arrows_(std::move(arrows)),
      composites_(std::move(composites)),
      identities_(std::move(identities)) {
  for (const auto& [id, info] : arrows_) {
    require_object(info.dom);
    require_object(info.cod);
    homs_[{info.dom, info.cod}].push_back(id);
  }
  for (const auto& o : objects_) {
    auto it = identities_.find(o);
    if (it == identities_.end()) throw Error("no identity declared for object '" + o + "'");
    auto a = arrows_.find(it->second);
    if (a == arrows_.end() || a->second.dom != o || a->second.cod != o)
      throw Error("identity of '" + o + "' is not an endo-arrow of it");
  }
  for (const auto& [gf, h] : composites_) {
    const auto& [g, f] = gf;
    if (!has_arrow(g) || !has_arrow(f) || !has_arrow(h))
      throw Error("composition table mentions an unknown arrow: " + g + " . " + f);
    if (arrows_.at(f).cod != arrows_.at(g).dom)
      throw Error("composition table entry for non-composable pair " + g + " . " + f);
    if (arrows_.at(h).dom != arrows_.at(f).dom || arrows_.at(h).cod != arrows_.at(g).cod)
      throw Error("composite " + h + " of " + g + " . " + f + " has the wrong boundary");
  }
  for (const auto& [fid, finfo] : arrows_)
    for (const auto& [gid, ginfo] : arrows_)
      if (finfo.cod == ginfo.dom && !composites_.count({gid, fid}))
        throw Error("composition table has no entry for " + gid + " . " + fid);
}

bool TableCategory::has_object(const std::string& o) const {
  return std::find(objects_.begin(), objects_.end(), o) != objects_.end();
}

void TableCategory::require_object(const Object& o) const {
  if (!has_object(o)) throw Error("unknown object '" + o + "'");
}

std::vector<TableCategory::Arrow> TableCategory::hom(const Object& a, const Object& b) const {
  require_object(a);
  require_object(b);
  auto it = homs_.find({a, b});
  return it == homs_.end() ? std::vector<Arrow>{} : it->second;
}

TableCategory::Arrow TableCategory::compose(const Arrow& g, const Arrow& f) const {
  if (cod(f) != dom(g)) throw CompositionError("cannot compose " + g + " after " + f);
  return composites_.at({g, f});
}

TableCategory::Arrow TableCategory::identity(const Object& a) const {
  require_object(a);
  return identities_.at(a);
}

const TableCategory::Object& TableCategory::dom(const Arrow& f) const {
  auto it = arrows_.find(f);
  if (it == arrows_.end()) throw Error("unknown arrow '" + f + "'");
  return it->second.dom;
}

const TableCategory::Object& TableCategory::cod(const Arrow& f) const {
  auto it = arrows_.find(f);
  if (it == arrows_.end()) throw Error("unknown arrow '" + f + "'");
  return it->second.cod;
}

void TableCategory::set_composite(const Arrow& g, const Arrow& f, const Arrow& gf) {
  auto it = composites_.find({g, f});
  if (it == composites_.end()) throw Error("no composite " + g + " . " + f + " to overwrite");
  if (dom(gf) != dom(f) || cod(gf) != cod(g)) throw Error("replacement composite has the wrong boundary");
  it->second = gf;
}

TableCategory::Object TableCategory::initial() const {
  if (!initial_) throw Error("table category declares no initial object");
  return initial_->object;
}

TableCategory::Arrow TableCategory::initial_map(const Object& x) const {
  if (!initial_) throw Error("table category declares no initial object");
  auto it = initial_->maps.find(x);
  if (it == initial_->maps.end()) throw Error("no declared initial map into '" + x + "'");
  return it->second;
}

Coproduct<TableCategory::Object, TableCategory::Arrow> TableCategory::coproduct(const Object& a,
                                                                                 const Object& b) const {
  for (const auto& c : coproducts_)
    if (c.left == a && c.right == b) return {c.object, c.inl, c.inr};
  throw Error("table category declares no coproduct of '" + a + "' and '" + b + "'");
}

TableCategory::Arrow TableCategory::copair(const Arrow& f, const Arrow& g) const {
  if (cod(f) != cod(g)) throw CompositionError("copairing needs a common codomain: " + f + " / " + g);
  auto sum = coproduct(dom(f), dom(g));
  std::optional<Arrow> found;
  for (const auto& h : hom(sum.object, cod(f))) {
    if (compose(h, sum.inl) == f && compose(h, sum.inr) == g) {
      if (found) throw Error("declared coproduct has two copairings of " + f + " and " + g);
      found = h;
    }
  }
  if (!found) throw Error("declared coproduct has no copairing of " + f + " and " + g);
  return *found;
}

Pullback<TableCategory::Object, TableCategory::Arrow> TableCategory::pullback(const Arrow& f,
                                                                               const Arrow& g) const {
  for (const auto& p : pullbacks_)
    if (p.f == f && p.g == g) return {p.object, p.p1, p.p2};
  throw Error("table category declares no pullback of " + f + " and " + g);
}

Report TableCategory::validate_limits() const {
  Report report;
  if (initial_) {
    CheckGroup group(report, "initial.unique", initial_->object);
    for (const auto& x : objects_) {
      const auto maps = hom(initial_->object, x);
      const auto declared = initial_->maps.find(x);
      const bool ok = maps.size() == 1 && declared != initial_->maps.end() && declared->second == maps[0];
      group.boolean([&] { return x; }, ok, std::to_string(maps.size()) + " maps", "1 declared map");
    }
  }
  for (const auto& c : coproducts_) {
    CheckGroup group(report, "coproduct.universal", c.left + " + " + c.right);
    group.boolean([&] { return c.inl + "/" + c.inr; },
                  dom(c.inl) == c.left && cod(c.inl) == c.object && dom(c.inr) == c.right &&
                      cod(c.inr) == c.object,
                  "injections mistyped", "typed injections");
    for (const auto& x : objects_)
      for (const auto& f : hom(c.left, x))
        for (const auto& g : hom(c.right, x)) {
          std::size_t n = 0;
          for (const auto& h : hom(c.object, x))
            if (compose(h, c.inl) == f && compose(h, c.inr) == g) ++n;
          group.boolean([&] { return "(" + f + ", " + g + ")"; }, n == 1,
                        std::to_string(n) + " mediating arrows", "1");
        }
  }
  for (const auto& p : pullbacks_) {
    CheckGroup group(report, "pullback.universal", p.f + " x " + p.g);
    const auto& a = dom(p.f);
    const auto& b = dom(p.g);
    group.boolean([&] { return p.p1 + "/" + p.p2; },
                  cod(p.f) == cod(p.g) && dom(p.p1) == p.object && cod(p.p1) == a &&
                      dom(p.p2) == p.object && cod(p.p2) == b &&
                      compose(p.f, p.p1) == compose(p.g, p.p2),
                  "square does not commute", "commuting square");
    if (group.failed()) continue;
    for (const auto& x : objects_)
      for (const auto& x1 : hom(x, a))
        for (const auto& x2 : hom(x, b)) {
          if (compose(p.f, x1) != compose(p.g, x2)) continue;
          std::size_t n = 0;
          for (const auto& h : hom(x, p.object))
            if (compose(p.p1, h) == x1 && compose(p.p2, h) == x2) ++n;
          group.boolean([&] { return "(" + x1 + ", " + x2 + ")"; }, n == 1,
                        std::to_string(n) + " mediating arrows", "1");
        }
  }
  return report;
}

}  // namespace wm::fincat
