#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weakmaps/fincat/category.hpp"

namespace wm::fincat {

/// A finite set given by an ordered list of distinct element labels.
class Set {
 public:
  Set();
  explicit Set(std::vector<std::string> labels);

  /// The set {"0", ..., "n-1"}.
  static Set range(std::size_t n);

  [[nodiscard]] std::size_t size() const { return labels_->size(); }
  [[nodiscard]] bool empty() const { return labels_->empty(); }
  [[nodiscard]] const std::string& label(std::size_t i) const { return (*labels_)[i]; }
  [[nodiscard]] const std::vector<std::string>& labels() const { return *labels_; }
  [[nodiscard]] std::optional<std::size_t> index_of(std::string_view label) const;
  [[nodiscard]] std::string str() const;
  /// Identity of the shared label storage; equal ids imply equal sets.
  [[nodiscard]] const void* id() const { return labels_.get(); }

  friend bool operator==(const Set& a, const Set& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

/// A total function between finite sets, stored as the image index of each
/// domain element.  Equality is graph equality.
struct Function {
  Set dom;
  Set cod;
  std::vector<std::uint32_t> map;

  Function() = default;
  Function(Set d, Set c, std::vector<std::uint32_t> m);

  [[nodiscard]] std::uint32_t operator()(std::size_t i) const { return map[i]; }
  [[nodiscard]] std::string str() const;

  /// Builds a function from label pairs; throws on unknown or missing labels.
  static Function from_labels(const Set& dom, const Set& cod,
                              const std::vector<std::pair<std::string, std::string>>& graph);

  friend bool operator==(const Function& a, const Function& b) {
    return a.map == b.map && a.dom == b.dom && a.cod == b.cod;
  }
};

using SetCoproduct = Coproduct<Set, Function>;
using SetPullback = Pullback<Set, Function>;

/// The category of finite sets with canonical tagged disjoint unions ("L:x",
/// "R:y") and pullbacks realised as lexicographically ordered subsets of the
/// product ("(a,b)").
class FinSetCategory {
 public:
  using Object = Set;
  using Arrow = Function;

  /// All functions A → B in lexicographic order of their graphs.
  [[nodiscard]] std::vector<Function> hom(const Set& a, const Set& b) const;
  [[nodiscard]] Function compose(const Function& g, const Function& f) const;
  [[nodiscard]] Function identity(const Set& a) const;
  [[nodiscard]] const Set& dom(const Function& f) const { return f.dom; }
  [[nodiscard]] const Set& cod(const Function& f) const { return f.cod; }
  [[nodiscard]] bool equal(const Function& f, const Function& g) const { return f == g; }
  [[nodiscard]] bool same_object(const Set& a, const Set& b) const { return a == b; }
  [[nodiscard]] std::string show(const Function& f) const { return f.str(); }
  [[nodiscard]] std::string show_object(const Set& a) const { return a.str(); }

  [[nodiscard]] Set initial() const { return Set{}; }
  [[nodiscard]] Function initial_map(const Set& x) const;
  [[nodiscard]] SetCoproduct coproduct(const Set& a, const Set& b) const;
  [[nodiscard]] Function copair(const Function& f, const Function& g) const;

  /// {(a,b) | f(a) = g(b)} ⊆ A×B with projections.
  [[nodiscard]] SetPullback pullback(const Function& f, const Function& g) const;
  /// The unique x: X → P with p1·x = x1 and p2·x = x2, or nullopt when the
  /// cone (x1, x2) does not commute over the pullback's base.
  [[nodiscard]] std::optional<Function> mediate(const SetPullback& pb, const Function& f,
                                                const Function& g, const Function& x1,
                                                const Function& x2) const;

  /// Product A×B with labels "(a,b)", ordered a-major, and its projections.
  [[nodiscard]] SetPullback product(const Set& a, const Set& b) const;
  /// f × g : A×B → C×D.
  [[nodiscard]] Function product_map(const Function& f, const Function& g) const;

  /// The canonical bijection ∅+X → X.
  [[nodiscard]] Function strip_initial_left(const Set& x) const;

 private:
  // Chosen (co)products are memoised by the identity of their operands so that
  // repeated constructions share one label vector; equality checks then stay
  // pointer comparisons.
  struct Cache {
    std::mutex mutex;
    std::map<std::pair<const void*, const void*>, std::pair<std::pair<Set, Set>, SetCoproduct>> sums;
    std::map<std::pair<const void*, const void*>, std::pair<std::pair<Set, Set>, SetPullback>> products;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// The sets {}, {0}, ..., {0..n-1}.
std::vector<Set> sets_up_to(std::size_t n);
/// Every function between sets of the fragment, grouped by (dom, cod).
std::vector<Function> all_functions(const FinSetCategory& c, const std::vector<Set>& objects);

}  // namespace wm::fincat
