#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weakmaps/fincat/category.hpp"

namespace wm::fincat {

/// A finite category given by explicit tables.  Objects and arrows are
/// identifier strings; arrow equality is identifier equality.
///
/// Limits are never searched for.  A table may declare an initial object,
/// binary coproducts and pullbacks; `validate_limits` checks their universal
/// properties against every cone in the table.
class TableCategory {
 public:
  using Object = std::string;
  using Arrow = std::string;

  struct ArrowInfo {
    std::string dom;
    std::string cod;
  };
  struct DeclaredCoproduct {
    std::string left, right, object, inl, inr;
  };
  struct DeclaredPullback {
    std::string f, g, object, p1, p2;
  };
  struct DeclaredInitial {
    std::string object;
    std::map<std::string, std::string> maps;
  };

  TableCategory(std::vector<std::string> objects, std::map<std::string, ArrowInfo> arrows,
                std::map<std::pair<std::string, std::string>, std::string> composites,
                std::map<std::string, std::string> identities);

  [[nodiscard]] const std::vector<std::string>& objects() const { return objects_; }
  [[nodiscard]] bool has_object(const std::string& o) const;
  [[nodiscard]] bool has_arrow(const std::string& a) const { return arrows_.count(a) != 0; }

  [[nodiscard]] std::vector<Arrow> hom(const Object& a, const Object& b) const;
  [[nodiscard]] Arrow compose(const Arrow& g, const Arrow& f) const;
  [[nodiscard]] Arrow identity(const Object& a) const;
  [[nodiscard]] const Object& dom(const Arrow& f) const;
  [[nodiscard]] const Object& cod(const Arrow& f) const;
  [[nodiscard]] bool equal(const Arrow& f, const Arrow& g) const { return f == g; }
  [[nodiscard]] bool same_object(const Object& a, const Object& b) const { return a == b; }
  [[nodiscard]] std::string show(const Arrow& f) const { return f; }
  [[nodiscard]] std::string show_object(const Object& a) const { return a; }

  /// Overwrites one composition-table entry; used to build corrupted tables.
  void set_composite(const Arrow& g, const Arrow& f, const Arrow& gf);

  void declare_initial(DeclaredInitial init) { initial_ = std::move(init); }
  void declare_coproduct(DeclaredCoproduct c) { coproducts_.push_back(std::move(c)); }
  void declare_pullback(DeclaredPullback p) { pullbacks_.push_back(std::move(p)); }

  [[nodiscard]] bool has_initial() const { return initial_.has_value(); }
  /// Throws Error when no initial object was declared.
  [[nodiscard]] Object initial() const;
  [[nodiscard]] Arrow initial_map(const Object& x) const;
  /// The declared coproduct of (a, b); throws Error when none is declared.
  [[nodiscard]] Coproduct<Object, Arrow> coproduct(const Object& a, const Object& b) const;
  /// The unique arrow h with h·inl = f, h·inr = g, found among the declared
  /// coproduct's hom-set.
  [[nodiscard]] Arrow copair(const Arrow& f, const Arrow& g) const;
  [[nodiscard]] Pullback<Object, Arrow> pullback(const Arrow& f, const Arrow& g) const;

  /// Checks the universal property of every declared limit.
  [[nodiscard]] Report validate_limits() const;

 private:
  void require_object(const Object& o) const;

  std::vector<std::string> objects_;
  std::map<std::string, ArrowInfo> arrows_;
  std::map<std::pair<std::string, std::string>, std::string> composites_;
  std::map<std::string, std::string> identities_;
  std::map<std::pair<std::string, std::string>, std::vector<std::string>> homs_;
  std::optional<DeclaredInitial> initial_;
  std::vector<DeclaredCoproduct> coproducts_;
  std::vector<DeclaredPullback> pullbacks_;
};

}  // namespace wm::fincat
