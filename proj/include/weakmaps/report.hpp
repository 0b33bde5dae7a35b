#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace wm {

/// Base error for malformed inputs and violated preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Composition of arrows whose boundaries do not match.
class CompositionError : public Error {
 public:
  using Error::Error;
};

/// Input file does not parse against its schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

enum class Status { Pass, Fail, TruncationExempt };

struct Check {
  std::string name;
  std::string at;
  Status status = Status::Pass;
  std::string lhs;
  std::string rhs;
};

/// Ordered list of equation checks plus free-form rows.
///
/// Text form is one line per check:
///   EQ <name> @ <at> : PASS | FAIL(lhs=..., rhs=...) | TRUNCATION-EXEMPT
/// and the JSON form carries the same information.
class Report {
 public:
  using Row = std::vector<std::pair<std::string, std::string>>;

  void pass(std::string name, std::string at);
  void fail(std::string name, std::string at, std::string lhs, std::string rhs);
  void exempt(std::string name, std::string at);

  /// Records PASS when `ok`, otherwise FAIL with the lazily rendered sides.
  void check(std::string name, std::string at, bool ok,
             const std::function<std::pair<std::string, std::string>()>& sides);
  void check(std::string name, std::string at, bool ok);

  void header(std::string key, std::string value);
  void row(std::string table, Row fields);
  /// Appends the header, checks and rows of `other`.
  void merge(const Report& other);

  [[nodiscard]] const std::vector<Check>& checks() const { return checks_; }
  [[nodiscard]] const std::vector<std::pair<std::string, Row>>& rows() const { return rows_; }
  [[nodiscard]] std::size_t failures() const;
  [[nodiscard]] std::size_t passes() const;
  [[nodiscard]] std::size_t exemptions() const;
  [[nodiscard]] bool ok() const { return failures() == 0; }
  [[nodiscard]] bool has_failure(std::string_view name_prefix) const;

  [[nodiscard]] std::string text() const;
  [[nodiscard]] nlohmann::ordered_json json() const;

 private:
  std::vector<std::pair<std::string, std::string>> header_;
  std::vector<Check> checks_;
  std::vector<std::pair<std::string, Row>> rows_;
};

}  // namespace wm
