#include "weakmaps/report.hpp"

#include <algorithm>
#include <sstream>

namespace wm {

void Report::pass(std::string name, std::string at) {
  checks_.push_back({std::move(name), std::move(at), Status::Pass, {}, {}});
}

void Report::fail(std::string name, std::string at, std::string lhs, std::string rhs) {
  checks_.push_back({std::move(name), std::move(at), Status::Fail, std::move(lhs), std::move(rhs)});
}

void Report::exempt(std::string name, std::string at) {
  checks_.push_back({std::move(name), std::move(at), Status::TruncationExempt, {}, {}});
}

void Report::check(std::string name, std::string at, bool ok,
                   const std::function<std::pair<std::string, std::string>()>& sides) {
  if (ok) {
    pass(std::move(name), std::move(at));
    return;
  }
  auto [lhs, rhs] = sides ? sides() : std::pair<std::string, std::string>{};
  fail(std::move(name), std::move(at), std::move(lhs), std::move(rhs));
}

void Report::check(std::string name, std::string at, bool ok) {
  check(std::move(name), std::move(at), ok, {});
}

void Report::header(std::string key, std::string value) {
  header_.emplace_back(std::move(key), std::move(value));
}

void Report::row(std::string table, Row fields) {
  rows_.emplace_back(std::move(table), std::move(fields));
}

void Report::merge(const Report& other) {
  header_.insert(header_.end(), other.header_.begin(), other.header_.end());
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  rows_.insert(rows_.end(), other.rows_.begin(), other.rows_.end());
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(
      checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::Fail; }));
}

std::size_t Report::passes() const {
  return static_cast<std::size_t>(std::count_if(
      checks_.begin(), checks_.end(), [](const Check& c) { return c.status == Status::Pass; }));
}

std::size_t Report::exemptions() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(),
                    [](const Check& c) { return c.status == Status::TruncationExempt; }));
}

bool Report::has_failure(std::string_view name_prefix) const {
  return std::any_of(checks_.begin(), checks_.end(), [&](const Check& c) {
    return c.status == Status::Fail && std::string_view(c.name).substr(0, name_prefix.size()) == name_prefix;
  });
}

namespace {

std::string status_text(const Check& c) {
  switch (c.status) {
    case Status::Pass:
      return "PASS";
    case Status::TruncationExempt:
      return "TRUNCATION-EXEMPT";
    case Status::Fail:
      break;
  }
  return "FAIL(lhs=" + c.lhs + ", rhs=" + c.rhs + ")";
}

}  // namespace

std::string Report::text() const {
  std::ostringstream out;
  for (const auto& [k, v] : header_) out << "# " << k << ": " << v << '\n';
  for (const auto& c : checks_) out << "EQ " << c.name << " @ " << c.at << " : " << status_text(c) << '\n';
  for (const auto& [table, fields] : rows_) {
    out << "ROW " << table;
    for (const auto& [k, v] : fields) out << ' ' << k << '=' << v;
    out << '\n';
  }
  out << "# summary: pass=" << passes() << " fail=" << failures() << " exempt=" << exemptions() << '\n';
  return out.str();
}

nlohmann::ordered_json Report::json() const {
  nlohmann::ordered_json j;
  j["header"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : header_) j["header"][k] = v;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["at"] = c.at;
    switch (c.status) {
      case Status::Pass:
        e["status"] = "PASS";
        break;
      case Status::TruncationExempt:
        e["status"] = "TRUNCATION-EXEMPT";
        break;
      case Status::Fail:
        e["status"] = "FAIL";
        e["lhs"] = c.lhs;
        e["rhs"] = c.rhs;
        break;
    }
    j["checks"].push_back(std::move(e));
  }
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& [table, fields] : rows_) {
    nlohmann::ordered_json r;
    r["table"] = table;
    for (const auto& [k, v] : fields) r[k] = v;
    j["rows"].push_back(std::move(r));
  }
  j["summary"] = {{"pass", passes()}, {"fail", failures()}, {"exempt", exemptions()}};
  return j;
}

}  // namespace wm
