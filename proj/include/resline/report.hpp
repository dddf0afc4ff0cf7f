#ifndef RESLINE_REPORT_HPP
#define RESLINE_REPORT_HPP

#include <json.hpp>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace resline {

/// Named pass/fail checks with an optional witness string.
class Report {
 public:
  struct Check {
    std::string name;
    bool passed;
    std::string detail;
  };

  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  void add(std::string name, bool passed, std::string detail = {})
  {
    checks_.push_back({std::move(name), passed, std::move(detail)});
  }

  /// Appends the checks of another report, prefixing their names.
  void merge(const Report& other, const std::string& prefix = {})
  {
    for (const auto& c : other.checks_)
      checks_.push_back({prefix + c.name, c.passed, c.detail});
  }

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }
  bool passed() const
  {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
  }
  std::size_t failures() const
  {
    return static_cast<std::size_t>(
        std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
  }
  const Check* first_failure() const
  {
    auto it = std::find_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; });
    return it == checks_.end() ? nullptr : &*it;
  }

  nlohmann::json to_json() const
  {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : checks_) {
      nlohmann::json j = {{"name", c.name}, {"passed", c.passed}};
      if (!c.detail.empty())
        j["detail"] = c.detail;
      checks.push_back(std::move(j));
    }
    return {{"title", title_}, {"passed", passed()}, {"checks", checks}};
  }

  std::string to_text() const
  {
    std::string out = title_ + ": " + (passed() ? "PASS" : "FAIL") + "\n";
    for (const auto& c : checks_) {
      out += std::string("  [") + (c.passed ? "ok" : "FAIL") + "] " + c.name;
      if (!c.detail.empty())
        out += "  (" + c.detail + ")";
      out += "\n";
    }
    return out;
  }

 private:
  std::string title_;
  std::vector<Check> checks_;
};

} // namespace resline

#endif // RESLINE_REPORT_HPP
