#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace geodouble {

/// Output of one CLI invocation. Rendered either as aligned plain text or as
/// line-oriented key=value records; both are deterministic in field order.
class ReportDocument {
 public:
  struct Assertion {
    std::string claim;
    std::string anchor;
    bool pass = false;
    std::string detail;
  };

  explicit ReportDocument(std::string command) : command_(std::move(command)) {}

  void field(std::string key, std::string value) { fields_.emplace_back(std::move(key), std::move(value)); }

  void check(std::string claim, std::string anchor, bool pass, std::string detail = {}) {
    assertions_.push_back({std::move(claim), std::move(anchor), pass, std::move(detail)});
  }

  /// Starts a table; later rows must have the same number of cells.
  void table(std::string name, std::vector<std::string> header) {
    table_name_ = std::move(name);
    header_ = std::move(header);
    rows_.clear();
  }
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  void line(std::string text) { lines_.push_back(std::move(text)); }

  [[nodiscard]] bool passed() const {
    return std::all_of(assertions_.begin(), assertions_.end(), [](const Assertion& a) { return a.pass; });
  }
  [[nodiscard]] int exit_status() const { return passed() ? 0 : 1; }
  [[nodiscard]] const std::vector<Assertion>& assertions() const { return assertions_; }

  [[nodiscard]] std::string render(bool machine) const { return machine ? render_machine() : render_plain(); }

 private:
  [[nodiscard]] std::string render_plain() const {
    std::ostringstream out;
    out << "command: " << command_ << '\n';
    std::size_t width = 0;
    for (const auto& [k, v] : fields_) width = std::max(width, k.size());
    for (const auto& [k, v] : fields_) out << k << std::string(width - k.size(), ' ') << " : " << v << '\n';
    if (!header_.empty()) {
      std::vector<std::size_t> w(header_.size());
      for (std::size_t i = 0; i < header_.size(); ++i) w[i] = header_[i].size();
      for (const auto& r : rows_)
        for (std::size_t i = 0; i < r.size() && i < w.size(); ++i) w[i] = std::max(w[i], r[i].size());
      auto emit = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (i) s += "  ";
          s += cells[i] + std::string(w[i] - cells[i].size(), ' ');
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        out << s << '\n';
      };
      emit(header_);
      for (const auto& r : rows_) emit(r);
    }
    for (const auto& l : lines_) out << l << '\n';
    for (const auto& a : assertions_) {
      out << (a.pass ? "[PASS] " : "[FAIL] ") << a.claim;
      if (!a.anchor.empty()) out << "  {" << a.anchor << '}';
      if (!a.detail.empty()) out << "  " << a.detail;
      out << '\n';
    }
    if (!assertions_.empty())
      out << "status: " << (passed() ? "pass" : "fail") << " (" << count_passed() << '/' << assertions_.size()
          << ")\n";
    return out.str();
  }

  [[nodiscard]] std::string render_machine() const {
    std::ostringstream out;
    out << "command=" << command_ << '\n';
    for (const auto& [k, v] : fields_) out << k << '=' << v << '\n';
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (std::size_t i = 0; i < rows_[r].size() && i < header_.size(); ++i)
        out << table_name_ << '.' << r << '.' << header_[i] << '=' << rows_[r][i] << '\n';
    for (std::size_t i = 0; i < lines_.size(); ++i) out << "line." << i << '=' << lines_[i] << '\n';
    for (std::size_t i = 0; i < assertions_.size(); ++i) {
      const auto& a = assertions_[i];
      out << "assert." << i << ".claim=" << a.claim << '\n';
      out << "assert." << i << ".anchor=" << a.anchor << '\n';
      out << "assert." << i << ".pass=" << (a.pass ? "true" : "false") << '\n';
      if (!a.detail.empty()) out << "assert." << i << ".detail=" << a.detail << '\n';
    }
    out << "status=" << (passed() ? "pass" : "fail") << '\n';
    return out.str();
  }

  [[nodiscard]] std::size_t count_passed() const {
    return static_cast<std::size_t>(
        std::count_if(assertions_.begin(), assertions_.end(), [](const Assertion& a) { return a.pass; }));
  }

  std::string command_;
  std::vector<std::pair<std::string, std::string>> fields_;
  std::vector<Assertion> assertions_;
  std::string table_name_;
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
  std::vector<std::string> lines_;
};

}  // namespace geodouble
