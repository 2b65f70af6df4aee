#include "qlink/report.hpp"

#include <algorithm>

#include "qlink/errors.hpp"

namespace qlink {

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

void Report::expect_zero(std::string name, const Operator& residual) {
  const std::size_t nnz = residual.nnz();
  Check c{std::move(name), nnz == 0, nnz, {}};
  if (nnz != 0) {
    // First offending entry is usually enough to debug a convention slip.
    for (std::size_t r = 0; r < residual.rows() && c.detail.empty(); ++r) {
      for (const auto& e : residual.row(r)) {
        c.detail = "entry [" + std::to_string(r) + "," + std::to_string(e.col) + "] = " + e.value.to_string();
        break;
      }
    }
  }
  checks.push_back(std::move(c));
}

void Report::expect_equal(std::string name, const Operator& lhs, const Operator& rhs) {
  if (lhs.shape_in() != rhs.shape_in() || lhs.shape_out() != rhs.shape_out()) {
    checks.push_back({std::move(name), false, 0,
                      "shape mismatch: " + lhs.shape_out().to_string() + "<-" + lhs.shape_in().to_string() + " vs " +
                          rhs.shape_out().to_string() + "<-" + rhs.shape_in().to_string()});
    return;
  }
  expect_zero(std::move(name), lhs - rhs);
}

void Report::expect_equal(std::string name, const LaurentPoly& lhs, const LaurentPoly& rhs) {
  const LaurentPoly residual = lhs - rhs;
  Check c{std::move(name), residual.is_zero(), residual.size(), {}};
  if (!c.pass) c.detail = "residual " + residual.to_string();
  checks.push_back(std::move(c));
}

void Report::expect_true(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, ok ? 0U : 1U, ok ? std::string{} : std::move(detail)});
}

void Report::record_error(std::string name, const std::string& what) {
  checks.push_back({std::move(name), false, 0, "error: " + what});
}

void Report::append(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    Check copy = c;
    if (!prefix.empty()) copy.name = prefix + c.name;
    checks.push_back(std::move(copy));
  }
}

std::string Report::to_text() const {
  std::string out;
  if (!title.empty()) out += title + "\n";
  for (const auto& c : checks) {
    out += (c.pass ? "  PASS " : "  FAIL ") + c.name;
    if (!c.pass) {
      out += " (residual nonzero: " + std::to_string(c.residual_nnz) + ")";
      if (!c.detail.empty()) out += " " + c.detail;
    }
    out += "\n";
  }
  out += pass() ? "all checks passed\n" : std::to_string(failures()) + " check(s) failed\n";
  return out;
}

}  // namespace qlink
