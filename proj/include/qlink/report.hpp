#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qlink/laurent.hpp"
#include "qlink/operator.hpp"

namespace qlink {

// One named identity check. residual_nnz counts nonzero entries (or terms,
// for scalar identities) of lhs - rhs; zero means the identity holds exactly.
struct Check {
  std::string name;
  bool pass = false;
  std::size_t residual_nnz = 0;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  bool pass() const;
  std::size_t failures() const;

  void expect_equal(std::string name, const Operator& lhs, const Operator& rhs);
  void expect_zero(std::string name, const Operator& residual);
  void expect_equal(std::string name, const LaurentPoly& lhs, const LaurentPoly& rhs);
  void expect_true(std::string name, bool ok, std::string detail = {});
  // Records a check that could not be evaluated (exception from a self-check).
  void record_error(std::string name, const std::string& what);

  void append(const Report& other, const std::string& prefix = {});

  std::string to_text() const;
};

}  // namespace qlink
