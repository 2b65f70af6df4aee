#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace qlink {

// A spin j stored as the non-negative integer 2j.
class Spin {
 public:
  constexpr Spin() = default;
  explicit Spin(int twice_j);

  static Spin half() { return Spin(1); }
  // Parses "3/2", "1", "0".
  static Spin parse(std::string_view text);

  constexpr int twice() const { return twice_j_; }
  constexpr std::size_t dim() const { return static_cast<std::size_t>(twice_j_) + 1; }

  // 2m for the basis index t (m runs j, j-1, ..., -j).
  constexpr int twice_m(std::size_t t) const { return twice_j_ - 2 * static_cast<int>(t); }

  // v-exponent of q^{2j(j+1)}, i.e. 2j(2j+2).
  constexpr int framing_v_exp() const { return twice_j_ * (twice_j_ + 2); }

  std::string to_string() const;

  friend constexpr auto operator<=>(const Spin&, const Spin&) = default;

 private:
  int twice_j_ = 0;
};

// Ordered list of spins describing V_{j1} (x) ... (x) V_{jn}.
class Shape {
 public:
  Shape() = default;
  Shape(std::initializer_list<Spin> factors) : factors_(factors) {}
  explicit Shape(std::vector<Spin> factors) : factors_(std::move(factors)) {}
  // Shape::twice({1, 1, 2}) == (1/2, 1/2, 1)
  static Shape twice(std::initializer_list<int> twice_spins);

  const std::vector<Spin>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  const Spin& operator[](std::size_t i) const { return factors_[i]; }
  std::size_t dim() const;

  Shape concat(const Shape& other) const;
  Shape drop_first() const;
  Shape drop_last() const;

  // Factor-major multi-index, first factor slowest.
  std::vector<std::size_t> labels(std::size_t index) const;
  std::size_t index(const std::vector<std::size_t>& labels) const;

  std::string to_string() const;

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::vector<Spin> factors_;
};

}  // namespace qlink
