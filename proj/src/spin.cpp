#include "qlink/spin.hpp"

#include <charconv>

#include "qlink/errors.hpp"

namespace qlink {

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  const auto* begin = text.data();
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw UsageError("invalid spin '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Spin::Spin(int twice_j) : twice_j_(twice_j) {
  if (twice_j < 0) throw UsageError("spin must be non-negative, got 2j=" + std::to_string(twice_j));
}

Spin Spin::parse(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Spin(2 * parse_int(t, text));
  const int num = parse_int(trim(t.substr(0, slash)), text);
  const int den = parse_int(trim(t.substr(slash + 1)), text);
  if (den == 1) return Spin(2 * num);
  if (den != 2) throw UsageError("spin denominator must be 1 or 2 in '" + std::string(text) + "'");
  return Spin(num);
}

std::string Spin::to_string() const {
  if (twice_j_ % 2 == 0) return std::to_string(twice_j_ / 2);
  return std::to_string(twice_j_) + "/2";
}

Shape Shape::twice(std::initializer_list<int> twice_spins) {
  std::vector<Spin> f;
  for (int t : twice_spins) f.emplace_back(t);
  return Shape(std::move(f));
}

std::size_t Shape::dim() const {
  std::size_t d = 1;
  for (const auto& s : factors_) d *= s.dim();
  return d;
}

Shape Shape::concat(const Shape& other) const {
  std::vector<Spin> f = factors_;
  f.insert(f.end(), other.factors_.begin(), other.factors_.end());
  return Shape(std::move(f));
}

Shape Shape::drop_first() const {
  if (factors_.empty()) throw ShapeError("drop_first on empty shape");
  return Shape(std::vector<Spin>(factors_.begin() + 1, factors_.end()));
}

Shape Shape::drop_last() const {
  if (factors_.empty()) throw ShapeError("drop_last on empty shape");
  return Shape(std::vector<Spin>(factors_.begin(), factors_.end() - 1));
}

std::vector<std::size_t> Shape::labels(std::size_t index) const {
  std::vector<std::size_t> out(factors_.size());
  for (std::size_t k = factors_.size(); k-- > 0;) {
    const std::size_t d = factors_[k].dim();
    out[k] = index % d;
    index /= d;
  }
  return out;
}

std::size_t Shape::index(const std::vector<std::size_t>& labels) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k) idx = idx * factors_[k].dim() + labels[k];
  return idx;
}

std::string Shape::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (k) out += ",";
    out += factors_[k].to_string();
  }
  return out + ")";
}

}  // namespace qlink
