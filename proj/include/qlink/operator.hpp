#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlink/laurent.hpp"
#include "qlink/spin.hpp"

namespace qlink {

// Sparse matrix of Laurent polynomials mapping V(shape_in) -> V(shape_out).
//
// Basis within each V_j runs m = j, j-1, ..., -j; multi-factor indices are
// factor-major with the first factor slowest. Zero entries are never stored.
class Operator {
 public:
  struct Entry {
    std::size_t col;
    LaurentPoly value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  Operator() : Operator(Shape{}, Shape{}) {}
  Operator(Shape shape_out, Shape shape_in);

  static Operator identity(const Shape& shape);
  static Operator scalar(const Shape& shape, const LaurentPoly& c);
  static Operator diagonal(const Shape& shape, const std::vector<LaurentPoly>& diag);

  const Shape& shape_in() const { return shape_in_; }
  const Shape& shape_out() const { return shape_out_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return shape_in_ == shape_out_; }

  std::span<const Entry> row(std::size_t r) const { return rows_[r]; }
  LaurentPoly at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, LaurentPoly value);
  void add_to(std::size_t r, std::size_t c, const LaurentPoly& value);

  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  Operator& operator+=(const Operator& other);
  Operator& operator-=(const Operator& other);
  Operator& operator*=(const LaurentPoly& c);
  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(Operator a, const LaurentPoly& c) { return a *= c; }
  friend Operator operator*(const LaurentPoly& c, Operator a) { return a *= c; }
  Operator operator-() const;

  // Matrix product; requires a.shape_in == b.shape_out.
  friend Operator operator*(const Operator& a, const Operator& b);

  friend bool operator==(const Operator& a, const Operator& b);

  // Entrywise v -> v^k.
  Operator subst_v_power(int k) const;

  Operator pow(unsigned n) const;

 private:
  Shape shape_out_;
  Shape shape_in_;
  std::size_t cols_;
  std::vector<std::vector<Entry>> rows_;
};

Operator identity(const Shape& s);
Operator kron(const Operator& a, const Operator& b);
Operator compose(const Operator& a, const Operator& b);

// Permutation of tensor factors: output factor k carries input factor perm[k].
Operator permute(const Shape& shape, const std::vector<std::size_t>& perm);

// `op` acting on ambient factors `positions` (op's factor t sits at
// positions[t]), identity elsewhere. Positions need not be adjacent.
Operator embed(const Operator& op, const std::vector<std::size_t>& positions, const Shape& ambient);

// Tr_1(op (w (x) 1)); with no weight the plain partial trace.
Operator partial_trace_first(const Operator& op, const std::optional<Operator>& weight = std::nullopt);
// Tr_n(op (1 (x) w)).
Operator partial_trace_last(const Operator& op, const std::optional<Operator>& weight = std::nullopt);

// Tr(op (w_1 (x) ... (x) w_n)); an empty list means unweighted, and a
// nullopt slot means identity on that factor.
LaurentPoly full_trace(const Operator& op, const std::vector<std::optional<Operator>>& weights = {});

// c if op == c * identity, nullopt otherwise.
std::optional<LaurentPoly> as_scalar(const Operator& op);

// a*b - b*a
Operator commutator(const Operator& a, const Operator& b);

// Short human-readable dump for diagnostics.
std::string describe(const Operator& op);

}  // namespace qlink
