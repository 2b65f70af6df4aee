#include "qlink/operator.hpp"

#include <algorithm>
#include <numeric>

#include "qlink/errors.hpp"

namespace qlink {

namespace {

void require_same_shapes(const Operator& a, const Operator& b, const char* what) {
  if (a.shape_in() != b.shape_in() || a.shape_out() != b.shape_out()) {
    throw ShapeError(std::string(what) + ": shapes differ: " + a.shape_out().to_string() + "<-" +
                     a.shape_in().to_string() + " vs " + b.shape_out().to_string() + "<-" +
                     b.shape_in().to_string());
  }
}

std::vector<Operator::Entry> merge_rows(const std::vector<Operator::Entry>& a,
                                        const std::vector<Operator::Entry>& b, bool subtract) {
  std::vector<Operator::Entry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].col < b[j].col)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].col < a[i].col) {
      out.push_back({b[j].col, subtract ? -b[j].value : b[j].value});
      ++j;
    } else {
      LaurentPoly v = subtract ? a[i].value - b[j].value : a[i].value + b[j].value;
      if (!v.is_zero()) out.push_back({a[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Operator::Operator(Shape shape_out, Shape shape_in)
    : shape_out_(std::move(shape_out)),
      shape_in_(std::move(shape_in)),
      cols_(shape_in_.dim()),
      rows_(shape_out_.dim()) {}

Operator Operator::identity(const Shape& shape) { return scalar(shape, 1); }

Operator Operator::scalar(const Shape& shape, const LaurentPoly& c) {
  Operator out(shape, shape);
  if (c.is_zero()) return out;
  for (std::size_t i = 0; i < out.rows(); ++i) out.rows_[i].push_back({i, c});
  return out;
}

Operator Operator::diagonal(const Shape& shape, const std::vector<LaurentPoly>& diag) {
  if (diag.size() != shape.dim()) throw ShapeError("diagonal: size does not match shape " + shape.to_string());
  Operator out(shape, shape);
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (!diag[i].is_zero()) out.rows_[i].push_back({i, diag[i]});
  }
  return out;
}

LaurentPoly Operator::at(std::size_t r, std::size_t c) const {
  const auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) return it->value;
  return {};
}

void Operator::set(std::size_t r, std::size_t c, LaurentPoly value) {
  if (c >= cols_) throw ShapeError("set: column out of range");
  auto& row = rows_.at(r);
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t col) { return e.col < col; });
  if (it != row.end() && it->col == c) {
    if (value.is_zero()) {
      row.erase(it);
    } else {
      it->value = std::move(value);
    }
  } else if (!value.is_zero()) {
    row.insert(it, Entry{c, std::move(value)});
  }
}

void Operator::add_to(std::size_t r, std::size_t c, const LaurentPoly& value) {
  if (value.is_zero()) return;
  set(r, c, at(r, c) + value);
}

std::size_t Operator::nnz() const {
  return std::accumulate(rows_.begin(), rows_.end(), std::size_t{0},
                         [](std::size_t acc, const auto& row) { return acc + row.size(); });
}

Operator& Operator::operator+=(const Operator& other) {
  require_same_shapes(*this, other, "add");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (!other.rows_[r].empty()) rows_[r] = merge_rows(rows_[r], other.rows_[r], false);
  }
  return *this;
}

Operator& Operator::operator-=(const Operator& other) {
  require_same_shapes(*this, other, "subtract");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (!other.rows_[r].empty()) rows_[r] = merge_rows(rows_[r], other.rows_[r], true);
  }
  return *this;
}

Operator& Operator::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    for (auto& row : rows_) row.clear();
    return *this;
  }
  for (auto& row : rows_) {
    for (auto& e : row) e.value *= c;
  }
  return *this;
}

Operator Operator::operator-() const {
  Operator out = *this;
  for (auto& row : out.rows_) {
    for (auto& e : row) e.value = -e.value;
  }
  return out;
}

Operator operator*(const Operator& a, const Operator& b) {
  if (a.shape_in_ != b.shape_out_) {
    throw ShapeError("compose: left operator expects " + a.shape_in_.to_string() + " but right produces " +
                     b.shape_out_.to_string());
  }
  Operator out(a.shape_out_, b.shape_in_);
  std::vector<LaurentPoly> acc(b.cols_);
  std::vector<char> touched(b.cols_, 0);
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < a.rows_.size(); ++r) {
    cols.clear();
    for (const auto& ea : a.rows_[r]) {
      for (const auto& eb : b.rows_[ea.col]) {
        if (!touched[eb.col]) {
          touched[eb.col] = 1;
          cols.push_back(eb.col);
        }
        acc[eb.col] += ea.value * eb.value;
      }
    }
    std::sort(cols.begin(), cols.end());
    auto& row = out.rows_[r];
    for (std::size_t c : cols) {
      if (!acc[c].is_zero()) row.push_back({c, std::move(acc[c])});
      acc[c] = LaurentPoly();
      touched[c] = 0;
    }
  }
  return out;
}

bool operator==(const Operator& a, const Operator& b) {
  return a.shape_in_ == b.shape_in_ && a.shape_out_ == b.shape_out_ && a.rows_ == b.rows_;
}

Operator Operator::subst_v_power(int k) const {
  Operator out = *this;
  for (auto& row : out.rows_) {
    for (auto& e : row) e.value = e.value.subst_v_power(k);
  }
  return out;
}

Operator Operator::pow(unsigned n) const {
  if (!is_square()) throw ShapeError("pow: operator is not square");
  Operator result = identity(shape_in_);
  for (unsigned k = 0; k < n; ++k) result = result * *this;
  return result;
}

Operator identity(const Shape& s) { return Operator::identity(s); }

Operator kron(const Operator& a, const Operator& b) {
  Operator out(a.shape_out().concat(b.shape_out()), a.shape_in().concat(b.shape_in()));
  const std::size_t bc = b.cols();
  for (std::size_t ra = 0; ra < a.rows(); ++ra) {
    for (std::size_t rb = 0; rb < b.rows(); ++rb) {
      const std::size_t r = ra * b.rows() + rb;
      for (const auto& ea : a.row(ra)) {
        for (const auto& eb : b.row(rb)) out.set(r, ea.col * bc + eb.col, ea.value * eb.value);
      }
    }
  }
  return out;
}

Operator compose(const Operator& a, const Operator& b) { return a * b; }

Operator permute(const Shape& shape, const std::vector<std::size_t>& perm) {
  const std::size_t n = shape.size();
  if (perm.size() != n) throw UsageError("permute: permutation length does not match shape");
  std::vector<char> seen(n, 0);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) throw UsageError("permute: not a bijection on factor positions");
    seen[p] = 1;
  }
  std::vector<Spin> out_factors(n);
  for (std::size_t k = 0; k < n; ++k) out_factors[k] = shape[perm[k]];
  const Shape out_shape(std::move(out_factors));
  Operator out(out_shape, shape);
  std::vector<std::size_t> out_labels(n);
  for (std::size_t c = 0; c < shape.dim(); ++c) {
    const auto in_labels = shape.labels(c);
    for (std::size_t k = 0; k < n; ++k) out_labels[k] = in_labels[perm[k]];
    out.set(out_shape.index(out_labels), c, 1);
  }
  return out;
}

Operator embed(const Operator& op, const std::vector<std::size_t>& positions, const Shape& ambient) {
  const std::size_t n = op.shape_in().size();
  if (positions.size() != n || op.shape_out().size() != n) {
    throw ShapeError("embed: operator arity does not match position count");
  }
  std::vector<char> used(ambient.size(), 0);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t p = positions[t];
    if (p >= ambient.size() || used[p]) throw ShapeError("embed: invalid or repeated position");
    used[p] = 1;
    if (ambient[p] != op.shape_in()[t]) {
      throw ShapeError("embed: spin mismatch at position " + std::to_string(p) + ": ambient " +
                       ambient[p].to_string() + " vs operator " + op.shape_in()[t].to_string());
    }
  }
  std::vector<Spin> out_factors = ambient.factors();
  for (std::size_t t = 0; t < n; ++t) out_factors[positions[t]] = op.shape_out()[t];
  const Shape out_shape(std::move(out_factors));

  // Column view of op.
  std::vector<std::vector<std::pair<std::size_t, const LaurentPoly*>>> columns(op.cols());
  for (std::size_t r = 0; r < op.rows(); ++r) {
    for (const auto& e : op.row(r)) columns[e.col].push_back({r, &e.value});
  }

  Operator out(out_shape, ambient);
  std::vector<std::size_t> sub(n);
  for (std::size_t c = 0; c < ambient.dim(); ++c) {
    auto labels = ambient.labels(c);
    for (std::size_t t = 0; t < n; ++t) sub[t] = labels[positions[t]];
    const std::size_t sub_col = op.shape_in().index(sub);
    for (const auto& [r, value] : columns[sub_col]) {
      const auto sub_out = op.shape_out().labels(r);
      for (std::size_t t = 0; t < n; ++t) labels[positions[t]] = sub_out[t];
      out.set(out_shape.index(labels), c, *value);
    }
  }
  return out;
}

Operator partial_trace_first(const Operator& op, const std::optional<Operator>& weight) {
  if (!op.is_square() || op.shape_in().size() == 0) {
    throw ShapeError("partial_trace_first: operator must be square with at least one factor");
  }
  const Shape& shape = op.shape_in();
  Operator x = op;
  if (weight) {
    if (weight->shape_in() != Shape{shape[0]} || !weight->is_square()) {
      throw ShapeError("partial_trace_first: weight must act on the first factor " + shape[0].to_string());
    }
    x = op * embed(*weight, {0}, shape);
  }
  const Shape rest = shape.drop_first();
  const std::size_t block = rest.dim();
  Operator out(rest, rest);
  for (std::size_t m = 0; m < shape[0].dim(); ++m) {
    for (std::size_t r = 0; r < block; ++r) {
      for (const auto& e : x.row(m * block + r)) {
        if (e.col / block == m) out.add_to(r, e.col % block, e.value);
      }
    }
  }
  return out;
}

Operator partial_trace_last(const Operator& op, const std::optional<Operator>& weight) {
  if (!op.is_square() || op.shape_in().size() == 0) {
    throw ShapeError("partial_trace_last: operator must be square with at least one factor");
  }
  const Shape& shape = op.shape_in();
  const std::size_t last = shape.size() - 1;
  Operator x = op;
  if (weight) {
    if (weight->shape_in() != Shape{shape[last]} || !weight->is_square()) {
      throw ShapeError("partial_trace_last: weight must act on the last factor " + shape[last].to_string());
    }
    x = op * embed(*weight, {last}, shape);
  }
  const Shape rest = shape.drop_last();
  const std::size_t d = shape[last].dim();
  Operator out(rest, rest);
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (const auto& e : x.row(r)) {
      if (e.col % d == r % d) out.add_to(r / d, e.col / d, e.value);
    }
  }
  return out;
}

LaurentPoly full_trace(const Operator& op, const std::vector<std::optional<Operator>>& weights) {
  if (!op.is_square()) throw ShapeError("full_trace: operator is not square");
  const Shape& shape = op.shape_in();
  Operator x = op;
  if (!weights.empty()) {
    if (weights.size() != shape.size()) throw ShapeError("full_trace: one weight slot per factor required");
    for (std::size_t k = 0; k < shape.size(); ++k) {
      if (weights[k]) x = x * embed(*weights[k], {k}, shape);
    }
  }
  LaurentPoly tr;
  for (std::size_t r = 0; r < x.rows(); ++r) tr += x.at(r, r);
  return tr;
}

std::optional<LaurentPoly> as_scalar(const Operator& op) {
  if (!op.is_square()) return std::nullopt;
  if (op.rows() == 0) return LaurentPoly(1);
  const LaurentPoly c = op.at(0, 0);
  for (std::size_t r = 0; r < op.rows(); ++r) {
    const auto row = op.row(r);
    if (c.is_zero()) {
      if (!row.empty()) return std::nullopt;
      continue;
    }
    if (row.size() != 1 || row[0].col != r || row[0].value != c) return std::nullopt;
  }
  return c;
}

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

std::string describe(const Operator& op) {
  std::string out = op.shape_out().to_string() + " <- " + op.shape_in().to_string() + "\n";
  for (std::size_t r = 0; r < op.rows(); ++r) {
    for (const auto& e : op.row(r)) {
      out += "  [" + std::to_string(r) + "," + std::to_string(e.col) + "] " + e.value.to_string() + "\n";
    }
  }
  return out;
}

}  // namespace qlink
