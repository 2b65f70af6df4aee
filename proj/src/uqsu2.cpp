#include "qlink/uqsu2.hpp"

#include "qlink/errors.hpp"

namespace qlink::uqsu2 {

Operator rep_E(Spin j) {
  const Shape s{j};
  Operator out(s, s);
  // column t (m = j - t) maps to row t-1 with coefficient [j - m] = [t]
  for (std::size_t t = 1; t < j.dim(); ++t) out.set(t - 1, t, qint(static_cast<int>(t)));
  return out;
}

Operator rep_F(Spin j) {
  const Shape s{j};
  Operator out(s, s);
  // column t maps to row t+1 with coefficient [j + m] = [2j - t]
  for (std::size_t t = 0; t + 1 < j.dim(); ++t) out.set(t + 1, t, qint(j.twice() - static_cast<int>(t)));
  return out;
}

Operator rep_qH(Spin j, int k) {
  std::vector<LaurentPoly> diag;
  diag.reserve(j.dim());
  for (std::size_t t = 0; t < j.dim(); ++t) diag.push_back(LaurentPoly::v_pow(k * j.twice_m(t)));
  return Operator::diagonal(Shape{j}, diag);
}

LaurentPoly casimir_eigenvalue(Spin j) {
  return LaurentPoly::v_pow(2 * (j.twice() + 1)) + LaurentPoly::v_pow(-2 * (j.twice() + 1));
}

Operator GeneratorImages::qH(int k) const {
  std::vector<LaurentPoly> diag;
  diag.reserve(shape.dim());
  for (std::size_t idx = 0; idx < shape.dim(); ++idx) {
    const auto labels = shape.labels(idx);
    int twice_m = 0;
    for (std::size_t f = 0; f < shape.size(); ++f) twice_m += shape[f].twice_m(labels[f]);
    diag.push_back(LaurentPoly::v_pow(k * twice_m));
  }
  return Operator::diagonal(shape, diag);
}

GeneratorImages images(Spin j) { return {Shape{j}, rep_E(j), rep_F(j)}; }

GeneratorImages coproduct(const GeneratorImages& left, const GeneratorImages& right) {
  const Operator kl = left.qH(1);
  const Operator kr_inv = right.qH(-1);
  GeneratorImages out{left.shape.concat(right.shape), kron(left.E, kr_inv) + kron(kl, right.E),
                      kron(left.F, kr_inv) + kron(kl, right.F)};
  return out;
}

Operator casimir_of(const GeneratorImages& g) {
  const LaurentPoly d = q_minus_qinv();
  return (d * d) * (g.F * g.E) + LaurentPoly::v_pow(2) * g.qH(2) + LaurentPoly::v_pow(-2) * g.qH(-2);
}

Operator casimir(Spin j) { return casimir_of(images(j)); }

Operator coproduct_rep(Generator sym, Spin j1, Spin j2, int k) {
  const GeneratorImages g = coproduct(images(j1), images(j2));
  switch (sym) {
    case Generator::E:
      return g.E;
    case Generator::F:
      return g.F;
    case Generator::QH:
      return g.qH(k);
  }
  throw UsageError("coproduct_rep: unknown generator");
}

GeneratorImages iterated_images(const Shape& shape, FoldOrder order) {
  if (shape.size() == 0) throw ShapeError("iterated_images: empty shape");
  const std::size_t n = shape.size();
  if (order == FoldOrder::right) {
    GeneratorImages acc = images(shape[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) acc = coproduct(images(shape[k]), acc);
    return acc;
  }
  GeneratorImages acc = images(shape[0]);
  for (std::size_t k = 1; k < n; ++k) acc = coproduct(acc, images(shape[k]));
  return acc;
}

Operator iterated_casimir(const Shape& shape, const std::vector<std::size_t>& span, FoldOrder order) {
  if (span.empty()) throw UsageError("iterated_casimir: empty span");
  for (std::size_t k = 0; k < span.size(); ++k) {
    if (span[k] >= shape.size() || (k > 0 && span[k] != span[k - 1] + 1)) {
      throw UsageError("iterated_casimir: span must be contiguous ascending factor indices within the shape");
    }
  }
  std::vector<Spin> sub;
  for (std::size_t p : span) sub.push_back(shape[p]);
  const Operator q = casimir_of(iterated_images(Shape(std::move(sub)), order));
  return embed(q, span, shape);
}

Operator q_number_2H(const Shape& shape) {
  std::vector<LaurentPoly> diag;
  for (std::size_t idx = 0; idx < shape.dim(); ++idx) {
    const auto labels = shape.labels(idx);
    int twice_m = 0;
    for (std::size_t f = 0; f < shape.size(); ++f) twice_m += shape[f].twice_m(labels[f]);
    diag.push_back(qint(twice_m));
  }
  return Operator::diagonal(shape, diag);
}

}  // namespace qlink::uqsu2
