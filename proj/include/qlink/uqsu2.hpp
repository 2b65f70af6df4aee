#pragma once

#include <vector>

#include "qlink/operator.hpp"

namespace qlink::uqsu2 {

// E|j,m> = [j-m]_q |j,m+1>
Operator rep_E(Spin j);
// F|j,m> = [j+m]_q |j,m-1>
Operator rep_F(Spin j);
// q^{kH}: diagonal with q^{k m}. k is an integer, so every entry is an
// integer power of v.
Operator rep_qH(Spin j, int k);

// mu = q^{2H}
inline Operator mu(Spin j) { return rep_qH(j, 2); }
inline Operator mu_inv(Spin j) { return rep_qH(j, -2); }

// chi_j = q^{2j+1} + q^{-2j-1}
LaurentPoly casimir_eigenvalue(Spin j);

// (q-q^-1)^2 F E + q^{2H+1} + q^{-2H-1} on V_j.
Operator casimir(Spin j);

// Images of the generators E, F on a (possibly composite) space.
// q^{kH} is group-like, so it is always the tensor product of the factor
// diagonals and is recomputed from the shape on demand.
struct GeneratorImages {
  Shape shape;
  Operator E;
  Operator F;

  Operator qH(int k) const;
};

GeneratorImages images(Spin j);

// Delta(x) from images on the left and right tensor factors:
//   Delta(E) = E (x) q^{-H} + q^{H} (x) E, Delta(F) likewise.
GeneratorImages coproduct(const GeneratorImages& left, const GeneratorImages& right);

// Casimir expression evaluated on the given images.
Operator casimir_of(const GeneratorImages& g);

enum class Generator { E, F, QH };

// Delta(sym) on V_{j1} (x) V_{j2}; `k` is used only for QH.
Operator coproduct_rep(Generator sym, Spin j1, Spin j2, int k = 1);

enum class FoldOrder {
  right,  // (id (x) Delta) Delta ...
  left,   // (Delta (x) id) Delta ...
};

// Iterated coproduct of the generators over all factors of `shape`.
GeneratorImages iterated_images(const Shape& shape, FoldOrder order = FoldOrder::right);

// Intermediate Casimir on the factors listed in `span` (0-based, contiguous,
// ascending), embedded in `shape`. Non-contiguous spans are rejected.
Operator iterated_casimir(const Shape& shape, const std::vector<std::size_t>& span,
                          FoldOrder order = FoldOrder::right);

// Diagonal [2H]_q with entries [2m]_q; used by the [E,F] relation.
Operator q_number_2H(const Shape& shape);

}  // namespace qlink::uqsu2
