#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "qlink/operator.hpp"
#include "qlink/report.hpp"

namespace qlink::rmatrix {

enum class Variant { plain, inverse, braided, braided_inverse, opposite };

struct RMatrixKey {
  Spin j1;
  Spin j2;
  Variant variant = Variant::plain;
  friend auto operator<=>(const RMatrixKey&, const RMatrixKey&) = default;
};

// Universal R evaluated on V_{j1} (x) V_{j2}:
//   sum_{k=0}^{min(2j1,2j2)} (q-q^-1)^k / [k]! q^{-k(k+1)/2} (F^k (x) E^k)(q^{kH} (x) q^{-kH}) q^{2 H(x)H}
Operator r_matrix(Spin j1, Spin j2);

// R^{-1} on V_{j1} (x) V_{j2}, obtained by q -> q^{-1} and checked against R.
// Throws InternalError if R * R^{-1} != id.
Operator r_inverse(Spin j1, Spin j2);

// R_21 = tau(R) on V_{j1} (x) V_{j2}.
Operator r_opposite(Spin j1, Spin j2);

// Pi R : V_{j1} (x) V_{j2} -> V_{j2} (x) V_{j1}
Operator braided_r(Spin j1, Spin j2);
// Inverse of braided_r(j1, j2): R^{-1} Pi : V_{j2} (x) V_{j1} -> V_{j1} (x) V_{j2}
Operator braided_r_inv(Spin j1, Spin j2);

Operator get(const RMatrixKey& key);

// L-matrices on (1/2, j): L^- = R with the first factor spin-1/2, L^+ = R_21 likewise.
Operator l_minus(Spin j);
Operator l_plus(Spin j);
Operator l_minus_inv(Spin j);
Operator l_plus_inv(Spin j);

// The 4x4 matrix with middle block [[q^-1, -1], [-1, q]] on (1/2, 1/2).
Operator p_matrix();

// FRT1-3 with the third factor at each spin in `general`, RLL4-6 on every
// pair drawn from `general`.
Report verify_frt(const std::vector<Spin>& general = {Spin(1), Spin(2), Spin(3)});

// Yang-Baxter R12 R13 R23 = R23 R13 R12 on (j1, j2, j3).
Report verify_ybe(Spin j1, Spin j2, Spin j3);

// prod_j (R21 R12 - q^{2j(j+1) - 2j1(j1+1) - 2j2(j2+1)}) == 0 over j in j1 (x) j2.
Report monodromy_annihilator(Spin j1, Spin j2);

// Empties the memo cache.
void clear_cache();

// Test hook: while alive, r_matrix(j1, j2) returns a copy whose entry
// (row, col) is replaced by `value`. Caching is bypassed meanwhile. Only
// one corruption may be active at a time.
class ScopedCorruption {
 public:
  ScopedCorruption(Spin j1, Spin j2, std::size_t row, std::size_t col, LaurentPoly value);
  ~ScopedCorruption();
  ScopedCorruption(const ScopedCorruption&) = delete;
  ScopedCorruption& operator=(const ScopedCorruption&) = delete;
};

}  // namespace qlink::rmatrix
