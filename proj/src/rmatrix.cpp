#include "qlink/rmatrix.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

#include "qlink/errors.hpp"
#include "qlink/uqsu2.hpp"

namespace qlink::rmatrix {

namespace {

struct Corruption {
  Spin j1;
  Spin j2;
  std::size_t row;
  std::size_t col;
  LaurentPoly value;
};

std::shared_mutex& cache_mutex() {
  static std::shared_mutex m;
  return m;
}

std::map<RMatrixKey, Operator>& cache() {
  static std::map<RMatrixKey, Operator> c;
  return c;
}

// Guarded by cache_mutex().
std::optional<Corruption>& corruption() {
  static std::optional<Corruption> c;
  return c;
}

const std::vector<std::size_t> kSwap{1, 0};

Operator compute_r_matrix(Spin j1, Spin j2) {
  const Shape shape{j1, j2};
  // q^{2 H (x) H} combined with q^{kH} (x) q^{-kH}: v-exponent (2m1)(2m2) + k(2m1 - 2m2)
  auto diag_factor = [&](int k) {
    std::vector<LaurentPoly> d;
    d.reserve(shape.dim());
    for (std::size_t a = 0; a < j1.dim(); ++a) {
      for (std::size_t b = 0; b < j2.dim(); ++b) {
        const int m1 = j1.twice_m(a);
        const int m2 = j2.twice_m(b);
        d.push_back(LaurentPoly::v_pow(m1 * m2 + k * (m1 - m2)));
      }
    }
    return Operator::diagonal(shape, d);
  };

  const Operator f = uqsu2::rep_F(j1);
  const Operator e = uqsu2::rep_E(j2);
  Operator f_pow = identity(Shape{j1});
  Operator e_pow = identity(Shape{j2});
  Operator r(shape, shape);
  const int kmax = std::min(j1.twice(), j2.twice());
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) {
      f_pow = f * f_pow;
      e_pow = e * e_pow;
    }
    Operator term = kron(f_pow, e_pow) * diag_factor(k);
    const LaurentPoly numer = q_minus_qinv().pow(static_cast<unsigned>(k)).shifted(-k * (k + 1));
    const LaurentPoly denom = qfact(k);
    Operator scaled(shape, shape);
    for (std::size_t row = 0; row < term.rows(); ++row) {
      for (const auto& entry : term.row(row)) scaled.set(row, entry.col, (entry.value * numer).exact_div(denom));
    }
    r += scaled;
  }
  return r;
}

Operator compute(const RMatrixKey& key, const std::optional<Corruption>& bad);

Operator lookup(const RMatrixKey& key) {
  {
    std::shared_lock lock(cache_mutex());
    if (!corruption()) {
      auto it = cache().find(key);
      if (it != cache().end()) return it->second;
    } else {
      const Corruption bad = *corruption();
      lock.unlock();
      return compute(key, bad);
    }
  }
  Operator value = compute(key, std::nullopt);
  std::unique_lock lock(cache_mutex());
  if (!corruption()) cache().emplace(key, value);
  return value;
}

Operator compute(const RMatrixKey& key, const std::optional<Corruption>& bad) {
  auto sub = [&](Variant v, Spin a, Spin b) {
    const RMatrixKey k{a, b, v};
    return bad ? compute(k, bad) : lookup(k);
  };
  const Spin j1 = key.j1;
  const Spin j2 = key.j2;
  switch (key.variant) {
    case Variant::plain: {
      Operator r = compute_r_matrix(j1, j2);
      if (bad && bad->j1 == j1 && bad->j2 == j2) r.set(bad->row, bad->col, bad->value);
      return r;
    }
    case Variant::inverse: {
      const Operator r = sub(Variant::plain, j1, j2);
      Operator inv = r.subst_v_power(-1);
      const Shape shape{j1, j2};
      if (r * inv != identity(shape) || inv * r != identity(shape)) {
        throw InternalError("r_inverse: q -> q^-1 image is not the inverse of R on " + shape.to_string());
      }
      return inv;
    }
    case Variant::opposite: {
      const Operator r21 = sub(Variant::plain, j2, j1);
      return permute(Shape{j2, j1}, kSwap) * r21 * permute(Shape{j1, j2}, kSwap);
    }
    case Variant::braided:
      return permute(Shape{j1, j2}, kSwap) * sub(Variant::plain, j1, j2);
    case Variant::braided_inverse:
      return sub(Variant::inverse, j1, j2) * permute(Shape{j2, j1}, kSwap);
  }
  throw UsageError("unknown R-matrix variant");
}

}  // namespace

Operator get(const RMatrixKey& key) { return lookup(key); }

Operator r_matrix(Spin j1, Spin j2) { return get({j1, j2, Variant::plain}); }
Operator r_inverse(Spin j1, Spin j2) { return get({j1, j2, Variant::inverse}); }
Operator r_opposite(Spin j1, Spin j2) { return get({j1, j2, Variant::opposite}); }
Operator braided_r(Spin j1, Spin j2) { return get({j1, j2, Variant::braided}); }
Operator braided_r_inv(Spin j1, Spin j2) { return get({j1, j2, Variant::braided_inverse}); }

Operator l_minus(Spin j) { return r_matrix(Spin::half(), j); }
Operator l_minus_inv(Spin j) { return r_inverse(Spin::half(), j); }
Operator l_plus(Spin j) { return r_opposite(Spin::half(), j); }

Operator l_plus_inv(Spin j) {
  return permute(Shape{j, Spin::half()}, kSwap) * r_inverse(j, Spin::half()) * permute(Shape{Spin::half(), j}, kSwap);
}

Operator p_matrix() {
  const Shape s{Spin::half(), Spin::half()};
  Operator p(s, s);
  p.set(1, 1, LaurentPoly::q_pow(-1));
  p.set(1, 2, -1);
  p.set(2, 1, -1);
  p.set(2, 2, LaurentPoly::q_pow(1));
  return p;
}

void clear_cache() {
  std::unique_lock lock(cache_mutex());
  cache().clear();
}

ScopedCorruption::ScopedCorruption(Spin j1, Spin j2, std::size_t row, std::size_t col, LaurentPoly value) {
  std::unique_lock lock(cache_mutex());
  if (corruption()) throw UsageError("ScopedCorruption: a corruption is already active");
  corruption() = Corruption{j1, j2, row, col, std::move(value)};
}

ScopedCorruption::~ScopedCorruption() {
  std::unique_lock lock(cache_mutex());
  corruption().reset();
}

Report verify_ybe(Spin j1, Spin j2, Spin j3) {
  const Shape s{j1, j2, j3};
  const Operator r12 = embed(r_matrix(j1, j2), {0, 1}, s);
  const Operator r13 = embed(r_matrix(j1, j3), {0, 2}, s);
  const Operator r23 = embed(r_matrix(j2, j3), {1, 2}, s);
  Report rep;
  rep.title = "Yang-Baxter on " + s.to_string();
  rep.expect_equal("YBE " + s.to_string(), r12 * r13 * r23, r23 * r13 * r12);
  return rep;
}

Report verify_frt(const std::vector<Spin>& general) {
  const Spin h = Spin::half();
  Report rep;
  rep.title = "FRT / RLL relations";
  const Operator r_hh = r_matrix(h, h);
  for (const Spin j : general) {
    const Shape s{h, h, j};
    const std::string tag = " " + s.to_string();
    try {
      const Operator r12 = embed(r_hh, {0, 1}, s);
      const Operator lm13 = embed(l_minus(j), {0, 2}, s);
      const Operator lm23 = embed(l_minus(j), {1, 2}, s);
      const Operator lp13 = embed(l_plus(j), {0, 2}, s);
      const Operator lp23 = embed(l_plus(j), {1, 2}, s);
      rep.expect_equal("FRT1" + tag, r12 * lm13 * lm23, lm23 * lm13 * r12);
      rep.expect_equal("FRT2" + tag, r12 * lp23 * lp13, lp13 * lp23 * r12);
      rep.expect_equal("FRT3" + tag, lm13 * r12 * lp23, lp23 * r12 * lm13);
    } catch (const std::exception& ex) {
      rep.record_error("FRT" + tag, ex.what());
    }
  }
  for (const Spin a : general) {
    for (const Spin b : general) {
      try {
        // RLL4: R_23 L^-_13 L^-_12 = L^-_12 L^-_13 R_23 on (1/2, a, b)
        const Shape s4{h, a, b};
        const Operator r23 = embed(r_matrix(a, b), {1, 2}, s4);
        const Operator lm13 = embed(l_minus(b), {0, 2}, s4);
        const Operator lm12 = embed(l_minus(a), {0, 1}, s4);
        rep.expect_equal("RLL4 " + s4.to_string(), r23 * lm13 * lm12, lm12 * lm13 * r23);

        // RLL5: R_12 L^+_31 L^+_32 = L^+_32 L^+_31 R_12 on (a, b, 1/2)
        const Shape s5{a, b, h};
        const Operator r12 = embed(r_matrix(a, b), {0, 1}, s5);
        const Operator lp31 = embed(l_plus(a), {2, 0}, s5);
        const Operator lp32 = embed(l_plus(b), {2, 1}, s5);
        rep.expect_equal("RLL5 " + s5.to_string(), r12 * lp31 * lp32, lp32 * lp31 * r12);

        // RLL6: L^+_21 R_13 L^-_23 = L^-_23 R_13 L^+_21 on (a, 1/2, b)
        const Shape s6{a, h, b};
        const Operator lp21 = embed(l_plus(a), {1, 0}, s6);
        const Operator r13 = embed(r_matrix(a, b), {0, 2}, s6);
        const Operator lm23 = embed(l_minus(b), {1, 2}, s6);
        rep.expect_equal("RLL6 " + s6.to_string(), lp21 * r13 * lm23, lm23 * r13 * lp21);
      } catch (const std::exception& ex) {
        rep.record_error("RLL (" + a.to_string() + "," + b.to_string() + ")", ex.what());
      }
    }
  }
  return rep;
}

Report monodromy_annihilator(Spin j1, Spin j2) {
  const Shape s{j1, j2};
  Report rep;
  rep.title = "monodromy annihilator on " + s.to_string();
  const Operator b = r_opposite(j1, j2) * r_matrix(j1, j2);
  Operator product = identity(s);
  const int a = j1.twice();
  const int c = j2.twice();
  for (int t = std::abs(a - c); t <= a + c; t += 2) {
    const int v_exp = t * (t + 2) - a * (a + 2) - c * (c + 2);
    product = product * (b - Operator::scalar(s, LaurentPoly::v_pow(v_exp)));
  }
  rep.expect_zero("monodromy " + s.to_string(), product);
  return rep;
}

}  // namespace qlink::rmatrix
