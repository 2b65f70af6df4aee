#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qlink/gauss_rat.hpp"

namespace qlink {

// Exact Laurent polynomial in v = q^{1/2} with Gaussian-rational coefficients.
//
// Terms are stored in ascending exponent order with no zero coefficients, so
// structural equality is polynomial equality. The same type doubles as a
// polynomial in the Kauffman variable x where that is the documented reading.
class LaurentPoly {
 public:
  struct Term {
    int exp;
    GaussRat coef;
    friend bool operator==(const Term& a, const Term& b) {
      return a.exp == b.exp && a.coef == b.coef;
    }
  };

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  LaurentPoly(GaussRat constant);  // NOLINT(google-explicit-constructor)

  // Builds from arbitrary (exp, coef) pairs; duplicates are summed.
  static LaurentPoly from_terms(std::vector<Term> terms);
  static LaurentPoly monomial(int v_exp, GaussRat coef = 1);
  static LaurentPoly v_pow(int v_exp) { return monomial(v_exp); }
  static LaurentPoly q_pow(int q_exp) { return monomial(2 * q_exp); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  int min_exp() const;
  int max_exp() const;
  GaussRat coefficient(int v_exp) const;

  bool is_real() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  LaurentPoly pow(unsigned n) const;

  // Multiply by v^shift.
  LaurentPoly shifted(int shift) const;

  // v -> v^k termwise; k == 0 is rejected.
  LaurentPoly subst_v_power(int k) const;

  // Quotient a / b when b divides a in the Laurent ring; throws otherwise.
  LaurentPoly exact_div(const LaurentPoly& divisor) const;

  // Ascending-exponent text, e.g. "v^-2 + v^2"; "0" for the zero polynomial.
  // `var` names the variable ("v" by default, "x" for bracket values).
  std::string to_string(const std::string& var = "v") const;

 private:
  explicit LaurentPoly(std::vector<Term> canonical) : terms_(std::move(canonical)) {}
  std::vector<Term> terms_;
};

// (q^n - q^-n)/(q - q^-1) = v^{2(n-1)} + v^{2(n-3)} + ... ; qint(-n) = -qint(n).
LaurentPoly qint(int n);

// [n]_q! with [0]_q! = 1; n < 0 rejected.
LaurentPoly qfact(int n);

// prod_{k=0}^{n-1} (1 - a * q^{k*base_exp}).
LaurentPoly qpoch(const LaurentPoly& a, int base_exp, int n);

// Terminating basic hypergeometric sum with c = 0 and base p = q^{base_exp}:
//   sum_{k=0}^{n} (p^{-n}; p)_k (b; p)_k / (p; p)_k * p^k
// which equals b^n.
LaurentPoly phi21_terminating_c0(int n, const LaurentPoly& b, int base_exp);

// Reads p as a polynomial in x and substitutes x = i v.
LaurentPoly subst_x_iv(const LaurentPoly& p);

// p * (-i)^w.
LaurentPoly phase_mul(const LaurentPoly& p, int w);

inline bool is_real(const LaurentPoly& p) { return p.is_real(); }

// q - q^{-1}, used throughout.
LaurentPoly q_minus_qinv();

}  // namespace qlink
