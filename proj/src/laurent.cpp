#include "qlink/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "qlink/errors.hpp"

namespace qlink {

namespace {

void drop_zeros(std::vector<LaurentPoly::Term>& terms) {
  std::erase_if(terms, [](const LaurentPoly::Term& t) { return t.coef.is_zero(); });
}

// Merge two ascending term lists, combining equal exponents with `sign`.
std::vector<LaurentPoly::Term> merge(const std::vector<LaurentPoly::Term>& a,
                                     const std::vector<LaurentPoly::Term>& b, bool subtract) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].exp < b[j].exp)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].exp < a[i].exp) {
      out.push_back({b[j].exp, subtract ? -b[j].coef : b[j].coef});
      ++j;
    } else {
      GaussRat c = a[i].coef;
      if (subtract) {
        c -= b[j].coef;
      } else {
        c += b[j].coef;
      }
      if (!c.is_zero()) out.push_back({a[i].exp, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.push_back({0, GaussRat(constant)});
}

LaurentPoly::LaurentPoly(GaussRat constant) {
  if (!constant.is_zero()) terms_.push_back({0, std::move(constant)});
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().exp == t.exp) {
      out.back().coef += t.coef;
    } else {
      out.push_back(std::move(t));
    }
  }
  drop_zeros(out);
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::monomial(int v_exp, GaussRat coef) {
  if (coef.is_zero()) return {};
  return LaurentPoly(std::vector<Term>{{v_exp, std::move(coef)}});
}

int LaurentPoly::min_exp() const {
  if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
  return terms_.front().exp;
}

int LaurentPoly::max_exp() const {
  if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
  return terms_.back().exp;
}

GaussRat LaurentPoly::coefficient(int v_exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), v_exp,
                             [](const Term& t, int e) { return t.exp < e; });
  if (it != terms_.end() && it->exp == v_exp) return it->coef;
  return {};
}

bool LaurentPoly::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coef.is_real(); });
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  terms_ = merge(terms_, other.terms_, false);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  if (other.terms_.empty()) return *this;
  terms_ = merge(terms_, other.terms_, true);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    return LaurentPoly::monomial(a.terms_[0].exp + b.terms_[0].exp, a.terms_[0].coef * b.terms_[0].coef);
  }
  const int lo = a.terms_.front().exp + b.terms_.front().exp;
  const int hi = a.terms_.back().exp + b.terms_.back().exp;
  std::vector<GaussRat> acc(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      acc[static_cast<std::size_t>(ta.exp + tb.exp - lo)] += ta.coef * tb.coef;
    }
  }
  std::vector<LaurentPoly::Term> out;
  for (std::size_t k = 0; k < acc.size(); ++k) {
    if (!acc[k].is_zero()) out.push_back({lo + static_cast<int>(k), std::move(acc[k])});
  }
  return LaurentPoly(std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result = 1;
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int shift) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.exp += shift;
  return out;
}

LaurentPoly LaurentPoly::subst_v_power(int k) const {
  if (k == 0) throw UsageError("subst_v_power: exponent must be nonzero");
  std::vector<Term> out = terms_;
  for (auto& t : out) t.exp *= k;
  if (k < 0) std::reverse(out.begin(), out.end());
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
  if (is_zero()) return {};
  // Both sides shifted to ordinary polynomials; the divisor then has a
  // nonzero constant term, so divisibility is decided by long division.
  const int shift_a = min_exp();
  const int shift_b = divisor.min_exp();
  const int deg_b = divisor.max_exp() - shift_b;
  const GaussRat& lead_b = divisor.terms_.back().coef;

  std::vector<GaussRat> rem(static_cast<std::size_t>(max_exp() - shift_a + 1));
  for (const auto& t : terms_) rem[static_cast<std::size_t>(t.exp - shift_a)] = t.coef;

  std::vector<Term> quotient;
  for (int top = static_cast<int>(rem.size()) - 1; top >= deg_b; --top) {
    if (rem[static_cast<std::size_t>(top)].is_zero()) continue;
    GaussRat factor = rem[static_cast<std::size_t>(top)] / lead_b;
    const int qexp = top - deg_b;
    for (const auto& tb : divisor.terms_) {
      rem[static_cast<std::size_t>(qexp + tb.exp - shift_b)] -= factor * tb.coef;
    }
    quotient.push_back({qexp + shift_a - shift_b, std::move(factor)});
  }
  for (const auto& r : rem) {
    if (!r.is_zero()) throw InternalError("exact_div: divisor does not divide " + to_string());
  }
  std::reverse(quotient.begin(), quotient.end());
  return LaurentPoly(std::move(quotient));
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string coef;
    bool negative = false;
    if (t.coef.is_real()) {
      mpq_class c = t.coef.re();
      if (sgn(c) < 0) {
        negative = true;
        c = -c;
      }
      if (c != 1 || t.exp == 0) {
        coef = c.get_den() == 1 ? c.get_str() : "(" + c.get_str() + ")";
      }
    } else {
      coef = t.coef.to_string();
      if (coef == "i" || coef == "-i") {
        negative = coef[0] == '-';
        coef = "i";
      } else if (coef.front() != '(') {
        // pure imaginary like "3i" or "-1/2i"
        if (coef.front() == '-') {
          negative = true;
          coef.erase(0, 1);
        }
        coef = "(" + coef + ")";
      }
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    if (t.exp == 1) {
      mono = var;
    } else if (t.exp != 0) {
      mono = var + "^" + std::to_string(t.exp);
    }
    if (!coef.empty() && !mono.empty()) {
      out += coef + "*" + mono;
    } else {
      out += coef + mono;
    }
  }
  return out;
}

LaurentPoly qint(int n) {
  if (n == 0) return {};
  if (n < 0) return -qint(-n);
  std::vector<LaurentPoly::Term> terms;
  for (int e = -(n - 1); e <= n - 1; e += 2) terms.push_back({2 * e, GaussRat(1)});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly qfact(int n) {
  if (n < 0) throw UsageError("qfact: negative argument " + std::to_string(n));
  LaurentPoly out = 1;
  for (int k = 2; k <= n; ++k) out *= qint(k);
  return out;
}

LaurentPoly qpoch(const LaurentPoly& a, int base_exp, int n) {
  if (n < 0) throw UsageError("qpoch: negative length " + std::to_string(n));
  LaurentPoly out = 1;
  for (int k = 0; k < n; ++k) out *= LaurentPoly(1) - a.shifted(2 * k * base_exp);
  return out;
}

LaurentPoly phi21_terminating_c0(int n, const LaurentPoly& b, int base_exp) {
  if (n < 0) throw UsageError("phi21_terminating_c0: negative n");
  const LaurentPoly top = LaurentPoly::q_pow(-n * base_exp);
  LaurentPoly sum;
  for (int k = 0; k <= n; ++k) {
    LaurentPoly numer = qpoch(top, base_exp, k) * qpoch(b, base_exp, k);
    const LaurentPoly denom = qpoch(LaurentPoly::q_pow(base_exp), base_exp, k);
    sum += numer.exact_div(denom).shifted(2 * k * base_exp);
  }
  return sum;
}

LaurentPoly subst_x_iv(const LaurentPoly& p) {
  // i^n cycles with period 4.
  static const GaussRat powers[4] = {GaussRat(1), GaussRat(0, 1), GaussRat(-1), GaussRat(0, -1)};
  std::vector<LaurentPoly::Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    const int r = ((t.exp % 4) + 4) % 4;
    out.push_back({t.exp, t.coef * powers[r]});
  }
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly phase_mul(const LaurentPoly& p, int w) {
  static const GaussRat powers[4] = {GaussRat(1), GaussRat(0, -1), GaussRat(-1), GaussRat(0, 1)};
  const int r = ((w % 4) + 4) % 4;
  return p * LaurentPoly(powers[r]);
}

LaurentPoly q_minus_qinv() { return LaurentPoly::v_pow(2) - LaurentPoly::v_pow(-2); }

}  // namespace qlink
