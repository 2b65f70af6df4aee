#include "qlink/temperley_lieb.hpp"

#include <numeric>

#include "qlink/errors.hpp"

namespace qlink::tl {

namespace {

// Follows a path that alternates between `inner` edges and `outer` edges.
// Points with outer[p] == -1 are free ends. Returns the free-end pairing and
// the number of closed cycles.
std::pair<std::vector<int>, int> trace_paths(const std::vector<int>& inner, const std::vector<int>& outer) {
  const std::size_t n = inner.size();
  std::vector<int> end_partner(n, -1);
  std::vector<char> seen(n, 0);
  for (std::size_t start = 0; start < n; ++start) {
    if (outer[start] != -1 || seen[start]) continue;
    int p = static_cast<int>(start);
    seen[start] = 1;
    while (true) {
      p = inner[static_cast<std::size_t>(p)];
      seen[static_cast<std::size_t>(p)] = 1;
      if (outer[static_cast<std::size_t>(p)] == -1) break;
      p = outer[static_cast<std::size_t>(p)];
      seen[static_cast<std::size_t>(p)] = 1;
    }
    end_partner[start] = p;
    end_partner[static_cast<std::size_t>(p)] = static_cast<int>(start);
  }
  int loops = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++loops;
    int p = static_cast<int>(start);
    do {
      seen[static_cast<std::size_t>(p)] = 1;
      p = inner[static_cast<std::size_t>(p)];
      seen[static_cast<std::size_t>(p)] = 1;
      p = outer[static_cast<std::size_t>(p)];
    } while (p != static_cast<int>(start));
  }
  return {end_partner, loops};
}

bool noncrossing(const std::vector<int>& partner, int n) {
  // Place points on a circle: bottom 0..n-1 left to right, then top n-1..0.
  auto circle = [n](int p) { return p < n ? p : 3 * n - 1 - p; };
  for (int a = 0; a < 2 * n; ++a) {
    const int b = partner[static_cast<std::size_t>(a)];
    if (b < a) continue;
    int lo = circle(a);
    int hi = circle(b);
    if (lo > hi) std::swap(lo, hi);
    for (int c = 0; c < 2 * n; ++c) {
      const int d = partner[static_cast<std::size_t>(c)];
      if (d < c || c == a) continue;
      const bool c_in = circle(c) > lo && circle(c) < hi;
      const bool d_in = circle(d) > lo && circle(d) < hi;
      if (c_in != d_in) return false;
    }
  }
  return true;
}

}  // namespace

PlanarMatching PlanarMatching::identity(int n) {
  std::vector<int> p(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    p[static_cast<std::size_t>(k)] = n + k;
    p[static_cast<std::size_t>(n + k)] = k;
  }
  return PlanarMatching(std::move(p));
}

PlanarMatching PlanarMatching::hook(int n, int i) {
  if (i < 1 || i >= n) throw UsageError("hook index out of range");
  PlanarMatching m = identity(n);
  auto& p = m.partner_;
  const auto a = static_cast<std::size_t>(i - 1);
  p[a] = i;
  p[a + 1] = i - 1;
  p[static_cast<std::size_t>(n) + a] = n + i;
  p[static_cast<std::size_t>(n) + a + 1] = n + i - 1;
  return m;
}

PlanarMatching PlanarMatching::from_partners(std::vector<int> partner) {
  const int size = static_cast<int>(partner.size());
  if (size % 2 != 0) throw UsageError("matching needs an even number of points");
  for (int k = 0; k < size; ++k) {
    const int q = partner[static_cast<std::size_t>(k)];
    if (q < 0 || q >= size || q == k || partner[static_cast<std::size_t>(q)] != k) {
      throw UsageError("matching is not a fixed-point-free involution");
    }
  }
  if (!noncrossing(partner, size / 2)) throw UsageError("matching is not planar");
  return PlanarMatching(std::move(partner));
}

std::string PlanarMatching::to_string() const {
  std::string out = "{";
  bool first = true;
  const int n = strands();
  auto name = [n](int p) { return p < n ? "b" + std::to_string(p + 1) : "t" + std::to_string(p - n + 1); };
  for (int k = 0; k < 2 * n; ++k) {
    if (partner_[static_cast<std::size_t>(k)] < k) continue;
    out += (first ? "" : " ") + name(k) + "-" + name(partner_[static_cast<std::size_t>(k)]);
    first = false;
  }
  return out + "}";
}

std::pair<PlanarMatching, int> stack(const PlanarMatching& a, const PlanarMatching& b) {
  const int n = a.strands();
  if (b.strands() != n) throw UsageError("stack: strand counts differ");
  // Points 0..2n-1 are b's, 2n..4n-1 are a's. b's top joins a's bottom.
  std::vector<int> inner(static_cast<std::size_t>(4 * n));
  std::vector<int> outer(static_cast<std::size_t>(4 * n), -1);
  for (int p = 0; p < 2 * n; ++p) {
    inner[static_cast<std::size_t>(p)] = b.partner(p);
    inner[static_cast<std::size_t>(2 * n + p)] = 2 * n + a.partner(p);
  }
  for (int k = 0; k < n; ++k) {
    outer[static_cast<std::size_t>(n + k)] = 2 * n + k;
    outer[static_cast<std::size_t>(2 * n + k)] = n + k;
  }
  auto [ends, loops] = trace_paths(inner, outer);
  // Free ends: b's bottom (0..n-1) and a's top (3n..4n-1).
  auto relabel = [n](int p) { return p < n ? p : p - 2 * n; };
  std::vector<int> partner(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    partner[static_cast<std::size_t>(k)] = relabel(ends[static_cast<std::size_t>(k)]);
    partner[static_cast<std::size_t>(n + k)] = relabel(ends[static_cast<std::size_t>(3 * n + k)]);
  }
  return {PlanarMatching::from_partners(std::move(partner)), loops};
}

int closure_loops(const PlanarMatching& m) {
  const int n = m.strands();
  std::vector<int> outer(static_cast<std::size_t>(2 * n));
  for (int k = 0; k < n; ++k) {
    outer[static_cast<std::size_t>(k)] = n + k;
    outer[static_cast<std::size_t>(n + k)] = k;
  }
  return trace_paths(m.partners(), outer).second;
}

std::pair<PlanarMatching, int> close_first_strand(const PlanarMatching& m) {
  const int n = m.strands();
  if (n < 1) throw UsageError("close_first_strand: no strands");
  std::vector<int> outer(static_cast<std::size_t>(2 * n), -1);
  outer[0] = n;
  outer[static_cast<std::size_t>(n)] = 0;
  auto [ends, loops] = trace_paths(m.partners(), outer);
  const int r = n - 1;
  // old bottom k (k >= 1) -> new k-1; old top n+k -> new r+k-1
  auto relabel = [n, r](int p) { return p < n ? p - 1 : r + (p - n) - 1; };
  std::vector<int> partner(static_cast<std::size_t>(2 * r));
  for (int k = 1; k < n; ++k) {
    partner[static_cast<std::size_t>(k - 1)] = relabel(ends[static_cast<std::size_t>(k)]);
    partner[static_cast<std::size_t>(r + k - 1)] = relabel(ends[static_cast<std::size_t>(n + k)]);
  }
  return {PlanarMatching::from_partners(std::move(partner)), loops};
}

TLElement TLElement::basis(const PlanarMatching& m, LaurentPoly coef) {
  TLElement out(m.strands());
  out.add(m, coef);
  return out;
}

LaurentPoly TLElement::coefficient(const PlanarMatching& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void TLElement::add(const PlanarMatching& m, const LaurentPoly& c) {
  if (m.strands() != n_) throw UsageError("TLElement: strand count mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

TLElement& TLElement::operator+=(const TLElement& other) {
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

TLElement& TLElement::operator-=(const TLElement& other) {
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

TLElement operator*(const LaurentPoly& c, const TLElement& a) {
  TLElement out(a.n_);
  for (const auto& [m, coef] : a.terms_) out.add(m, c * coef);
  return out;
}

TLElement TLElement::subst_x_iv() const {
  TLElement out(n_);
  for (const auto& [m, c] : terms_) out.add(m, qlink::subst_x_iv(c));
  return out;
}

std::string TLElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string("x") + ")" + m.to_string();
  }
  return out;
}

LaurentPoly delta() { return -LaurentPoly::v_pow(2) - LaurentPoly::v_pow(-2); }

TLElement tl_mul(const TLElement& a, const TLElement& b) {
  if (a.strands() != b.strands()) throw UsageError("tl_mul: strand counts differ");
  const LaurentPoly d = delta();
  TLElement out(a.strands());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto [m, loops] = stack(ma, mb);
      out.add(m, ca * cb * d.pow(static_cast<unsigned>(loops)));
    }
  }
  return out;
}

TLElement crossing(int n, int letter) {
  const int i = letter > 0 ? letter : -letter;
  const int s = letter > 0 ? 1 : -1;
  TLElement out(n);
  out.add(PlanarMatching::identity(n), LaurentPoly::v_pow(s));
  out.add(PlanarMatching::hook(n, i), LaurentPoly::v_pow(-s));
  return out;
}

LaurentPoly close(const TLElement& a) {
  const LaurentPoly d = delta();
  LaurentPoly out;
  for (const auto& [m, c] : a.terms()) out += c * d.pow(static_cast<unsigned>(closure_loops(m)));
  return out;
}

TLElement close_first(const TLElement& a) {
  const LaurentPoly d = delta();
  TLElement out(a.strands() - 1);
  for (const auto& [m, c] : a.terms()) {
    auto [rest, loops] = close_first_strand(m);
    out.add(rest, c * d.pow(static_cast<unsigned>(loops)));
  }
  return out;
}

}  // namespace qlink::tl
