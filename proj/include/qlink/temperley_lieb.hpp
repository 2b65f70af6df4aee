#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qlink/laurent.hpp"

namespace qlink::tl {

// Noncrossing perfect matching of n bottom points (0..n-1) and n top points
// (n..2n-1), both numbered left to right.
class PlanarMatching {
 public:
  static PlanarMatching identity(int n);
  // cup-cap joining strands i and i+1 (1-based i), identity elsewhere
  static PlanarMatching hook(int n, int i);
  // Validates that `partner` is an involution without fixed points and noncrossing.
  static PlanarMatching from_partners(std::vector<int> partner);

  int strands() const { return static_cast<int>(partner_.size() / 2); }
  int partner(int point) const { return partner_[static_cast<std::size_t>(point)]; }
  const std::vector<int>& partners() const { return partner_; }

  std::string to_string() const;

  friend auto operator<=>(const PlanarMatching&, const PlanarMatching&) = default;

 private:
  explicit PlanarMatching(std::vector<int> partner) : partner_(std::move(partner)) {}
  std::vector<int> partner_;
};

// a stacked on top of b (b acts first). Returns the matching and the number
// of closed loops created in the middle.
std::pair<PlanarMatching, int> stack(const PlanarMatching& a, const PlanarMatching& b);

// Number of loops after joining top point p to bottom point p for every p.
int closure_loops(const PlanarMatching& m);

// Joins top 0 to bottom 0. Returns the matching on the remaining n-1 strands
// and whether a closed loop was formed.
std::pair<PlanarMatching, int> close_first_strand(const PlanarMatching& m);

// Linear combination of matchings with coefficients in x (stored as the
// exponent variable of LaurentPoly).
class TLElement {
 public:
  explicit TLElement(int n) : n_(n) {}
  static TLElement basis(const PlanarMatching& m, LaurentPoly coef = 1);
  static TLElement identity(int n) { return basis(PlanarMatching::identity(n)); }
  static TLElement hook(int n, int i) { return basis(PlanarMatching::hook(n, i)); }

  int strands() const { return n_; }
  const std::map<PlanarMatching, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coefficient(const PlanarMatching& m) const;

  void add(const PlanarMatching& m, const LaurentPoly& c);
  TLElement& operator+=(const TLElement& other);
  TLElement& operator-=(const TLElement& other);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) { return a -= b; }
  friend TLElement operator*(const LaurentPoly& c, const TLElement& a);
  friend bool operator==(const TLElement&, const TLElement&) = default;

  // Substitutes x = i v in every coefficient.
  TLElement subst_x_iv() const;

  std::string to_string() const;

 private:
  int n_;
  std::map<PlanarMatching, LaurentPoly> terms_;
};

// loop value -x^2 - x^{-2}
LaurentPoly delta();

// product a b (b below a); every closed loop contributes delta
TLElement tl_mul(const TLElement& a, const TLElement& b);

// Kauffman-bracket image of a braid generator: +i -> x id + x^-1 e_i,
// -i -> x^-1 id + x e_i.
TLElement crossing(int n, int letter);

// Full closure: sum of coef * delta^loops.
LaurentPoly close(const TLElement& a);

// Closure of the first strand only.
TLElement close_first(const TLElement& a);

}  // namespace qlink::tl
