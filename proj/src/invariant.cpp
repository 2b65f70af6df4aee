#include "qlink/invariant.hpp"

#include <map>
#include <tuple>

#include "qlink/errors.hpp"
#include "qlink/rmatrix.hpp"
#include "qlink/uqsu2.hpp"

namespace qlink::invariant {

namespace {

using braid::BraidWord;
using braid::ColoredBraid;

std::string name_of(const ColoredBraid& b) { return braid::format(b); }

// Finds a same-sign s_i s_{i+1} s_i (or s_{i+1} s_i s_{i+1}) and rewrites it
// to the other side of the braid relation.
std::optional<BraidWord> braid_relation_rewrite(const BraidWord& w) {
  const auto& l = w.letters;
  for (std::size_t k = 0; k + 2 < l.size(); ++k) {
    if (l[k] != l[k + 2]) continue;
    if ((l[k] > 0) != (l[k + 1] > 0)) continue;
    if (std::abs(std::abs(l[k]) - std::abs(l[k + 1])) != 1) continue;
    std::vector<int> out = l;
    out[k] = l[k + 1];
    out[k + 1] = l[k];
    out[k + 2] = l[k + 1];
    return BraidWord(w.n_strands, std::move(out));
  }
  return std::nullopt;
}

}  // namespace

Operator braid_operator(const ColoredBraid& b) {
  std::vector<Spin> colors = b.colors;
  Operator acc = identity(Shape(colors));
  // (colors, position, sign) -> embedded generator
  std::map<std::tuple<std::vector<Spin>, int, int>, Operator> generators;
  for (auto it = b.word.letters.rbegin(); it != b.word.letters.rend(); ++it) {
    const int letter = *it;
    const auto i = static_cast<std::size_t>(std::abs(letter)) - 1;
    const auto key = std::make_tuple(colors, static_cast<int>(i), letter > 0 ? 1 : -1);
    auto found = generators.find(key);
    if (found == generators.end()) {
      const Spin left = colors[i];
      const Spin right = colors[i + 1];
      const Operator local = letter > 0 ? rmatrix::braided_r(left, right) : rmatrix::braided_r_inv(right, left);
      found = generators.emplace(key, embed(local, {i, i + 1}, Shape(colors))).first;
    }
    acc = found->second * acc;
    std::swap(colors[i], colors[i + 1]);
  }
  return acc;
}

LaurentPoly rt_invariant(const ColoredBraid& b, Normalization norm) {
  const Operator op = braid_operator(b);
  std::vector<std::optional<Operator>> weights;
  for (const Spin j : b.colors) weights.emplace_back(uqsu2::mu(j));
  LaurentPoly y = full_trace(op, weights);
  if (norm == Normalization::ambient) {
    const auto comps = braid::components(b);
    const auto w = braid::writhe(b.word);
    int shift = 0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      shift -= b.colors[comps[c].front()].framing_v_exp() * w.per_component_self[c];
    }
    y = y.shifted(shift);
  }
  return y;
}

tl::TLElement tl_image(const BraidWord& w) {
  tl::TLElement acc = tl::TLElement::identity(w.n_strands);
  for (int letter : w.letters) acc = tl::tl_mul(acc, tl::crossing(w.n_strands, letter));
  return acc;
}

LaurentPoly kauffman_bracket(const BraidWord& w) { return tl::close(tl_image(w)); }

LaurentPoly cs_invariant_fundamental(const BraidWord& w) {
  const LaurentPoly value = phase_mul(subst_x_iv(kauffman_bracket(w)), w.exponent_sum());
  if (!value.is_real()) {
    throw InternalError("cs_invariant_fundamental: non-real value " + value.to_string() + " for " + braid::format(w));
  }
  return value;
}

ColoredBraid recolor(const ColoredBraid& b, std::size_t comp, Spin j) {
  const auto comps = braid::components(b);
  if (comp >= comps.size()) throw UsageError("recolor: no component " + std::to_string(comp));
  std::vector<Spin> colors = b.colors;
  for (std::size_t p : comps[comp]) colors[p] = j;
  return ColoredBraid(b.word, std::move(colors));
}

Report verify_framing(const ColoredBraid& b, std::size_t strand) {
  Report rep;
  rep.title = "framing change on " + name_of(b) + " at strand " + std::to_string(strand + 1);
  const LaurentPoly base = rt_invariant(b);
  const int e = b.colors.at(strand).framing_v_exp();
  for (int sign : {1, -1}) {
    const ColoredBraid kinked = braid::stabilize(b, strand, sign);
    rep.expect_equal(std::string(sign > 0 ? "positive" : "negative") + " kink " + name_of(kinked), rt_invariant(kinked),
                     base.shifted(sign * e));
  }
  return rep;
}

Report verify_recursion(const ColoredBraid& b, std::size_t comp) {
  Report rep;
  rep.title = "doubling recursion on " + name_of(b) + " component " + std::to_string(comp);
  const auto comps = braid::components(b);
  if (comp >= comps.size()) throw UsageError("verify_recursion: no component " + std::to_string(comp));
  const Spin j = b.colors[comps[comp].front()];
  if (j.twice() < 1) throw UsageError("verify_recursion: component color must be at least 1/2");

  const ColoredBraid cabled = braid::cable_component(b, comp, {Spin::half(), Spin(j.twice() - 1)});
  LaurentPoly rhs = rt_invariant(cabled);
  if (j.twice() >= 2) rhs -= rt_invariant(recolor(b, comp, Spin(j.twice() - 2)));
  rep.expect_equal("Y(j) = Y(cabled) - Y(j-1) via " + name_of(cabled), rt_invariant(b), rhs);

  const ColoredBraid trivial = recolor(b, comp, Spin(0));
  if (comps.size() > 1) {
    const ColoredBraid removed = braid::delete_component(trivial, comp);
    rep.expect_equal("spin-0 component removal via " + name_of(removed), rt_invariant(trivial), rt_invariant(removed));
  } else {
    rep.expect_equal("spin-0 knot has value 1", rt_invariant(trivial), LaurentPoly(1));
  }
  return rep;
}

Report verify_factorization(const ColoredBraid& a, const ColoredBraid& b) {
  Report rep;
  rep.title = "disjoint union of " + name_of(a) + " and " + name_of(b);
  const ColoredBraid u = braid::disjoint_union(a, b);
  rep.expect_equal("Y(a u b) = Y(a) Y(b)", rt_invariant(u), rt_invariant(a) * rt_invariant(b));
  return rep;
}

Report verify_skein(const BraidWord& w, int i) {
  Report rep;
  rep.title = "skein relation on " + braid::format(w) + " at generator " + std::to_string(i);
  if (i < 1 || i >= w.n_strands) throw UsageError("verify_skein: generator index out of range");
  std::vector<int> plus = w.letters;
  plus.push_back(i);
  std::vector<int> minus = w.letters;
  minus.push_back(-i);
  const Spin h = Spin::half();
  const LaurentPoly y_plus = rt_invariant(braid::uniform(BraidWord(w.n_strands, plus), h));
  const LaurentPoly y_minus = rt_invariant(braid::uniform(BraidWord(w.n_strands, minus), h));
  const LaurentPoly y0 = rt_invariant(braid::uniform(w, h));
  rep.expect_equal("q^1/2 Y(+) - q^-1/2 Y(-) = (q - q^-1) Y(0)", y_plus.shifted(1) - y_minus.shifted(-1),
                   q_minus_qinv() * y0);
  return rep;
}

Report verify_markov(const ColoredBraid& b, const std::vector<int>& g) {
  Report rep;
  rep.title = "isotopy moves on " + name_of(b);
  const LaurentPoly y = rt_invariant(b);
  const ColoredBraid conj = braid::conjugate(b, g);
  rep.expect_equal("conjugation " + name_of(conj), rt_invariant(conj), y);
  const LaurentPoly bracket = kauffman_bracket(b.word);
  rep.expect_equal("bracket under conjugation", kauffman_bracket(conj.word), bracket);

  if (b.n_strands() >= 2) {
    std::vector<int> letters = b.word.letters;
    const auto mid = static_cast<std::ptrdiff_t>(letters.size() / 2);
    const int i = 1 + static_cast<int>(letters.size() % static_cast<std::size_t>(b.n_strands() - 1));
    letters.insert(letters.begin() + mid, {i, -i});
    const ColoredBraid inserted(BraidWord(b.n_strands(), letters), b.colors);
    rep.expect_equal("cancelling pair " + name_of(inserted), rt_invariant(inserted), y);
    rep.expect_equal("bracket with cancelling pair", kauffman_bracket(inserted.word), bracket);
  }
  if (auto rewritten = braid_relation_rewrite(b.word)) {
    const ColoredBraid moved(*rewritten, b.colors);
    rep.expect_equal("braid relation " + name_of(moved), rt_invariant(moved), y);
    rep.expect_equal("bracket under braid relation", kauffman_bracket(moved.word), bracket);
  }
  return rep;
}

}  // namespace qlink::invariant
