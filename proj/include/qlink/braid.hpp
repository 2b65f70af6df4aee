#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlink/spin.hpp"

namespace qlink::braid {

// Letters are signed generator indices +-i with 1 <= i < n_strands. A word is
// read top-first: the operator of "a b c" is sigma_a sigma_b sigma_c, so the
// last letter is the first crossing a strand meets going up from the bottom.
struct BraidWord {
  int n_strands = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> word);  // validates

  std::size_t length() const { return letters.size(); }
  int exponent_sum() const;
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
};

// perm[p] = bottom position of the strand that ends at top position p.
using Permutation = std::vector<std::size_t>;

struct ColoredBraid {
  BraidWord word;
  std::vector<Spin> colors;  // at the bottom endpoints

  ColoredBraid() = default;
  // Validates length and closure consistency.
  ColoredBraid(BraidWord w, std::vector<Spin> c);

  int n_strands() const { return word.n_strands; }
  friend bool operator==(const ColoredBraid&, const ColoredBraid&) = default;
};

ColoredBraid uniform(BraidWord w, Spin j);

// "n=3; 1 -2 1" (commas also separate letters). The letters part may be
// empty or absent: "n=1;" and "n=1" are the trivial 1-braid.
BraidWord parse(std::string_view text);
// Like parse, additionally accepting "; colors=1/2,1". Without colors every
// strand gets `default_color`.
ColoredBraid parse_colored(std::string_view text, Spin default_color = Spin::half());

std::string format(const BraidWord& w);
std::string format(const ColoredBraid& b);

Permutation underlying_permutation(const BraidWord& w);

// Colors read at the top of the braid (bottom colors transported upward).
std::vector<Spin> top_colors(const BraidWord& w, const std::vector<Spin>& bottom);

// Cycles of the permutation, each a sorted list of bottom positions; ordered
// by smallest member. Color consistency is checked for colored braids.
std::vector<std::vector<std::size_t>> components(const BraidWord& w);
std::vector<std::vector<std::size_t>> components(const ColoredBraid& b);

// component id of every bottom position
std::vector<std::size_t> component_of(const BraidWord& w);

struct WritheBreakdown {
  int total = 0;
  std::vector<int> per_component_self;
  std::map<std::pair<std::size_t, std::size_t>, int> linking;  // key (a, b) with a < b; sum of crossing signs
};

WritheBreakdown writhe(const BraidWord& w);

ColoredBraid disjoint_union(const ColoredBraid& a, const ColoredBraid& b);

// Positive permutation braid carrying a block of `a` strands at positions
// p..p+a-1 over/across a block of `b` strands to its right (p is 1-based).
// Returned top-first. Negative crossings use the inverse of the mirror block.
std::vector<int> block_crossing(int p, int a, int b, bool positive);

// Replaces every strand of component `comp` by two parallel strands colored
// new_colors.first (left) and new_colors.second (right).
ColoredBraid cable_component(const ColoredBraid& b, std::size_t comp, std::pair<Spin, Spin> new_colors);

// Removes the strands of component `comp` together with every letter acting
// on them. Only meaningful when the component is unlinked from the rest in
// the sense of having color 0 (the operation itself does not check colors).
ColoredBraid delete_component(const ColoredBraid& b, std::size_t comp);

// Conjugates so that the strand at bottom position `strand` sits at position
// 0, then adds a new leftmost strand of the same color joined to it by
// sigma_1^{sign} at the bottom (Markov stabilization, a framing kink).
ColoredBraid stabilize(const ColoredBraid& b, std::size_t strand, int sign);

// g w g^{-1} for a word g.
BraidWord conjugate(const BraidWord& w, const std::vector<int>& g);

BraidWord inverse(const BraidWord& w);

// Colored version of conjugate; the bottom colors follow g^{-1}.
ColoredBraid conjugate(const ColoredBraid& b, const std::vector<int>& g);

}  // namespace qlink::braid
