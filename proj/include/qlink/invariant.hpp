#pragma once

#include <cstddef>
#include <vector>

#include "qlink/braid.hpp"
#include "qlink/laurent.hpp"
#include "qlink/operator.hpp"
#include "qlink/report.hpp"
#include "qlink/temperley_lieb.hpp"

namespace qlink::invariant {

enum class Normalization { none, ambient };

// Operator of the braid on the bottom-color space; letters +-i act as the
// braided R-matrix (or its inverse) on factors i, i+1.
Operator braid_operator(const braid::ColoredBraid& b);

// Tr(sigma(L) mu^{(x)n}). With Normalization::ambient each component c of
// spin j_c is further multiplied by q^{-2 j_c (j_c + 1) w_c}, w_c its self-writhe.
LaurentPoly rt_invariant(const braid::ColoredBraid& b, Normalization norm = Normalization::none);

// Image of the braid word in the Temperley-Lieb algebra (variable x).
tl::TLElement tl_image(const braid::BraidWord& w);

// Bracket of the closure, normalized so that a single circle is -x^2 - x^-2.
LaurentPoly kauffman_bracket(const braid::BraidWord& w);

// (-i)^w <L>(x = i q^{1/2}); throws InternalError if the result is not real.
LaurentPoly cs_invariant_fundamental(const braid::BraidWord& w);

// b with component `comp` recolored to spin j.
braid::ColoredBraid recolor(const braid::ColoredBraid& b, std::size_t comp, Spin j);

// Markov stabilization at `strand` multiplies Y by q^{+-2j(j+1)}.
Report verify_framing(const braid::ColoredBraid& b, std::size_t strand);

// Y(b; j) = Y(cabled (1/2, j-1/2)) - Y(b; j-1) on component `comp`, plus the
// spin-0 removal rule Y(b; 0) = Y(b without comp) when the component can be
// dropped.
Report verify_recursion(const braid::ColoredBraid& b, std::size_t comp);

// Y(a disjoint-union b) = Y(a) Y(b)
Report verify_factorization(const braid::ColoredBraid& a, const braid::ColoredBraid& b);

// q^{1/2} Y(w s_i) - q^{-1/2} Y(w s_i^{-1}) = (q - q^-1) Y(w), all spins 1/2.
Report verify_skein(const braid::BraidWord& w, int i);

// Y and the bracket are unchanged by conjugation with g, and by inserting
// s_i s_i^{-1} or applying a braid-relation rewrite where one applies.
Report verify_markov(const braid::ColoredBraid& b, const std::vector<int>& g);

}  // namespace qlink::invariant
