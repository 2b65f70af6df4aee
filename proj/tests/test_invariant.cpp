#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qlink/errors.hpp"
#include "qlink/invariant.hpp"

using namespace qlink;
using namespace qlink::invariant;
using braid::BraidWord;
using braid::ColoredBraid;
using braid::parse;
using braid::parse_colored;

namespace {

const Spin h = Spin::half();

LaurentPoly v(int e) { return LaurentPoly::v_pow(e); }

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution neg(0.4);
  std::vector<int> letters;
  for (int k = 0; k < len; ++k) letters.push_back(neg(rng) ? -gen(rng) : gen(rng));
  return BraidWord(n, letters);
}

}  // namespace

TEST_CASE("colored unknots") {
  for (int t = 0; t <= 6; ++t) {
    CHECK(rt_invariant(braid::uniform(parse("n=1;"), Spin(t))) == qint(t + 1));
  }
}

TEST_CASE("colored Hopf links") {
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      const ColoredBraid hopf(parse("n=2; 1 1"), {Spin(a), Spin(b)});
      CHECK(rt_invariant(hopf) == qint((a + 1) * (b + 1)));
    }
  }
}

TEST_CASE("torus closures of sigma_1^n against the eigenvalue formula") {
  CHECK(rt_invariant(braid::uniform(parse("n=2; 1 1 1"), h)) == v(7) + v(3) + v(-1) - v(-9));
  for (int n = -6; n <= 6; ++n) {
    std::vector<int> letters(static_cast<std::size_t>(std::abs(n)), n > 0 ? 1 : -1);
    const BraidWord w(2, letters);
    const LaurentPoly expected = oracle::to_laurent(oracle::torus_2n(n));
    CHECK(rt_invariant(braid::uniform(w, h)) == expected);
    CHECK(cs_invariant_fundamental(w) == expected);
  }
}

TEST_CASE("bracket examples and state sums") {
  const LaurentPoly d = tl::delta();
  CHECK(kauffman_bracket(parse("n=1;")) == d);
  CHECK(kauffman_bracket(parse("n=2; 1")) == -v(3) * d);
  std::mt19937 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 3;
    const BraidWord w = random_word(rng, n, trial % 7);
    CHECK(kauffman_bracket(w) == oracle::to_laurent(oracle::state_sum_bracket(n, w.letters)));
  }
}

TEST_CASE("cs value matches the quantum trace") {
  CHECK(cs_invariant_fundamental(parse("n=1;")) == qint(2));
  CHECK(cs_invariant_fundamental(parse("n=2; 1 1")) == qint(4));
  std::mt19937 rng(37);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 3;
    const BraidWord w = random_word(rng, n, trial % 8);
    CHECK(cs_invariant_fundamental(w) == rt_invariant(braid::uniform(w, h)));
  }
}

TEST_CASE("framing") {
  const ColoredBraid u(parse("n=1;"), {h});
  CHECK(rt_invariant(braid::stabilize(u, 0, 1)) == v(3) * qint(2));
  CHECK(rt_invariant(braid::stabilize(braid::uniform(parse("n=1;"), Spin(2)), 0, 1)) == v(8) * qint(3));
  for (int t = 1; t <= 4; ++t) CHECK(verify_framing(braid::uniform(parse("n=1;"), Spin(t)), 0).pass());
  CHECK(verify_framing(parse_colored("n=2; 1 1; colors=1,1/2"), 1).pass());
  CHECK(verify_framing(parse_colored("n=3; 1 -2 1"), 2).pass());
}

TEST_CASE("ambient normalization is invariant under stabilization") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const BraidWord w = random_word(rng, 3, 5);
    std::vector<Spin> colors(3);
    const auto comps = braid::components(w);
    for (std::size_t c = 0; c < comps.size(); ++c) {
      for (std::size_t p : comps[c]) colors[p] = Spin(1 + static_cast<int>(c % 2));
    }
    const ColoredBraid b(w, colors);
    const LaurentPoly ambient = rt_invariant(b, Normalization::ambient);
    CHECK(rt_invariant(braid::stabilize(b, 1, -1), Normalization::ambient) == ambient);
    CHECK(rt_invariant(braid::stabilize(b, 2, 1), Normalization::ambient) == ambient);
  }
}

TEST_CASE("doubling recursion") {
  for (int t = 2; t <= 4; ++t) CHECK(verify_recursion(braid::uniform(parse("n=1;"), Spin(t)), 0).pass());
  const ColoredBraid hopf(parse("n=2; 1 1"), {Spin(2), h});
  const Report r = verify_recursion(hopf, 0);
  INFO(r.to_text());
  CHECK(r.pass());
  const ColoredBraid cabled = braid::cable_component(hopf, 0, {h, h});
  CHECK(rt_invariant(cabled) == qint(6) + qint(2));
  CHECK(verify_recursion(parse_colored("n=2; 1 1; colors=1,1"), 0).pass());
  CHECK(verify_recursion(parse_colored("n=2; 1 1 1; colors=3/2,3/2"), 0).pass());
  CHECK(verify_recursion(parse_colored("n=3; 1 2 1 2; colors=1/2,1/2,1/2"), 0).pass());
  CHECK(verify_recursion(parse_colored("n=3; 1 1 -2 -2; colors=1,1,3/2"), 2).pass());
}

TEST_CASE("factorization and fusion") {
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      const ColoredBraid ua = braid::uniform(parse("n=1;"), Spin(a));
      const ColoredBraid ub = braid::uniform(parse("n=1;"), Spin(b));
      CHECK(verify_factorization(ua, ub).pass());
      LaurentPoly fused;
      for (int c = std::abs(a - b); c <= a + b; c += 2) fused += rt_invariant(braid::uniform(parse("n=1;"), Spin(c)));
      CHECK(rt_invariant(braid::disjoint_union(ua, ub)) == fused);
    }
  }
  const ColoredBraid trefoil = braid::uniform(parse("n=2; 1 1 1"), h);
  CHECK(verify_factorization(braid::uniform(parse("n=1;"), Spin(2)), trefoil).pass());
}

TEST_CASE("skein relation") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    const BraidWord w = random_word(rng, n, trial % 6);
    CHECK(verify_skein(w, 1 + trial % (n - 1)).pass());
  }
}

TEST_CASE("isotopy moves") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    const ColoredBraid b = braid::uniform(random_word(rng, n, 2 + trial % 6), h);
    CHECK(verify_markov(b, random_word(rng, n, 3).letters).pass());
  }
  CHECK(verify_markov(parse_colored("n=3; 1 2 1 1; colors=1,1,1"), {2, -1}).pass());
}
