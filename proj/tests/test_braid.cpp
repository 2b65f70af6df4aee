#include <random>

#include "doctest.h"
#include "qlink/braid.hpp"
#include "qlink/errors.hpp"

using namespace qlink;
using namespace qlink::braid;

namespace {

const Spin h = Spin::half();

BraidWord random_word(std::mt19937& rng, int n, int len) {
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution neg(0.4);
  std::vector<int> letters;
  for (int k = 0; k < len; ++k) letters.push_back(neg(rng) ? -gen(rng) : gen(rng));
  return BraidWord(n, letters);
}

// Component k gets palette[k % size].
ColoredBraid color_components(const BraidWord& w, const std::vector<Spin>& palette) {
  std::vector<Spin> colors(static_cast<std::size_t>(w.n_strands));
  const auto comps = components(w);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (std::size_t p : comps[c]) colors[p] = palette[c % palette.size()];
  }
  return ColoredBraid(w, colors);
}

// Independent expansion of a permutation when some bottom strands are doubled.
Permutation blocked(const Permutation& perm, const std::vector<char>& doubled) {
  const std::size_t n = perm.size();
  std::vector<std::size_t> bottom_offset(n + 1, 0);
  std::vector<std::size_t> top_offset(n + 1, 0);
  for (std::size_t q = 0; q < n; ++q) bottom_offset[q + 1] = bottom_offset[q] + (doubled[q] ? 2 : 1);
  for (std::size_t p = 0; p < n; ++p) top_offset[p + 1] = top_offset[p] + (doubled[perm[p]] ? 2 : 1);
  Permutation out(bottom_offset[n]);
  for (std::size_t p = 0; p < n; ++p) {
    const std::size_t width = doubled[perm[p]] ? 2 : 1;
    for (std::size_t s = 0; s < width; ++s) out[top_offset[p] + s] = bottom_offset[perm[p]] + s;
  }
  return out;
}

}  // namespace

TEST_CASE("parsing and formatting") {
  const BraidWord t = parse("n=2; 1 1 1");
  CHECK(t.n_strands == 2);
  CHECK(t.letters == std::vector<int>{1, 1, 1});
  CHECK(parse("n=3; 1 -1").letters == std::vector<int>{1, -1});
  CHECK(parse("n=3; 1,-2, 1").letters == std::vector<int>{1, -2, 1});
  CHECK(parse("n=1;").letters.empty());
  CHECK(parse("n=1").n_strands == 1);
  CHECK_THROWS_AS(parse("n=2; 3"), UsageError);
  CHECK_THROWS_AS(parse("n=2; 0"), UsageError);
  CHECK_THROWS_AS(parse("n=0;"), UsageError);
  CHECK_THROWS_AS(parse("2; 1"), UsageError);
  CHECK_THROWS_AS(parse("n=2; 1 x"), UsageError);

  const ColoredBraid c = parse_colored("n=2; 1 1; colors=1,1/2");
  CHECK(c.colors == std::vector<Spin>{Spin(2), h});
  CHECK_THROWS_AS(parse_colored("n=2; 1; colors=1/2,1"), UsageError);
  CHECK_THROWS_AS(parse_colored("n=2; 1 1; colors=1/2"), UsageError);
  CHECK(parse_colored("n=2; 1 1 1").colors == std::vector<Spin>{h, h});

  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const BraidWord w = random_word(rng, 4, trial % 9);
    CHECK(parse(format(w)) == w);
    const ColoredBraid cb = color_components(w, {h, Spin(2), Spin(3)});
    CHECK(parse_colored(format(cb)) == cb);
  }
}

TEST_CASE("underlying permutation and components") {
  CHECK(underlying_permutation(parse("n=2; 1")) == Permutation{1, 0});
  CHECK(underlying_permutation(parse("n=2; 1 1")) == Permutation{0, 1});
  const Permutation p = underlying_permutation(parse("n=3; 1 2"));
  CHECK(p[0] != 0);
  CHECK(p[p[p[0]]] == 0);
  CHECK(components(parse("n=3; 1 2")).size() == 1);

  CHECK(components(uniform(parse("n=2; 1 1"), h)).size() == 2);
  CHECK(components(uniform(parse("n=2; 1 1 1"), h)).size() == 1);
  CHECK_THROWS_AS(ColoredBraid(parse("n=2; 1"), {h, Spin(2)}), UsageError);
}

TEST_CASE("writhe") {
  const WritheBreakdown t = writhe(parse("n=2; 1 1 1"));
  CHECK(t.total == 3);
  CHECK(t.per_component_self == std::vector<int>{3});
  const WritheBreakdown hopf = writhe(parse("n=2; 1 1"));
  CHECK(hopf.total == 2);
  CHECK(hopf.per_component_self == std::vector<int>{0, 0});
  CHECK(hopf.linking.at({0, 1}) == 2);
  CHECK(writhe(parse("n=2; 1 -1")).total == 0);

  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const BraidWord w = random_word(rng, 4, 8);
    const WritheBreakdown wb = writhe(w);
    int sum = 0;
    for (int s : wb.per_component_self) sum += s;
    for (const auto& [pair, l] : wb.linking) sum += l;
    CHECK(sum == wb.total);
    CHECK(wb.total == w.exponent_sum());
  }
}

TEST_CASE("disjoint union") {
  const ColoredBraid u = disjoint_union(uniform(parse("n=1;"), h), uniform(parse("n=1;"), Spin(2)));
  CHECK(u.word == parse("n=2;"));
  CHECK(u.colors == std::vector<Spin>{h, Spin(2)});
  const ColoredBraid v = disjoint_union(uniform(parse("n=2; 1 1 1"), h), uniform(parse("n=1;"), h));
  CHECK(v.word == parse("n=3; 1 1 1"));
  const ColoredBraid w = disjoint_union(uniform(parse("n=1;"), h), uniform(parse("n=2; 1 -1"), h));
  CHECK(w.word == parse("n=3; 2 -2"));
}

TEST_CASE("block crossings permute blocks") {
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (bool positive : {true, false}) {
        const auto letters = block_crossing(1, a, b, positive);
        CHECK(letters.size() == static_cast<std::size_t>(a * b));
        for (int l : letters) CHECK((l > 0) == positive);
        const Permutation p = underlying_permutation(BraidWord(a + b, letters));
        // left block (bottom 0..a-1) ends at top a-th..; right block ends on the left
        for (int t = 0; t < b; ++t) CHECK(p[static_cast<std::size_t>(t)] == static_cast<std::size_t>(a + t));
        for (int t = 0; t < a; ++t) CHECK(p[static_cast<std::size_t>(b + t)] == static_cast<std::size_t>(t));
      }
    }
  }
  // s s^-1 with widths (2,1) at the bottom cables to a freely cancelling word
  const auto top = block_crossing(1, 1, 2, true);
  const auto bottom = block_crossing(1, 2, 1, false);
  std::vector<int> both = top;
  both.insert(both.end(), bottom.begin(), bottom.end());
  std::vector<int> reduced;
  for (int l : both) {
    if (!reduced.empty() && reduced.back() == -l) {
      reduced.pop_back();
    } else {
      reduced.push_back(l);
    }
  }
  CHECK(reduced.empty());
}

TEST_CASE("cabling") {
  const ColoredBraid unknot = uniform(parse("n=1;"), Spin(2));
  const ColoredBraid cu = cable_component(unknot, 0, {h, h});
  CHECK(cu.word == parse("n=2;"));
  CHECK(cu.colors == std::vector<Spin>{h, h});

  const ColoredBraid hopf(parse("n=2; 1 1"), {Spin(2), h});
  const ColoredBraid ch = cable_component(hopf, 0, {h, h});
  CHECK(ch.word.n_strands == 3);
  CHECK(ch.word.letters.size() == 4);
  CHECK(ch.colors == std::vector<Spin>{h, h, h});

  std::mt19937 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord w = random_word(rng, 2 + trial % 3, trial % 8);
    const ColoredBraid cb = color_components(w, {Spin(2), h, Spin(3)});
    const auto comps = components(cb);
    const std::size_t comp = static_cast<std::size_t>(trial) % comps.size();
    const ColoredBraid cabled = cable_component(cb, comp, {h, Spin(cb.colors[comps[comp].front()].twice() - 1)});

    std::vector<char> doubled(cb.colors.size(), 0);
    for (std::size_t p : comps[comp]) doubled[p] = 1;
    CHECK(underlying_permutation(cabled.word) == blocked(underlying_permutation(w), doubled));

    const WritheBreakdown before = writhe(w);
    int others = 0;
    int linking_with = 0;
    for (std::size_t c = 0; c < comps.size(); ++c) {
      if (c != comp) others += before.per_component_self[c];
    }
    for (const auto& [pair, l] : before.linking) {
      if (pair.first == comp || pair.second == comp) {
        linking_with += l;
      } else {
        others += l;
      }
    }
    CHECK(writhe(cabled.word).total == 4 * before.per_component_self[comp] + 2 * linking_with + others);
  }
}

TEST_CASE("component deletion") {
  const ColoredBraid b(parse("n=3; 1 2 -1 2"), {h, h, h});
  const auto comps = components(b);
  REQUIRE(comps.size() >= 1);
  const ColoredBraid two(parse("n=3; 1 1 2 2"), {h, h, Spin(2)});
  CHECK(components(two).size() == 3);
  const ColoredBraid dropped = delete_component(two, 2);
  CHECK(dropped.word == parse("n=2; 1 1"));
  const ColoredBraid dropped0 = delete_component(two, 0);
  CHECK(dropped0.word == parse("n=2; 1 1"));
  CHECK(dropped0.colors == std::vector<Spin>{h, Spin(2)});
  CHECK_THROWS_AS(delete_component(uniform(parse("n=1;"), h), 0), UsageError);
}

TEST_CASE("stabilization and conjugation keep colors consistent") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const BraidWord w = random_word(rng, 2 + trial % 3, trial % 7);
    const ColoredBraid cb = color_components(w, {h, Spin(2), Spin(3)});
    const std::size_t strand = static_cast<std::size_t>(trial) % cb.colors.size();
    const ColoredBraid s = stabilize(cb, strand, trial % 2 ? 1 : -1);
    CHECK(s.n_strands() == cb.n_strands() + 1);
    CHECK(components(s).size() == components(cb).size());
    CHECK(s.colors[0] == cb.colors[strand]);
    const ColoredBraid c = conjugate(cb, random_word(rng, cb.n_strands() == 1 ? 1 : cb.n_strands(), cb.n_strands() == 1 ? 0 : 3).letters);
    CHECK(components(c).size() == components(cb).size());
  }
  CHECK(inverse(parse("n=3; 1 -2 2")) == parse("n=3; -2 2 -1"));
}
