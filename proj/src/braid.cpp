#include "qlink/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "qlink/errors.hpp"

namespace qlink::braid {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int to_int(std::string_view tok, std::string_view whole) {
  int value = 0;
  if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw UsageError("braid: bad integer '" + std::string(tok) + "' in '" + std::string(whole) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, std::string_view seps) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = s.find_first_of(seps, start);
    const std::string_view tok = s.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    out.push_back(tok);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

struct Parsed {
  BraidWord word;
  std::vector<Spin> colors;
  bool has_colors = false;
};

Parsed parse_parts(std::string_view text) {
  Parsed out;
  const auto parts = split(text, ";");
  const std::string_view head = trim(parts[0]);
  if (head.substr(0, 2) != "n=") throw UsageError("braid: expected 'n=<strands>' at the start of '" + std::string(text) + "'");
  const int n = to_int(trim(head.substr(2)), text);
  std::vector<int> letters;
  bool seen_letters = false;
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const std::string_view part = trim(parts[k]);
    if (part.substr(0, 7) == "colors=") {
      if (out.has_colors) throw UsageError("braid: colors given twice");
      out.has_colors = true;
      for (auto tok : split(part.substr(7), ",")) out.colors.push_back(Spin::parse(trim(tok)));
      continue;
    }
    if (part.empty()) continue;
    if (seen_letters || out.has_colors) throw UsageError("braid: unexpected section '" + std::string(part) + "'");
    seen_letters = true;
    for (auto tok : split(part, " ,\t\n")) {
      tok = trim(tok);
      if (!tok.empty()) letters.push_back(to_int(tok, text));
    }
  }
  out.word = BraidWord(n, std::move(letters));
  return out;
}

// strand ids (bottom positions) found at each position, updated letter by
// letter from the bottom of the word; calls f(letter_index, left_id, right_id)
// before the swap.
template <class F>
void walk_up(const BraidWord& w, F&& f) {
  std::vector<std::size_t> at(static_cast<std::size_t>(w.n_strands));
  std::iota(at.begin(), at.end(), 0);
  for (std::size_t k = w.letters.size(); k-- > 0;) {
    const std::size_t i = static_cast<std::size_t>(std::abs(w.letters[k])) - 1;
    f(k, at[i], at[i + 1]);
    std::swap(at[i], at[i + 1]);
  }
}

std::vector<int> invert(const std::vector<int>& word) {
  std::vector<int> out(word.rbegin(), word.rend());
  for (int& l : out) l = -l;
  return out;
}

// Bottom colors of a word whose top colors must be `top`.
std::vector<Spin> pull_back_colors(const BraidWord& w, const std::vector<Spin>& top) {
  const Permutation perm = underlying_permutation(w);
  std::vector<Spin> bottom(top.size());
  for (std::size_t p = 0; p < perm.size(); ++p) bottom[perm[p]] = top[p];
  return bottom;
}

}  // namespace

BraidWord::BraidWord(int n, std::vector<int> word) : n_strands(n), letters(std::move(word)) {
  if (n < 1) throw UsageError("braid: strand count must be positive, got " + std::to_string(n));
  for (int l : letters) {
    if (l == 0) throw UsageError("braid: zero is not a generator");
    if (std::abs(l) >= n) {
      throw UsageError("braid: generator index " + std::to_string(l) + " out of range for " + std::to_string(n) +
                       " strands");
    }
  }
}

int BraidWord::exponent_sum() const {
  int s = 0;
  for (int l : letters) s += l > 0 ? 1 : -1;
  return s;
}

ColoredBraid::ColoredBraid(BraidWord w, std::vector<Spin> c) : word(std::move(w)), colors(std::move(c)) {
  if (colors.size() != static_cast<std::size_t>(word.n_strands)) {
    throw UsageError("braid: " + std::to_string(colors.size()) + " colors given for " + std::to_string(word.n_strands) +
                     " strands");
  }
  if (top_colors(word, colors) != colors) {
    throw UsageError("braid: colors are not constant along the components of " + format(word));
  }
}

ColoredBraid uniform(BraidWord w, Spin j) {
  const auto n = static_cast<std::size_t>(w.n_strands);
  return ColoredBraid(std::move(w), std::vector<Spin>(n, j));
}

BraidWord parse(std::string_view text) {
  Parsed p = parse_parts(text);
  if (p.has_colors) throw UsageError("braid: colors are not accepted here");
  return p.word;
}

ColoredBraid parse_colored(std::string_view text, Spin default_color) {
  Parsed p = parse_parts(text);
  if (!p.has_colors) return uniform(std::move(p.word), default_color);
  return ColoredBraid(std::move(p.word), std::move(p.colors));
}

std::string format(const BraidWord& w) {
  std::string out = "n=" + std::to_string(w.n_strands) + ";";
  for (std::size_t k = 0; k < w.letters.size(); ++k) out += " " + std::to_string(w.letters[k]);
  return out;
}

std::string format(const ColoredBraid& b) {
  std::string out = format(b.word) + "; colors=";
  for (std::size_t k = 0; k < b.colors.size(); ++k) out += (k ? "," : "") + b.colors[k].to_string();
  return out;
}

Permutation underlying_permutation(const BraidWord& w) {
  std::vector<std::size_t> at(static_cast<std::size_t>(w.n_strands));
  std::iota(at.begin(), at.end(), 0);
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    const std::size_t i = static_cast<std::size_t>(std::abs(*it)) - 1;
    std::swap(at[i], at[i + 1]);
  }
  return at;
}

std::vector<Spin> top_colors(const BraidWord& w, const std::vector<Spin>& bottom) {
  const Permutation perm = underlying_permutation(w);
  std::vector<Spin> top(perm.size());
  for (std::size_t p = 0; p < perm.size(); ++p) top[p] = bottom.at(perm[p]);
  return top;
}

std::vector<std::vector<std::size_t>> components(const BraidWord& w) {
  const Permutation perm = underlying_permutation(w);
  std::vector<char> seen(perm.size(), 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> cycle;
    for (std::size_t p = start; !seen[p]; p = perm[p]) {
      seen[p] = 1;
      cycle.push_back(p);
    }
    std::sort(cycle.begin(), cycle.end());
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<std::vector<std::size_t>> components(const ColoredBraid& b) {
  auto comps = components(b.word);
  for (const auto& c : comps) {
    for (std::size_t p : c) {
      if (b.colors[p] != b.colors[c.front()]) {
        throw UsageError("braid: component through strand " + std::to_string(c.front() + 1) + " carries colors " +
                         b.colors[c.front()].to_string() + " and " + b.colors[p].to_string());
      }
    }
  }
  return comps;
}

std::vector<std::size_t> component_of(const BraidWord& w) {
  std::vector<std::size_t> out(static_cast<std::size_t>(w.n_strands));
  const auto comps = components(w);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    for (std::size_t p : comps[c]) out[p] = c;
  }
  return out;
}

WritheBreakdown writhe(const BraidWord& w) {
  const auto comp = component_of(w);
  WritheBreakdown out;
  out.per_component_self.assign(components(w).size(), 0);
  walk_up(w, [&](std::size_t k, std::size_t left, std::size_t right) {
    const int sign = w.letters[k] > 0 ? 1 : -1;
    out.total += sign;
    const std::size_t a = comp[left];
    const std::size_t b = comp[right];
    if (a == b) {
      out.per_component_self[a] += sign;
    } else {
      out.linking[{std::min(a, b), std::max(a, b)}] += sign;
    }
  });
  return out;
}

ColoredBraid disjoint_union(const ColoredBraid& a, const ColoredBraid& b) {
  std::vector<int> letters = a.word.letters;
  for (int l : b.word.letters) letters.push_back(l > 0 ? l + a.n_strands() : l - a.n_strands());
  std::vector<Spin> colors = a.colors;
  colors.insert(colors.end(), b.colors.begin(), b.colors.end());
  return ColoredBraid(BraidWord(a.n_strands() + b.n_strands(), std::move(letters)), std::move(colors));
}

std::vector<int> block_crossing(int p, int a, int b, bool positive) {
  if (!positive) return invert(block_crossing(p, b, a, true));
  // Built from the bottom: the rightmost strand of the left block moves right
  // across the whole right block, then the next one.
  std::vector<int> bottom_first;
  for (int s = a - 1; s >= 0; --s) {
    for (int t = 0; t < b; ++t) bottom_first.push_back(p + s + t);
  }
  return {bottom_first.rbegin(), bottom_first.rend()};
}

ColoredBraid cable_component(const ColoredBraid& b, std::size_t comp, std::pair<Spin, Spin> new_colors) {
  const auto comps = components(b);
  if (comp >= comps.size()) throw UsageError("cable_component: no component " + std::to_string(comp));
  std::vector<char> doubled(b.colors.size(), 0);
  for (std::size_t p : comps[comp]) doubled[p] = 1;

  // Widths at the bottom of every letter.
  std::vector<std::pair<int, int>> widths(b.word.letters.size());
  std::vector<int> starts(b.word.letters.size());
  {
    std::vector<std::size_t> at(b.colors.size());
    std::iota(at.begin(), at.end(), 0);
    for (std::size_t k = b.word.letters.size(); k-- > 0;) {
      const std::size_t i = static_cast<std::size_t>(std::abs(b.word.letters[k])) - 1;
      int start = 1;
      for (std::size_t q = 0; q < i; ++q) start += doubled[at[q]] ? 2 : 1;
      starts[k] = start;
      widths[k] = {doubled[at[i]] ? 2 : 1, doubled[at[i + 1]] ? 2 : 1};
      std::swap(at[i], at[i + 1]);
    }
  }
  std::vector<int> letters;
  for (std::size_t k = 0; k < b.word.letters.size(); ++k) {
    const auto block = block_crossing(starts[k], widths[k].first, widths[k].second, b.word.letters[k] > 0);
    letters.insert(letters.end(), block.begin(), block.end());
  }
  std::vector<Spin> colors;
  for (std::size_t p = 0; p < b.colors.size(); ++p) {
    if (doubled[p]) {
      colors.push_back(new_colors.first);
      colors.push_back(new_colors.second);
    } else {
      colors.push_back(b.colors[p]);
    }
  }
  const int n = b.n_strands() + static_cast<int>(comps[comp].size());
  return ColoredBraid(BraidWord(n, std::move(letters)), std::move(colors));
}

ColoredBraid delete_component(const ColoredBraid& b, std::size_t comp) {
  const auto comps = components(b);
  if (comp >= comps.size()) throw UsageError("delete_component: no component " + std::to_string(comp));
  std::vector<char> gone(b.colors.size(), 0);
  for (std::size_t p : comps[comp]) gone[p] = 1;

  std::vector<int> bottom_first;
  std::vector<std::size_t> at(b.colors.size());
  std::iota(at.begin(), at.end(), 0);
  for (std::size_t k = b.word.letters.size(); k-- > 0;) {
    const int l = b.word.letters[k];
    const std::size_t i = static_cast<std::size_t>(std::abs(l)) - 1;
    if (!gone[at[i]] && !gone[at[i + 1]]) {
      int kept_left = 0;
      for (std::size_t q = 0; q < i; ++q) kept_left += gone[at[q]] ? 0 : 1;
      bottom_first.push_back(l > 0 ? kept_left + 1 : -(kept_left + 1));
    }
    std::swap(at[i], at[i + 1]);
  }
  std::vector<Spin> colors;
  for (std::size_t p = 0; p < b.colors.size(); ++p) {
    if (!gone[p]) colors.push_back(b.colors[p]);
  }
  if (colors.empty()) throw UsageError("delete_component: cannot delete the only component");
  const int n = static_cast<int>(colors.size());
  return ColoredBraid(BraidWord(n, {bottom_first.rbegin(), bottom_first.rend()}), std::move(colors));
}

BraidWord conjugate(const BraidWord& w, const std::vector<int>& g) {
  std::vector<int> letters = g;
  letters.insert(letters.end(), w.letters.begin(), w.letters.end());
  const auto gi = invert(g);
  letters.insert(letters.end(), gi.begin(), gi.end());
  return BraidWord(w.n_strands, std::move(letters));
}

BraidWord inverse(const BraidWord& w) { return BraidWord(w.n_strands, invert(w.letters)); }

ColoredBraid conjugate(const ColoredBraid& b, const std::vector<int>& g) {
  const BraidWord gi(b.n_strands(), invert(g));
  return ColoredBraid(conjugate(b.word, g), pull_back_colors(gi, b.colors));
}

ColoredBraid stabilize(const ColoredBraid& b, std::size_t strand, int sign) {
  if (strand >= b.colors.size()) throw UsageError("stabilize: no strand " + std::to_string(strand + 1));
  if (sign != 1 && sign != -1) throw UsageError("stabilize: sign must be +1 or -1");
  // g carries the bottom strand at position 0 up to position `strand`.
  std::vector<int> g;
  for (int k = static_cast<int>(strand); k >= 1; --k) g.push_back(k);
  const BraidWord moved = conjugate(b.word, invert(g));
  const std::vector<Spin> moved_colors = pull_back_colors(BraidWord(b.n_strands(), g), b.colors);

  std::vector<int> letters;
  for (int l : moved.letters) letters.push_back(l > 0 ? l + 1 : l - 1);
  letters.push_back(sign);
  std::vector<Spin> colors{moved_colors[0]};
  colors.insert(colors.end(), moved_colors.begin(), moved_colors.end());
  return ColoredBraid(BraidWord(b.n_strands() + 1, std::move(letters)), std::move(colors));
}

}  // namespace qlink::braid
