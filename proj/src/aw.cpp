#include "qlink/aw.hpp"

#include <set>

#include "qlink/braid.hpp"
#include "qlink/errors.hpp"
#include "qlink/invariant.hpp"
#include "qlink/rmatrix.hpp"
#include "qlink/temperley_lieb.hpp"
#include "qlink/uqsu2.hpp"

namespace qlink::aw {

namespace {

const Spin h = Spin::half();

LaurentPoly q(int k) { return LaurentPoly::q_pow(k); }

Operator id_of(Spin j) { return identity(Shape{j}); }

// Braiding of factors 2 and 3 (0-based 1 and 2) of a triple product,
// tensored with the identity on the first factor.
Operator braid23(Spin first, Spin a, Spin b) { return kron(id_of(first), rmatrix::braided_r(a, b)); }
Operator braid23_inv(Spin first, Spin a, Spin b) { return kron(id_of(first), rmatrix::braided_r_inv(a, b)); }
Operator braid12(Spin a, Spin b, Spin last) { return kron(rmatrix::braided_r(a, b), id_of(last)); }
Operator braid12_inv(Spin a, Spin b, Spin last) { return kron(rmatrix::braided_r_inv(a, b), id_of(last)); }

Operator q12_on(Spin a, Spin b, Spin c) { return uqsu2::iterated_casimir(Shape{a, b, c}, {0, 1}); }
Operator q23_on(Spin a, Spin b, Spin c) { return uqsu2::iterated_casimir(Shape{a, b, c}, {1, 2}); }

// Embedded L-matrices on the auxiliary shape (1/2, j1, ..., jn); factor k is 1-based.
struct LFactory {
  Shape ambient;

  Operator place(const Operator& local, std::size_t k) const { return embed(local, {0, k}, ambient); }
  Operator plus(std::size_t k) const { return place(rmatrix::l_plus(ambient[k]), k); }
  Operator minus(std::size_t k) const { return place(rmatrix::l_minus(ambient[k]), k); }
  Operator plus_inv(std::size_t k) const { return place(rmatrix::l_plus_inv(ambient[k]), k); }
  Operator minus_inv(std::size_t k) const { return place(rmatrix::l_minus_inv(ambient[k]), k); }

  Operator trace(const std::vector<Operator>& factors) const {
    Operator acc = identity(ambient);
    for (const Operator& f : factors) acc = acc * f;
    return partial_trace_first(acc, uqsu2::mu(h));
  }
};

LFactory aux(const Shape& s) { return LFactory{Shape{h}.concat(s)}; }

std::vector<Spin> decompose(Spin a, Spin b) {
  std::vector<Spin> out;
  for (int t = std::abs(a.twice() - b.twice()); t <= a.twice() + b.twice(); t += 2) out.emplace_back(t);
  return out;
}

Operator annihilator(const Operator& x, const std::vector<Spin>& spins) {
  Operator acc = identity(x.shape_in());
  for (Spin j : spins) acc = acc * (x - Operator::scalar(x.shape_in(), uqsu2::casimir_eigenvalue(j)));
  return acc;
}

std::string names(const std::vector<Spin>& spins) {
  std::string out;
  for (Spin j : spins) out += (out.empty() ? "" : ",") + j.to_string();
  return out;
}

void expect_tl(Report& rep, const std::string& name, const tl::TLElement& lhs, const tl::TLElement& rhs) {
  const bool ok = lhs == rhs;
  rep.expect_true(name, ok, ok ? std::string{} : "lhs " + lhs.to_string() + " rhs " + rhs.to_string());
}

}  // namespace

std::string to_string(AWIndex i) {
  switch (i) {
    case AWIndex::c1: return "1";
    case AWIndex::c2: return "2";
    case AWIndex::c3: return "3";
    case AWIndex::c12: return "12";
    case AWIndex::c23: return "23";
    case AWIndex::c13: return "13";
    case AWIndex::c123: return "123";
    case AWIndex::c13t: return "13~";
  }
  return "?";
}

std::optional<AWIndex> parse_index(std::string_view text) {
  for (AWIndex i : all_indices) {
    if (to_string(i) == text) return i;
  }
  return std::nullopt;
}

std::string TripleShape::to_string() const {
  return "(" + j1.to_string() + "," + j2.to_string() + "," + j3.to_string() + ")";
}

TripleShape TripleShape::parse(std::string_view text) {
  std::vector<Spin> spins;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    spins.push_back(Spin::parse(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (spins.size() != 3) throw UsageError("expected three spins, got '" + std::string(text) + "'");
  return {spins[0], spins[1], spins[2]};
}

Operator q_elem(AWIndex i, const TripleShape& s) {
  const Shape shape = s.shape();
  switch (i) {
    case AWIndex::c1: return uqsu2::iterated_casimir(shape, {0});
    case AWIndex::c2: return uqsu2::iterated_casimir(shape, {1});
    case AWIndex::c3: return uqsu2::iterated_casimir(shape, {2});
    case AWIndex::c12: return uqsu2::iterated_casimir(shape, {0, 1});
    case AWIndex::c23: return uqsu2::iterated_casimir(shape, {1, 2});
    case AWIndex::c123: return uqsu2::iterated_casimir(shape, {0, 1, 2});
    case AWIndex::c13:
      // (j1,j2,j3) -> (j1,j3,j2) -> back
      return braid23_inv(s.j1, s.j2, s.j3) * q12_on(s.j1, s.j3, s.j2) * braid23(s.j1, s.j2, s.j3);
    case AWIndex::c13t:
      return braid23(s.j1, s.j3, s.j2) * q12_on(s.j1, s.j3, s.j2) * braid23_inv(s.j1, s.j3, s.j2);
  }
  throw InternalError("q_elem: unknown index");
}

bool has_trace_formula(AWIndex i) { return i != AWIndex::c3; }

Operator q_elem_trace(AWIndex i, const TripleShape& s) {
  const LFactory L = aux(s.shape());
  switch (i) {
    case AWIndex::c1: return L.trace({L.plus(1), L.minus(1)});
    case AWIndex::c2: return L.trace({L.plus(1), L.plus(2), L.minus(2), L.plus_inv(1)});
    case AWIndex::c3: return q_elem(i, s);
    case AWIndex::c12: return L.trace({L.plus(1), L.plus(2), L.minus(2), L.minus(1)});
    case AWIndex::c23: return L.trace({L.plus(1), L.plus(2), L.plus(3), L.minus(3), L.minus(2), L.plus_inv(1)});
    case AWIndex::c123: return L.trace({L.plus(1), L.plus(2), L.plus(3), L.minus(3), L.minus(2), L.minus(1)});
    case AWIndex::c13: return L.trace({L.plus(1), L.plus(2), L.plus(3), L.minus(3), L.plus_inv(2), L.minus(1)});
    case AWIndex::c13t: return L.trace({L.plus(1), L.minus_inv(2), L.plus(3), L.minus(3), L.minus(2), L.minus(1)});
  }
  throw InternalError("q_elem_trace: unknown index");
}

Operator nested_casimir_trace(const Shape& s) {
  const LFactory L = aux(s);
  std::vector<Operator> factors;
  for (std::size_t k = 1; k <= s.size(); ++k) factors.push_back(L.plus(k));
  for (std::size_t k = s.size(); k >= 1; --k) factors.push_back(L.minus(k));
  return L.trace(factors);
}

Generators generators(const TripleShape& s) {
  return {q_elem(AWIndex::c1, s),  q_elem(AWIndex::c2, s),  q_elem(AWIndex::c3, s),   q_elem(AWIndex::c12, s),
          q_elem(AWIndex::c23, s), q_elem(AWIndex::c13, s), q_elem(AWIndex::c123, s)};
}

Report check_aw(const Generators& g, const std::string& title) {
  Report rep;
  rep.title = title;
  const Shape& shape = g.c12.shape_in();
  const LaurentPoly qmq = q_minus_qinv();
  const LaurentPoly q2mq2 = q(2) - q(-2);
  auto qcomm = [](const Operator& x, const Operator& y) { return q(1) * (x * y) - q(-1) * (y * x); };

  rep.expect_zero("AW1", qcomm(g.c12, g.c23) + q2mq2 * g.c13 - qmq * (g.c1 * g.c3 + g.c2 * g.c123));
  rep.expect_zero("AW2", qcomm(g.c23, g.c13) + q2mq2 * g.c12 - qmq * (g.c1 * g.c2 + g.c3 * g.c123));
  rep.expect_zero("AW3", qcomm(g.c13, g.c12) + q2mq2 * g.c23 - qmq * (g.c2 * g.c3 + g.c1 * g.c123));

  const Operator lhs = q(1) * (g.c12 * g.c23 * g.c13) + q(2) * (g.c12 * g.c12) + q(-2) * (g.c23 * g.c23) +
                       q(2) * (g.c13 * g.c13) - q(1) * (g.c12 * (g.c1 * g.c2 + g.c3 * g.c123)) -
                       q(-1) * (g.c23 * (g.c2 * g.c3 + g.c1 * g.c123)) -
                       q(1) * (g.c13 * (g.c1 * g.c3 + g.c2 * g.c123));
  const LaurentPoly qpq = q(1) + q(-1);
  const Operator rhs = Operator::scalar(shape, qpq * qpq) - g.c123 * g.c123 - g.c1 * g.c1 - g.c2 * g.c2 -
                       g.c3 * g.c3 - g.c1 * g.c2 * g.c3 * g.c123;
  rep.expect_equal("AW4", lhs, rhs);
  return rep;
}

Report verify_aw(const TripleShape& s) { return check_aw(generators(s), "Askey-Wilson relations on " + s.to_string()); }

Report verify_routes(const TripleShape& s) {
  Report rep;
  rep.title = "coproduct vs partial-trace routes on " + s.to_string();
  for (AWIndex i : all_indices) {
    if (!has_trace_formula(i)) continue;
    rep.expect_equal("Q" + to_string(i), q_elem_trace(i, s), q_elem(i, s));
  }
  return rep;
}

Report verify_expansion(const TripleShape& s) {
  Report rep;
  rep.title = "Q12 Q23 expansion on " + s.to_string();
  const Generators g = generators(s);
  const Operator q13t = q_elem(AWIndex::c13t, s);
  const Operator common = g.c2 * g.c123 + g.c1 * g.c3;
  rep.expect_equal("Q12 Q23 = Q2 Q123 - q Q13 - q^-1 Q13~ + Q1 Q3", g.c12 * g.c23,
                   common - q(1) * g.c13 - q(-1) * q13t);
  rep.expect_equal("Q23 Q12 = Q2 Q123 - q^-1 Q13 - q Q13~ + Q1 Q3", g.c23 * g.c12,
                   common - q(-1) * g.c13 - q(1) * q13t);
  return rep;
}

Report verify_centrality(const TripleShape& s) {
  Report rep;
  rep.title = "centralizer property on " + s.to_string();
  const uqsu2::GeneratorImages im = uqsu2::iterated_images(s.shape());
  const Operator qh = im.qH(1);
  for (AWIndex i : all_indices) {
    const Operator x = q_elem(i, s);
    const std::string n = "Q" + to_string(i);
    rep.expect_zero("[" + n + ", E]", commutator(x, im.E));
    rep.expect_zero("[" + n + ", F]", commutator(x, im.F));
    rep.expect_zero("[" + n + ", q^H]", commutator(x, qh));
  }
  return rep;
}

Report verify_commutations(const TripleShape& s) {
  Report rep;
  rep.title = "commutation pattern on " + s.to_string();
  for (AWIndex c : {AWIndex::c1, AWIndex::c2, AWIndex::c3, AWIndex::c123}) {
    const Operator x = q_elem(c, s);
    for (AWIndex i : all_indices) {
      if (i == c) continue;
      rep.expect_zero("[Q" + to_string(c) + ", Q" + to_string(i) + "]", commutator(x, q_elem(i, s)));
    }
  }
  if (s.j1.twice() > 0 && s.j2.twice() > 0 && s.j3.twice() > 0) {
    const Operator c = commutator(q_elem(AWIndex::c12, s), q_elem(AWIndex::c23, s));
    rep.expect_true("[Q12, Q23] != 0", !c.is_zero(), "commutator vanished");
  }
  return rep;
}

Report verify_conjugations(const TripleShape& s) {
  Report rep;
  rep.title = "braiding conjugations on " + s.to_string();
  const Spin a = s.j1;
  const Spin b = s.j2;
  const Spin c = s.j3;
  rep.expect_equal("Q13 = R12 Q23 R12^-1", q_elem(AWIndex::c13, s),
                   braid12(b, a, c) * q23_on(b, a, c) * braid12_inv(b, a, c));
  rep.expect_equal("Q13~ = R12^-1 Q23 R12", q_elem(AWIndex::c13t, s),
                   braid12_inv(a, b, c) * q23_on(b, a, c) * braid12(a, b, c));
  // (a,b,c) -R12-> (b,a,c) -R23-> (b,c,a)
  const Operator forward = braid23(b, a, c) * braid12(a, b, c);
  const Operator backward = braid12_inv(a, b, c) * braid23_inv(b, a, c);
  rep.expect_equal("Q23 = R12^-1 R23^-1 Q12 R23 R12", q_elem(AWIndex::c23, s),
                   backward * q12_on(b, c, a) * forward);
  return rep;
}

Report verify_casimir_traces(int max_twice) {
  Report rep;
  rep.title = "Casimir traces for twice-spins up to " + std::to_string(max_twice);
  for (int a = 0; a <= max_twice; ++a) {
    const Spin ja(a);
    rep.expect_equal("Tr(L+ L- M) on " + ja.to_string(), nested_casimir_trace(Shape{ja}), uqsu2::casimir(ja));
    for (int b = 0; b <= max_twice; ++b) {
      const Shape s{ja, Spin(b)};
      rep.expect_equal("Tr(L+ L+ L- L- M) on (" + ja.to_string() + "," + Spin(b).to_string() + ")",
                       nested_casimir_trace(s), uqsu2::iterated_casimir(s, {0, 1}));
    }
  }
  return rep;
}

Report verify_p_identities() {
  Report rep;
  rep.title = "P-matrix identities";
  const Operator p = rmatrix::p_matrix();
  const Operator id2 = identity(Shape{h, h});
  const LaurentPoly v = LaurentPoly::v_pow(1);
  const LaurentPoly vi = LaurentPoly::v_pow(-1);
  rep.expect_equal("braided R = q^1/2 - q^-1/2 P", rmatrix::braided_r(h, h), v * id2 - vi * p);
  rep.expect_equal("braided R^-1 = q^-1/2 - q^1/2 P", rmatrix::braided_r_inv(h, h), vi * id2 - v * p);
  rep.expect_equal("P^2 = (q+q^-1) P", p * p, (q(1) + q(-1)) * p);
  rep.expect_equal("Tr_1(P (M x 1)) = 1", partial_trace_first(p, uqsu2::mu(h)), id_of(h));

  for (Spin j : {h, Spin(2)}) {
    const Shape s{h, h, j};
    const std::string at = " at j=" + j.to_string();
    const Operator p12 = embed(p, {0, 1}, s);

    const Operator f = rmatrix::r_matrix(h, j);
    const Operator traced = partial_trace_first(f, uqsu2::mu(h));
    rep.expect_equal("P12 F23 P12 = P12 Tr_a(F_a3 M_a)" + at, p12 * embed(f, {1, 2}, s) * p12,
                     p12 * kron(id2, traced));

    const Operator lp23 = embed(rmatrix::l_plus(j), {1, 2}, s);
    const Operator lp13 = embed(rmatrix::l_plus(j), {0, 2}, s);
    const Operator lm23 = embed(rmatrix::l_minus(j), {1, 2}, s);
    const Operator lm13 = embed(rmatrix::l_minus(j), {0, 2}, s);
    const Operator lp23i = embed(rmatrix::l_plus_inv(j), {1, 2}, s);
    const Operator lp13i = embed(rmatrix::l_plus_inv(j), {0, 2}, s);
    const Operator lm23i = embed(rmatrix::l_minus_inv(j), {1, 2}, s);
    const Operator lm13i = embed(rmatrix::l_minus_inv(j), {0, 2}, s);
    rep.expect_equal("RE1" + at, lp23 * lp13 * p12 * lp13i * lp23i, p12);
    rep.expect_equal("RE2" + at, lm23i * lm13i * p12 * lm13 * lm23, p12);
    rep.expect_equal("RE3" + at, lp23 * lp13 * p12 * lm13 * lm23, p12);
  }
  return rep;
}

Report verify_tl_iso() {
  Report rep;
  rep.title = "Temperley-Lieb realizations";
  const Shape s{h, h, h};
  const Operator p = rmatrix::p_matrix();
  const Operator p12 = embed(p, {0, 1}, s);
  const Operator p23 = embed(p, {1, 2}, s);
  const LaurentPoly loop = q(1) + q(-1);
  rep.expect_equal("P12^2 = (q+q^-1) P12", p12 * p12, loop * p12);
  rep.expect_equal("P23^2 = (q+q^-1) P23", p23 * p23, loop * p23);
  rep.expect_equal("P12 P23 P12 = P12", p12 * p23 * p12, p12);
  rep.expect_equal("P23 P12 P23 = P23", p23 * p12 * p23, p23);

  const TripleShape t{h, h, h};
  const LaurentPoly c = q(3) + q(-3);
  const LaurentPoly qmq2 = q_minus_qinv() * q_minus_qinv();
  rep.expect_equal("Q12 = (q^3+q^-3) - (q-q^-1)^2 P12", q_elem(AWIndex::c12, t), Operator::scalar(s, c) - qmq2 * p12);
  rep.expect_equal("Q23 = (q^3+q^-3) - (q-q^-1)^2 P23", q_elem(AWIndex::c23, t), Operator::scalar(s, c) - qmq2 * p23);

  // Diagram side with x = i q^1/2, where delta becomes q + q^-1.
  const tl::TLElement e1 = tl::TLElement::hook(3, 1).subst_x_iv();
  const tl::TLElement e2 = tl::TLElement::hook(3, 2).subst_x_iv();
  rep.expect_equal("delta(x = i q^1/2) = q + q^-1", subst_x_iv(tl::delta()), loop);
  auto mul = [](const tl::TLElement& a, const tl::TLElement& b) { return tl::tl_mul(a, b).subst_x_iv(); };
  // tl_mul evaluates loops at delta(x); the hooks carry no x, so substituting afterwards is exact.
  expect_tl(rep, "E1 E1 = (q+q^-1) E1", mul(tl::TLElement::hook(3, 1), tl::TLElement::hook(3, 1)), loop * e1);
  expect_tl(rep, "E2 E2 = (q+q^-1) E2", mul(tl::TLElement::hook(3, 2), tl::TLElement::hook(3, 2)), loop * e2);
  expect_tl(rep, "E1 E2 E1 = E1",
            tl::tl_mul(tl::tl_mul(tl::TLElement::hook(3, 1), tl::TLElement::hook(3, 2)), tl::TLElement::hook(3, 1))
                .subst_x_iv(),
            e1);
  expect_tl(rep, "E2 E1 E2 = E2",
            tl::tl_mul(tl::tl_mul(tl::TLElement::hook(3, 2), tl::TLElement::hook(3, 1)), tl::TLElement::hook(3, 2))
                .subst_x_iv(),
            e2);

  // A loop around two strands: close the first strand of s1 s2 s2 s1.
  const tl::TLElement encircled =
      tl::close_first(invariant::tl_image(braid::BraidWord(3, {1, 2, 2, 1}))).subst_x_iv();
  const tl::TLElement expected =
      c * tl::TLElement::identity(2) - qmq2 * tl::TLElement::hook(2, 1);
  expect_tl(rep, "<loop around 2 strands> = (q^3+q^-3)<id> - (q-q^-1)^2 <E1>", encircled, expected);
  return rep;
}

Report spectrum_report(AWIndex i, const TripleShape& s) {
  std::vector<Spin> spins;
  switch (i) {
    case AWIndex::c12: spins = decompose(s.j1, s.j2); break;
    case AWIndex::c23: spins = decompose(s.j2, s.j3); break;
    case AWIndex::c13:
    case AWIndex::c13t: spins = decompose(s.j1, s.j3); break;
    case AWIndex::c123: {
      std::set<Spin> all;
      for (Spin a : decompose(s.j1, s.j2)) {
        for (Spin b : decompose(a, s.j3)) all.insert(b);
      }
      spins.assign(all.begin(), all.end());
      break;
    }
    default: throw UsageError("spectrum_report: Q" + to_string(i) + " acts on a single factor");
  }
  Report rep;
  rep.title = "spectrum of Q" + to_string(i) + " on " + s.to_string();
  rep.expect_zero("prod (Q" + to_string(i) + " - chi_j) over j in {" + names(spins) + "}",
                  annihilator(q_elem(i, s), spins));
  return rep;
}

std::optional<Suite> parse_suite(std::string_view text) {
  if (text == "relations") return Suite::relations;
  if (text == "routes") return Suite::routes;
  if (text == "expansion") return Suite::expansion;
  if (text == "p-props") return Suite::p_props;
  if (text == "tl-iso") return Suite::tl_iso;
  if (text == "spectrum") return Suite::spectrum;
  if (text == "all") return Suite::all;
  return std::nullopt;
}

Report run_suite(Suite suite, const TripleShape& s) {
  Report rep;
  rep.title = "aw checks on " + s.to_string();
  const bool all = suite == Suite::all;
  if (all || suite == Suite::relations) {
    rep.append(verify_aw(s), "relations: ");
    rep.append(verify_centrality(s), "centrality: ");
    rep.append(verify_commutations(s), "commutation: ");
    rep.append(verify_conjugations(s), "conjugation: ");
  }
  if (all || suite == Suite::routes) rep.append(verify_routes(s), "routes: ");
  if (all || suite == Suite::expansion) rep.append(verify_expansion(s), "expansion: ");
  if (all || suite == Suite::p_props) rep.append(verify_p_identities(), "p-props: ");
  if (all || suite == Suite::tl_iso) rep.append(verify_tl_iso(), "tl-iso: ");
  if (all || suite == Suite::spectrum) {
    for (AWIndex i : {AWIndex::c12, AWIndex::c23, AWIndex::c13, AWIndex::c13t, AWIndex::c123}) {
      rep.append(spectrum_report(i, s), "spectrum: ");
    }
  }
  return rep;
}

}  // namespace qlink::aw
