#include "qlink/serialize.hpp"

#include "qlink/errors.hpp"

namespace qlink::io {

namespace {

json integer(const mpz_class& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

mpz_class integer_from(const json& j) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) != 0) throw UsageError("bad integer '" + j.get<std::string>() + "'");
    return z;
  }
  throw UsageError("expected an integer, got " + j.dump());
}

mpq_class rational(const json& num, const json& den) {
  const mpz_class d = integer_from(den);
  if (d == 0) throw UsageError("zero denominator");
  mpq_class out(integer_from(num), d);
  out.canonicalize();
  return out;
}

json twice_spins(const Shape& s) {
  json out = json::array();
  for (const Spin& j : s.factors()) out.push_back(j.twice());
  return out;
}

Shape shape_from(const json& j) {
  std::vector<Spin> spins;
  for (const json& t : j) spins.emplace_back(t.get<int>());
  return Shape(std::move(spins));
}

}  // namespace

json poly_to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& t : p.terms()) {
    out.push_back({t.exp, integer(t.coef.re().get_num()), integer(t.coef.re().get_den()),
                   integer(t.coef.im().get_num()), integer(t.coef.im().get_den())});
  }
  return out;
}

LaurentPoly poly_from_json(const json& j) {
  if (!j.is_array()) throw UsageError("polynomial must be a JSON array");
  std::vector<LaurentPoly::Term> terms;
  for (const json& t : j) {
    if (!t.is_array() || t.size() != 5) throw UsageError("polynomial term must have five fields: " + t.dump());
    terms.push_back({t[0].get<int>(), GaussRat(rational(t[1], t[2]), rational(t[3], t[4]))});
  }
  return LaurentPoly::from_terms(std::move(terms));
}

json operator_to_json(const Operator& op) {
  json entries = json::array();
  for (std::size_t r = 0; r < op.rows(); ++r) {
    for (const auto& e : op.row(r)) entries.push_back({r, e.col, poly_to_json(e.value)});
  }
  return {{"shape_in", twice_spins(op.shape_in())}, {"shape_out", twice_spins(op.shape_out())}, {"entries", entries}};
}

Operator operator_from_json(const json& j) {
  Operator op(shape_from(j.at("shape_out")), shape_from(j.at("shape_in")));
  for (const json& e : j.at("entries")) {
    const auto r = e.at(0).get<std::size_t>();
    const auto c = e.at(1).get<std::size_t>();
    if (r >= op.rows() || c >= op.cols()) throw UsageError("operator entry out of range: " + e.dump());
    op.add_to(r, c, poly_from_json(e.at(2)));
  }
  return op;
}

json braid_to_json(const braid::ColoredBraid& b) {
  json colors = json::array();
  for (const Spin& c : b.colors) colors.push_back(c.twice());
  return {{"n_strands", b.word.n_strands}, {"letters", b.word.letters}, {"colors", colors}};
}

braid::ColoredBraid braid_from_json(const json& j) {
  const braid::BraidWord w(j.at("n_strands").get<int>(), j.at("letters").get<std::vector<int>>());
  std::vector<Spin> colors;
  for (const json& c : j.at("colors")) colors.emplace_back(c.get<int>());
  return braid::ColoredBraid(w, std::move(colors));
}

json report_to_json(const Report& r) {
  json checks = json::array();
  for (const Check& c : r.checks) {
    json item = {{"name", c.name}, {"pass", c.pass}, {"residual_nnz", c.residual_nnz}};
    if (!c.detail.empty()) item["detail"] = c.detail;
    checks.push_back(std::move(item));
  }
  return {{"title", r.title}, {"pass", r.pass()}, {"checks", checks}};
}

}  // namespace qlink::io
