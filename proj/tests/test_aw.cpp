#include "doctest.h"
#include "qlink/aw.hpp"
#include "qlink/errors.hpp"
#include "qlink/rmatrix.hpp"
#include "qlink/uqsu2.hpp"

using namespace qlink;
using namespace qlink::aw;

namespace {

const Spin h = Spin::half();

LaurentPoly q(int k) { return LaurentPoly::q_pow(k); }

TripleShape triple(int a, int b, int c) { return {Spin(a), Spin(b), Spin(c)}; }

#define CHECK_REPORT(expr)       \
  do {                           \
    const Report r_ = (expr);    \
    INFO(r_.to_text());          \
    CHECK(r_.pass());            \
  } while (false)

}  // namespace

TEST_CASE("index and shape parsing") {
  for (AWIndex i : all_indices) CHECK(parse_index(to_string(i)) == i);
  CHECK_FALSE(parse_index("31").has_value());
  const TripleShape t = TripleShape::parse("1/2,1,3/2");
  CHECK(t.j1 == h);
  CHECK(t.j3 == Spin(3));
  CHECK(t.to_string() == "(1/2,1,3/2)");
  CHECK_THROWS_AS(TripleShape::parse("1/2,1"), UsageError);
}

TEST_CASE("single-factor and pair Casimirs") {
  const TripleShape t = triple(1, 2, 3);
  CHECK(q_elem(AWIndex::c1, t) == Operator::scalar(t.shape(), q(2) + q(-2)));
  const Operator x = q_elem(AWIndex::c12, triple(1, 1, 2));
  const Operator id = identity(x.shape_in());
  CHECK(((x - (q(1) + q(-1)) * id) * (x - (q(3) + q(-3)) * id)).is_zero());
  CHECK_FALSE((x - (q(1) + q(-1)) * id).is_zero());
}

TEST_CASE("Q123 spectrum on three spin-1/2 factors") {
  const TripleShape t = triple(1, 1, 1);
  const Operator y = q_elem(AWIndex::c123, t);
  const Operator id = identity(t.shape());
  CHECK(((y - uqsu2::casimir_eigenvalue(h) * id) * (y - uqsu2::casimir_eigenvalue(Spin(3)) * id)).is_zero());
}

TEST_CASE("shapes of recoupled operators") {
  const TripleShape t = triple(1, 2, 3);
  for (AWIndex i : all_indices) {
    const Operator x = q_elem(i, t);
    CHECK(x.shape_in() == t.shape());
    CHECK(x.shape_out() == t.shape());
  }
}

TEST_CASE("trace routes") {
  CHECK_REPORT(verify_casimir_traces(3));
  for (const TripleShape& t : {triple(1, 1, 1), triple(1, 2, 1), triple(2, 1, 2), triple(2, 2, 2), triple(0, 1, 2)}) {
    CHECK_REPORT(verify_routes(t));
  }
  // the spin-1/2 trace of L+ L- is the Casimir itself
  CHECK(nested_casimir_trace(Shape{Spin(2)}) == uqsu2::casimir(Spin(2)));
}

TEST_CASE("Askey-Wilson relations") {
  for (const TripleShape& t : {triple(1, 1, 1), triple(1, 1, 2), triple(1, 2, 1), triple(2, 1, 1), triple(1, 2, 3),
                               triple(2, 2, 2), triple(0, 1, 2), triple(3, 1, 2)}) {
    CHECK_REPORT(verify_aw(t));
  }
}

TEST_CASE("corrupted Q13 leaves a residual") {
  const TripleShape t = triple(1, 1, 1);
  Generators g = generators(t);
  g.c13 = g.c13 + Operator::scalar(t.shape(), q(1)) * q_elem(AWIndex::c12, t) * q_elem(AWIndex::c12, t);
  const Report r = check_aw(g, "corrupted");
  CHECK_FALSE(r.pass());
  CHECK(r.checks[0].residual_nnz > 0);
  CHECK_FALSE(verify_aw(t).checks.empty());
}

TEST_CASE("product expansion") {
  for (const TripleShape& t : {triple(1, 1, 1), triple(1, 2, 1), triple(2, 1, 2), triple(1, 3, 2)}) {
    CHECK_REPORT(verify_expansion(t));
  }
}

TEST_CASE("centralizer and commutation structure") {
  for (const TripleShape& t : {triple(1, 1, 1), triple(1, 2, 3), triple(2, 2, 1)}) {
    CHECK_REPORT(verify_centrality(t));
    CHECK_REPORT(verify_commutations(t));
    CHECK_REPORT(verify_conjugations(t));
  }
  // with a trivial middle factor Q12 and Q23 are single-factor Casimirs and commute
  CHECK_REPORT(verify_commutations(triple(1, 0, 1)));
}

TEST_CASE("P-matrix identities and TL realizations") {
  CHECK_REPORT(verify_p_identities());
  CHECK_REPORT(verify_tl_iso());
}

TEST_CASE("spectra") {
  CHECK_REPORT(spectrum_report(AWIndex::c12, triple(1, 2, 1)));
  CHECK_REPORT(spectrum_report(AWIndex::c13, triple(1, 2, 1)));
  CHECK_REPORT(spectrum_report(AWIndex::c13t, triple(1, 2, 1)));
  CHECK_REPORT(spectrum_report(AWIndex::c123, triple(1, 1, 1)));
  CHECK_REPORT(spectrum_report(AWIndex::c23, triple(2, 3, 1)));
  CHECK_THROWS_AS(spectrum_report(AWIndex::c2, triple(1, 1, 1)), UsageError);
  // dropping one eigenvalue must leave a nonzero product
  const TripleShape t = triple(1, 2, 1);
  const Operator x = q_elem(AWIndex::c13, t);
  CHECK_FALSE((x - Operator::scalar(t.shape(), uqsu2::casimir_eigenvalue(Spin(0)))).is_zero());
}

TEST_CASE("suites") {
  CHECK(parse_suite("p-props") == Suite::p_props);
  CHECK_FALSE(parse_suite("everything").has_value());
  CHECK_REPORT(run_suite(Suite::all, triple(1, 1, 1)));
}

TEST_CASE("R-matrix corruption breaks the relations") {
  const TripleShape t = triple(1, 1, 1);
  rmatrix::ScopedCorruption bad(h, h, 0, 0, q(1));
  CHECK_FALSE(verify_aw(t).pass());
}
