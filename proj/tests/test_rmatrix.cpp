#include <thread>

#include "doctest.h"
#include "qlink/errors.hpp"
#include "qlink/rmatrix.hpp"
#include "qlink/uqsu2.hpp"

using namespace qlink;
using namespace qlink::rmatrix;

namespace {

const Spin h = Spin::half();

LaurentPoly v(int e) { return LaurentPoly::v_pow(e); }

// 2x2 matrix unit e_{ab} on the spin-1/2 factor.
Operator unit(std::size_t a, std::size_t b) {
  Operator e(Shape{h}, Shape{h});
  e.set(a, b, 1);
  return e;
}

// L^- and L^+ written out as 2x2 blocks of operators on V_j.
Operator l_minus_blocks(Spin j) {
  const Operator corner = (q_minus_qinv() * v(-1)) * uqsu2::rep_E(j);
  return kron(unit(0, 0), uqsu2::rep_qH(j, 1)) + kron(unit(1, 0), corner) + kron(unit(1, 1), uqsu2::rep_qH(j, -1));
}

Operator l_plus_blocks(Spin j) {
  const Operator corner = (q_minus_qinv() * v(-1)) * uqsu2::rep_F(j);
  return kron(unit(0, 0), uqsu2::rep_qH(j, 1)) + kron(unit(0, 1), corner) + kron(unit(1, 1), uqsu2::rep_qH(j, -1));
}

std::vector<Spin> spins_up_to(int max_twice) {
  std::vector<Spin> out;
  for (int t = 0; t <= max_twice; ++t) out.emplace_back(t);
  return out;
}

}  // namespace

TEST_CASE("spin-1/2 R-matrix matches the explicit 4x4") {
  const Shape s{h, h};
  Operator expected(s, s);
  expected.set(0, 0, v(1));
  expected.set(1, 1, v(-1));
  expected.set(2, 1, v(1) - v(-3));
  expected.set(2, 2, v(-1));
  expected.set(3, 3, v(1));
  CHECK(r_matrix(h, h) == expected);
}

TEST_CASE("spin-0 factors give the identity") {
  for (int t = 0; t <= 4; ++t) {
    const Spin j(t);
    CHECK(r_matrix(Spin(0), j) == identity(Shape{Spin(0), j}));
    CHECK(r_matrix(j, Spin(0)) == identity(Shape{j, Spin(0)}));
    CHECK(r_inverse(Spin(0), j) == identity(Shape{Spin(0), j}));
  }
}

TEST_CASE("R(1/2,1) is lower triangular in the weight order") {
  const Operator r = r_matrix(h, Spin(2));
  CHECK(r.rows() == 6);
  for (std::size_t row = 0; row < r.rows(); ++row) {
    for (const auto& e : r.row(row)) CHECK(e.col <= row);
  }
}

TEST_CASE("inverse by q -> 1/q is a two-sided inverse") {
  for (const Spin a : spins_up_to(4)) {
    for (const Spin b : spins_up_to(4)) {
      const Operator r = r_matrix(a, b);
      const Operator ri = r_inverse(a, b);
      CHECK(r * ri == identity(Shape{a, b}));
      CHECK(ri * r == identity(Shape{a, b}));
      CHECK(braided_r(a, b) * braided_r_inv(a, b) == identity(Shape{b, a}));
      CHECK(braided_r_inv(a, b) * braided_r(a, b) == identity(Shape{a, b}));
    }
  }
}

TEST_CASE("L matrices agree with their block form") {
  for (const Spin j : spins_up_to(4)) {
    CHECK(l_minus(j) == l_minus_blocks(j));
    CHECK(l_plus(j) == l_plus_blocks(j));
    CHECK(l_minus(j) * l_minus_inv(j) == identity(Shape{h, j}));
    CHECK(l_plus(j) * l_plus_inv(j) == identity(Shape{h, j}));
  }
  CHECK(l_minus(Spin(0)) == identity(Shape{h, Spin(0)}));
  CHECK(l_plus(Spin(0)) == identity(Shape{h, Spin(0)}));
}

TEST_CASE("braided R and P") {
  const Operator p = p_matrix();
  const Operator id = identity(Shape{h, h});
  CHECK(braided_r(h, h) == v(1) * id - v(-1) * p);
  CHECK(braided_r_inv(h, h) == v(-1) * id - v(1) * p);
  CHECK(p * p == qint(2) * p);
  CHECK(partial_trace_first(p, uqsu2::mu(h)) == identity(Shape{h}));
  CHECK(braided_r(h, h) + v(-1) * p == v(1) * id);
  CHECK(v(1) * braided_r(h, h) - v(-1) * braided_r_inv(h, h) == q_minus_qinv() * id);
  CHECK(braided_r(h, Spin(2)).shape_out() == Shape{Spin(2), h});
}

TEST_CASE("braid relation with shape tracking") {
  const std::vector<Shape> shapes{Shape{h, h, h}, Shape{h, h, Spin(2)}, Shape{h, Spin(2), Spin(3)}, Shape{Spin(2), Spin(2), h}};
  for (const Shape& s : shapes) {
    const Spin a = s[0];
    const Spin b = s[1];
    const Spin c = s[2];
    const Operator lhs = embed(braided_r(b, c), {0, 1}, Shape{b, c, a}) * embed(braided_r(a, c), {1, 2}, Shape{b, a, c}) *
                         embed(braided_r(a, b), {0, 1}, s);
    const Operator rhs = embed(braided_r(a, b), {1, 2}, Shape{c, a, b}) * embed(braided_r(a, c), {0, 1}, Shape{a, c, b}) *
                         embed(braided_r(b, c), {1, 2}, s);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("Yang-Baxter on all triples up to spin 1") {
  for (const Spin a : spins_up_to(2)) {
    for (const Spin b : spins_up_to(2)) {
      for (const Spin c : spins_up_to(2)) CHECK(verify_ybe(a, b, c).pass());
    }
  }
}

TEST_CASE("braided R intertwines the coproduct and commutes with mu (x) mu") {
  const std::vector<std::pair<Spin, Spin>> pairs{{h, Spin(2)}, {Spin(2), Spin(2)}, {h, h}, {Spin(3), h}};
  for (const auto& [a, b] : pairs) {
    const Operator rc = braided_r(a, b);
    for (const auto g : {uqsu2::Generator::E, uqsu2::Generator::F, uqsu2::Generator::QH}) {
      CHECK(rc * uqsu2::coproduct_rep(g, a, b) == uqsu2::coproduct_rep(g, b, a) * rc);
    }
    CHECK(rc * kron(uqsu2::mu(a), uqsu2::mu(b)) == kron(uqsu2::mu(b), uqsu2::mu(a)) * rc);
  }
}

TEST_CASE("enhancement partial traces") {
  for (int t = 1; t <= 6; ++t) {
    const Spin j(t);
    const Shape s{j, j};
    const LaurentPoly up = v(j.framing_v_exp());
    const LaurentPoly down = v(-j.framing_v_exp());
    const Operator id = identity(Shape{j});
    CHECK(partial_trace_first(braided_r(j, j), uqsu2::mu(j)) == up * id);
    CHECK(partial_trace_first(braided_r_inv(j, j), uqsu2::mu(j)) == down * id);
    CHECK(partial_trace_last(braided_r(j, j), uqsu2::mu_inv(j)) == up * id);
    CHECK(partial_trace_last(braided_r_inv(j, j), uqsu2::mu_inv(j)) == down * id);
  }
}

TEST_CASE("monodromy annihilator") {
  for (const Spin a : spins_up_to(2)) {
    for (const Spin b : spins_up_to(2)) CHECK(monodromy_annihilator(a, b).pass());
  }
  // the spin-1/2 case by hand: eigenvalues q and q^{-3}
  const Operator b = r_opposite(h, h) * r_matrix(h, h);
  const Operator id = identity(Shape{h, h});
  CHECK(((b - v(2) * id) * (b - v(-6) * id)).is_zero());
  CHECK_FALSE((b - v(2) * id).is_zero());
  CHECK(r_opposite(Spin(0), Spin(2)) * r_matrix(Spin(0), Spin(2)) == identity(Shape{Spin(0), Spin(2)}));
}

TEST_CASE("FRT and RLL relations") {
  const Report rep = verify_frt({h, Spin(2), Spin(3)});
  INFO(rep.to_text());
  CHECK(rep.pass());
  CHECK(rep.checks.size() == 3 * 3 + 3 * 9);
}

TEST_CASE("corrupted entries are detected") {
  {
    ScopedCorruption bad(h, h, 0, 0, v(3));
    CHECK_FALSE(verify_frt({h}).pass());
    CHECK_FALSE(monodromy_annihilator(h, h).pass());
    CHECK_THROWS_AS(ScopedCorruption(h, Spin(2), 0, 0, 1), UsageError);
  }
  {
    ScopedCorruption bad(h, Spin(2), 1, 0, v(5));
    CHECK_THROWS_AS(r_inverse(h, Spin(2)), InternalError);
    const Report rep = verify_frt({Spin(2)});
    CHECK_FALSE(rep.pass());
  }
  // the cache was never polluted
  CHECK(verify_frt({h}).pass());
  CHECK(r_matrix(h, Spin(2)) * r_inverse(h, Spin(2)) == identity(Shape{h, Spin(2)}));
}

TEST_CASE("cache is safe under concurrent reads") {
  clear_cache();
  std::vector<Operator> results(4);
  std::vector<std::thread> threads;
  for (std::size_t k = 0; k < results.size(); ++k) {
    threads.emplace_back([&results, k] { results[k] = braided_r_inv(Spin(3), Spin(2)); });
  }
  for (auto& t : threads) t.join();
  for (const auto& r : results) CHECK(r == results.front());
}
