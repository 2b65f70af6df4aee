#include "doctest.h"
#include "qlink/uqsu2.hpp"

using namespace qlink;
using namespace qlink::uqsu2;

namespace {

const Spin h = Spin::half();

LaurentPoly v(int e) { return LaurentPoly::v_pow(e); }

void check_defining_relations(const GeneratorImages& g) {
  const Operator k = g.qH(1);
  const Operator k_inv = g.qH(-1);
  CHECK(k * k_inv == identity(g.shape));
  CHECK(k * g.E == LaurentPoly::q_pow(1) * (g.E * k));
  CHECK(k * g.F == LaurentPoly::q_pow(-1) * (g.F * k));
  // [E, F] = [2H]_q = (q^{2H} - q^{-2H}) / (q - q^{-1})
  CHECK(q_minus_qinv() * commutator(g.E, g.F) == g.qH(2) - g.qH(-2));
}

}  // namespace

TEST_CASE("generator matrices") {
  const Operator e = rep_E(h);
  CHECK(e.nnz() == 1);
  CHECK(e.at(0, 1) == LaurentPoly(1));
  CHECK(rep_E(Spin(0)).is_zero());
  const Operator e1 = rep_E(Spin(2));
  CHECK(e1.at(0, 1) == qint(1));
  CHECK(e1.at(1, 2) == qint(2));
  CHECK(e1.nnz() == 2);

  const Operator f = rep_F(h);
  CHECK(f.nnz() == 1);
  CHECK(f.at(1, 0) == LaurentPoly(1));

  CHECK(rep_qH(h, 2) == Operator::diagonal(Shape{h}, {v(2), v(-2)}));
  for (int tj = 0; tj <= 4; ++tj) CHECK(rep_qH(Spin(tj), 0) == identity(Shape{Spin(tj)}));
}

TEST_CASE("defining relations on irreps and on tensor products") {
  for (int tj = 0; tj <= 6; ++tj) check_defining_relations(images(Spin(tj)));
  for (int a = 0; a <= 3; ++a) {
    for (int b = 0; b <= 3; ++b) check_defining_relations(coproduct(images(Spin(a)), images(Spin(b))));
  }
  check_defining_relations(iterated_images(Shape{h, Spin(2), h}));
  // the q-number diagonal agrees with [2H]_q
  const GeneratorImages g = coproduct(images(h), images(Spin(2)));
  CHECK(commutator(g.E, g.F) == q_number_2H(g.shape));
}

TEST_CASE("casimir is central and scalar") {
  CHECK(casimir(h) == (v(4) + v(-4)) * identity(Shape{h}));
  CHECK(casimir(Spin(0)) == (v(2) + v(-2)) * identity(Shape{Spin(0)}));
  CHECK(casimir(Spin(2)) == (v(6) + v(-6)) * identity(Shape{Spin(2)}));
  for (int tj = 0; tj <= 6; ++tj) {
    const Spin j(tj);
    const Operator c = casimir(j);
    CHECK(commutator(c, rep_E(j)).is_zero());
    CHECK(commutator(c, rep_F(j)).is_zero());
    CHECK(commutator(c, rep_qH(j, 1)).is_zero());
    CHECK(as_scalar(c) == casimir_eigenvalue(j));
  }
}

TEST_CASE("coproduct images") {
  CHECK(coproduct_rep(Generator::QH, h, h) == Operator::diagonal(Shape{h, h}, {v(2), 1, 1, v(-2)}));
  // trivial spin-0 factor
  CHECK(coproduct_rep(Generator::E, Spin(0), Spin(2)) == kron(identity(Shape{Spin(0)}), rep_E(Spin(2))));
  const Operator de = coproduct_rep(Generator::E, h, h);
  // |--> goes to q^{1/2}|+-> + q^{-1/2}|-+>
  CHECK(de.nnz() == 4);
  CHECK(de.at(1, 3) == v(1));
  CHECK(de.at(2, 3) == v(-1));
}

TEST_CASE("coassociativity") {
  const std::vector<Shape> shapes{Shape{h, h, h}, Shape{h, Spin(2), h}, Shape{Spin(2), h, Spin(3)}, Shape{h, h, h, h}};
  for (const Shape& s : shapes) {
    const GeneratorImages r = iterated_images(s, FoldOrder::right);
    const GeneratorImages l = iterated_images(s, FoldOrder::left);
    CHECK(r.E == l.E);
    CHECK(r.F == l.F);
    std::vector<std::size_t> all(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) all[k] = k;
    CHECK(iterated_casimir(s, all, FoldOrder::right) == iterated_casimir(s, all, FoldOrder::left));
  }
}

TEST_CASE("intermediate casimir spans") {
  const Shape s{Spin(2), h, Spin(3)};
  CHECK(iterated_casimir(s, {0}) == kron(casimir(Spin(2)), identity(Shape{h, Spin(3)})));
  CHECK_THROWS(iterated_casimir(s, {0, 2}));

  const Shape hh{h, h, Spin(2)};
  const Operator q12 = iterated_casimir(hh, {0, 1});
  const Operator id = identity(hh);
  CHECK(((q12 - casimir_eigenvalue(Spin(0)) * id) * (q12 - casimir_eigenvalue(Spin(2)) * id)).is_zero());
  CHECK_FALSE((q12 - casimir_eigenvalue(Spin(2)) * id).is_zero());

  const Shape hhh{h, h, h};
  const Operator q123 = iterated_casimir(hhh, {0, 1, 2});
  const Operator id3 = identity(hhh);
  CHECK(((q123 - casimir_eigenvalue(h) * id3) * (q123 - casimir_eigenvalue(Spin(3)) * id3)).is_zero());
}
