#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "hessq/poly.hpp"

using namespace hessq;
using namespace testutil;

TEST_CASE("variable order follows kind, then Q by (s-r, r), then Flag by (j, i)") {
  CHECK(VarId::t() < VarId::lambda());
  CHECK(VarId::lambda() < VarId::xs(1));
  CHECK(VarId::xs(9) < VarId::q(1, 2));
  CHECK(VarId::q(3, 4) < VarId::q(1, 3));
  CHECK(VarId::q(1, 2) < VarId::q(2, 3));
  CHECK(VarId::q(2, 4) < VarId::flag(2, 1));
  CHECK(VarId::flag(5, 1) < VarId::flag(3, 2));
  CHECK(VarId::flag(2, 1) < VarId::flag(3, 1));
  CHECK(VarId::q(2, 2) == VarId::xs(2));
}

TEST_CASE("variable weights") {
  CHECK(*VarId::flag(4, 1).weight() == 6);
  CHECK(*VarId::xs(3).weight() == 2);
  CHECK(*VarId::q(1, 3).weight() == 6);
  CHECK(*VarId::t().weight() == 1);
  CHECK_FALSE(VarId::lambda().weight().has_value());
}

TEST_CASE("variable names round-trip") {
  for (VarId v : {VarId::xs(3), VarId::q(1, 2), VarId::flag(3, 1), VarId::lambda(), VarId::t(),
                  VarId::aux(0), VarId::flag(12, 3), VarId::q(2, 11)})
    CHECK(VarId::parse(v.text()) == v);
  CHECK_THROWS_AS(VarId::parse("w7"), Error);
}

TEST_CASE("ring arithmetic") {
  Polynomial a = x(1) + x(2), b = x(1) - x(2);
  CHECK(a * b == x(1) * x(1) - x(2) * x(2));
  CHECK((a - a).is_zero());
  CHECK(a.pow(3) == a * a * a);
  CHECK((a * (b + q(1, 2))) == a * b + a * q(1, 2));
  CHECK(Polynomial(0).is_zero());
  CHECK((a * Polynomial(3)).content() == 3);
  CHECK((-a.scaled(4)).primitive() == a);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5), var(1, 3), ex(0, 2);
  auto rnd = [&]() {
    Polynomial p;
    for (int k = 0; k < 4; ++k) p += Polynomial(coef(rng)) * x(var(rng)).pow(static_cast<unsigned>(ex(rng))) * q(1, 2).pow(static_cast<unsigned>(ex(rng)));
    return p;
  };
  for (int t = 0; t < 50; ++t) {
    Polynomial a = rnd(), b = rnd(), c = rnd();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("text, latex and json rendering") {
  Polynomial p = x(1) * x(2) + q(1, 2) - Polynomial(3) * xf(2, 1).pow(2);
  CHECK(p.text() == "x1*x2 + q12 - 3*x21^2");
  CHECK(p.latex() == "x_{1} x_{2} + q_{12} - 3 x_{21}^{2}");
  CHECK(polynomial_from_json(p.json()) == p);
  CHECK(Polynomial().text() == "0");
}

TEST_CASE("substitution") {
  Substitution s;
  s.set(VarId::xs(1), x(2) + Polynomial(1));
  s.fixed.push_back(VarId::xs(2));
  CHECK(substitute(x(1) * x(1), s) == x(2) * x(2) + Polynomial(2) * x(2) + Polynomial(1));
  CHECK_THROWS_AS(substitute(q(1, 2), s), Error);
  try {
    substitute(q(1, 2), s);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnmappedVariable);
  }
}

TEST_CASE("derivative and lambda coefficient") {
  Polynomial p = x(1).pow(3) * q(1, 2) + x(2);
  CHECK(derivative(p, VarId::xs(1)) == Polynomial(3) * x(1).pow(2) * q(1, 2));
  CHECK(derivative(p, VarId::xs(3)).is_zero());
  Polynomial c = lam().pow(2) * x(1) + lam() * q(1, 2) + Polynomial(5);
  CHECK(lambda_coefficient(c, 2) == x(1));
  CHECK(lambda_coefficient(c, 0) == Polynomial(5));
}

TEST_CASE("graded degree") {
  auto g = graded_degree(x(1) * x(2) + q(1, 2));
  CHECK(g.homogeneous);
  CHECK(g.degree == 4);
  CHECK_FALSE(graded_degree(x(1) + q(1, 2)).homogeneous);
  CHECK_THROWS_AS(graded_degree(lam()), Error);
}

TEST_CASE("determinant") {
  PolyMatrix m(2, 2);
  m(0, 0) = x(1);
  m(0, 1) = q(1, 2);
  m(1, 0) = Polynomial(-1);
  m(1, 1) = x(2);
  CHECK(determinant(m) == x(1) * x(2) + q(1, 2));
  CHECK(determinant(PolyMatrix(0, 0)) == Polynomial(1));
  CHECK_THROWS_AS(determinant(PolyMatrix(2, 3)), Error);
  // Triangular matrix: product of the diagonal.
  PolyMatrix t(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j <= i; ++j) t(i, j) = i == j ? x(i + 1) : q(j + 1, i + 1);
  CHECK(determinant(t) == x(1) * x(2) * x(3) * x(4));
}

TEST_CASE("determinant matches the Leibniz formula on integer matrices") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-9, 9);
  for (int trial = 0; trial < 20; ++trial) {
    PolyMatrix m(3, 3);
    long a[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = Polynomial(a[i][j] = d(rng));
    long leibniz = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                   a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                   a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
    CHECK(determinant(m) == Polynomial(leibniz));
  }
}

TEST_CASE("evaluation") {
  RationalPoint pt{{VarId::xs(1), mpq_class(1, 2)}, {VarId::q(1, 2), mpq_class(3)}};
  CHECK(evaluate(x(1) * x(1) + q(1, 2), pt) == mpq_class(13, 4));
}
