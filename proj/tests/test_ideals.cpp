#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "hessq/flag.hpp"
#include "hessq/ideals.hpp"
#include "hessq/qsym.hpp"

using namespace hessq;
using namespace testutil;

namespace {
std::vector<mpz_class> coeffs(std::initializer_list<long> v) {
  std::vector<mpz_class> out;
  for (long c : v) out.emplace_back(c);
  return out;
}
}  // namespace

TEST_CASE("buchberger on small inputs") {
  auto gb = buchberger({x(1)});
  REQUIRE(gb.elements.size() == 1);
  CHECK(gb.elements[0] == x(1));
  CHECK_THROWS_AS(buchberger({x(1) + q(1, 2)}), Error);
}

TEST_CASE("reduce: n = 2 normal forms") {
  auto gb = buchberger({x(1) + x(2), x(1) * x(2) + q(1, 2)});
  NormalForm nf = reduce(x(1) * x(1), gb);
  CHECK(nf.numerator == q(1, 2));
  CHECK(nf.denominator == 1);
  CHECK(reduce(x(1) + x(2), gb).is_zero());
  CHECK(reduce(Polynomial(1), gb).numerator == Polynomial(1));
  // Denominators survive exactly: 2*x1 + x2 over (2*x1 + x2).
  auto gb2 = buchberger({Polynomial(2) * x(1) + x(2)});
  NormalForm f = reduce(x(1), gb2);
  CHECK(f.denominator == 2);
  CHECK(f.numerator == -x(2));
}

TEST_CASE("reduce respects the degree bound") {
  GroebnerOptions o;
  o.degree_bound = 4;
  auto gb = buchberger({x(1) + x(2)}, o);
  try {
    reduce(x(1).pow(3), gb);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegreeBoundExceeded);
  }
}

TEST_CASE("membership") {
  std::vector<Polynomial> g{x(1) + x(2), x(1) * x(2) + q(1, 2)};
  CHECK(member(x(1) * x(1) - q(1, 2) - x(1) * (x(1) + x(2)) + (x(1) * x(2) + q(1, 2)) - q(1, 2) + q(1, 2), g, 4) ==
        member(x(1) * x(1) - q(1, 2), g, 4));
  CHECK_FALSE(member(q(1, 2), g, 4));
  CHECK(member(Polynomial(), g, 4));
  CHECK(member(x(1) * x(1) + q(1, 2) - q(1, 2) * 2 + q(1, 2), g, 4) == false);
}

TEST_CASE("membership properties on the n = 3 ideal") {
  QSymCache c;
  std::vector<Polynomial> g{c.E(1, 3), c.E(2, 3), c.E(3, 3)};
  GroebnerOptions o;
  o.degree_bound = 10;
  auto gb = buchberger(g, o);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<Polynomial> deg6{x(1).pow(3), x(1) * q(2, 3), q(1, 3), x(2) * x(3) * x(1), x(3) * q(1, 2)};
  for (int t = 0; t < 20; ++t) {
    Polynomial p;
    for (const auto& m : deg6) p += Polynomial(d(rng)) * m;
    NormalForm once = reduce(p, gb);
    NormalForm twice = reduce(once.numerator, gb);
    CHECK(twice.numerator == once.numerator);
    CHECK(twice.denominator == 1);
    // Linear combinations of members are members.
    Polynomial a = c.E(3, 3) + x(1) * c.E(2, 3), b = q(1, 2) * c.E(1, 3);
    CHECK(reduce(Polynomial(d(rng)) * a + Polynomial(d(rng)) * b, gb).is_zero());
  }
}

TEST_CASE("staircase series: small cases") {
  auto s1 = staircase_series({x(1) * x(1)}, {VarId::xs(1)}, 10);
  CHECK(s1.coefficients == coeffs({1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
  auto s2 = staircase_series(std::vector<Polynomial>{}, {VarId::xs(1)}, 6);
  CHECK(s2.coefficients == coeffs({1, 0, 1, 0, 1, 0, 1}));
  std::vector<VarId> ring{VarId::xs(1), VarId::xs(2), VarId::q(1, 2)};
  auto s3 = staircase_series({x(1) + x(2), x(1) * x(2) + q(1, 2)}, ring, 8);
  CHECK(s3.coefficients == coeffs({1, 0, 1, 0, 1, 0, 1, 0, 1}));
  CHECK(same_expansion(s3, product_series_closed(HessenbergFunction::full(2), 8)));
  CHECK(same_expansion(staircase_series(std::vector<Polynomial>{}, ring, 12), free_series(ring, 12)));
}

TEST_CASE("product series") {
  auto h22 = HessenbergFunction::full(2);
  auto p = product_series_coordinate(h22, 12);
  CHECK(p.coefficients == coeffs({1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1}));
  auto pet3 = HessenbergFunction::peterson(3);
  auto closed = HilbertSeries::from_factors({{2, 1}, {2, 2}}, {{4, 0}, {4, 0}}, 20);
  CHECK(same_expansion(product_series_closed(pet3, 20), closed));
  // The identity: only the Poincare polynomial of the flag variety remains.
  auto id3 = product_series_closed(HessenbergFunction::identity(3), 8);
  CHECK(id3.coefficients == coeffs({1, 0, 2, 0, 2, 0, 1, 0, 0}));
  for (int n = 2; n <= 6; ++n)
    for (const auto& h : all_hessenberg_functions(n)) {
      auto a = product_series_coordinate(h, 24), b = product_series_quantum(h, 24), c = product_series_closed(h, 24);
      CHECK(a.coefficients == b.coefficients);
      CHECK(a.coefficients == c.coefficients);
    }
}

TEST_CASE("identity function: staircase of the elementary symmetric ideal matches the Poincare polynomial") {
  QSymCache c;
  for (int n = 2; n <= 4; ++n) {
    auto h = HessenbergFunction::identity(n);
    std::vector<Polynomial> g;
    for (int i = 1; i <= n; ++i) g.push_back(specialize_h(c.E(i, n), h));
    auto s = staircase_series(g, quantum_ring_vars(h), 2 * n * n);
    CHECK(same_expansion(s, product_series_closed(h, 2 * n * n)));
  }
}

TEST_CASE("regular sequence certificates") {
  QSymCache c;
  // Full F set at n = 3.
  std::vector<Polynomial> fs;
  for (int j = 1; j < 3; ++j)
    for (int i = j + 1; i <= 3; ++i) fs.push_back(F(i, j, 3));
  auto r1 = regular_sequence_certificate(fs, coordinate_ring_vars(3), 20);
  CHECK(r1.passed());
  // E's together with every q at n = 3.
  std::vector<Polynomial> eq{c.E(1, 3), c.E(2, 3), c.E(3, 3), q(1, 2), q(2, 3), q(1, 3)};
  auto r2 = regular_sequence_certificate(eq, quantum_ring_vars(HessenbergFunction::full(3)), 20);
  CHECK(r2.passed());
  auto r3 = regular_sequence_certificate({x(1) * x(1)}, {VarId::xs(1), VarId::xs(2)}, 12);
  CHECK(r3.passed());
  // Not a regular sequence: x1*x2, x1*x3.
  auto r4 = regular_sequence_certificate({x(1) * x(2), x(1) * x(3)}, {VarId::xs(1), VarId::xs(2), VarId::xs(3)}, 10);
  CHECK(r4.status == Status::Fail);
  CHECK_FALSE(r4.witnesses.empty());
}

TEST_CASE("term limit is enforced") {
  QSymCache c;
  GroebnerOptions o;
  o.term_limit = 3;
  o.degree_bound = 12;
  try {
    buchberger({c.E(1, 4), c.E(2, 4), c.E(3, 4), c.E(4, 4)}, o);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ResourceLimit);
  }
}
