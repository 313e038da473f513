#include <doctest.h>

#include "helpers.hpp"
#include "hessq/flag.hpp"
#include "hessq/singular.hpp"

using namespace hessq;
using namespace testutil;

TEST_CASE("jacobian layout for n = 3") {
  QSymCache c;
  auto j = jacobian(HessenbergFunction::full(3), c);
  REQUIRE(j.columns.size() == 6);
  CHECK(j.columns[3] == VarId::q(1, 2));
  CHECK(j.columns[5] == VarId::q(1, 3));
  for (std::size_t k = 0; k < 6; ++k) CHECK(j.entries(0, k) == Polynomial(k < 3 ? 1 : 0));
  std::vector<Polynomial> row3{c.E_interval(2, 2, 3), c.E_interval(1, 1, 1) * c.E_interval(1, 3, 3),
                               c.E_interval(2, 1, 2), c.E_interval(1, 3, 3), c.E_interval(1, 1, 1), Polynomial(1)};
  for (std::size_t k = 0; k < 6; ++k) CHECK(j.entries(2, k) == row3[k]);
  auto pet = jacobian(HessenbergFunction::peterson(3), c);
  CHECK(pet.columns.size() == 5);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 5; ++k)
      CHECK(pet.entries(i, k) == specialize_h(j.entries(i, k), HessenbergFunction::peterson(3)));
}

TEST_CASE("closed-form jacobian equals symbolic derivatives") {
  QSymCache c;
  for (int n = 2; n <= 5; ++n) {
    std::vector<HessenbergFunction> hs{HessenbergFunction::full(n), HessenbergFunction::peterson(n)};
    for (int m = 2; m < n; ++m) hs.push_back(HessenbergFunction::h_m(m, n));
    for (const auto& h : hs) {
      auto a = jacobian(h, c), b = jacobian_symbolic(h, c);
      CHECK(a.columns.size() == static_cast<std::size_t>(n) + h.surviving_q_set().size());
      for (std::size_t i = 0; i < a.entries.rows(); ++i)
        for (std::size_t k = 0; k < a.columns.size(); ++k) CHECK(a.entries(i, k) == b.entries(i, k));
    }
  }
  for (int n : {3, 4}) {
    auto ref = reference_jacobian(n, c), got = jacobian(HessenbergFunction::full(n), c);
    for (std::size_t i = 0; i < ref.entries.rows(); ++i)
      for (std::size_t k = 0; k < ref.columns.size(); ++k) CHECK(ref.entries(i, k) == got.entries(i, k));
  }
}

TEST_CASE("exact rank") {
  CHECK(rank({}) == 0);
  CHECK(rank({{0, 0}, {0, 0}}) == 0);
  CHECK(rank({{1, 2}, {2, 4}}) == 1);
  CHECK(rank({{mpq_class(1, 2), 1}, {1, mpq_class(1, 3)}}) == 2);
  QSymCache c;
  AffinePoint origin;
  for (VarId v : {VarId::xs(1), VarId::xs(2), VarId::xs(3), VarId::q(1, 2), VarId::q(2, 3)}) origin[v] = 0;
  CHECK(rank_at(jacobian(HessenbergFunction::peterson(3), c), origin) == 2);
}

TEST_CASE("h_m singular equations and claimed locus") {
  QSymCache c;
  auto eqs = hm_singular_equations(2, 3, c);
  auto h = HessenbergFunction::peterson(3);
  REQUIRE(eqs.size() == 5);
  CHECK(eqs[0] == c.E_interval_h(2, 2, 3, h));
  CHECK(eqs[3] == x(3));
  CHECK(eqs[4] == x(1));
  CHECK_THROWS_AS(hm_singular_equations(3, 3, c), Error);
  auto s = claimed_singular_locus(2, 3);
  CHECK(s == std::vector<VarId>{VarId::flag(2, 1), VarId::flag(3, 1), VarId::flag(3, 2)});
  for (int n = 3; n <= 6; ++n)
    for (int m = 2; m < n; ++m) {
      CHECK(claimed_singular_locus(m, n).size() == static_cast<std::size_t>(n - 1 + m - 1));
      CHECK(hm_singular_equations(m, n, c).size() ==
            static_cast<std::size_t>(n) + HessenbergFunction::h_m(m, n).surviving_q_set().size());
    }
}

TEST_CASE("w_m and rank function") {
  CHECK(w_m(2, 5) == Permutation{1, 4, 5, 3, 2});
  CHECK(w_m(3, 4) == Permutation{1, 3, 2, 4});
  auto w = w_m(2, 4);
  CHECK(schubert_rank(w, 1, 1) == 1);
  CHECK(schubert_rank(w, 4, 4) == 4);
}

TEST_CASE("sampler") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    auto pt = sample_variety_point(HessenbergFunction::h_m(2, 3), seed);
    CHECK(evaluate(F(3, 1, 3), pt) == 0);
    CHECK(pt == sample_variety_point(HessenbergFunction::h_m(2, 3), seed));
  }
  for (int n = 4; n <= 6; ++n)
    for (int m = 2; m < n; ++m) {
      auto h = HessenbergFunction::h_m(m, n);
      auto pt = sample_variety_point(h, 7);
      for (const auto& g : ideal_generators(h, GeneratorFlavor::F)) CHECK(evaluate(g.poly, pt) == 0);
    }
  CHECK_THROWS_AS(sample_variety_point(HessenbergFunction::peterson(4), 1), Error);
}

TEST_CASE("h_2 parametrization at n = 4 with Z = 1, X = 2") {
  // Y = Z^4 / X = 1/2; pull back and check the generators vanish.
  mpq_class Z = 1, X = 2, Y = mpq_class(1, 2), x32 = 3, x43 = 5;
  AffinePoint pt{{VarId::flag(2, 1), Z},
                 {VarId::flag(3, 1), -X + Z * Z},
                 {VarId::flag(3, 2), x32},
                 {VarId::flag(4, 3), x43}};
  pt[VarId::flag(4, 2)] = Y - Z * Z - x32 * Z;
  pt[VarId::flag(4, 1)] = Z * pt[VarId::flag(3, 1)] + pt[VarId::flag(3, 1)] * x32 - Z * Z * x32;
  for (const auto& g : ideal_generators(HessenbergFunction::h_m(2, 4), GeneratorFlavor::F))
    CHECK(evaluate(g.poly, pt) == 0);
}

TEST_CASE("locus ideal check detects failures") {
  auto bad = locus_ideal_check({xf(2, 1)}, {VarId::flag(3, 1)});
  CHECK(bad.containment == Status::Fail);
  auto weak = locus_ideal_check({xf(2, 1) * xf(3, 1)}, {VarId::flag(2, 1), VarId::flag(3, 1)});
  CHECK(weak.containment == Status::Pass);
  CHECK(weak.radical == Status::Inconclusive);
  auto power = locus_ideal_check({xf(2, 1).pow(2), xf(3, 1)}, {VarId::flag(2, 1), VarId::flag(3, 1)});
  CHECK(power.radical == Status::Pass);
}

TEST_CASE("jacobian, xyz and cyclic quotient checks") {
  QSymCache c;
  for (int n = 2; n <= 4; ++n) CHECK(verify_jacobian(n, 20, 5, c).passed());
  CHECK(pet3_singular_check(c).passed());
  for (int n = 3; n <= 6; ++n) {
    CHECK(xyz_identity_check(n).passed());
    CHECK(cyclic_quotient_certificate(n).passed());
  }
  CHECK_THROWS_AS(xyz_identity_check(2), Error);
}

TEST_CASE("singular locus of h_m") {
  QSymCache c;
  auto r = verify_singular_locus(2, 3, 50, 1, c);
  CHECK(r.passed());
  CHECK(r.subchecks.size() == 4);
  CHECK(verify_singular_locus(2, 4, 50, 2, c).passed());
  CHECK(verify_singular_locus(3, 4, 50, 3, c).passed());
  // Same seed, same report.
  auto a = verify_singular_locus(2, 4, 20, 9, c), b = verify_singular_locus(2, 4, 20, 9, c);
  CHECK(a.to_json(false).dump() == b.to_json(false).dump());
}
