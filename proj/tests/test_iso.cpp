#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "hessq/flag.hpp"
#include "hessq/iso.hpp"

using namespace hessq;
using namespace testutil;

TEST_CASE("phi on single coordinates") {
  QSymCache c;
  CHECK(phi(xf(2, 1), 2, c) == x(1));
  CHECK(phi(xf(3, 1), 3, c) == x(1) * x(2) + q(1, 2));
  CHECK(phi(Polynomial(7), 4, c) == Polynomial(7));
  CHECK_THROWS_AS(phi(x(1), 3, c), Error);
  CHECK_THROWS_AS(phi(xf(4, 1), 3, c), Error);
}

TEST_CASE("phi preserves degree and is multiplicative") {
  QSymCache c;
  for (int n = 2; n <= 5; ++n)
    for (int j = 1; j < n; ++j)
      for (int i = j + 1; i <= n; ++i) {
        auto g = graded_degree(phi(xf(i, j), n, c));
        CHECK(g.homogeneous);
        CHECK(g.degree == 2 * (i - j));
      }
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> row(2, 4), coef(-3, 3);
  for (int t = 0; t < 10; ++t) {
    Polynomial a, b;
    for (int k = 0; k < 3; ++k) {
      int i = row(rng), j = 1 + static_cast<int>(rng() % static_cast<unsigned>(i - 1));
      a += Polynomial(coef(rng)) * xf(i, j);
      b += Polynomial(coef(rng)) * xf(i, j) * xf(2, 1);
    }
    CHECK(phi(a * b, 4, c) == phi(a, 4, c) * phi(b, 4, c));
  }
}

TEST_CASE("phi_h equals specialization after phi") {
  QSymCache c;
  for (int n = 2; n <= 4; ++n)
    for (const auto& h : all_hessenberg_functions(n))
      for (int j = 1; j < n; ++j)
        for (int i = j + 1; i <= n; ++i) CHECK(phi_h(xf(i, j), h, c) == specialize_h(phi(xf(i, j), n, c), h));
}

TEST_CASE("inverse images") {
  CHECK(phi_inverse(x(1), 3) == xf(3, 2));
  CHECK(phi_inverse(x(2), 3) == xf(2, 1) - xf(3, 2));
  CHECK(phi_inverse(x(3), 3) == -xf(2, 1));
  CHECK(phi_inverse(q(1, 2), 3) == -F(3, 2, 3));
  CHECK_THROWS_AS(phi_inverse(xf(2, 1), 3), Error);
}

TEST_CASE("cramer identity") {
  QSymCache c;
  for (int s = 2; s <= 5; ++s) {
    Polynomial smallest = c.E(2, s) - c.E(2, s - 1) - c.E(1, s - 1) * (c.E(1, s) - c.E(1, s - 1));
    CHECK(smallest == q(s - 1, s));
  }
  for (int n = 2; n <= 4; ++n) CHECK(verify_cramer_identity(n, c).passed());
}

TEST_CASE("key correspondence") {
  QSymCache c;
  CHECK(phi(-F(2, 1, 2), 2, c) - q(1, 2) == x(1) * x(1) - q(1, 2));
  CHECK(verify_key_correspondence(2, 6, c).passed());
  auto r = verify_key_correspondence(3, 8, c);
  CHECK(r.passed());
  CHECK(r.data["membership_certificates"].size() == 6);
}

TEST_CASE("main theorem certificate at n = 3") {
  QSymCache c;
  auto pet = verify_main_theorem(HessenbergFunction::peterson(3), {}, c);
  CHECK(pet.passed());
  auto full = verify_main_theorem(HessenbergFunction::full(3), {}, c);
  CHECK(full.passed());
  auto id = verify_main_theorem(HessenbergFunction::identity(3), {}, c);
  CHECK(id.passed());
  for (const auto& h : all_hessenberg_functions(3)) CHECK(verify_main_theorem(h, {}, c).passed());
}

TEST_CASE("membership detects a non-member") {
  QSymCache c;
  auto h = HessenbergFunction::peterson(3);
  GroebnerOptions o;
  o.degree_bound = 10;
  auto qb = buchberger(quantum_generators(h, c), o);
  CHECK_FALSE(reduce(phi_h(xf(2, 1), h, c), qb).is_zero());
}

TEST_CASE("main theorem without Groebner work marks membership not attempted") {
  QSymCache c;
  MainTheoremOptions o;
  o.attempt_groebner = false;
  auto r = verify_main_theorem(HessenbergFunction::peterson(5), o, c);
  CHECK(r.status == Status::Pass);
  int na = 0;
  for (const auto& sc : r.subchecks) na += sc.status == Status::NotAttempted;
  CHECK(na == 4);
}

TEST_CASE("hilbert equality on both sides, n = 3") {
  QSymCache c;
  for (const auto& h : all_hessenberg_functions(3)) CHECK(verify_hilbert_equality(h, 20, Side::Both, c).passed());
}
