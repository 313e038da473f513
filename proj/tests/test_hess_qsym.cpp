#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "hessq/hessenberg.hpp"
#include "hessq/qsym.hpp"

using namespace hessq;
using namespace testutil;

namespace {
ErrorCode code_of(const std::vector<int>& v) {
  try {
    HessenbergFunction::from_values(v);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

// e_i(x_1..x_n) by subset enumeration.
Polynomial elementary(int i, int n) {
  Polynomial sum;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != i) continue;
    Polynomial t(1);
    for (int s = 0; s < n; ++s)
      if (mask >> s & 1u) t *= x(s + 1);
    sum += t;
  }
  return sum;
}

Polynomial zero_all_q(const Polynomial& p, int n) {
  Substitution s;
  s.keep_unmapped = true;
  for (int b = 2; b <= n; ++b)
    for (int a = 1; a < b; ++a) s.set(VarId::q(a, b), Polynomial());
  return substitute(p, s);
}
}  // namespace

TEST_CASE("Hessenberg function validation") {
  CHECK_NOTHROW(HessenbergFunction::from_values({3, 3, 4, 5, 5}));
  CHECK(code_of({2, 1, 3}) == ErrorCode::NotNondecreasing);
  CHECK(code_of({1, 1, 3}) == ErrorCode::BelowDiagonal);
  CHECK(code_of({4, 4, 4}) == ErrorCode::IndexOutOfRange);
  CHECK_NOTHROW(HessenbergFunction::identity(5));
  CHECK(HessenbergFunction::parse("2,3,3") == HessenbergFunction::peterson(3));
  CHECK_THROWS_AS(HessenbergFunction::parse("2,x,3"), Error);
}

TEST_CASE("indecomposability and decomposition") {
  CHECK(HessenbergFunction::peterson(6).is_indecomposable());
  CHECK_FALSE(HessenbergFunction::identity(3).is_indecomposable());
  auto h = HessenbergFunction::from_values({2, 3, 3, 5, 5});
  CHECK_FALSE(h.is_indecomposable());
  auto parts = h.decompose();
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].values() == std::vector<int>{2, 3, 3});
  CHECK(parts[1].values() == std::vector<int>{2, 2});
  CHECK(HessenbergFunction::identity(3).decompose().size() == 3);

  std::mt19937_64 rng(11);
  for (int n = 1; n <= 8; ++n) {
    auto all = n <= 7 ? all_hessenberg_functions(n) : all_hessenberg_functions(8);
    for (int t = 0; t < 100; ++t) {
      const auto& f = all[rng() % all.size()];
      std::vector<int> joined;
      int offset = 0;
      auto ps = f.decompose();
      for (const auto& p : ps) {
        for (int v : p.values()) joined.push_back(v + offset);
        offset += p.n();
      }
      CHECK(joined == f.values());
      CHECK(f.is_indecomposable() == (ps.size() == 1));
    }
  }
}

TEST_CASE("dimension equals a box count") {
  CHECK(HessenbergFunction::peterson(5).dimension() == 4);
  CHECK(HessenbergFunction::full(5).dimension() == 10);
  for (int n = 3; n <= 6; ++n)
    for (int m = 2; m < n; ++m) {
      int expected = m - 1;
      for (int j = 2; j <= n; ++j) expected += n - j;
      CHECK(HessenbergFunction::h_m(m, n).dimension() == expected);
    }
  for (int n = 1; n <= 6; ++n)
    for (const auto& h : all_hessenberg_functions(n)) {
      int boxes = 0;
      std::string s = h.staircase();
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j)
          if (s[static_cast<std::size_t>((i - 1) * (n + 1) + (j - 1))] == '#') ++boxes;
      CHECK(h.dimension() == boxes);
    }
}

TEST_CASE("zeroed and surviving q sets") {
  auto h = HessenbergFunction::from_values({3, 3, 4, 5, 5});
  std::vector<std::pair<int, int>> expected{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}};
  CHECK(h.surviving_q_set() == expected);
  CHECK(HessenbergFunction::full(5).zeroed_q_set().empty());
  std::vector<std::pair<int, int>> band{{1, 2}, {2, 3}, {3, 4}, {4, 5}};
  CHECK(HessenbergFunction::peterson(5).surviving_q_set() == band);
  for (int n = 1; n <= 6; ++n)
    for (const auto& f : all_hessenberg_functions(n))
      CHECK(f.zeroed_q_set().size() + f.surviving_q_set().size() ==
            static_cast<std::size_t>(n * (n - 1) / 2));
}

TEST_CASE("partial order") {
  for (int n = 2; n <= 6; ++n)
    for (const auto& f : all_hessenberg_functions(n)) {
      CHECK(leq(f, f));
      if (f.is_indecomposable()) CHECK(leq(HessenbergFunction::peterson(n), f));
    }
  CHECK_FALSE(leq(HessenbergFunction::from_values({3, 3, 3}), HessenbergFunction::from_values({2, 3, 3})));
  CHECK_THROWS_AS(leq(HessenbergFunction::full(2), HessenbergFunction::full(3)), Error);
}

TEST_CASE("E polynomials: printed n=3 values") {
  QSymCache c;
  CHECK(c.E(1, 1) == x(1));
  CHECK(c.E(1, 2) == x(1) + x(2));
  CHECK(c.E(2, 2) == x(1) * x(2) + q(1, 2));
  CHECK(c.E(2, 3) == x(1) * x(2) + x(1) * x(3) + x(2) * x(3) + q(1, 2) + q(2, 3));
  CHECK(c.E(3, 3) == x(1) * x(2) * x(3) + x(1) * q(2, 3) + x(3) * q(1, 2) + q(1, 3));
  CHECK(c.E_interval(0, 5, 3) == Polynomial(1));
  CHECK(c.E_interval(4, 2, 3).is_zero());
  CHECK(E_charpoly(2, 2, 3) == x(2) * x(3) + q(2, 3));
  CHECK(c.E_interval(1, 3, 1).is_zero());
  CHECK_THROWS_AS(c.E_interval(1, 0, 1), Error);
}

TEST_CASE("E polynomials: recursion against determinant for n <= 5") {
  QSymCache c;
  for (int b = 1; b <= 5; ++b)
    for (int a = 1; a <= b; ++a)
      for (int i = 0; i <= b - a + 1; ++i) CHECK(c.E_interval(i, a, b) == E_charpoly(i, a, b));
}

TEST_CASE("E polynomials reduce to elementary symmetric polynomials at q = 0") {
  QSymCache c;
  for (int n = 1; n <= 7; ++n)
    for (int i = 1; i <= n; ++i) {
      CHECK(zero_all_q(c.E(i, n), n) == elementary(i, n));
      CHECK(specialize_h(c.E(i, n), HessenbergFunction::identity(n)) == elementary(i, n));
    }
}

TEST_CASE("h-specialization") {
  QSymCache c;
  auto pet3 = HessenbergFunction::peterson(3);
  CHECK(specialize_h(c.E(3, 3), pet3) == x(1) * x(2) * x(3) + x(1) * q(2, 3) + x(3) * q(1, 2));
  CHECK(specialize_h(c.E(4, 4), HessenbergFunction::full(4)) == c.E(4, 4));
  auto h = HessenbergFunction::from_values({2, 3, 4, 4});
  Polynomial a = c.E(3, 4), b = c.E(2, 4);
  CHECK(specialize_h(a * b, h) == specialize_h(a, h) * specialize_h(b, h));
  CHECK(specialize_h(specialize_h(a, h), h) == specialize_h(a, h));
}

TEST_CASE("classical specialization") {
  QSymCache c;
  auto qc = [](int s) { return Polynomial::var(VarId::q_classical(s)); };
  CHECK(classical_specialization(2, 2, c) == x(1) * x(2) + qc(1));
  CHECK(classical_specialization(2, 3, c) == x(1) * x(2) + x(1) * x(3) + x(2) * x(3) + qc(1) + qc(2));
  for (int n = 1; n <= 6; ++n) {
    CHECK(classical_specialization(1, n, c) == elementary(1, n));
    for (int i = 1; i <= n; ++i) CHECK(classical_specialization(i, n, c) == classical_charpoly(i, n));
  }
  // Three-term recursion.
  auto E = [&](int r, int s) -> Polynomial {
    if (r == 0) return Polynomial(1);
    if (r < 0 || r > s) return Polynomial();
    return classical_specialization(r, s, c);
  };
  for (int s = 2; s <= 6; ++s)
    for (int r = 1; r <= s; ++r)
      CHECK(E(r, s) == E(r, s - 1) + E(r - 1, s - 1) * x(s) + E(r - 2, s - 2) * qc(s - 1));
}

TEST_CASE("closed-form derivatives") {
  QSymCache c;
  CHECK(dE_dx(3, 2, 3, c) == x(1) * x(3));
  for (int n = 2; n <= 5; ++n)
    for (int s = 2; s <= n; ++s)
      for (int r = 1; r < s; ++r) {
        CHECK(dE_dq(s - r + 1, r, s, n, c) == Polynomial(1));
        for (int j = 1; j <= s - r; ++j) CHECK(dE_dq(j, r, s, n, c).is_zero());
      }
  for (int n = 1; n <= 5; ++n)
    for (int i = 1; i <= n; ++i)
      for (int s = 1; s <= n; ++s) {
        CHECK(dE_dx(i, s, n, c) == derivative(c.E(i, n), VarId::xs(s)));
        for (int r = 1; r < s; ++r) CHECK(dE_dq(i, r, s, n, c) == derivative(c.E(i, n), VarId::q(r, s)));
      }
}
