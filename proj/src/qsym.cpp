// Licensed under the Apache License 2.0 (see LICENSE file).
#include "hessq/qsym.hpp"

namespace hessq {

namespace {
void check_interval(int i, int a, int b) {
  // Intervals with a > b+1 are accepted as empty: E_0 = 1, E_i = 0.
  if (i < 0 || a < 1 || b < 0) fail(ErrorCode::IndexOutOfRange, "E interval needs a >= 1, b >= 0, i >= 0");
}
}  // namespace

QSymCache& QSymCache::global() {
  static QSymCache cache;
  return cache;
}

const Polynomial& QSymCache::E_interval(int i, int a, int b) {
  check_interval(i, a, b);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return compute(i, a, b);
}

const Polynomial& QSymCache::compute(int i, int a, int b) {
  static const Polynomial kOne(1), kZero;
  if (i == 0) return kOne;
  if (i > b - a + 1) return kZero;
  auto key = std::make_tuple(i, a, b);
  if (auto it = table_.find(key); it != table_.end()) return it->second;
  Polynomial e = compute(i, a, b - 1);
  e += compute(i - 1, a, b - 1) * Polynomial::var(VarId::xs(b));
  for (int k = 1; k <= i - 1; ++k) {
    const Polynomial& lower = compute(i - 1 - k, a, b - 1 - k);
    if (!lower.is_zero()) e += lower * Polynomial::var(VarId::q(b - k, b));
  }
  return table_.emplace(key, std::move(e)).first->second;
}

const Polynomial& QSymCache::E_interval_h(int i, int a, int b, const HessenbergFunction& h) {
  check_interval(i, a, b);
  if (b > h.n()) fail(ErrorCode::IndexOutOfRange, "interval exceeds n");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto key = std::make_tuple(h.values(), i, a, b);
  if (auto it = htable_.find(key); it != htable_.end()) return it->second;
  Polynomial p = specialize_h(compute(i, a, b), h);
  return htable_.emplace(key, std::move(p)).first->second;
}

PolyMatrix M_matrix(int a, int b) {
  const int k = b - a + 1;
  PolyMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) {
      if (r == c) m(r, c) = Polynomial::var(VarId::xs(a + r));
      else if (c > r) m(r, c) = Polynomial::var(VarId::q(a + r, a + c));
      else if (r == c + 1) m(r, c) = Polynomial(-1);
    }
  return m;
}

namespace {
Polynomial charpoly_coefficient(const PolyMatrix& m, int i) {
  const std::size_t k = m.rows();
  PolyMatrix lm(k, k);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c) {
      lm(r, c) = -m(r, c);
      if (r == c) lm(r, c) += Polynomial::var(VarId::lambda());
    }
  Polynomial coeff = lambda_coefficient(determinant(lm), static_cast<unsigned>(static_cast<int>(k) - i));
  return i % 2 ? -coeff : coeff;
}
}  // namespace

Polynomial E_charpoly(int i, int a, int b) {
  check_interval(i, a, b);
  if (i > b - a + 1) fail(ErrorCode::IndexOutOfRange, "E_charpoly needs i <= b-a+1");
  if (i == 0) return Polynomial(1);
  return charpoly_coefficient(M_matrix(a, b), i);
}

Substitution specialization_map(const HessenbergFunction& h) {
  Substitution sigma;
  sigma.keep_unmapped = true;
  for (auto [r, s] : h.zeroed_q_set()) sigma.set(VarId::q(r, s), Polynomial());
  return sigma;
}

Polynomial specialize_h(const Polynomial& p, const HessenbergFunction& h) {
  return substitute(p, specialization_map(h));
}

Polynomial classical_specialization(int i, int n, QSymCache& cache) {
  if (i < 1 || i > n) fail(ErrorCode::IndexOutOfRange, "classical specialization needs 1 <= i <= n");
  Substitution sigma;
  sigma.keep_unmapped = true;
  for (int s = 2; s <= n; ++s)
    for (int r = 1; r < s; ++r)
      sigma.set(VarId::q(r, s), s - r == 1 ? Polynomial::var(VarId::q_classical(r)) : Polynomial());
  return substitute(cache.E(i, n), sigma);
}

Polynomial classical_charpoly(int i, int n) {
  if (i < 1 || i > n) fail(ErrorCode::IndexOutOfRange, "classical charpoly needs 1 <= i <= n");
  PolyMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) {
    m(r, r) = Polynomial::var(VarId::xs(r + 1));
    if (r + 1 < n) {
      m(r, r + 1) = Polynomial::var(VarId::q_classical(r + 1));
      m(r + 1, r) = Polynomial(-1);
    }
  }
  return charpoly_coefficient(m, i);
}

namespace {
template <class Getter>
Polynomial derivative_sum(int i, int r, int s, int n, Getter&& get) {
  if (r < 1 || s > n || r > s || i < 0)
    fail(ErrorCode::IndexOutOfRange, "derivative index out of range");
  const int j = i - (s - r);
  if (j <= 0) return {};
  Polynomial sum;
  for (int k = 0; k <= j - 1; ++k) {
    const Polynomial& left = get(j - 1 - k, 1, r - 1);
    if (left.is_zero()) continue;
    const Polynomial& right = get(k, s + 1, n);
    if (!right.is_zero()) sum += left * right;
  }
  return sum;
}
}  // namespace

Polynomial dE_dx(int i, int s, int n, QSymCache& cache) { return dE_dq(i, s, s, n, cache); }

Polynomial dE_dq(int i, int r, int s, int n, QSymCache& cache) {
  return derivative_sum(i, r, s, n, [&](int k, int a, int b) -> const Polynomial& {
    return cache.E_interval(k, a, b);
  });
}

Polynomial dE_dq_h(int i, int r, int s, const HessenbergFunction& h, QSymCache& cache) {
  return derivative_sum(i, r, s, h.n(), [&](int k, int a, int b) -> const Polynomial& {
    return cache.E_interval_h(k, a, b, h);
  });
}

}  // namespace hessq
