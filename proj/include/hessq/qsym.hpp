// Licensed under the Apache License 2.0 (see LICENSE file).
//
// Quantized elementary symmetric polynomials E_i^{[a,b]} and their
// specializations.
#pragma once

#include <map>
#include <mutex>
#include <tuple>

#include "hessq/hessenberg.hpp"
#include "hessq/poly.hpp"

namespace hessq {

// The interval polynomials do not depend on n, so one cache serves every n
// and every Hessenberg function. Append-only, guarded by a lock.
class QSymCache {
 public:
  // E_i^{[a,b]} via the recursion in b. Pre: 1 <= a <= b+1, i >= 0.
  const Polynomial& E_interval(int i, int a, int b);
  const Polynomial& E(int i, int n) { return E_interval(i, 1, n); }

  // h-specialized E_i^{[a,b]}, cached per h.
  const Polynomial& E_interval_h(int i, int a, int b, const HessenbergFunction& h);

  static QSymCache& global();

 private:
  const Polynomial& compute(int i, int a, int b);
  std::recursive_mutex mu_;
  std::map<std::tuple<int, int, int>, Polynomial> table_;
  std::map<std::tuple<std::vector<int>, int, int, int>, Polynomial> htable_;
};

// Signed lambda-coefficient of det(lambda I - M_{[a,b]}). Independent of
// the recursion; used as its cross-check.
Polynomial E_charpoly(int i, int a, int b);

// The matrix M_{[a,b]}: x on the diagonal, q_{rs} above, -1 below.
PolyMatrix M_matrix(int a, int b);

// Zero the q_{rs} outside the staircase of h.
Polynomial specialize_h(const Polynomial& p, const HessenbergFunction& h);
Substitution specialization_map(const HessenbergFunction& h);

// Classical specialization q_{rs} = 0 for s-r > 1, q_{s,s+1} = q_s.
Polynomial classical_specialization(int i, int n, QSymCache& cache);
// Same object from det(lambda I - tridiagonal matrix).
Polynomial classical_charpoly(int i, int n);

// Closed-form partial derivatives of E_i^{(n)}. dE_dq(i, s, s, n) is the
// derivative in x_s.
Polynomial dE_dx(int i, int s, int n, QSymCache& cache);
Polynomial dE_dq(int i, int r, int s, int n, QSymCache& cache);
// Closed form for the derivative of the h-specialized E_i^{(n)}.
Polynomial dE_dq_h(int i, int r, int s, const HessenbergFunction& h, QSymCache& cache);

}  // namespace hessq
