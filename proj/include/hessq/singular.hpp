// Licensed under the Apache License 2.0 (see LICENSE file).
//
// Jacobians of both presentations, exact rank, and the singular-locus
// certificates for h_m = (m, n, ..., n).
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hessq/hessenberg.hpp"
#include "hessq/ideals.hpp"
#include "hessq/poly.hpp"
#include "hessq/qsym.hpp"
#include "hessq/report.hpp"

namespace hessq {

using AffinePoint = RationalPoint;

struct JacobianMatrix {
  int n = 0;
  std::vector<std::string> row_labels;
  std::vector<VarId> columns;
  PolyMatrix entries;
};

// Quantum side: rows ^hE_1..^hE_n, columns x_1..x_n then the surviving
// q_rs in variable order. Entries from the closed form.
JacobianMatrix jacobian(const HessenbergFunction& h, QSymCache& cache);
// Same shape, entries by symbolic differentiation.
JacobianMatrix jacobian_symbolic(const HessenbergFunction& h, QSymCache& cache);
// The full-flag matrices for n = 3, 4 assembled entry by entry from
// interval polynomials, as tabulated. Throws InvalidParams otherwise.
JacobianMatrix reference_jacobian(int n, QSymCache& cache);

// Coordinate side: rows F_{i,j} with i > h(j), columns all x_ij.
JacobianMatrix coordinate_jacobian(const HessenbergFunction& h);

int rank(std::vector<std::vector<mpq_class>> rows);
int rank_at(const PolyMatrix& m, const AffinePoint& pt);
int rank_at(const JacobianMatrix& m, const AffinePoint& pt);

// Row n of the quantum Jacobian of h_m. Throws IndexOutOfRange unless
// 2 <= m <= n-1.
std::vector<Polynomial> hm_singular_equations(int m, int n, QSymCache& cache);

// {x_i1 : 2 <= i <= n} and {x_nj : 2 <= j <= m}.
std::vector<VarId> claimed_singular_locus(int m, int n);

Permutation w_m(int m, int n);
int schubert_rank(const Permutation& w, int p, int q);  // |{i <= p : w(i) <= q}|

mpq_class random_rational(std::mt19937_64& rng);  // num in [-20,20], den in [1,8]

// Exact rational point on Hess(N,h) in the chart. Supports h_m and the
// Peterson function for n <= 3. Throws SamplerStuck, UnsupportedFlavor.
AffinePoint sample_variety_point(const HessenbergFunction& h, std::uint64_t seed);

// Quantum-side coordinates of a chart point through the inverse images.
AffinePoint quantum_point(const HessenbergFunction& h, const AffinePoint& chart_point);

// Zero set of `gens` against the coordinate subspace {v = 0 : v in zeros}.
// Exact containment, then some power of each v in the ideal (k <= max_power).
struct LocusIdealResult {
  Status containment = Status::Pass;
  Status radical = Status::Pass;
  std::vector<std::string> witnesses;
  std::string detail;
};
LocusIdealResult locus_ideal_check(const std::vector<Polynomial>& gens, const std::vector<VarId>& zeros,
                                   int max_power = 3, std::size_t term_limit = default_term_limit());

// Closed-form entries against derivatives, the tabulated n = 3, 4 matrices,
// and full rank of the full-flag Jacobian at random points.
VerificationReport verify_jacobian(int n, int points, std::uint64_t seed, QSymCache& cache);

VerificationReport pet3_singular_check(QSymCache& cache);

// The weighted sum of F~^{<2>}_{i,1} equals XY - Z^n, with partial sums.
VerificationReport xyz_identity_check(int n);

VerificationReport cyclic_quotient_certificate(int n);

struct SingularOptions {
  int schubert_max_n = 5;
  int ideal_max_n = 4;
  std::size_t term_limit = default_term_limit();
};

VerificationReport verify_singular_locus(int m, int n, int trials, std::uint64_t seed, QSymCache& cache,
                                         const SingularOptions& opts = {});

}  // namespace hessq
