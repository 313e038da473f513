// Licensed under the Apache License 2.0 (see LICENSE file).
//
// The map x_{ij} -> E_{i-j}^{(n-j)}, its inverse on generators, and the
// certificates built from them.
#pragma once

#include <string>
#include <vector>

#include "hessq/hessenberg.hpp"
#include "hessq/ideals.hpp"
#include "hessq/qsym.hpp"
#include "hessq/report.hpp"

namespace hessq {

Substitution phi_map(int n, QSymCache& cache);
// Throws IndexOutOfRange on variables other than x_{ij} with i <= n.
Polynomial phi(const Polynomial& p, int n, QSymCache& cache);
Polynomial phi_h(const Polynomial& p, const HessenbergFunction& h, QSymCache& cache);

// x_s -> x_{n-s+1,n-s} - x_{n-s+2,n-s+1}, q_{rs} -> -F_{n+1-r,n+1-s}.
Substitution phi_inverse_map(int n);
Polynomial phi_inverse(const Polynomial& p, int n);

struct IsoWitness {
  int n = 0;
  std::vector<std::pair<VarId, Polynomial>> forward_images;
  std::vector<std::pair<VarId, Polynomial>> inverse_images;
  std::vector<std::pair<std::string, bool>> membership_certificates;
};
IsoWitness iso_witness(const HessenbergFunction& h, QSymCache& cache);

// q_{rs} as a determinant in differences of E polynomials.
VerificationReport verify_cramer_identity(int n, QSymCache& cache);

VerificationReport verify_key_correspondence(int n, int D, QSymCache& cache,
                                             std::size_t term_limit = default_term_limit());

struct MainTheoremOptions {
  int membership_bound = 0;  // 0: 2n+4
  int hilbert_bound = 20;
  bool attempt_groebner = true;
  std::size_t term_limit = default_term_limit();
};

VerificationReport verify_main_theorem(const HessenbergFunction& h, const MainTheoremOptions& opts,
                                       QSymCache& cache);

enum class Side { Coordinate, Quantum, Both };

// Staircase series of one or both quotient rings against the product
// formulas; the three formula routes are compared with each other too.
VerificationReport verify_hilbert_equality(const HessenbergFunction& h, int D, Side side, QSymCache& cache,
                                           bool attempt_groebner = true,
                                           std::size_t term_limit = default_term_limit());

// Generators of the quantum side: ^hE_1^{(n)}, ..., ^hE_n^{(n)}.
std::vector<Polynomial> quantum_generators(const HessenbergFunction& h, QSymCache& cache);

}  // namespace hessq
