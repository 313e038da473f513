// Licensed under the Apache License 2.0 (see LICENSE file).
//
// Coordinates on the opposite cell: the unipotent matrix g, the
// polynomials F_{i,j} and their truncated versions.
#pragma once

#include <vector>

#include "hessq/hessenberg.hpp"
#include "hessq/poly.hpp"
#include "hessq/report.hpp"

namespace hessq {

PolyMatrix unipotent(int n);     // 1 on the diagonal, x_{ij} below
PolyMatrix jordan_nilpotent(int n);

// det of g with column i replaced by column j of Ng (full n x n).
Polynomial F(int i, int j, int n);

// (g^{-1} N g)_{ij} through the finite series for g^{-1}.
Polynomial conj_entry(int i, int j, int n);
PolyMatrix conj_matrix(int n);
PolyMatrix unipotent_inverse(int n);

// The truncated determinant with rows start..m and i, columns start..m and
// column j of Ng, where start = max(1, j-1). Pre: j <= m < i <= n.
Polynomial F_tilde(int i, int j, int m, int n);

// Exact check of the two recursions and the boundary case F = F~^{<i-1>}.
VerificationReport verify_F_recursions(int n);

enum class GeneratorFlavor { F, FTilde };

struct Generator {
  int i = 0, j = 0;
  Polynomial poly;
};

// Order: j ascending, then i ascending.
std::vector<Generator> ideal_generators(const HessenbergFunction& h, GeneratorFlavor flavor);
std::vector<Polynomial> generator_polys(const std::vector<Generator>& gens);

// Both generator sets give the same ideal, shown by explicit triangular
// combinations in each direction. Pre: h indecomposable and not full.
VerificationReport verify_ideal_equality(const HessenbergFunction& h);

}  // namespace hessq
