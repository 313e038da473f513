// Licensed under the Apache License 2.0 (see LICENSE file).
//
// Homogeneous ideals: truncated Buchberger completion, normal forms,
// membership, and Hilbert series.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hessq/hessenberg.hpp"
#include "hessq/poly.hpp"
#include "hessq/report.hpp"

namespace hessq {

// Term ceiling for Gröbner computations; HESSQ_TERM_LIMIT overrides.
std::size_t default_term_limit();

struct GroebnerOptions {
  std::optional<int> degree_bound;  // empty: run to completion
  std::size_t term_limit = default_term_limit();
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t max_terms = 0;
};

struct GroebnerBasis {
  // Primitive, positive leading coefficients, inter-reduced; sorted by
  // leading monomial ascending.
  std::vector<Polynomial> elements;
  std::optional<int> degree_bound;
  GroebnerStats stats;

  std::vector<Monomial> leading_monomials() const;
};

// Pre: every generator is homogeneous in the weighted grading.
// Throws NotHomogeneous, ResourceLimit.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const GroebnerOptions& opts = {});

// Exact normal form over Q as numerator / denominator with the denominator
// positive and coprime to the numerator's content.
struct NormalForm {
  Polynomial numerator;
  mpz_class denominator = 1;
  bool is_zero() const { return numerator.is_zero(); }
};

// Throws DegreeBoundExceeded if p is above the basis' degree bound.
NormalForm reduce(const Polynomial& p, const GroebnerBasis& basis);

bool member(const Polynomial& p, const std::vector<Polynomial>& gens, int degree_bound,
            std::size_t term_limit = default_term_limit());

// One (t^d)-factor of a product series: k == 0 means (1 - t^d), k > 0 means
// (1 + t^d + ... + t^{dk}).
struct SeriesFactor {
  int d = 0;
  int k = 0;
  std::string text() const;
};

struct HilbertSeries {
  std::vector<SeriesFactor> numerator;
  std::vector<SeriesFactor> denominator;
  std::vector<mpz_class> coefficients;  // index = degree in t, up to the bound
  int degree_bound = 0;

  std::string symbolic() const;
  std::string coefficients_text() const;
  // Expands the symbolic factors up to degree_bound.
  static HilbertSeries from_factors(std::vector<SeriesFactor> num, std::vector<SeriesFactor> den, int D);
};

bool same_expansion(const HilbertSeries& a, const HilbertSeries& b);

// Standard-monomial count per degree of the quotient by the ideal.
HilbertSeries staircase_series(const GroebnerBasis& basis, const std::vector<VarId>& ring, int D);
HilbertSeries staircase_series(const std::vector<Polynomial>& gens, const std::vector<VarId>& ring, int D,
                               std::size_t term_limit = default_term_limit());

HilbertSeries free_series(const std::vector<VarId>& ring, int D);

// Ring variables of each side.
std::vector<VarId> coordinate_ring_vars(int n);
std::vector<VarId> quantum_ring_vars(const HessenbergFunction& h);

// Free flag-coordinate ring cut down by one factor per generator degree.
HilbertSeries product_series_coordinate(const HessenbergFunction& h, int D);
// Free (x, q) ring cut down by the E degrees and the zeroed q degrees.
HilbertSeries product_series_quantum(const HessenbergFunction& h, int D);
// The simplified common closed form.
HilbertSeries product_series_closed(const HessenbergFunction& h, int D);

// Staircase series vs the free series times prod (1 - t^{deg}) up to D, and
// for square systems a pure power of every variable among leading terms.
VerificationReport regular_sequence_certificate(const std::vector<Polynomial>& gens,
                                                const std::vector<VarId>& ring, int D,
                                                std::size_t term_limit = default_term_limit());

}  // namespace hessq
