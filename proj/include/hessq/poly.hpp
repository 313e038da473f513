// Licensed under the Apache License 2.0 (see LICENSE file).
//
// Exact sparse multivariate polynomials over the integers.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hessq/error.hpp"

namespace hessq {

// Variable kinds, listed in global order (T smallest).
enum class VarKind : std::uint8_t {
  T = 0,
  Lambda = 1,
  XS = 2,          // diagonal x_s
  QClassical = 3,  // classical q_s
  Q = 4,           // q_{rs}, r < s
  Flag = 5,        // x_{ij}, i > j
  Aux = 6,         // named auxiliaries (X, Y, Z, ...)
};

// A variable packed into one integer whose natural ordering is the global
// variable order: kind, then Q by (s-r, r), Flag by (j, i).
class VarId {
 public:
  VarId() = default;

  static VarId t() { return VarId(VarKind::T, 0, 0); }
  static VarId lambda() { return VarId(VarKind::Lambda, 0, 0); }
  static VarId xs(int s);
  static VarId q_classical(int s);
  static VarId q(int r, int s);  // q(s, s) is x_s
  static VarId flag(int i, int j);
  static VarId aux(int k);

  VarKind kind() const { return static_cast<VarKind>(key_ >> 28); }
  std::uint32_t key() const { return key_; }

  int index() const;  // s for XS / QClassical, k for Aux
  int r() const;      // Q only
  int s() const;      // Q only
  int row() const;    // Flag only
  int col() const;    // Flag only

  // Paper degree; empty for ungraded kinds (Lambda, Aux).
  std::optional<int> weight() const;

  std::string text() const;
  std::string latex() const;
  static VarId parse(const std::string& name);

  friend bool operator==(VarId a, VarId b) { return a.key_ == b.key_; }
  friend bool operator!=(VarId a, VarId b) { return a.key_ != b.key_; }
  friend bool operator<(VarId a, VarId b) { return a.key_ < b.key_; }

 private:
  VarId(VarKind k, std::uint32_t a, std::uint32_t b)
      : key_((static_cast<std::uint32_t>(k) << 28) | (a << 14) | b) {}
  std::uint32_t hi() const { return (key_ >> 14) & 0x3FFF; }
  std::uint32_t lo() const { return key_ & 0x3FFF; }
  std::uint32_t key_ = 0;
};

struct VarIdHash {
  std::size_t operator()(VarId v) const noexcept { return v.key(); }
};

struct VarPower {
  VarId var;
  std::uint32_t exp;
  friend bool operator==(const VarPower& a, const VarPower& b) {
    return a.var == b.var && a.exp == b.exp;
  }
};

// Sparse exponent vector, ascending by variable, no zero exponents.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(VarId v, std::uint32_t e = 1);
  static Monomial from_powers(std::vector<VarPower> powers);

  const std::vector<VarPower>& powers() const { return powers_; }
  bool is_one() const { return powers_.empty(); }
  std::uint32_t exponent(VarId v) const;
  std::int64_t weight() const { return weight_; }  // graded part only
  bool has_ungraded() const;
  std::uint32_t total_degree() const;

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial quotient(const Monomial& divisor) const;  // pre: divisor | *this
  Monomial lcm(const Monomial& o) const;
  bool coprime(const Monomial& o) const;
  Monomial without(VarId v) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.powers_ == b.powers_;
  }
  std::size_t hash() const;

 private:
  void recompute_weight();
  std::vector<VarPower> powers_;
  std::int64_t weight_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

// Graded by weighted degree, ties broken lexicographically with variables
// earlier in the global order more significant. Returns <0, 0, >0.
int monomial_compare(const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  mpz_class coeff;
};

enum class Format { Text, Latex, Json };

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long c);  // NOLINT(google-explicit-constructor)
  Polynomial(const mpz_class& c);  // NOLINT(google-explicit-constructor)
  static Polynomial var(VarId v);
  static Polynomial term(Monomial m, mpz_class c);
  // Terms may be unsorted and contain duplicates.
  static Polynomial from_terms(std::vector<Term> terms);

  // Terms in descending monomial order.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Term& leading() const { return terms_.front(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  Polynomial pow(unsigned k) const;
  Polynomial scaled(const mpz_class& c) const;
  Polynomial mul_term(const Monomial& m, const mpz_class& c) const;
  // pre: every coefficient divisible by c.
  Polynomial div_exact(const mpz_class& c) const;
  mpz_class content() const;
  // Primitive part with positive leading coefficient.
  Polynomial primitive() const;

  std::vector<VarId> variables() const;
  bool contains(VarId v) const;
  std::uint32_t degree_in(VarId v) const;

  std::string text() const;
  std::string latex() const;
  std::string json() const;
  std::string render(Format f) const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

// Sum of two descending-sorted term lists, with cancellation.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              const mpz_class& ca, const mpz_class& cb);

Polynomial derivative(const Polynomial& p, VarId v);

// Images for substitution. Unmapped variables are errors unless listed in
// `fixed` (or `keep_unmapped` is set).
struct Substitution {
  std::unordered_map<VarId, Polynomial, VarIdHash> images;
  std::vector<VarId> fixed;
  bool keep_unmapped = false;
  void set(VarId v, Polynomial p) { images[v] = std::move(p); }
};

Polynomial substitute(const Polynomial& p, const Substitution& sigma);

// Coefficient of lambda^k.
Polynomial lambda_coefficient(const Polynomial& p, unsigned k);

struct GradedDegree {
  bool homogeneous = true;
  std::int64_t degree = 0;  // top degree; 0 for the zero polynomial
};
// Throws UngradedVariable if an ungraded variable occurs.
GradedDegree graded_degree(const Polynomial& p);

using RationalPoint = std::unordered_map<VarId, mpq_class, VarIdHash>;
mpq_class evaluate(const Polynomial& p, const RationalPoint& pt);

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  PolyMatrix operator*(const PolyMatrix& o) const;
  PolyMatrix submatrix(const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> data_;
};

// Cofactor expansion memoized over column subsets. Size at most 20.
Polynomial determinant(const PolyMatrix& m);

Polynomial polynomial_from_json(const std::string& text);

}  // namespace hessq
