// Licensed under the Apache License 2.0 (see LICENSE file).
#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hessq {

using Permutation = std::vector<int>;  // one-line notation, values 1..n

class HessenbergFunction {
 public:
  // Throws NotNondecreasing, BelowDiagonal, or IndexOutOfRange (value > n).
  static HessenbergFunction from_values(std::vector<int> values);
  static HessenbergFunction full(int n);
  static HessenbergFunction identity(int n);
  static HessenbergFunction peterson(int n);
  static HessenbergFunction h_m(int m, int n);  // (m, n, ..., n)
  static HessenbergFunction parse(const std::string& csv);  // "3,3,4,5,5"

  int n() const { return static_cast<int>(values_.size()); }
  int operator()(int j) const { return values_[static_cast<std::size_t>(j - 1)]; }
  const std::vector<int>& values() const { return values_; }

  bool is_indecomposable() const;
  bool is_full() const;
  std::vector<HessenbergFunction> decompose() const;
  int dimension() const;

  // Pairs (r, s), 1 <= r < s <= n, with q_{rs} set to zero.
  std::vector<std::pair<int, int>> zeroed_q_set() const;
  bool q_survives(int r, int s) const;
  // Strict surviving pairs in global variable order (s-r, then r).
  std::vector<std::pair<int, int>> surviving_q_set() const;

  std::string csv() const;
  std::string json() const;
  std::string staircase() const;  // '#' for boxes of H(h)

  friend bool operator==(const HessenbergFunction& a, const HessenbergFunction& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<int> values_;
};

// Pointwise comparison; throws SizeMismatch.
bool leq(const HessenbergFunction& a, const HessenbergFunction& b);

// All Hessenberg functions on [n], n <= 10, in lexicographic order.
std::vector<HessenbergFunction> all_hessenberg_functions(int n);

}  // namespace hessq
