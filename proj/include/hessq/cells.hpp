// Licensed under the Apache License 2.0 (see LICENSE file).
//
// Subsets of [n-1] indexing the cells of the Peterson variety, and the
// combinatorics of its singular locus.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hessq/hessenberg.hpp"
#include "hessq/report.hpp"

namespace hessq {

struct SubsetIndex {
  int n = 0;
  std::vector<int> members;  // sorted, within [n-1]

  // Bit k-1 set for member k. Throws IndexOutOfRange.
  static SubsetIndex from_mask(int n, std::uint32_t mask);
  static SubsetIndex from_members(int n, std::vector<int> members);
  static SubsetIndex interval(int n, int a, int b);  // [a,b], empty if a > b
  std::uint32_t mask() const;
  bool contains(int k) const;
  bool subset_of(const SubsetIndex& o) const { return (mask() & ~o.mask()) == 0; }
  std::string text() const;  // "{1,2,3}"
  friend bool operator==(const SubsetIndex& a, const SubsetIndex& b) {
    return a.n == b.n && a.members == b.members;
  }
};

// Maximal runs of consecutive members, as closed intervals.
std::vector<std::pair<int, int>> components(const SubsetIndex& I);

// Product of the longest elements of the parabolic subgroups of the
// components; an involution.
Permutation w_I(const SubsetIndex& I);

// h_I(i) = i+1 for i in I, i otherwise.
HessenbergFunction h_I(const SubsetIndex& I);

// All J except [n-1], [2,n-1], [1,n-2], read literally.
std::vector<SubsetIndex> sing_cell_set(int n);
// True when the three excluded subsets are not pairwise distinct.
bool sing_cell_set_degenerate(int n);

// [n-1] \ {j} for 2 <= j <= n-2, then [2,n-2].
std::vector<SubsetIndex> singular_components(int n);

VerificationReport verify_appendix_identities(int n);

}  // namespace hessq
