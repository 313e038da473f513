#include <doctest.h>

#include "hessq/cells.hpp"
#include "hessq/error.hpp"

using namespace hessq;

namespace {
std::vector<std::string> texts(const std::vector<SubsetIndex>& v) {
  std::vector<std::string> out;
  for (const auto& s : v) out.push_back(s.text());
  return out;
}
}  // namespace

TEST_CASE("subset index basics") {
  auto I = SubsetIndex::from_members(9, {7, 1, 2, 3, 6});
  CHECK(I.text() == "{1,2,3,6,7}");
  CHECK(I.mask() == 0b1100111u);
  CHECK(components(I) == std::vector<std::pair<int, int>>{{1, 3}, {6, 7}});
  CHECK(SubsetIndex::interval(4, 3, 2).members.empty());
  CHECK(SubsetIndex::interval(4, 1, 2).subset_of(SubsetIndex::interval(4, 1, 3)));
  CHECK_THROWS_AS(SubsetIndex::from_members(4, {4}), Error);
  CHECK_THROWS_AS(SubsetIndex::from_mask(3, 0b100), Error);
}

TEST_CASE("w_I and h_I") {
  auto w = w_I(SubsetIndex::from_members(9, {1, 2, 3, 6, 7}));
  CHECK(w == Permutation{4, 3, 2, 1, 5, 8, 7, 6, 9});
  CHECK(w_I(SubsetIndex::from_mask(4, 0)) == Permutation{1, 2, 3, 4});
  CHECK(h_I(SubsetIndex::from_members(4, {2})) == HessenbergFunction::from_values({1, 3, 3, 4}));
  CHECK(h_I(SubsetIndex::interval(5, 1, 4)) == HessenbergFunction::peterson(5));
}

TEST_CASE("singular cells for n = 4") {
  CHECK(texts(sing_cell_set(4)) == std::vector<std::string>{"{}", "{1}", "{2}", "{3}", "{1,3}"});
  CHECK(texts(singular_components(4)) == std::vector<std::string>{"{1,3}", "{2}"});
  CHECK_FALSE(sing_cell_set_degenerate(4));
}

TEST_CASE("small n read literally") {
  // n = 2: all three excluded sets are {1} or empty, so nothing survives.
  CHECK(sing_cell_set_degenerate(2));
  CHECK(sing_cell_set(2).empty());
  CHECK_FALSE(sing_cell_set_degenerate(3));
  CHECK(texts(sing_cell_set(3)) == std::vector<std::string>{"{}"});
}

TEST_CASE("appendix identities") {
  for (int n = 3; n <= 12; ++n) {
    auto r = verify_appendix_identities(n);
    CHECK(r.passed());
    CHECK(r.data["singular_cells"].size() == (std::size_t{1} << (n - 1)) - 3);
  }
  CHECK(verify_appendix_identities(9).subchecks.size() == 6);
  CHECK_THROWS_AS(verify_appendix_identities(2), Error);
}
