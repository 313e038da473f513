// Licensed under the Apache License 2.0 (see LICENSE file).
#include "hessq/cells.hpp"

#include <algorithm>

#include "hessq/error.hpp"

namespace hessq {
namespace {

constexpr int kMaxN = 24;

void require_n(int n) {
  if (n < 1 || n > kMaxN) fail(ErrorCode::IndexOutOfRange, "subset size n must be in [1, 24]");
}

std::uint32_t full_mask(int n) { return n <= 1 ? 0u : ((1u << (n - 1)) - 1u); }

std::uint32_t interval_mask(int a, int b) {
  std::uint32_t m = 0;
  for (int k = a; k <= b; ++k) m |= 1u << (k - 1);
  return m;
}

}  // namespace

SubsetIndex SubsetIndex::from_mask(int n, std::uint32_t mask) {
  require_n(n);
  if (mask & ~full_mask(n)) fail(ErrorCode::IndexOutOfRange, "subset leaves [n-1]");
  SubsetIndex s;
  s.n = n;
  for (int k = 1; k < n; ++k)
    if (mask & (1u << (k - 1))) s.members.push_back(k);
  return s;
}

SubsetIndex SubsetIndex::from_members(int n, std::vector<int> members) {
  require_n(n);
  std::uint32_t m = 0;
  for (int k : members) {
    if (k < 1 || k > n - 1) fail(ErrorCode::IndexOutOfRange, "member " + std::to_string(k) + " outside [n-1]");
    m |= 1u << (k - 1);
  }
  return from_mask(n, m);
}

SubsetIndex SubsetIndex::interval(int n, int a, int b) {
  require_n(n);
  if (a > b) return from_mask(n, 0);
  if (a < 1 || b > n - 1) fail(ErrorCode::IndexOutOfRange, "interval outside [n-1]");
  return from_mask(n, interval_mask(a, b));
}

std::uint32_t SubsetIndex::mask() const {
  std::uint32_t m = 0;
  for (int k : members) m |= 1u << (k - 1);
  return m;
}

bool SubsetIndex::contains(int k) const { return std::binary_search(members.begin(), members.end(), k); }

std::string SubsetIndex::text() const {
  std::string out = "{";
  for (std::size_t t = 0; t < members.size(); ++t) out += (t ? "," : "") + std::to_string(members[t]);
  return out + "}";
}

std::vector<std::pair<int, int>> components(const SubsetIndex& I) {
  std::vector<std::pair<int, int>> out;
  for (int k : I.members) {
    if (!out.empty() && out.back().second == k - 1)
      out.back().second = k;
    else
      out.emplace_back(k, k);
  }
  return out;
}

Permutation w_I(const SubsetIndex& I) {
  Permutation w(static_cast<std::size_t>(I.n));
  for (int i = 1; i <= I.n; ++i) w[static_cast<std::size_t>(i - 1)] = i;
  // s_a..s_b generate the permutations of {a, ..., b+1}; the longest one reverses it.
  for (auto [a, b] : components(I))
    std::reverse(w.begin() + (a - 1), w.begin() + b + 1);
  return w;
}

HessenbergFunction h_I(const SubsetIndex& I) {
  std::vector<int> v(static_cast<std::size_t>(I.n));
  for (int i = 1; i <= I.n; ++i) v[static_cast<std::size_t>(i - 1)] = I.contains(i) ? i + 1 : i;
  return HessenbergFunction::from_values(v);
}

namespace {
std::vector<std::uint32_t> excluded_masks(int n) {
  return {full_mask(n), n >= 3 ? interval_mask(2, n - 1) : 0u, n >= 3 ? interval_mask(1, n - 2) : 0u};
}
}  // namespace

std::vector<SubsetIndex> sing_cell_set(int n) {
  require_n(n);
  if (n < 2) fail(ErrorCode::IndexOutOfRange, "n must be at least 2");
  auto ex = excluded_masks(n);
  std::vector<SubsetIndex> out;
  for (std::uint32_t m = 0; m <= full_mask(n); ++m)
    if (std::find(ex.begin(), ex.end(), m) == ex.end()) out.push_back(SubsetIndex::from_mask(n, m));
  return out;
}

bool sing_cell_set_degenerate(int n) {
  auto ex = excluded_masks(n);
  return ex[0] == ex[1] || ex[0] == ex[2] || ex[1] == ex[2];
}

std::vector<SubsetIndex> singular_components(int n) {
  require_n(n);
  std::vector<SubsetIndex> out;
  for (int j = 2; j <= n - 2; ++j) out.push_back(SubsetIndex::from_mask(n, full_mask(n) & ~(1u << (j - 1))));
  out.push_back(SubsetIndex::interval(n, 2, n - 2));
  return out;
}

VerificationReport verify_appendix_identities(int n) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "appendix";
  rep.params["n"] = std::to_string(n);
  if (n < 3 || n > 20) fail(ErrorCode::InvalidParams, "appendix identities need 3 <= n <= 20");
  const std::uint32_t all = full_mask(n);
  const auto ex = excluded_masks(n);
  const auto comps = singular_components(n);

  std::vector<char> in_sing(all + 1, 0);
  for (const auto& J : sing_cell_set(n)) in_sing[J.mask()] = 1;

  // (a) the set identity, subset by subset.
  int lemma_bad = 0;
  const std::uint32_t mid = interval_mask(2, n - 2);
  for (std::uint32_t J = 0; J <= all; ++J) {
    bool lhs = std::find(ex.begin(), ex.end(), J) == ex.end();
    bool rhs = (J & ~mid) == 0;
    for (int j = 2; j <= n - 2 && !rhs; ++j) rhs = !(J & (1u << (j - 1)));
    if (lhs != rhs) {
      ++lemma_bad;
      rep.witness("J=" + SubsetIndex::from_mask(n, J).text() + " lies on one side only");
    }
  }
  rep.add("(a) set identity", lemma_bad ? Status::Fail : Status::Pass,
          std::to_string(all + 1) + " subsets enumerated");

  // (b) union of the cells of each component, X_I = union of X_J for J in I.
  std::vector<char> covered(all + 1, 0);
  for (const auto& I : comps)
    for (std::uint32_t J = 0; J <= all; ++J)
      if ((J & ~I.mask()) == 0) covered[J] = 1;
  int dec_bad = 0;
  for (std::uint32_t J = 0; J <= all; ++J)
    if (covered[J] != in_sing[J]) {
      ++dec_bad;
      rep.witness("cell " + SubsetIndex::from_mask(n, J).text() + (covered[J] ? " covered but not singular" : " singular but not covered"));
    }
  rep.add("(b) decomposition covers the singular cells", dec_bad ? Status::Fail : Status::Pass);

  // (c) irredundancy.
  int red = 0;
  for (std::size_t a = 0; a < comps.size(); ++a)
    for (std::size_t b = 0; b < comps.size(); ++b)
      if (a != b && comps[a].subset_of(comps[b])) {
        ++red;
        rep.witness("component " + comps[a].text() + " lies in " + comps[b].text());
      }
  rep.add("(c) no component contains another", red ? Status::Fail : Status::Pass,
          std::to_string(comps.size()) + " components");

  // Invariants over every I: w_I an involution, dim Hess(N, h_I) = |I|.
  int inv_bad = 0;
  for (std::uint32_t m = 0; m <= all; ++m) {
    auto I = SubsetIndex::from_mask(n, m);
    auto w = w_I(I);
    for (int i = 1; i <= n; ++i)
      if (w[static_cast<std::size_t>(w[static_cast<std::size_t>(i - 1)] - 1)] != i) {
        ++inv_bad;
        rep.witness("w_I not an involution for I=" + I.text());
        break;
      }
    if (h_I(I).dimension() != static_cast<int>(I.members.size())) {
      ++inv_bad;
      rep.witness("dim h_I != |I| for I=" + I.text());
    }
  }
  if (!(h_I(SubsetIndex::from_mask(n, all)) == HessenbergFunction::peterson(n))) {
    ++inv_bad;
    rep.witness("h_[n-1] is not the Peterson function");
  }
  rep.add("w_I involutions, dim h_I = |I|", inv_bad ? Status::Fail : Status::Pass);

  std::size_t expected = (std::size_t{1} << (n - 1)) - 3;
  std::size_t got = sing_cell_set(n).size();
  rep.add("singular cell count 2^(n-1) - 3", got == expected ? Status::Pass : Status::Fail, std::to_string(got));
  if (got != expected) rep.witness("count " + std::to_string(got));

  if (n == 9) {
    auto w = w_I(SubsetIndex::from_members(9, {1, 2, 3, 6, 7}));
    std::string s;
    for (int v : w) s += std::to_string(v);
    rep.add("w_I for {1,2,3} + {6,7}", s == "432158769" ? Status::Pass : Status::Fail, s);
    if (s != "432158769") rep.witness("w_I = " + s);
  }

  nlohmann::json cj = nlohmann::json::array();
  for (const auto& I : comps) cj.push_back(I.text());
  rep.data["components"] = cj;
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& J : sing_cell_set(n)) cells.push_back(J.text());
  rep.data["singular_cells"] = cells;
  rep.data["degenerate_exclusions"] = sing_cell_set_degenerate(n);
  rep.finalize();
  rep.wall_time_ms = sw.ms();
  return rep;
}

}  // namespace hessq
