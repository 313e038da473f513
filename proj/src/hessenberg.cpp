// Licensed under the Apache License 2.0 (see LICENSE file).
#include "hessq/hessenberg.hpp"

#include <algorithm>
#include <sstream>

#include "hessq/error.hpp"

namespace hessq {

HessenbergFunction HessenbergFunction::from_values(std::vector<int> values) {
  const int n = static_cast<int>(values.size());
  if (n == 0) fail(ErrorCode::InvalidArgument, "empty Hessenberg function");
  for (int j = 1; j <= n; ++j) {
    int v = values[static_cast<std::size_t>(j - 1)];
    if (j > 1 && v < values[static_cast<std::size_t>(j - 2)])
      fail(ErrorCode::NotNondecreasing, "h is not nondecreasing at j=" + std::to_string(j));
    if (v < j) fail(ErrorCode::BelowDiagonal, "h(" + std::to_string(j) + ") < " + std::to_string(j));
    if (v > n) fail(ErrorCode::IndexOutOfRange, "h(" + std::to_string(j) + ") > n");
  }
  HessenbergFunction h;
  h.values_ = std::move(values);
  return h;
}

HessenbergFunction HessenbergFunction::full(int n) {
  return from_values(std::vector<int>(static_cast<std::size_t>(n), n));
}

HessenbergFunction HessenbergFunction::identity(int n) {
  std::vector<int> v;
  for (int j = 1; j <= n; ++j) v.push_back(j);
  return from_values(std::move(v));
}

HessenbergFunction HessenbergFunction::peterson(int n) {
  std::vector<int> v;
  for (int j = 1; j <= n; ++j) v.push_back(j < n ? j + 1 : n);
  return from_values(std::move(v));
}

HessenbergFunction HessenbergFunction::h_m(int m, int n) {
  if (m < 1 || m > n) fail(ErrorCode::IndexOutOfRange, "h_m needs 1 <= m <= n");
  std::vector<int> v(static_cast<std::size_t>(n), n);
  v[0] = m;
  return from_values(std::move(v));
}

HessenbergFunction HessenbergFunction::parse(const std::string& csv) {
  std::vector<int> v;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(item, &used));
      if (used != item.size() && item.find_first_not_of(" ", used) != std::string::npos)
        throw std::invalid_argument(item);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidArgument, "cannot parse Hessenberg function '" + csv + "'");
    }
  }
  return from_values(std::move(v));
}

bool HessenbergFunction::is_indecomposable() const {
  for (int j = 1; j < n(); ++j)
    if ((*this)(j) == j) return false;
  return true;
}

bool HessenbergFunction::is_full() const {
  for (int v : values_)
    if (v != n()) return false;
  return true;
}

std::vector<HessenbergFunction> HessenbergFunction::decompose() const {
  std::vector<HessenbergFunction> parts;
  int start = 1;
  for (int j = 1; j <= n(); ++j) {
    if ((*this)(j) == j) {
      std::vector<int> v;
      for (int k = start; k <= j; ++k) v.push_back((*this)(k) - (start - 1));
      parts.push_back(from_values(std::move(v)));
      start = j + 1;
    }
  }
  return parts;
}

int HessenbergFunction::dimension() const {
  int d = 0;
  for (int j = 1; j <= n(); ++j) d += (*this)(j) - j;
  return d;
}

bool HessenbergFunction::q_survives(int r, int s) const {
  if (r < 1 || s > n() || r >= s) fail(ErrorCode::IndexOutOfRange, "q_rs index out of range");
  return r > n() - (*this)(n() + 1 - s);
}

std::vector<std::pair<int, int>> HessenbergFunction::zeroed_q_set() const {
  std::vector<std::pair<int, int>> out;
  for (int s = 2; s <= n(); ++s)
    for (int r = 1; r <= n() - (*this)(n() + 1 - s); ++r) out.emplace_back(r, s);
  return out;
}

std::vector<std::pair<int, int>> HessenbergFunction::surviving_q_set() const {
  std::vector<std::pair<int, int>> out;
  for (int d = 1; d < n(); ++d)
    for (int r = 1; r + d <= n(); ++r)
      if (q_survives(r, r + d)) out.emplace_back(r, r + d);
  return out;
}

std::string HessenbergFunction::csv() const {
  std::string s;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(values_[k]);
  }
  return s;
}

std::string HessenbergFunction::json() const {
  return "{\"n\":" + std::to_string(n()) + ",\"h\":[" + csv() + "]}";
}

std::string HessenbergFunction::staircase() const {
  std::string out;
  for (int i = 1; i <= n(); ++i) {
    for (int j = 1; j <= n(); ++j) out += i <= (*this)(j) ? '#' : '.';
    out += '\n';
  }
  return out;
}

bool leq(const HessenbergFunction& a, const HessenbergFunction& b) {
  if (a.n() != b.n()) fail(ErrorCode::SizeMismatch, "comparing Hessenberg functions of different size");
  for (int j = 1; j <= a.n(); ++j)
    if (a(j) > b(j)) return false;
  return true;
}

namespace {
void enumerate(int n, int j, std::vector<int>& cur, std::vector<HessenbergFunction>& out) {
  if (j > n) {
    out.push_back(HessenbergFunction::from_values(cur));
    return;
  }
  int lo = std::max(j, cur.empty() ? 1 : cur.back());
  for (int v = lo; v <= n; ++v) {
    cur.push_back(v);
    enumerate(n, j + 1, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<HessenbergFunction> all_hessenberg_functions(int n) {
  if (n < 1 || n > 10) fail(ErrorCode::IndexOutOfRange, "enumeration supports 1 <= n <= 10");
  std::vector<HessenbergFunction> out;
  std::vector<int> cur;
  enumerate(n, 1, cur, out);
  return out;
}

}  // namespace hessq
