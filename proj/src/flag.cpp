// Licensed under the Apache License 2.0 (see LICENSE file).
#include "hessq/flag.hpp"

#include <algorithm>

namespace hessq {

namespace {
// g_{rc} with the convention g_{n+1,c} = 0; 1-based.
Polynomial g_entry(int r, int c, int n) {
  if (r > n) return {};
  if (r == c) return Polynomial(1);
  if (r < c) return {};
  return Polynomial::var(VarId::flag(r, c));
}

void check_pair(int i, int j, int n) {
  if (j < 1 || i <= j || i > n) fail(ErrorCode::IndexOutOfRange, "F needs 1 <= j < i <= n");
}
}  // namespace

PolyMatrix unipotent(int n) {
  PolyMatrix g(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= r; ++c) g(r - 1, c - 1) = g_entry(r, c, n);
  return g;
}

PolyMatrix jordan_nilpotent(int n) {
  PolyMatrix N(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int r = 0; r + 1 < n; ++r) N(r, r + 1) = Polynomial(1);
  return N;
}

Polynomial F(int i, int j, int n) {
  check_pair(i, j, n);
  PolyMatrix m = unipotent(n);
  for (int r = 1; r <= n; ++r) m(r - 1, i - 1) = g_entry(r + 1, j, n);
  return determinant(m);
}

PolyMatrix unipotent_inverse(int n) {
  // g = I + L with L strictly lower, so g^{-1} = sum_k (-L)^k, k < n.
  const auto sz = static_cast<std::size_t>(n);
  PolyMatrix negL(sz, sz), inv(sz, sz), power(sz, sz);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c < r; ++c) negL(r - 1, c - 1) = -Polynomial::var(VarId::flag(r, c));
  for (std::size_t d = 0; d < sz; ++d) power(d, d) = inv(d, d) = Polynomial(1);
  for (int k = 1; k < n; ++k) {
    power = power * negL;
    for (std::size_t r = 0; r < sz; ++r)
      for (std::size_t c = 0; c < sz; ++c) inv(r, c) += power(r, c);
  }
  return inv;
}

PolyMatrix conj_matrix(int n) {
  return unipotent_inverse(n) * (jordan_nilpotent(n) * unipotent(n));
}

Polynomial conj_entry(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n) fail(ErrorCode::IndexOutOfRange, "conj_entry index out of range");
  PolyMatrix inv = unipotent_inverse(n);
  Polynomial sum;
  for (int k = 1; k <= n; ++k) {
    const Polynomial& a = inv(i - 1, k - 1);
    if (a.is_zero()) continue;
    Polynomial b = g_entry(k + 1, j, n);  // (Ng)_{kj}
    if (!b.is_zero()) sum += a * b;
  }
  return sum;
}

Polynomial F_tilde(int i, int j, int m, int n) {
  if (j < 1 || j > n - 1 || m < j || m >= n || i <= m || i > n)
    fail(ErrorCode::IndexOutOfRange, "F_tilde needs 1 <= j <= m < i <= n, m < n");
  const int start = std::max(1, j - 1);
  std::vector<int> rows;
  for (int r = start; r <= m; ++r) rows.push_back(r);
  rows.push_back(i);
  const auto k = rows.size();
  PolyMatrix mat(k, k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b + 1 < k; ++b) mat(a, b) = g_entry(rows[a], start + static_cast<int>(b), n);
    mat(a, k - 1) = g_entry(rows[a] + 1, j, n);
  }
  return determinant(mat);
}

VerificationReport verify_F_recursions(int n) {
  VerificationReport rep;
  rep.check_id = "f-recursions";
  rep.params["n"] = std::to_string(n);
  int checked = 0, bad = 0;
  auto record = [&](bool ok, const std::string& what, const Polynomial& diff) {
    ++checked;
    if (!ok) {
      ++bad;
      rep.witness(what + ": difference " + diff.text());
    }
  };
  for (int j = 1; j <= n - 1; ++j)
    for (int i = j + 1; i <= n; ++i) {
      Polynomial f = F(i, j, n);
      std::vector<Polynomial> ft(static_cast<std::size_t>(i));  // ft[m] = F~^{<m>}_{i,j}
      for (int m = j; m < i; ++m) ft[static_cast<std::size_t>(m)] = F_tilde(i, j, m, n);
      Polynomial diff = f - ft[static_cast<std::size_t>(i - 1)];
      record(diff.is_zero(), "boundary (i,j)=(" + std::to_string(i) + "," + std::to_string(j) + ")", diff);
      for (int m = j + 1; m < i; ++m) {
        Polynomial rhs = ft[static_cast<std::size_t>(m - 1)] -
                         Polynomial::var(VarId::flag(i, m)) * F_tilde(m, j, m - 1, n);
        Polynomial d = ft[static_cast<std::size_t>(m)] - rhs;
        record(d.is_zero(),
               "step (i,j,m)=(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(m) + ")", d);
      }
      for (int m = j; m < i; ++m) {
        Polynomial rhs = ft[static_cast<std::size_t>(m)];
        for (int l = m + 1; l <= i - 1; ++l) rhs -= Polynomial::var(VarId::flag(i, l)) * F(l, j, n);
        Polynomial d = f - rhs;
        record(d.is_zero(),
               "telescoping (i,j,m)=(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(m) + ")",
               d);
      }
    }
  rep.add("identities", bad ? Status::Fail : Status::Pass,
          std::to_string(checked - bad) + "/" + std::to_string(checked) + " exact");
  rep.finalize();
  return rep;
}

std::vector<Generator> ideal_generators(const HessenbergFunction& h, GeneratorFlavor flavor) {
  const int n = h.n();
  std::vector<Generator> out;
  if (flavor == GeneratorFlavor::F) {
    for (int j = 1; j <= n - 1; ++j)
      for (int i = h(j) + 1; i <= n; ++i) out.push_back({i, j, F(i, j, n)});
    return out;
  }
  if (!h.is_indecomposable() || h.is_full())
    fail(ErrorCode::UnsupportedFlavor, "truncated generators need h indecomposable and not full");
  for (int j = 1; j <= n - 2; ++j) {
    if (h(j) >= n) continue;
    for (int i = h(j) + 1; i <= n; ++i) out.push_back({i, j, F_tilde(i, j, h(j), n)});
  }
  return out;
}

std::vector<Polynomial> generator_polys(const std::vector<Generator>& gens) {
  std::vector<Polynomial> out;
  out.reserve(gens.size());
  for (const auto& g : gens) out.push_back(g.poly);
  return out;
}

VerificationReport verify_ideal_equality(const HessenbergFunction& h) {
  VerificationReport rep;
  rep.check_id = "f-ideal-equality";
  rep.params["n"] = std::to_string(h.n());
  rep.params["h"] = h.csv();
  const int n = h.n();
  auto fgens = ideal_generators(h, GeneratorFlavor::F);
  auto tgens = ideal_generators(h, GeneratorFlavor::FTilde);
  auto find = [](const std::vector<Generator>& gs, int i, int j) -> const Polynomial* {
    for (const auto& g : gs)
      if (g.i == i && g.j == j) return &g.poly;
    return nullptr;
  };
  int bad = 0, checked = 0;
  for (int j = 1; j <= n - 1; ++j) {
    const int m = h(j);
    if (m >= n) continue;
    // coeffs[i] holds c with F_{i,j} = sum_l c[l] * F~_{l,j}.
    std::vector<std::vector<Polynomial>> coeffs(static_cast<std::size_t>(n + 1),
                                                std::vector<Polynomial>(static_cast<std::size_t>(n + 1)));
    for (int i = m + 1; i <= n; ++i) {
      auto& c = coeffs[static_cast<std::size_t>(i)];
      c[static_cast<std::size_t>(i)] = Polynomial(1);
      for (int l = m + 1; l < i; ++l) {
        Polynomial xil = Polynomial::var(VarId::flag(i, l));
        for (int k = m + 1; k <= l; ++k)
          c[static_cast<std::size_t>(k)] -= xil * coeffs[static_cast<std::size_t>(l)][static_cast<std::size_t>(k)];
      }
      const Polynomial* fi = find(fgens, i, j);
      Polynomial combo;
      for (int k = m + 1; k <= i; ++k) {
        const Polynomial* tk = find(tgens, k, j);
        if (!tk) fail(ErrorCode::Internal, "missing truncated generator");
        combo += c[static_cast<std::size_t>(k)] * *tk;
      }
      ++checked;
      if (!fi || combo != *fi) {
        ++bad;
        rep.witness("F_{" + std::to_string(i) + "," + std::to_string(j) + "} not reproduced by truncated generators");
      }
      // Reverse direction: F~_{i,j} = F_{i,j} + sum_l x_{il} F_{l,j}.
      Polynomial back = fi ? *fi : Polynomial();
      for (int l = m + 1; l < i; ++l) back += Polynomial::var(VarId::flag(i, l)) * *find(fgens, l, j);
      ++checked;
      if (back != *find(tgens, i, j)) {
        ++bad;
        rep.witness("F~_{" + std::to_string(i) + "," + std::to_string(j) + "} not reproduced by F generators");
      }
    }
  }
  rep.add("triangular reduction both ways", bad ? Status::Fail : Status::Pass,
          std::to_string(checked - bad) + "/" + std::to_string(checked) + " combinations exact");
  rep.finalize();
  return rep;
}

}  // namespace hessq
