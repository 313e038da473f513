// Licensed under the Apache License 2.0 (see LICENSE file).
#include "hessq/singular.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>

#include "hessq/flag.hpp"
#include "hessq/iso.hpp"

namespace hessq {
namespace {

std::string pair_text(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::vector<VarId> quantum_columns(const HessenbergFunction& h) {
  std::vector<VarId> cols;
  for (int s = 1; s <= h.n(); ++s) cols.push_back(VarId::xs(s));
  for (auto [r, s] : h.surviving_q_set()) cols.push_back(VarId::q(r, s));
  return cols;
}

std::vector<VarId> flag_columns(int n) {
  std::vector<VarId> cols;
  for (int j = 1; j < n; ++j)
    for (int i = j + 1; i <= n; ++i) cols.push_back(VarId::flag(i, j));
  return cols;
}

void require_hm(int m, int n) {
  if (n < 3 || m < 2 || m > n - 1)
    fail(ErrorCode::IndexOutOfRange, "h_m needs 2 <= m <= n-1, got m=" + std::to_string(m) + ", n=" + std::to_string(n));
}

std::vector<std::vector<int>> combinations(const std::vector<int>& pool, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t t = start; t < pool.size(); ++t) {
      cur.push_back(pool[t]);
      rec(t + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

Substitution zero_map(const std::vector<VarId>& zeros) {
  Substitution s;
  s.keep_unmapped = true;
  for (VarId v : zeros) s.set(v, Polynomial());
  return s;
}

// c * pivot + d after evaluating every other variable; throws if p is not
// affine in the pivot.
std::pair<mpq_class, mpq_class> affine_in(const Polynomial& p, VarId pivot, const AffinePoint& pt) {
  mpq_class c = 0, d = 0;
  for (const auto& t : p.terms()) {
    mpq_class v(t.coeff);
    std::uint32_t e = 0;
    for (const auto& vp : t.mono.powers()) {
      if (vp.var == pivot) {
        e = vp.exp;
        continue;
      }
      auto it = pt.find(vp.var);
      if (it == pt.end()) fail(ErrorCode::Internal, "sampler left " + vp.var.text() + " unassigned");
      for (std::uint32_t k = 0; k < vp.exp; ++k) v *= it->second;
    }
    if (e == 0)
      d += v;
    else if (e == 1)
      c += v;
    else
      fail(ErrorCode::Internal, "pivot " + pivot.text() + " occurs nonlinearly");
  }
  return {c, d};
}

std::string point_text(const AffinePoint& pt) {
  std::map<VarId, mpq_class> sorted(pt.begin(), pt.end());
  std::string out = "{";
  bool first = true;
  for (const auto& [v, val] : sorted) {
    if (!first) out += ", ";
    first = false;
    out += v.text() + "=" + val.get_str();
  }
  return out + "}";
}

std::vector<std::vector<mpq_class>> evaluate_matrix(const PolyMatrix& m, const AffinePoint& pt) {
  std::vector<std::vector<mpq_class>> out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = evaluate(m(i, j), pt);
  return out;
}

bool row_is_zero(const std::vector<mpq_class>& row) {
  return std::all_of(row.begin(), row.end(), [](const mpq_class& v) { return v == 0; });
}

AffinePoint sample_h2(int n, std::mt19937_64& rng) {
  // XY = Z^n with X != 0, then the inverse substitutions.
  mpq_class Xv;
  do Xv = random_rational(rng);
  while (Xv == 0);
  mpq_class Zv = random_rational(rng);
  mpq_class Zn = 1;
  for (int k = 0; k < n; ++k) Zn *= Zv;
  mpq_class Yv = Zn / Xv;
  AffinePoint pt;
  for (int j = 2; j < n; ++j)
    for (int i = j + 1; i <= n; ++i)
      if (!(j == 2 && i == n)) pt[VarId::flag(i, j)] = random_rational(rng);
  auto zpow = [&](int e) {
    mpq_class r = 1;
    for (int k = 0; k < e; ++k) r *= Zv;
    return r;
  };
  pt[VarId::flag(2, 1)] = Zv;
  pt[VarId::flag(3, 1)] = -Xv + Zv * Zv;
  mpq_class xn2 = Yv - zpow(n - 2);
  for (int i = 3; i <= n - 1; ++i) xn2 -= pt[VarId::flag(i, 2)] * zpow(n - i);
  pt[VarId::flag(n, 2)] = xn2;
  for (int i = 3; i <= n - 1; ++i) {
    const mpq_class& x21 = pt[VarId::flag(2, 1)];
    pt[VarId::flag(i + 1, 1)] = x21 * pt[VarId::flag(i, 1)] + pt[VarId::flag(3, 1)] * pt[VarId::flag(i, 2)] -
                                x21 * x21 * pt[VarId::flag(i, 2)];
  }
  return pt;
}

// Triangular plan for h_m, m >= 3: F_{i,1} solves for x_{i+1,1} when i < n,
// F_{n,1} for x_{n,m}. The coefficient of x_{n,l} in F_{n,1} is -F_{l,1},
// which vanishes on the variety for l > m.
bool sample_hm(const HessenbergFunction& h, const std::vector<Generator>& gens, std::mt19937_64& rng,
               AffinePoint& pt) {
  const int n = h.n();
  std::vector<std::pair<const Generator*, VarId>> plan;
  std::set<std::uint32_t> pivots;
  for (const auto& g : gens) {
    VarId p = g.i < n ? VarId::flag(g.i + 1, 1) : VarId::flag(n, h(1));
    plan.emplace_back(&g, p);
    pivots.insert(p.key());
  }
  pt.clear();
  for (VarId v : flag_columns(n))
    if (!pivots.count(v.key())) pt[v] = random_rational(rng);
  for (const auto& [g, p] : plan) {
    auto [c, d] = affine_in(g->poly, p, pt);
    if (c == 0) return false;
    pt[p] = -d / c;
  }
  return true;
}

}  // namespace

JacobianMatrix jacobian(const HessenbergFunction& h, QSymCache& cache) {
  JacobianMatrix jm;
  jm.n = h.n();
  jm.columns = quantum_columns(h);
  jm.entries = PolyMatrix(static_cast<std::size_t>(jm.n), jm.columns.size());
  for (int i = 1; i <= jm.n; ++i) {
    jm.row_labels.push_back("hE_" + std::to_string(i));
    for (std::size_t c = 0; c < jm.columns.size(); ++c) {
      VarId v = jm.columns[c];
      int r = v.kind() == VarKind::XS ? v.index() : v.r(), s = v.kind() == VarKind::XS ? v.index() : v.s();
      jm.entries(static_cast<std::size_t>(i - 1), c) = dE_dq_h(i, r, s, h, cache);
    }
  }
  return jm;
}

JacobianMatrix jacobian_symbolic(const HessenbergFunction& h, QSymCache& cache) {
  JacobianMatrix jm;
  jm.n = h.n();
  jm.columns = quantum_columns(h);
  jm.entries = PolyMatrix(static_cast<std::size_t>(jm.n), jm.columns.size());
  for (int i = 1; i <= jm.n; ++i) {
    jm.row_labels.push_back("hE_" + std::to_string(i));
    const Polynomial& e = cache.E_interval_h(i, 1, jm.n, h);
    for (std::size_t c = 0; c < jm.columns.size(); ++c)
      jm.entries(static_cast<std::size_t>(i - 1), c) = derivative(e, jm.columns[c]);
  }
  return jm;
}

JacobianMatrix reference_jacobian(int n, QSymCache& cache) {
  if (n != 3 && n != 4) fail(ErrorCode::InvalidParams, "tabulated Jacobians exist for n = 3, 4 only");
  auto E = [&](int i, int a, int b) { return cache.E_interval(i, a, b); };
  const Polynomial one(1), zero;
  std::vector<std::vector<Polynomial>> rows;
  if (n == 3) {
    rows = {
        {one, one, one, zero, zero, zero},
        {E(1, 2, 3), E(1, 1, 1) + E(1, 3, 3), E(1, 1, 2), one, one, zero},
        {E(2, 2, 3), E(1, 1, 1) * E(1, 3, 3), E(2, 1, 2), E(1, 3, 3), E(1, 1, 1), one},
    };
  } else {
    rows = {
        {one, one, one, one, zero, zero, zero, zero, zero, zero},
        {E(1, 2, 4), E(1, 1, 1) + E(1, 3, 4), E(1, 1, 2) + E(1, 4, 4), E(1, 1, 3), one, one, one, zero, zero, zero},
        {E(2, 2, 4), E(1, 1, 1) * E(1, 3, 4) + E(2, 3, 4), E(2, 1, 2) + E(1, 1, 2) * E(1, 4, 4), E(2, 1, 3),
         E(1, 3, 4), E(1, 1, 1) + E(1, 4, 4), E(1, 1, 2), one, one, zero},
        {E(3, 2, 4), E(1, 1, 1) * E(2, 3, 4), E(2, 1, 2) * E(1, 4, 4), E(3, 1, 3), E(2, 3, 4),
         E(1, 1, 1) * E(1, 4, 4), E(2, 1, 2), E(1, 4, 4), E(1, 1, 1), one},
    };
  }
  JacobianMatrix jm;
  jm.n = n;
  jm.columns = quantum_columns(HessenbergFunction::full(n));
  jm.entries = PolyMatrix(static_cast<std::size_t>(n), jm.columns.size());
  for (int i = 0; i < n; ++i) {
    jm.row_labels.push_back("E_" + std::to_string(i + 1));
    for (std::size_t c = 0; c < jm.columns.size(); ++c)
      jm.entries(static_cast<std::size_t>(i), c) = rows[static_cast<std::size_t>(i)][c];
  }
  return jm;
}

JacobianMatrix coordinate_jacobian(const HessenbergFunction& h) {
  JacobianMatrix jm;
  jm.n = h.n();
  jm.columns = flag_columns(h.n());
  auto gens = ideal_generators(h, GeneratorFlavor::F);
  jm.entries = PolyMatrix(gens.size(), jm.columns.size());
  for (std::size_t r = 0; r < gens.size(); ++r) {
    jm.row_labels.push_back("F_" + pair_text(gens[r].i, gens[r].j));
    for (std::size_t c = 0; c < jm.columns.size(); ++c) jm.entries(r, c) = derivative(gens[r].poly, jm.columns[c]);
  }
  return jm;
}

int rank(std::vector<std::vector<mpq_class>> rows) {
  int rk = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows.size(); ++c) {
    std::size_t piv = pr;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[pr], rows[piv]);
    for (std::size_t r = pr + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      mpq_class f = rows[r][c] / rows[pr][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[pr][k];
    }
    ++pr;
    ++rk;
  }
  return rk;
}

int rank_at(const PolyMatrix& m, const AffinePoint& pt) { return rank(evaluate_matrix(m, pt)); }
int rank_at(const JacobianMatrix& m, const AffinePoint& pt) { return rank_at(m.entries, pt); }

std::vector<Polynomial> hm_singular_equations(int m, int n, QSymCache& cache) {
  require_hm(m, n);
  auto jm = jacobian(HessenbergFunction::h_m(m, n), cache);
  std::vector<Polynomial> out;
  for (std::size_t c = 0; c < jm.columns.size(); ++c) out.push_back(jm.entries(static_cast<std::size_t>(n - 1), c));
  return out;
}

std::vector<VarId> claimed_singular_locus(int m, int n) {
  require_hm(m, n);
  std::vector<VarId> out;
  for (int i = 2; i <= n; ++i) out.push_back(VarId::flag(i, 1));
  for (int j = 2; j <= m; ++j) out.push_back(VarId::flag(n, j));
  return out;
}

Permutation w_m(int m, int n) {
  require_hm(m, n);
  Permutation w(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    int v;
    if (i == 1)
      v = 1;
    else if (i <= m)
      v = n + 1 - i;
    else if (i == m + 1)
      v = n;
    else
      v = n + 2 - i;
    w[static_cast<std::size_t>(i - 1)] = v;
  }
  return w;
}

int schubert_rank(const Permutation& w, int p, int q) {
  int c = 0;
  for (int i = 1; i <= p; ++i) c += w[static_cast<std::size_t>(i - 1)] <= q;
  return c;
}

mpq_class random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 8);
  mpq_class v(num(rng), den(rng));
  v.canonicalize();
  return v;
}

AffinePoint sample_variety_point(const HessenbergFunction& h, std::uint64_t seed) {
  const int n = h.n();
  int m = 0;
  for (int cand = 2; cand <= n - 1; ++cand)
    if (h == HessenbergFunction::h_m(cand, n)) m = cand;
  if (m == 0 && !(h == HessenbergFunction::peterson(n) && n <= 3))
    fail(ErrorCode::UnsupportedFlavor, "no sampling plan for h = " + h.csv());
  if (m == 0) m = 2;  // Peterson with n = 3 is h_2

  std::mt19937_64 rng(seed);
  auto gens = ideal_generators(h, GeneratorFlavor::F);
  for (int attempt = 0; attempt < 100; ++attempt) {
    AffinePoint pt;
    if (m == 2)
      pt = sample_h2(n, rng);
    else if (!sample_hm(h, gens, rng, pt))
      continue;
    bool ok = true;
    for (const auto& g : gens)
      if (evaluate(g.poly, pt) != 0) ok = false;
    if (!ok) fail(ErrorCode::Internal, "sampled point fails the generators: " + point_text(pt));
    return pt;
  }
  fail(ErrorCode::SamplerStuck, "100 consecutive degenerate draws for h = " + h.csv());
}

AffinePoint quantum_point(const HessenbergFunction& h, const AffinePoint& chart_point) {
  const int n = h.n();
  AffinePoint out;
  for (VarId v : quantum_columns(h)) out[v] = evaluate(phi_inverse(Polynomial::var(v), n), chart_point);
  return out;
}

LocusIdealResult locus_ideal_check(const std::vector<Polynomial>& gens, const std::vector<VarId>& zeros,
                                   int max_power, std::size_t term_limit) {
  LocusIdealResult res;
  auto zmap = zero_map(zeros);
  int bad = 0;
  for (const auto& g : gens) {
    Polynomial r = substitute(g, zmap);
    if (!r.is_zero()) {
      ++bad;
      res.witnesses.push_back("generator does not vanish on the locus: " + g.text() + " -> " + r.text());
    }
  }
  res.containment = bad ? Status::Fail : Status::Pass;

  // Variables that are generators themselves need no Groebner work.
  std::vector<VarId> pending;
  for (VarId v : zeros) {
    Polynomial pv = Polynomial::var(v);
    bool direct = std::any_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return g.primitive() == pv; });
    if (!direct) pending.push_back(v);
  }
  if (pending.empty()) {
    res.detail = "every coordinate is a generator";
    return res;
  }
  std::int64_t top = 0;
  for (VarId v : pending) top = std::max<std::int64_t>(top, *v.weight());
  try {
    GroebnerOptions o;
    o.degree_bound = static_cast<int>(top * max_power);
    o.term_limit = term_limit;
    auto gb = buchberger(gens, o);
    std::vector<std::string> missing;
    std::string powers;
    for (VarId v : pending) {
      int found = 0;
      for (int k = 1; k <= max_power && !found; ++k)
        if (reduce(Polynomial::var(v).pow(static_cast<unsigned>(k)), gb).is_zero()) found = k;
      if (!found) missing.push_back(v.text());
      if (!powers.empty()) powers += ", ";
      powers += v.text() + (found ? "^" + std::to_string(found) : "^?");
    }
    res.detail = powers;
    if (!missing.empty()) {
      res.radical = Status::Inconclusive;
      std::string list;
      for (const auto& s : missing) list += (list.empty() ? "" : ", ") + s;
      res.detail += "; no power <= " + std::to_string(max_power) + " found for " + list;
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ResourceLimit) throw;
    res.radical = Status::Inconclusive;
    res.detail = e.what();
  }
  return res;
}

VerificationReport verify_jacobian(int n, int points, std::uint64_t seed, QSymCache& cache) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "jacobian";
  rep.params["n"] = std::to_string(n);
  rep.params["points"] = std::to_string(points);
  rep.params["seed"] = std::to_string(seed);
  if (n < 2 || n > 8) fail(ErrorCode::InvalidParams, "jacobian check needs 2 <= n <= 8");

  std::vector<HessenbergFunction> hs{HessenbergFunction::full(n), HessenbergFunction::peterson(n)};
  for (int m = 2; m <= n - 1; ++m) hs.push_back(HessenbergFunction::h_m(m, n));
  int bad = 0, entries = 0;
  for (const auto& h : hs) {
    auto a = jacobian(h, cache), b = jacobian_symbolic(h, cache);
    for (std::size_t i = 0; i < a.entries.rows(); ++i)
      for (std::size_t c = 0; c < a.columns.size(); ++c) {
        ++entries;
        if (a.entries(i, c) != b.entries(i, c)) {
          ++bad;
          rep.witness("h=" + h.csv() + " d" + a.row_labels[i] + "/d" + a.columns[c].text() + ": closed form " +
                      a.entries(i, c).text() + " vs " + b.entries(i, c).text());
        }
      }
    // Structure: zero above the staircase of ones.
    for (std::size_t c = 0; c < a.columns.size(); ++c) {
      VarId v = a.columns[c];
      int d = v.kind() == VarKind::XS ? 0 : v.s() - v.r();
      for (int i = 1; i <= d; ++i)
        if (!a.entries(static_cast<std::size_t>(i - 1), c).is_zero()) {
          ++bad;
          rep.witness("h=" + h.csv() + ": entry (" + std::to_string(i) + "," + v.text() + ") should vanish");
        }
      if (a.entries(static_cast<std::size_t>(d), c) != Polynomial(1)) {
        ++bad;
        rep.witness("h=" + h.csv() + ": entry (" + std::to_string(d + 1) + "," + v.text() + ") should be 1");
      }
    }
  }
  rep.add("closed form equals derivative", bad ? Status::Fail : Status::Pass,
          std::to_string(entries) + " entries over " + std::to_string(hs.size()) + " functions");

  if (n == 3 || n == 4) {
    auto ref = reference_jacobian(n, cache), got = jacobian(HessenbergFunction::full(n), cache);
    int diff = 0;
    for (std::size_t i = 0; i < ref.entries.rows(); ++i)
      for (std::size_t c = 0; c < ref.columns.size(); ++c)
        if (ref.entries(i, c) != got.entries(i, c)) {
          ++diff;
          rep.witness("tabulated entry (" + std::to_string(i + 1) + "," + ref.columns[c].text() + ") differs");
        }
    rep.add("tabulated matrix", diff ? Status::Fail : Status::Pass);
    if (n == 3) {
      // Dropping the q13 column gives the Peterson matrix.
      auto pet = jacobian(HessenbergFunction::peterson(3), cache);
      bool same = pet.columns.size() == 5;
      for (std::size_t i = 0; same && i < 3; ++i)
        for (std::size_t c = 0; c < 5; ++c)
          if (specialize_h(ref.entries(i, c), HessenbergFunction::peterson(3)) != pet.entries(i, c)) same = false;
      rep.add("Peterson matrix is the tabulated one without q13", same ? Status::Pass : Status::Fail);
      if (!same) rep.witness("Peterson n = 3 Jacobian differs from the reduced table");
    }
  }

  auto full = jacobian(HessenbergFunction::full(n), cache);
  std::mt19937_64 rng(seed);
  int deficient = 0;
  for (int t = 0; t < points; ++t) {
    AffinePoint pt;
    for (VarId v : full.columns) pt[v] = random_rational(rng);
    if (rank_at(full, pt) != n) {
      ++deficient;
      rep.witness("rank drop at " + point_text(pt));
    }
  }
  rep.add("full rank at random points", deficient ? Status::Fail : Status::Pass,
          std::to_string(points - deficient) + "/" + std::to_string(points));

  int rec_bad = 0;
  for (int i = 1; i <= n - 1; ++i) {
    Substitution z;
    z.keep_unmapped = true;
    for (int k = i + 1; k <= n - 1; ++k) z.set(VarId::q(k, n), Polynomial());
    Polynomial lhs = substitute(cache.E_interval(n - i + 1, i, n), z);
    Polynomial rhs = substitute(Polynomial::var(VarId::xs(n)) * cache.E_interval(n - i, i, n - 1), z) +
                     Polynomial::var(VarId::q(i, n));
    if (lhs != rhs) {
      ++rec_bad;
      rep.witness("top coefficient on [" + std::to_string(i) + "," + std::to_string(n) + "] fails to split");
    }
  }
  rep.add("top coefficient splits off q_in", rec_bad ? Status::Fail : Status::Pass);
  rep.finalize();
  rep.wall_time_ms = sw.ms();
  return rep;
}

VerificationReport pet3_singular_check(QSymCache& cache) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "pet3-singular";
  rep.params["n"] = "3";
  rep.params["h"] = "2,3,3";
  const auto h = HessenbergFunction::peterson(3);

  // Quantum side: the variety equations plus row 3 of the Jacobian.
  auto eqs = hm_singular_equations(2, 3, cache);
  std::vector<Polynomial> jq = quantum_generators(h, cache);
  jq.insert(jq.end(), eqs.begin(), eqs.end());
  std::vector<VarId> qzero{VarId::xs(1), VarId::xs(2), VarId::xs(3), VarId::q(1, 2), VarId::q(2, 3)};
  auto rq = locus_ideal_check(jq, qzero);
  for (const auto& w : rq.witnesses) rep.witness(w);
  rep.add("quantum locus vanishes at the origin", rq.containment);
  rep.add("quantum locus is only the origin", rq.radical, rq.detail);

  AffinePoint origin;
  for (VarId v : qzero) origin[v] = 0;
  int rk = rank_at(jacobian(h, cache), origin);
  rep.add("quantum Jacobian rank 2 at the origin", rk == 2 ? Status::Pass : Status::Fail,
          "rank " + std::to_string(rk));
  if (rk != 2) rep.witness("rank " + std::to_string(rk) + " at the origin");

  // Coordinate side: pull the equations back.
  std::vector<Polynomial> jc = generator_polys(ideal_generators(h, GeneratorFlavor::F));
  for (const auto& e : eqs) jc.push_back(phi_inverse(e, 3));
  auto czero = claimed_singular_locus(2, 3);
  auto rc = locus_ideal_check(jc, czero);
  for (const auto& w : rc.witnesses) rep.witness(w);
  rep.add("pulled-back locus contains eB", rc.containment);
  rep.add("pulled-back locus is only eB", rc.radical, rc.detail);

  AffinePoint eb;
  for (VarId v : flag_columns(3)) eb[v] = 0;
  int rkc = rank_at(coordinate_jacobian(h), eb);
  rep.add("coordinate Jacobian rank 0 at eB", rkc == 0 ? Status::Pass : Status::Fail, "rank " + std::to_string(rkc));
  if (rkc != 0) rep.witness("coordinate rank " + std::to_string(rkc) + " at eB");
  rep.finalize();
  rep.wall_time_ms = sw.ms();
  return rep;
}

VerificationReport xyz_identity_check(int n) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "xyz-identity";
  rep.params["n"] = std::to_string(n);
  if (n < 3 || n > 8) fail(ErrorCode::InvalidParams, "xyz identity needs 3 <= n <= 8");
  auto x = [](int i, int j) { return Polynomial::var(VarId::flag(i, j)); };
  auto ft = [&](int i) { return F_tilde(i, 1, 2, n); };
  const Polynomial x21 = x(2, 1);
  const Polynomial det2 = x(3, 1) - x21 * x21;  // |1 x21; x21 x31|

  Polynomial X = x21 * x21 - x(3, 1), Y, Z = x21;
  for (int i = 2; i <= n; ++i) Y += (i == 2 ? Polynomial(1) : x(i, 2)) * x21.pow(static_cast<unsigned>(n - i));
  Polynomial sum;
  for (int i = 3; i <= n; ++i) sum += x21.pow(static_cast<unsigned>(n - i)) * ft(i);
  Polynomial target = X * Y - Z.pow(static_cast<unsigned>(n));
  rep.add("weighted sum equals XY - Z^n", sum == target ? Status::Pass : Status::Fail);
  if (sum != target) rep.witness("difference " + (sum - target).text());

  int bad = 0;
  for (int i = 3; i <= n; ++i) {
    Polynomial partial, col2;
    for (int k = i; k <= n; ++k) {
      partial += x21.pow(static_cast<unsigned>(n - k)) * ft(k);
      col2 += x21.pow(static_cast<unsigned>(n - k)) * x(k, 2);
    }
    Polynomial rhs = -(x21.pow(static_cast<unsigned>(n - i + 1)) * x(i, 1)) - col2 * det2;
    if (partial != rhs) {
      ++bad;
      rep.witness("partial sum from i=" + std::to_string(i) + " differs by " + (partial - rhs).text());
    }
  }
  rep.add("partial sums", bad ? Status::Fail : Status::Pass, std::to_string(n - 2) + " sums");

  if (n == 3) {
    Polynomial printed = -x21.pow(3) + (x21 * x21 - x(3, 1)) * (x21 + x(3, 2));
    bool ok = ft(3) == printed;
    rep.add("n = 3 closed form", ok ? Status::Pass : Status::Fail);
    if (!ok) rep.witness("F~_{3,1} = " + ft(3).text());
  }
  rep.data["XY-Z^n"] = target.text();
  rep.finalize();
  rep.wall_time_ms = sw.ms();
  return rep;
}

VerificationReport cyclic_quotient_certificate(int n) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "cyclic-quotient";
  rep.params["n"] = std::to_string(n);
  if (n < 3 || n > 8) fail(ErrorCode::InvalidParams, "cyclic quotient certificate needs 3 <= n <= 8");
  auto x = [](int i, int j) { return Polynomial::var(VarId::flag(i, j)); };
  const Polynomial X = Polynomial::var(VarId::aux(0)), Y = Polynomial::var(VarId::aux(1)),
                   Z = Polynomial::var(VarId::aux(2));
  const Polynomial x21 = x(2, 1);

  // Variables kept by both sides besides X, Y, Z.
  std::vector<VarId> shared;
  for (int i = 3; i <= n - 1; ++i) shared.push_back(VarId::flag(i, 2));
  for (int j = 3; j < n; ++j)
    for (int i = j + 1; i <= n; ++i) shared.push_back(VarId::flag(i, j));

  Substitution fwd;  // X, Y, Z -> flag coordinates
  Polynomial Yimg;
  for (int i = 2; i <= n; ++i) Yimg += (i == 2 ? Polynomial(1) : x(i, 2)) * x21.pow(static_cast<unsigned>(n - i));
  fwd.set(VarId::aux(0), x21 * x21 - x(3, 1));
  fwd.set(VarId::aux(1), Yimg);
  fwd.set(VarId::aux(2), x21);
  fwd.fixed = shared;

  Substitution inv;  // surviving flag coordinates -> X, Y, Z
  Polynomial xn2 = Y - Z.pow(static_cast<unsigned>(n - 2));
  for (int i = 3; i <= n - 1; ++i) xn2 -= x(i, 2) * Z.pow(static_cast<unsigned>(n - i));
  inv.set(VarId::flag(2, 1), Z);
  inv.set(VarId::flag(3, 1), -X + Z * Z);
  inv.set(VarId::flag(n, 2), xn2);
  inv.fixed = shared;

  int bad = 0;
  for (const auto& v : {VarId::aux(0), VarId::aux(1), VarId::aux(2)}) {
    Polynomial back = substitute(substitute(Polynomial::var(v), fwd), inv);
    if (back != Polynomial::var(v)) {
      ++bad;
      rep.witness("inverse(forward(" + v.text() + ")) = " + back.text());
    }
  }
  for (VarId v : {VarId::flag(2, 1), VarId::flag(3, 1), VarId::flag(n, 2)}) {
    Polynomial back = substitute(substitute(Polynomial::var(v), inv), fwd);
    if (back != Polynomial::var(v)) {
      ++bad;
      rep.witness("forward(inverse(" + v.text() + ")) = " + back.text());
    }
  }
  rep.add("round trips on generators", bad ? Status::Fail : Status::Pass);

  // x_{i+1,1} for i = 3..n-1 in terms of x21, x31 and column 2.
  Substitution elim;
  elim.keep_unmapped = true;
  Polynomial prev = x(3, 1);
  for (int i = 3; i <= n - 1; ++i) {
    Polynomial next = x21 * prev + x(3, 1) * x(i, 2) - x21 * x21 * x(i, 2);
    elim.set(VarId::flag(i + 1, 1), next);
    prev = next;
  }
  int nonzero = 0;
  for (int i = 3; i <= n - 1; ++i) {
    Polynomial r = substitute(F_tilde(i, 1, 2, n), elim);
    if (!r.is_zero()) {
      ++nonzero;
      rep.witness("F~_{" + std::to_string(i) + ",1} survives elimination: " + r.text());
    }
  }
  Polynomial Pn = (x21 * x21 - x(3, 1)) * Yimg - x21.pow(static_cast<unsigned>(n));
  Polynomial last = substitute(F_tilde(n, 1, 2, n), elim);
  bool last_ok = last == Pn;
  if (!last_ok) rep.witness("F~_{n,1} after elimination: " + last.text());
  rep.add("generators reduce to P_n", nonzero == 0 && last_ok ? Status::Pass : Status::Fail);

  Polynomial rel = substitute(X * Y - Z.pow(static_cast<unsigned>(n)), fwd);
  Polynomial rel_back = substitute(Pn, inv);
  bool rel_ok = rel == Pn && rel_back == X * Y - Z.pow(static_cast<unsigned>(n));
  if (!rel_ok) rep.witness("relation images: " + rel.text() + " / " + rel_back.text());
  rep.add("XY - Z^n corresponds to P_n", rel_ok ? Status::Pass : Status::Fail);
  rep.data["P_n"] = Pn.text();
  rep.finalize();
  rep.wall_time_ms = sw.ms();
  return rep;
}

VerificationReport verify_singular_locus(int m, int n, int trials, std::uint64_t seed, QSymCache& cache,
                                         const SingularOptions& opts) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "singular-hm";
  rep.params["m"] = std::to_string(m);
  rep.params["n"] = std::to_string(n);
  rep.params["trials"] = std::to_string(trials);
  rep.params["seed"] = std::to_string(seed);
  require_hm(m, n);
  if (trials < 0) fail(ErrorCode::InvalidParams, "trials must be nonnegative");
  const auto h = HessenbergFunction::h_m(m, n);
  const auto zeros = claimed_singular_locus(m, n);
  const auto gens = ideal_generators(h, GeneratorFlavor::F);
  const auto cj = coordinate_jacobian(h);
  const int codim = static_cast<int>(gens.size());
  nlohmann::json locus = nlohmann::json::array();
  for (VarId v : zeros) locus.push_back(v.text());
  rep.data["claimed_zero_set"] = locus;

  // (a) exact containment.
  {
    auto zmap = zero_map(zeros);
    int bad = 0;
    for (const auto& g : gens) {
      Polynomial r = substitute(g.poly, zmap);
      if (!r.is_zero()) {
        ++bad;
        rep.witness("F_" + pair_text(g.i, g.j) + " on the locus: " + r.text());
      }
    }
    PolyMatrix jl(cj.entries.rows(), cj.entries.cols());
    std::vector<int> live;
    for (std::size_t c = 0; c < jl.cols(); ++c) {
      bool any = false;
      for (std::size_t r = 0; r < jl.rows(); ++r) {
        jl(r, c) = substitute(cj.entries(r, c), zmap);
        any = any || !jl(r, c).is_zero();
      }
      if (any) live.push_back(static_cast<int>(c));
    }
    std::vector<std::size_t> all_rows(jl.rows());
    for (std::size_t r = 0; r < all_rows.size(); ++r) all_rows[r] = r;
    std::size_t minors = 0;
    for (const auto& cols : combinations(live, codim)) {
      std::vector<std::size_t> cs(cols.begin(), cols.end());
      Polynomial d = determinant(jl.submatrix(all_rows, cs));
      ++minors;
      if (!d.is_zero()) {
        ++bad;
        std::string lbl;
        for (int c : cols) lbl += (lbl.empty() ? "" : ",") + cj.columns[static_cast<std::size_t>(c)].text();
        rep.witness("maximal minor on columns " + lbl + " is " + d.text());
        break;
      }
    }
    mpz_class total;
    mpz_bin_uiui(total.get_mpz_t(), jl.cols(), static_cast<unsigned long>(codim));
    rep.add("(a) containment", bad ? Status::Fail : Status::Pass,
            "exact: " + std::to_string(gens.size()) + " generators and all " + total.get_str() +
                " maximal minors vanish with the other coordinates symbolic (" + std::to_string(minors) +
                " expanded, the rest contain a zero column)");
  }

  // (b) sampled genericity, with the quantum-side criterion alongside.
  {
    int off = 0, deficient = 0, criterion_bad = 0, on_bad = 0;
    const auto qj = jacobian(h, cache);
    auto check_quantum = [&](const AffinePoint& pt, bool singular) {
      AffinePoint qp = quantum_point(h, pt);
      for (const auto& e : quantum_generators(h, cache))
        if (evaluate(e, qp) != 0) return false;
      auto vals = evaluate_matrix(qj.entries, qp);
      bool full = rank(vals) == n;
      bool row_zero = row_is_zero(vals.back());
      return singular ? (!full && row_zero) : (full && !row_zero);
    };
    for (int t = 0; t < trials; ++t) {
      std::seed_seq sq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(t)};
      std::uint32_t s32[2];
      sq.generate(s32, s32 + 2);
      AffinePoint pt = sample_variety_point(h, (static_cast<std::uint64_t>(s32[0]) << 32) | s32[1]);
      bool on_locus = std::all_of(zeros.begin(), zeros.end(), [&](VarId v) { return pt[v] == 0; });
      if (on_locus) continue;
      ++off;
      if (rank_at(cj, pt) != codim) {
        ++deficient;
        rep.witness("rank-deficient point off the locus: " + point_text(pt));
      }
      if (!check_quantum(pt, false)) {
        ++criterion_bad;
        rep.witness("quantum criterion disagrees at " + point_text(pt));
      }
    }
    // Points on the locus: rank must drop on both sides.
    std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
    const int on_trials = std::max(1, trials / 10);
    for (int t = 0; t < on_trials; ++t) {
      AffinePoint pt;
      for (VarId v : cj.columns) pt[v] = random_rational(rng);
      for (VarId v : zeros) pt[v] = 0;
      if (rank_at(cj, pt) == codim || !check_quantum(pt, true)) {
        ++on_bad;
        rep.witness("point on the locus is not singular: " + point_text(pt));
      }
    }
    rep.add("(b) genericity", deficient || criterion_bad || on_bad ? Status::Fail : Status::Pass,
            "sampled: " + std::to_string(off) + " points off the locus with full rank, " + std::to_string(on_trials) +
                " points on it with rank drop");
  }

  // (c) rank conditions of the Schubert variety of w_m.
  if (n <= opts.schubert_max_n) {
    auto w = w_m(m, n);
    PolyMatrix g = unipotent(n);
    std::vector<Polynomial> minors;
    std::set<std::string> seen;
    for (int p = 1; p <= n; ++p)
      for (int q = 1; q < n; ++q) {
        int k = p - schubert_rank(w, p, q) + 1;
        if (k > std::min(n - q, p)) continue;
        std::vector<int> rows_pool, cols_pool;
        for (int r = q + 1; r <= n; ++r) rows_pool.push_back(r - 1);
        for (int c = 1; c <= p; ++c) cols_pool.push_back(c - 1);
        for (const auto& rs : combinations(rows_pool, k))
          for (const auto& cs : combinations(cols_pool, k)) {
            std::vector<std::size_t> rr(rs.begin(), rs.end()), cc(cs.begin(), cs.end());
            Polynomial d = determinant(g.submatrix(rr, cc));
            if (d.is_zero()) continue;
            d = d.primitive();
            if (seen.insert(d.text()).second) minors.push_back(d);
          }
      }
    auto res = locus_ideal_check(minors, zeros, 3, opts.term_limit);
    for (const auto& wt : res.witnesses) rep.witness(wt);
    std::string wtext;
    for (int v : w) wtext += std::to_string(v);
    rep.data["w_m"] = wtext;
    Status st = res.containment == Status::Fail ? Status::Fail : res.radical;
    rep.add("(c) Schubert rank conditions", st,
            "w_m = " + wtext + ", " + std::to_string(minors.size()) + " minors; " + res.detail);
  } else {
    rep.add("(c) Schubert rank conditions", Status::NotAttempted, "n above " + std::to_string(opts.schubert_max_n));
  }

  // (d) ideal level: generators plus the pulled-back row-n equations.
  if (n <= opts.ideal_max_n) {
    std::vector<Polynomial> jgens = generator_polys(gens);
    for (const auto& e : hm_singular_equations(m, n, cache)) jgens.push_back(phi_inverse(e, n));
    auto res = locus_ideal_check(jgens, zeros, 3, opts.term_limit);
    for (const auto& wt : res.witnesses) rep.witness(wt);
    Status st = res.containment == Status::Fail ? Status::Fail : res.radical;
    rep.add("(d) ideal-level equality", st, res.detail);
  } else {
    rep.add("(d) ideal-level equality", Status::NotAttempted, "n above " + std::to_string(opts.ideal_max_n));
  }
  rep.finalize();
  rep.wall_time_ms = sw.ms();
  return rep;
}

}  // namespace hessq
