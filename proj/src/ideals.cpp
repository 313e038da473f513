// Licensed under the Apache License 2.0 (see LICENSE file).
#include "hessq/ideals.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

namespace hessq {

std::size_t default_term_limit() {
  if (const char* env = std::getenv("HESSQ_TERM_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  return 5'000'000;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& e : elements) out.push_back(e.leading().mono);
  return out;
}

namespace {

struct Reducer {
  const std::vector<Polynomial>& basis;
  const std::vector<Monomial>& lms;
  std::size_t term_limit;
  std::size_t skip = static_cast<std::size_t>(-1);  // basis index to ignore

  long find_divisor(const Monomial& m) const {
    for (std::size_t k = 0; k < lms.size(); ++k)
      if (k != skip && lms[k].divides(m)) return static_cast<long>(k);
    return -1;
  }

  // Full reduction of p. On return `mult * p == rem (mod basis)` when
  // `track` is set; otherwise rem is only defined up to a nonzero scalar.
  Polynomial run(const Polynomial& p, mpz_class* mult, std::size_t* max_terms) const {
    std::vector<Term> P = p.terms();
    std::vector<Term> R;
    std::size_t start = 0;
    if (mult) *mult = 1;
    while (start < P.size()) {
      const Term& lt = P[start];
      long idx = find_divisor(lt.mono);
      if (idx < 0) {
        R.push_back(std::move(P[start]));
        ++start;
        continue;
      }
      const Polynomial& g = basis[static_cast<std::size_t>(idx)];
      const mpz_class& a = g.leading().coeff;
      mpz_class gg;
      mpz_gcd(gg.get_mpz_t(), a.get_mpz_t(), lt.coeff.get_mpz_t());
      mpz_class a1 = a / gg, c1 = lt.coeff / gg;
      Monomial m = lt.mono.quotient(g.leading().mono);
      // P <- a1 * P[start+1..] - c1 * m * g[1..]
      std::vector<Term> next;
      next.reserve(P.size() - start + g.size());
      auto ip = P.begin() + static_cast<std::ptrdiff_t>(start) + 1;
      auto ig = g.terms().begin() + 1;
      std::vector<Term> shifted;
      shifted.reserve(g.size());
      for (; ig != g.terms().end(); ++ig) shifted.push_back({ig->mono * m, ig->coeff});
      auto is = shifted.begin();
      const bool unit = a1 == 1;
      while (ip != P.end() && is != shifted.end()) {
        int c = monomial_compare(ip->mono, is->mono);
        if (c > 0) {
          next.push_back({std::move(ip->mono), unit ? std::move(ip->coeff) : mpz_class(a1 * ip->coeff)});
          ++ip;
        } else if (c < 0) {
          next.push_back({std::move(is->mono), -c1 * is->coeff});
          ++is;
        } else {
          mpz_class s = unit ? mpz_class(ip->coeff - c1 * is->coeff) : mpz_class(a1 * ip->coeff - c1 * is->coeff);
          if (s != 0) next.push_back({std::move(ip->mono), std::move(s)});
          ++ip;
          ++is;
        }
      }
      for (; ip != P.end(); ++ip)
        next.push_back({std::move(ip->mono), unit ? std::move(ip->coeff) : mpz_class(a1 * ip->coeff)});
      for (; is != shifted.end(); ++is) next.push_back({std::move(is->mono), -c1 * is->coeff});
      if (!unit) {
        for (auto& t : R) t.coeff *= a1;
        if (mult) *mult *= a1;
      }
      P = std::move(next);
      start = 0;
      if (max_terms) *max_terms = std::max(*max_terms, P.size() + R.size());
      if (P.size() + R.size() > term_limit)
        fail(ErrorCode::ResourceLimit, "term limit exceeded during reduction (" + std::to_string(P.size() + R.size()) + " terms)");
      if (!mult && !unit) {
        // Content stripping keeps coefficients small.
        mpz_class g2 = 0;
        for (const auto& t : R) mpz_gcd(g2.get_mpz_t(), g2.get_mpz_t(), t.coeff.get_mpz_t());
        for (const auto& t : P) {
          if (g2 == 1) break;
          mpz_gcd(g2.get_mpz_t(), g2.get_mpz_t(), t.coeff.get_mpz_t());
        }
        if (g2 > 1) {
          for (auto& t : R) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g2.get_mpz_t());
          for (auto& t : P) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g2.get_mpz_t());
        }
      }
    }
    return Polynomial::from_terms(std::move(R));
  }
};

std::int64_t homogeneous_degree(const Polynomial& p) {
  GradedDegree g = graded_degree(p);
  if (!g.homogeneous) fail(ErrorCode::NotHomogeneous, "generator is not homogeneous: " + p.text());
  return g.degree;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const GroebnerOptions& opts) {
  GroebnerBasis out;
  out.degree_bound = opts.degree_bound;
  auto& st = out.stats;
  std::vector<Polynomial> G;
  std::vector<Monomial> LM;
  // Work queue ordered by (degree, kind, seq). kind 0: input generator,
  // kind 1: S-pair.
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    bool alive;
  };
  std::vector<Pair> pairs;
  std::set<std::tuple<std::int64_t, int, std::size_t>> queue;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].is_zero()) continue;
    std::int64_t d = homogeneous_degree(gens[k]);
    if (opts.degree_bound && d > *opts.degree_bound) continue;
    queue.emplace(d, 0, k);
  }
  Reducer red{G, LM, opts.term_limit};

  auto add_element = [&](Polynomial r) {
    const std::size_t idx = G.size();
    const Monomial& lm = r.leading().mono;
    for (auto& pr : pairs) {
      if (!pr.alive) continue;
      if (lm.divides(pr.lcm) && !(LM[pr.i].lcm(lm) == pr.lcm) && !(LM[pr.j].lcm(lm) == pr.lcm))
        pr.alive = false;
    }
    for (std::size_t i = 0; i < idx; ++i) {
      ++st.pairs_considered;
      if (LM[i].coprime(lm)) continue;
      Monomial l = LM[i].lcm(lm);
      if (opts.degree_bound && l.weight() > *opts.degree_bound) continue;
      pairs.push_back({i, idx, l, true});
      queue.emplace(l.weight(), 1, pairs.size() - 1);
    }
    LM.push_back(lm);
    G.push_back(std::move(r));
  };

  while (!queue.empty()) {
    auto [deg, kind, k] = *queue.begin();
    queue.erase(queue.begin());
    Polynomial s;
    if (kind == 0) {
      s = gens[k];
    } else {
      Pair& pr = pairs[k];
      if (!pr.alive) continue;
      pr.alive = false;
      const Polynomial& a = G[pr.i];
      const Polynomial& b = G[pr.j];
      mpz_class gg;
      mpz_gcd(gg.get_mpz_t(), a.leading().coeff.get_mpz_t(), b.leading().coeff.get_mpz_t());
      s = a.mul_term(pr.lcm.quotient(LM[pr.i]), b.leading().coeff / gg) -
          b.mul_term(pr.lcm.quotient(LM[pr.j]), a.leading().coeff / gg);
      ++st.pairs_reduced;
    }
    Polynomial r = red.run(s, nullptr, &st.max_terms).primitive();
    if (r.is_zero()) {
      ++st.zero_reductions;
      continue;
    }
    add_element(std::move(r));
  }

  // Inter-reduce tails. Leading monomials are already minimal.
  std::vector<Polynomial> reduced;
  reduced.reserve(G.size());
  for (std::size_t k = 0; k < G.size(); ++k) {
    Reducer tail{G, LM, opts.term_limit, k};
    reduced.push_back(tail.run(G[k], nullptr, nullptr).primitive());
  }
  std::vector<std::size_t> order(reduced.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return monomial_compare(reduced[a].leading().mono, reduced[b].leading().mono) < 0;
  });
  for (std::size_t k : order) out.elements.push_back(std::move(reduced[k]));
  return out;
}

NormalForm reduce(const Polynomial& p, const GroebnerBasis& basis) {
  if (p.is_zero()) return {};
  if (basis.degree_bound) {
    GradedDegree g = graded_degree(p);
    if (g.degree > *basis.degree_bound)
      fail(ErrorCode::DegreeBoundExceeded, "degree " + std::to_string(g.degree) + " exceeds the basis bound " +
                                               std::to_string(*basis.degree_bound));
  }
  std::vector<Monomial> lms = basis.leading_monomials();
  Reducer red{basis.elements, lms, default_term_limit()};
  mpz_class mult;
  Polynomial rem = red.run(p, &mult, nullptr);
  NormalForm nf;
  if (rem.is_zero()) return nf;
  mpz_class g = rem.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), mult.get_mpz_t());
  if (mult < 0) g = -g;
  nf.numerator = rem.div_exact(g);
  nf.denominator = mult / g;
  return nf;
}

bool member(const Polynomial& p, const std::vector<Polynomial>& gens, int degree_bound, std::size_t term_limit) {
  if (p.is_zero()) return true;
  GroebnerOptions opts;
  opts.degree_bound = degree_bound;
  opts.term_limit = term_limit;
  return reduce(p, buchberger(gens, opts)).is_zero();
}

// ---------------------------------------------------------------- series

std::string SeriesFactor::text() const {
  if (k == 0) return "(1-t^" + std::to_string(d) + ")";
  std::string s = "(1";
  for (int l = 1; l <= k; ++l) s += "+t^" + std::to_string(d * l);
  return s + ")";
}

HilbertSeries HilbertSeries::from_factors(std::vector<SeriesFactor> num, std::vector<SeriesFactor> den, int D) {
  HilbertSeries h;
  h.degree_bound = D;
  std::vector<mpz_class> c(static_cast<std::size_t>(D + 1), 0);
  c[0] = 1;
  for (const auto& f : num) {
    if (f.d <= 0) fail(ErrorCode::InvalidArgument, "series factor needs d > 0");
    if (f.k == 0) {
      for (int i = D; i >= f.d; --i) c[static_cast<std::size_t>(i)] -= c[static_cast<std::size_t>(i - f.d)];
    } else {
      std::vector<mpz_class> nc(c.size(), 0);
      for (int i = 0; i <= D; ++i)
        for (int l = 0; l <= f.k && i - f.d * l >= 0; ++l)
          nc[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - f.d * l)];
      c = std::move(nc);
    }
  }
  for (const auto& f : den) {
    if (f.k != 0) fail(ErrorCode::InvalidArgument, "only (1-t^d) factors may divide");
    for (int i = f.d; i <= D; ++i) c[static_cast<std::size_t>(i)] += c[static_cast<std::size_t>(i - f.d)];
  }
  h.numerator = std::move(num);
  h.denominator = std::move(den);
  h.coefficients = std::move(c);
  return h;
}

namespace {
std::string product_text(const std::vector<SeriesFactor>& fs) {
  if (fs.empty()) return "1";
  // Group equal factors as powers.
  std::vector<std::pair<SeriesFactor, int>> groups;
  for (const auto& f : fs) {
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const auto& g) { return g.first.d == f.d && g.first.k == f.k; });
    if (it == groups.end()) groups.push_back({f, 1});
    else ++it->second;
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
    return std::tie(a.first.k, a.first.d) < std::tie(b.first.k, b.first.d);
  });
  std::string s;
  for (const auto& [f, e] : groups) {
    s += f.text();
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}
}  // namespace

std::string HilbertSeries::symbolic() const {
  if (numerator.empty() && denominator.empty()) return "(staircase count, no closed form)";
  std::string s = product_text(numerator);
  if (!denominator.empty()) s += " / " + product_text(denominator);
  return s;
}

std::string HilbertSeries::coefficients_text() const {
  std::string s;
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    if (k) s += ",";
    s += coefficients[k].get_str();
  }
  return s;
}

bool same_expansion(const HilbertSeries& a, const HilbertSeries& b) {
  std::size_t len = std::min(a.coefficients.size(), b.coefficients.size());
  for (std::size_t k = 0; k < len; ++k)
    if (a.coefficients[k] != b.coefficients[k]) return false;
  return true;
}

HilbertSeries staircase_series(const GroebnerBasis& basis, const std::vector<VarId>& ring, int D) {
  const std::size_t nv = ring.size();
  std::vector<int> w(nv);
  for (std::size_t k = 0; k < nv; ++k) {
    auto wt = ring[k].weight();
    if (!wt || *wt <= 0) fail(ErrorCode::UngradedVariable, "ring variable " + ring[k].text() + " is ungraded");
    w[k] = *wt;
  }
  // Dense leading exponents.
  std::vector<std::vector<std::uint32_t>> lead;
  for (const auto& e : basis.elements) {
    std::vector<std::uint32_t> v(nv, 0);
    for (const auto& vp : e.leading().mono.powers()) {
      auto it = std::find(ring.begin(), ring.end(), vp.var);
      if (it == ring.end()) fail(ErrorCode::InvalidArgument, "generator uses a variable outside the ring: " + vp.var.text());
      v[static_cast<std::size_t>(it - ring.begin())] = vp.exp;
    }
    lead.push_back(std::move(v));
  }
  // Leading terms mentioning variable k, for pruning after raising x_k.
  std::vector<std::vector<std::size_t>> by_var(nv);
  for (std::size_t l = 0; l < lead.size(); ++l)
    for (std::size_t k = 0; k < nv; ++k)
      if (lead[l][k]) by_var[k].push_back(l);
  bool constant_in_ideal = false;
  for (const auto& v : lead)
    if (std::all_of(v.begin(), v.end(), [](std::uint32_t e) { return e == 0; })) constant_in_ideal = true;

  HilbertSeries h;
  h.degree_bound = D;
  h.coefficients.assign(static_cast<std::size_t>(D + 1), 0);
  if (constant_in_ideal) return h;
  std::vector<std::uint32_t> e(nv, 0);
  auto divisible_after = [&](std::size_t k) {
    for (std::size_t l : by_var[k]) {
      const auto& v = lead[l];
      bool ok = true;
      for (std::size_t t = 0; t < nv && ok; ++t) ok = v[t] <= e[t];
      if (ok) return true;
    }
    return false;
  };
  std::vector<unsigned long> counts(static_cast<std::size_t>(D + 1), 0);
  std::function<void(std::size_t, int)> dfs = [&](std::size_t k, int deg) {
    if (k == nv) {
      ++counts[static_cast<std::size_t>(deg)];
      return;
    }
    dfs(k + 1, deg);
    int d = deg;
    while (d + w[k] <= D) {
      d += w[k];
      ++e[k];
      if (divisible_after(k)) break;
      dfs(k + 1, d);
    }
    e[k] = 0;
  };
  dfs(0, 0);
  for (std::size_t k = 0; k < counts.size(); ++k) h.coefficients[k] = counts[k];
  return h;
}

HilbertSeries staircase_series(const std::vector<Polynomial>& gens, const std::vector<VarId>& ring, int D,
                               std::size_t term_limit) {
  GroebnerOptions opts;
  opts.degree_bound = D;
  opts.term_limit = term_limit;
  return staircase_series(buchberger(gens, opts), ring, D);
}

HilbertSeries free_series(const std::vector<VarId>& ring, int D) {
  std::vector<SeriesFactor> den;
  for (VarId v : ring) {
    auto w = v.weight();
    if (!w) fail(ErrorCode::UngradedVariable, "ring variable " + v.text() + " is ungraded");
    den.push_back({*w, 0});
  }
  return HilbertSeries::from_factors({}, std::move(den), D);
}

std::vector<VarId> coordinate_ring_vars(int n) {
  std::vector<VarId> vs;
  for (int j = 1; j < n; ++j)
    for (int i = j + 1; i <= n; ++i) vs.push_back(VarId::flag(i, j));
  std::sort(vs.begin(), vs.end());
  return vs;
}

std::vector<VarId> quantum_ring_vars(const HessenbergFunction& h) {
  std::vector<VarId> vs;
  for (int s = 1; s <= h.n(); ++s) vs.push_back(VarId::xs(s));
  for (auto [r, s] : h.surviving_q_set()) vs.push_back(VarId::q(r, s));
  std::sort(vs.begin(), vs.end());
  return vs;
}

HilbertSeries product_series_coordinate(const HessenbergFunction& h, int D) {
  const int n = h.n();
  std::vector<SeriesFactor> num, den;
  for (int j = 1; j < n; ++j)
    for (int i = j + 1; i <= n; ++i) den.push_back({2 * (i - j), 0});
  for (int j = 1; j < n; ++j)
    for (int i = h(j) + 1; i <= n; ++i) num.push_back({2 * (i - j + 1), 0});
  return HilbertSeries::from_factors(std::move(num), std::move(den), D);
}

HilbertSeries product_series_quantum(const HessenbergFunction& h, int D) {
  const int n = h.n();
  std::vector<SeriesFactor> num, den;
  for (int s = 1; s <= n; ++s) den.push_back({2, 0});
  for (int s = 2; s <= n; ++s)
    for (int r = 1; r < s; ++r) den.push_back({2 * (s - r + 1), 0});
  for (int k = 1; k <= n; ++k) num.push_back({2 * k, 0});
  for (auto [r, s] : h.zeroed_q_set()) num.push_back({2 * (s - r + 1), 0});
  return HilbertSeries::from_factors(std::move(num), std::move(den), D);
}

HilbertSeries product_series_closed(const HessenbergFunction& h, int D) {
  const int n = h.n();
  std::vector<SeriesFactor> num, den;
  for (int j = 1; j < n; ++j)
    for (int i = j + 1; i <= h(j); ++i) den.push_back({2 * (i - j + 1), 0});
  for (int k = 1; k < n; ++k) num.push_back({2, k});
  return HilbertSeries::from_factors(std::move(num), std::move(den), D);
}

VerificationReport regular_sequence_certificate(const std::vector<Polynomial>& gens, const std::vector<VarId>& ring,
                                                int D, std::size_t term_limit) {
  VerificationReport rep;
  rep.check_id = "regular-sequence";
  rep.params["trunc"] = std::to_string(D);
  rep.params["generators"] = std::to_string(gens.size());
  rep.params["variables"] = std::to_string(ring.size());
  if (gens.size() > ring.size()) fail(ErrorCode::InvalidArgument, "more generators than variables");
  std::vector<SeriesFactor> num;
  for (const auto& g : gens) {
    GradedDegree gd = graded_degree(g);
    if (!gd.homogeneous) fail(ErrorCode::NotHomogeneous, "generator is not homogeneous");
    num.push_back({static_cast<int>(gd.degree), 0});
  }
  std::vector<SeriesFactor> den;
  for (VarId v : ring) den.push_back({*v.weight(), 0});
  HilbertSeries expected = HilbertSeries::from_factors(num, den, D);
  GroebnerBasis gb;
  try {
    GroebnerOptions opts;
    opts.degree_bound = D;
    opts.term_limit = term_limit;
    gb = buchberger(gens, opts);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ResourceLimit) throw;
    rep.add("series factorization", Status::Inconclusive, e.what());
    rep.finalize();
    return rep;
  }
  HilbertSeries got = staircase_series(gb, ring, D);
  rep.data["staircase"] = got.coefficients_text();
  rep.data["expected"] = expected.coefficients_text();
  rep.data["expected_symbolic"] = expected.symbolic();
  bool eq = same_expansion(got, expected);
  rep.add("series factorization", eq ? Status::Pass : Status::Fail,
          "staircase " + got.coefficients_text() + " vs " + expected.coefficients_text());
  if (gens.size() == ring.size()) {
    std::vector<Monomial> lms = gb.leading_monomials();
    std::vector<std::string> missing;
    for (VarId v : ring) {
      bool found = std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) {
        return m.powers().size() == 1 && m.powers()[0].var == v;
      });
      if (!found) missing.push_back(v.text());
    }
    if (missing.empty()) {
      rep.add("origin-only zero set", Status::Pass, "every variable has a pure power among leading terms");
    } else {
      std::string list;
      for (const auto& s : missing) list += (list.empty() ? "" : ",") + s;
      rep.add("origin-only zero set", Status::Inconclusive, "no pure power up to degree " + std::to_string(D) + " for " + list);
    }
  }
  rep.finalize();
  return rep;
}

}  // namespace hessq
