// Licensed under the Apache License 2.0 (see LICENSE file).
#include "hessq/checks.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <set>
#include <thread>

#include "hessq/cells.hpp"
#include "hessq/error.hpp"
#include "hessq/flag.hpp"
#include "hessq/hessenberg.hpp"
#include "hessq/ideals.hpp"
#include "hessq/iso.hpp"
#include "hessq/qsym.hpp"
#include "hessq/singular.hpp"

namespace hessq {

namespace {

std::string pair_text(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

Polynomial v(VarId id) { return Polynomial::var(id); }

// Printed n = 3 values.
std::vector<Polynomial> golden_E3() {
  Polynomial x1 = v(VarId::xs(1)), x2 = v(VarId::xs(2)), x3 = v(VarId::xs(3));
  Polynomial q12 = v(VarId::q(1, 2)), q23 = v(VarId::q(2, 3)), q13 = v(VarId::q(1, 3));
  return {x1 + x2 + x3, x1 * x2 + x1 * x3 + x2 * x3 + q12 + q23, x1 * x2 * x3 + x1 * q23 + x3 * q12 + q13};
}

}  // namespace

VerificationReport verify_recursion_determinant(int n) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "recursion-determinant";
  rep.params["n"] = std::to_string(n);
  if (n < 1 || n > 8) fail(ErrorCode::InvalidParams, "recursion-determinant needs 1 <= n <= 8");
  QSymCache& cache = QSymCache::global();
  int checked = 0, bad = 0;
  for (int b = 1; b <= n; ++b)
    for (int a = 1; a <= b; ++a)
      for (int i = 0; i <= b - a + 1; ++i) {
        ++checked;
        const Polynomial& rec = cache.E_interval(i, a, b);
        Polynomial det = E_charpoly(i, a, b);
        if (rec != det) {
          ++bad;
          rep.witness("E_" + std::to_string(i) + "^[" + std::to_string(a) + "," + std::to_string(b) +
                      "]: difference " + (rec - det).text());
        }
      }
  rep.add("interval polynomials: recursion equals charpoly", bad ? Status::Fail : Status::Pass,
          std::to_string(checked - bad) + "/" + std::to_string(checked) + " triples");

  int cbad = 0;
  for (int s = 1; s <= n; ++s)
    for (int i = 1; i <= s; ++i)
      if (classical_specialization(i, s, cache) != classical_charpoly(i, s)) {
        ++cbad;
        rep.witness("classical E_" + std::to_string(i) + "^(" + std::to_string(s) + ") disagrees");
      }
  rep.add("classical specialization equals tridiagonal charpoly", cbad ? Status::Fail : Status::Pass);

  if (n >= 3) {
    auto gold = golden_E3();
    int gbad = 0;
    for (int i = 1; i <= 3; ++i)
      if (cache.E(i, 3) != gold[static_cast<std::size_t>(i - 1)]) {
        ++gbad;
        rep.witness("E_" + std::to_string(i) + "^(3) = " + cache.E(i, 3).text());
      }
    rep.add("n = 3 table", gbad ? Status::Fail : Status::Pass);
  }
  rep.finalize();
  rep.wall_time_ms = sw.ms();
  return rep;
}

VerificationReport verify_grading(int n) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "grading";
  rep.params["n"] = std::to_string(n);
  if (n < 2 || n > 8) fail(ErrorCode::InvalidParams, "grading needs 2 <= n <= 8");
  QSymCache& cache = QSymCache::global();
  int ebad = 0, echecked = 0;
  for (int s = 1; s <= n; ++s)
    for (int r = 0; r <= s; ++r) {
      ++echecked;
      GradedDegree g = graded_degree(cache.E(r, s));
      if (!g.homogeneous || g.degree != 2 * r) {
        ++ebad;
        rep.witness("E_" + std::to_string(r) + "^(" + std::to_string(s) + ") has degree " + std::to_string(g.degree) +
                    (g.homogeneous ? "" : " (inhomogeneous)"));
      }
    }
  rep.add("E_r^(s) homogeneous of degree 2r", ebad ? Status::Fail : Status::Pass,
          std::to_string(echecked) + " polynomials");
  int fbad = 0, fchecked = 0;
  for (int j = 1; j < n; ++j)
    for (int i = j + 1; i <= n; ++i) {
      ++fchecked;
      GradedDegree g = graded_degree(F(i, j, n));
      if (!g.homogeneous || g.degree != 2 * (i - j + 1)) {
        ++fbad;
        rep.witness("F" + pair_text(i, j) + " has degree " + std::to_string(g.degree) +
                    (g.homogeneous ? "" : " (inhomogeneous)"));
      }
    }
  rep.add("F_ij homogeneous of degree 2(i-j+1)", fbad ? Status::Fail : Status::Pass,
          std::to_string(fchecked) + " polynomials");
  rep.finalize();
  rep.wall_time_ms = sw.ms();
  return rep;
}

VerificationReport verify_conj_entry(int n) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "conj-entry";
  rep.params["n"] = std::to_string(n);
  if (n < 2 || n > 8) fail(ErrorCode::InvalidParams, "conj-entry needs 2 <= n <= 8");
  int bad = 0, checked = 0;
  for (int j = 1; j < n; ++j)
    for (int i = j + 1; i <= n; ++i) {
      ++checked;
      Polynomial a = F(i, j, n), b = conj_entry(i, j, n);
      if (a != b) {
        ++bad;
        rep.witness("F" + pair_text(i, j) + " - (g^-1 N g)" + pair_text(i, j) + " = " + (a - b).text());
      }
    }
  rep.add("F equals the conjugated entry", bad ? Status::Fail : Status::Pass,
          std::to_string(checked - bad) + "/" + std::to_string(checked) + " entries");

  RationalPoint origin;
  for (int j = 1; j < n; ++j)
    for (int i = j + 1; i <= n; ++i) origin[VarId::flag(i, j)] = 0;
  PolyMatrix c = conj_matrix(n);
  int obad = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      mpq_class want = j == i + 1 ? 1 : 0;
      if (evaluate(c(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)), origin) != want) {
        ++obad;
        rep.witness("entry " + pair_text(i, j) + " at the origin");
      }
    }
  rep.add("conjugate at the origin is N", obad ? Status::Fail : Status::Pass);
  rep.finalize();
  rep.wall_time_ms = sw.ms();
  return rep;
}

namespace {

struct Spec {
  CheckInfo info;
  std::function<VerificationReport(const CheckParams&)> run;
};

class Params {
 public:
  Params(const CheckParams& p, const CheckInfo& info) : p_(p) {
    for (const auto& [k, _] : p)
      if (std::find(info.params.begin(), info.params.end(), k) == info.params.end())
        fail(ErrorCode::InvalidParams, "check '" + info.id + "' does not take parameter '" + k + "'");
  }

  bool has(const std::string& k) const { return p_.count(k) != 0; }

  long long integer(const std::string& k, long long lo, long long hi) const {
    auto it = p_.find(k);
    if (it == p_.end()) fail(ErrorCode::InvalidParams, "missing parameter '" + k + "'");
    long long val = 0;
    try {
      std::size_t used = 0;
      val = std::stoll(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument(k);
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidParams, "parameter '" + k + "' is not an integer: '" + it->second + "'");
    }
    if (val < lo || val > hi)
      fail(ErrorCode::InvalidParams, "parameter '" + k + "' must lie in [" + std::to_string(lo) + ", " +
                                         std::to_string(hi) + "]");
    return val;
  }
  int integer_or(const std::string& k, int dflt, int lo, int hi) const {
    return has(k) ? static_cast<int>(integer(k, lo, hi)) : dflt;
  }
  std::uint64_t seed() const {
    if (!has("seed")) return 1;
    const std::string& s = p_.at("seed");
    try {
      std::size_t used = 0;
      auto val = std::stoull(s, &used);
      if (used != s.size() || s.find('-') != std::string::npos) throw std::invalid_argument(s);
      return val;
    } catch (const std::exception&) {
      fail(ErrorCode::InvalidParams, "seed must be a nonnegative integer: '" + s + "'");
    }
  }
  bool flag(const std::string& k, bool dflt) const {
    if (!has(k)) return dflt;
    const std::string& s = p_.at(k);
    if (s == "1" || s == "true") return true;
    if (s == "0" || s == "false") return false;
    fail(ErrorCode::InvalidParams, "parameter '" + k + "' must be 0 or 1");
  }

  HessenbergFunction h() const {
    if (!has("h")) fail(ErrorCode::InvalidParams, "missing parameter 'h'");
    HessenbergFunction out = HessenbergFunction::full(1);
    try {
      out = HessenbergFunction::parse(p_.at("h"));
    } catch (const Error& e) {
      fail(ErrorCode::InvalidParams, std::string("bad Hessenberg function: ") + e.what());
    }
    if (has("n") && integer("n", 1, 64) != out.n())
      fail(ErrorCode::InvalidParams, "n disagrees with the length of h");
    return out;
  }

  Side side() const {
    if (!has("side")) return Side::Both;
    const std::string& s = p_.at("side");
    if (s == "coordinate") return Side::Coordinate;
    if (s == "quantum") return Side::Quantum;
    if (s == "both") return Side::Both;
    fail(ErrorCode::InvalidParams, "side must be coordinate, quantum or both");
  }

 private:
  const CheckParams& p_;
};

// Converts errors raised by the underlying routine from a range violation
// into a parameter error, which is what a caller of the registry sees.
template <class F>
VerificationReport guarded(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::IndexOutOfRange || e.code() == ErrorCode::InvalidArgument)
      fail(ErrorCode::InvalidParams, e.what());
    throw;
  }
}

void absorb(VerificationReport& into, const VerificationReport& from, const std::string& prefix) {
  for (const auto& sc : from.subchecks) into.add(prefix + sc.name, sc.status, sc.detail);
  for (const auto& w : from.witnesses) into.witness(prefix + w);
  into.data[prefix.substr(0, prefix.find(':'))] = from.data;
}

VerificationReport regular_sequence(const HessenbergFunction& h, int D, Side side, bool groebner) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "regular-sequence";
  rep.params["n"] = std::to_string(h.n());
  rep.params["h"] = h.csv();
  rep.params["trunc"] = std::to_string(D);
  rep.params["side"] = side == Side::Coordinate ? "coordinate" : side == Side::Quantum ? "quantum" : "both";
  if (!groebner) {
    rep.add("series factorization", Status::NotAttempted, "Groebner work disabled");
    rep.finalize();
    return rep;
  }
  if (side != Side::Quantum)
    absorb(rep,
           regular_sequence_certificate(generator_polys(ideal_generators(h, GeneratorFlavor::F)),
                                        coordinate_ring_vars(h.n()), D),
           "coordinate: ");
  if (side != Side::Coordinate)
    absorb(rep,
           regular_sequence_certificate(quantum_generators(h, QSymCache::global()), quantum_ring_vars(h), D),
           "quantum: ");
  rep.finalize();
  rep.wall_time_ms = sw.ms();
  return rep;
}

VerificationReport not_attempted(const std::string& id, CheckParams params, const std::string& why) {
  VerificationReport rep;
  rep.check_id = id;
  rep.params = std::move(params);
  rep.add("membership", Status::NotAttempted, why);
  rep.finalize();
  return rep;
}

const std::vector<Spec>& specs() {
  static const std::vector<Spec> table = [] {
    std::vector<Spec> t;
    auto add = [&](CheckInfo info, std::function<VerificationReport(const Params&)> body) {
      CheckInfo copy = info;
      t.push_back({std::move(info), [copy, body](const CheckParams& p) {
                     Params ps(p, copy);
                     return guarded([&] { return body(ps); });
                   }});
    };
    add({"appendix", "Singular cells of the Peterson variety: set identity, decomposition, irredundancy",
         {"n"}, "n=9"},
        [](const Params& p) { return verify_appendix_identities(static_cast<int>(p.integer("n", 3, 20))); });
    add({"conj-entry", "F_ij equals the (i,j) entry of g^-1 N g on the opposite cell", {"n"}, "n=4"},
        [](const Params& p) { return verify_conj_entry(static_cast<int>(p.integer("n", 2, 8))); });
    add({"cramer", "q_rs recovered as a determinant of differences of E polynomials", {"n"}, "n=4"},
        [](const Params& p) {
          return verify_cramer_identity(static_cast<int>(p.integer("n", 2, 8)), QSymCache::global());
        });
    add({"cyclic-quotient", "XY = Z^n chart of Hess(N,h_2) and its cyclic quotient round trip", {"n"}, "n=5"},
        [](const Params& p) { return cyclic_quotient_certificate(static_cast<int>(p.integer("n", 3, 12))); });
    add({"f-ideal-equality", "F and truncated F~ generate the same ideal (explicit triangular combinations)",
         {"n", "h"}, "h=2,3,3"},
        [](const Params& p) { return verify_ideal_equality(p.h()); });
    add({"f-recursions", "Recursions relating F and the truncated determinants F~", {"n"}, "n=5"},
        [](const Params& p) { return verify_F_recursions(static_cast<int>(p.integer("n", 2, 8))); });
    add({"grading", "E_r^(s) homogeneous of degree 2r, F_ij of degree 2(i-j+1)", {"n"}, "n=5"},
        [](const Params& p) { return verify_grading(static_cast<int>(p.integer("n", 2, 8))); });
    add({"hilbert-eq", "Staircase Hilbert series of both quotients against the product formulas",
         {"n", "h", "trunc", "side", "groebner"}, "h=2,3,3 trunc=20"},
        [](const Params& p) {
          return verify_hilbert_equality(p.h(), p.integer_or("trunc", 20, 0, 200), p.side(), QSymCache::global(),
                                         p.flag("groebner", true));
        });
    add({"jacobian", "Closed-form Jacobian of the quantum presentation, tabulated cases, generic full rank",
         {"n", "trials", "seed"}, "n=4 trials=100"},
        [](const Params& p) {
          return verify_jacobian(static_cast<int>(p.integer("n", 2, 8)), p.integer_or("trials", 100, 0, 100000),
                                 p.seed(), QSymCache::global());
        });
    add({"key-correspondence", "phi sends each -F_ij to q_rs modulo the quantum ideal", {"n", "trunc", "groebner"},
         "n=3"},
        [](const Params& p) {
          int n = static_cast<int>(p.integer("n", 2, 6));
          CheckParams echo{{"n", std::to_string(n)}};
          if (!p.flag("groebner", true)) return not_attempted("key-correspondence", echo, "Groebner work disabled");
          return verify_key_correspondence(n, p.integer_or("trunc", 2 * n + 4, 1, 200), QSymCache::global());
        });
    add({"main-theorem", "phi_h is a well-defined graded isomorphism: memberships, round trips, series",
         {"n", "h", "trunc", "groebner"}, "h=2,3,3"},
        [](const Params& p) {
          MainTheoremOptions o;
          o.attempt_groebner = p.flag("groebner", true);
          o.hilbert_bound = p.integer_or("trunc", 20, 0, 200);
          return verify_main_theorem(p.h(), o, QSymCache::global());
        });
    add({"pet3-singular", "Singular locus of Pet_3 is the single point eB, on both sides", {}, ""},
        [](const Params&) { return pet3_singular_check(QSymCache::global()); });
    add({"recursion-determinant", "Interval E polynomials: recursion against det(lambda I - M), n = 3 table",
         {"n"}, "n=5"},
        [](const Params& p) { return verify_recursion_determinant(static_cast<int>(p.integer("n", 1, 8))); });
    add({"regular-sequence", "Generators of each side form a regular sequence (series factorization)",
         {"n", "h", "trunc", "side", "groebner"}, "h=2,3,3"},
        [](const Params& p) {
          return regular_sequence(p.h(), p.integer_or("trunc", 20, 0, 200), p.side(), p.flag("groebner", true));
        });
    add({"singular-hm", "Singular locus of Hess(N,h_m) in the chart: containment, genericity, Schubert, ideal",
         {"m", "n", "trials", "seed"}, "m=2 n=4"},
        [](const Params& p) {
          int n = static_cast<int>(p.integer("n", 3, 10));
          int m = static_cast<int>(p.integer("m", 2, n - 1));
          return verify_singular_locus(m, n, p.integer_or("trials", 200, 0, 100000), p.seed(), QSymCache::global());
        });
    add({"xyz-identity", "Weighted sum of truncated F~ equals XY - Z^n", {"n"}, "n=5"},
        [](const Params& p) { return xyz_identity_check(static_cast<int>(p.integer("n", 3, 12))); });
    return t;
  }();
  return table;
}

VerificationReport error_report(const std::string& id, const CheckParams& params, const Error& e) {
  VerificationReport rep;
  rep.check_id = id;
  rep.params = params;
  if (e.code() == ErrorCode::ResourceLimit) {
    rep.add("run", Status::Inconclusive, e.what());
  } else {
    rep.add("run", Status::Fail, std::string(error_code_name(e.code())) + ": " + e.what());
    rep.witness(e.what());
  }
  rep.finalize();
  return rep;
}

}  // namespace

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& s : specs()) out.push_back(s.info);
    return out;
  }();
  return infos;
}

VerificationReport run_check(const std::string& id, const CheckParams& params) {
  for (const auto& s : specs())
    if (s.info.id == id) {
      Stopwatch sw;
      VerificationReport rep = s.run(params);
      rep.wall_time_ms = sw.ms();
      return rep;
    }
  fail(ErrorCode::UnknownCheck, "unknown check '" + id + "'");
}

std::vector<VerificationReport> run_all(const RunAllOptions& opts) {
  struct Job {
    std::string id;
    CheckParams params;
  };
  std::vector<Job> jobs;
  auto job = [&](std::string id, CheckParams p) { jobs.push_back({std::move(id), std::move(p)}); };
  auto num = [](long long x) { return std::to_string(x); };
  const int ni = std::max(opts.max_n_identity, 3), ng = opts.max_n_groebner;
  const std::string seed = std::to_string(opts.seed);

  job("recursion-determinant", {{"n", num(ni)}});
  job("grading", {{"n", num(ni)}});
  job("cramer", {{"n", num(std::min(ni, 5))}});
  for (int n = 2; n <= ni; ++n) job("conj-entry", {{"n", num(n)}});
  for (int n = 3; n <= ni; ++n) job("f-recursions", {{"n", num(n)}});
  for (int n = 3; n <= std::min(ni, 5); ++n)
    for (const auto& h : all_hessenberg_functions(n))
      if (h.is_indecomposable() && !h.is_full()) job("f-ideal-equality", {{"h", h.csv()}});
  for (int n = 2; n <= std::max(ng, 3); ++n)
    job("key-correspondence", {{"n", num(n)}, {"groebner", n <= ng ? "1" : "0"}});
  for (int n = 3; n <= std::max(ng, 4); ++n) {
    const std::string g = n <= ng ? "1" : "0";
    for (const auto& h : all_hessenberg_functions(n)) {
      job("hilbert-eq", {{"h", h.csv()}, {"trunc", "20"}, {"groebner", g}});
      if (h.is_indecomposable()) job("main-theorem", {{"h", h.csv()}, {"groebner", g}});
    }
    for (const auto& h : {HessenbergFunction::peterson(n), HessenbergFunction::full(n)})
      job("regular-sequence", {{"h", h.csv()}, {"trunc", "20"}, {"groebner", g}});
  }
  for (int n = 2; n <= ni; ++n) job("jacobian", {{"n", num(n)}, {"trials", "100"}, {"seed", seed}});
  job("pet3-singular", {});
  for (int n = 3; n <= std::max(ni, 7); ++n) {
    job("xyz-identity", {{"n", num(n)}});
    job("cyclic-quotient", {{"n", num(n)}});
  }
  for (int n = 3; n <= ni; ++n)
    for (int m = 2; m < n; ++m)
      job("singular-hm", {{"m", num(m)}, {"n", num(n)}, {"trials", num(opts.trials)}, {"seed", seed}});
  for (int n = 3; n <= 12; ++n) job("appendix", {{"n", num(n)}});

  std::vector<VerificationReport> out(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < jobs.size();) {
      try {
        out[k] = run_check(jobs[k].id, jobs[k].params);
      } catch (const Error& e) {
        out[k] = error_report(jobs[k].id, jobs[k].params, e);
      }
    }
  };
  unsigned workers = opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(jobs.size()));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::stable_sort(out.begin(), out.end(),
                   [](const VerificationReport& a, const VerificationReport& b) { return a.check_id < b.check_id; });
  return out;
}

}  // namespace hessq
