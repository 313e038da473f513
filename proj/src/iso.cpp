// Licensed under the Apache License 2.0 (see LICENSE file).
#include "hessq/iso.hpp"

#include <string>

#include "hessq/flag.hpp"

namespace hessq {
namespace {

void require_flag_vars(const Polynomial& p, int n) {
  for (VarId v : p.variables())
    if (v.kind() != VarKind::Flag || v.row() > n)
      fail(ErrorCode::IndexOutOfRange, "expected flag coordinates x_ij with i <= " + std::to_string(n) +
                                           ", got " + v.text());
}

void require_quantum_vars(const Polynomial& p, int n) {
  for (VarId v : p.variables()) {
    bool ok = (v.kind() == VarKind::XS && v.index() <= n) || (v.kind() == VarKind::Q && v.s() <= n);
    if (!ok)
      fail(ErrorCode::IndexOutOfRange, "expected x_s or q_rs with indices <= " + std::to_string(n) +
                                           ", got " + v.text());
  }
}

Substitution phi_h_map(const HessenbergFunction& h, QSymCache& cache) {
  const int n = h.n();
  Substitution s;
  for (int j = 1; j < n; ++j)
    for (int i = j + 1; i <= n; ++i) s.set(VarId::flag(i, j), cache.E_interval_h(i - j, 1, n - j, h));
  return s;
}

std::string flag_name(int i, int j) { return VarId::flag(i, j).text(); }

// Returns the number of non-members; records certificates and witnesses.
int check_members(const std::vector<std::pair<std::string, Polynomial>>& items, const GroebnerBasis& gb,
                  VerificationReport& rep, nlohmann::json& certs) {
  int bad = 0;
  for (const auto& [label, p] : items) {
    bool zero = reduce(p, gb).is_zero();
    certs.push_back({{"element", label}, {"reduced_to_zero", zero}});
    if (!zero) {
      ++bad;
      rep.witness(label + " is not in the ideal");
    }
  }
  return bad;
}

}  // namespace

Substitution phi_map(int n, QSymCache& cache) {
  Substitution s;
  for (int j = 1; j < n; ++j)
    for (int i = j + 1; i <= n; ++i) s.set(VarId::flag(i, j), cache.E(i - j, n - j));
  return s;
}

Polynomial phi(const Polynomial& p, int n, QSymCache& cache) {
  require_flag_vars(p, n);
  return substitute(p, phi_map(n, cache));
}

Polynomial phi_h(const Polynomial& p, const HessenbergFunction& h, QSymCache& cache) {
  require_flag_vars(p, h.n());
  return substitute(p, phi_h_map(h, cache));
}

Substitution phi_inverse_map(int n) {
  Substitution s;
  for (int sidx = 1; sidx <= n; ++sidx) {
    Polynomial img;
    if (sidx < n) img += Polynomial::var(VarId::flag(n - sidx + 1, n - sidx));
    if (sidx > 1) img -= Polynomial::var(VarId::flag(n - sidx + 2, n - sidx + 1));
    s.set(VarId::xs(sidx), img);
  }
  for (int sidx = 2; sidx <= n; ++sidx)
    for (int r = 1; r < sidx; ++r) s.set(VarId::q(r, sidx), -F(n + 1 - r, n + 1 - sidx, n));
  return s;
}

Polynomial phi_inverse(const Polynomial& p, int n) {
  require_quantum_vars(p, n);
  Substitution s;
  // Only build the F images that are needed.
  for (VarId v : p.variables()) {
    if (v.kind() == VarKind::Q) {
      s.set(v, -F(n + 1 - v.r(), n + 1 - v.s(), n));
    } else {
      const int k = v.index();
      Polynomial img;
      if (k < n) img += Polynomial::var(VarId::flag(n - k + 1, n - k));
      if (k > 1) img -= Polynomial::var(VarId::flag(n - k + 2, n - k + 1));
      s.set(v, img);
    }
  }
  return substitute(p, s);
}

std::vector<Polynomial> quantum_generators(const HessenbergFunction& h, QSymCache& cache) {
  std::vector<Polynomial> out;
  for (int i = 1; i <= h.n(); ++i) out.push_back(cache.E_interval_h(i, 1, h.n(), h));
  return out;
}

IsoWitness iso_witness(const HessenbergFunction& h, QSymCache& cache) {
  const int n = h.n();
  IsoWitness w;
  w.n = n;
  auto fwd = phi_h_map(h, cache);
  for (int j = 1; j < n; ++j)
    for (int i = j + 1; i <= n; ++i) w.forward_images.emplace_back(VarId::flag(i, j), fwd.images.at(VarId::flag(i, j)));
  for (int s = 1; s <= n; ++s)
    w.inverse_images.emplace_back(VarId::xs(s), phi_inverse(Polynomial::var(VarId::xs(s)), n));
  for (auto [r, s] : h.surviving_q_set())
    w.inverse_images.emplace_back(VarId::q(r, s), phi_inverse(Polynomial::var(VarId::q(r, s)), n));
  return w;
}

VerificationReport verify_cramer_identity(int n, QSymCache& cache) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "cramer";
  rep.params["n"] = std::to_string(n);
  if (n < 2 || n > 8) fail(ErrorCode::InvalidParams, "cramer identity needs 2 <= n <= 8");
  int checked = 0, bad = 0;
  for (int s = 2; s <= n; ++s) {
    for (int r = 1; r < s; ++r) {
      // Unknowns u_t = q_{s-t,s} (u_0 = x_s), t = 0..k-1; the system is
      // lower unitriangular with right-hand side E_{l+1}^{(s)} - E_{l+1}^{(s-1)}.
      const int k = s - r + 1;
      PolyMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
      for (int l = 0; l < k; ++l) {
        for (int t = 0; t < k - 1 && t <= l; ++t)
          m(static_cast<std::size_t>(l), static_cast<std::size_t>(t)) = cache.E(l - t, s - 1 - t);
        m(static_cast<std::size_t>(l), static_cast<std::size_t>(k - 1)) = cache.E(l + 1, s) - cache.E(l + 1, s - 1);
      }
      Polynomial got = determinant(m);
      ++checked;
      if (got != Polynomial::var(VarId::q(r, s))) {
        ++bad;
        rep.witness("(r,s)=(" + std::to_string(r) + "," + std::to_string(s) + "): determinant gives " + got.text());
      }
    }
  }
  rep.add("determinant formula for q_rs", bad ? Status::Fail : Status::Pass,
          std::to_string(checked - bad) + "/" + std::to_string(checked) + " pairs");
  rep.finalize();
  rep.wall_time_ms = sw.ms();
  return rep;
}

VerificationReport verify_key_correspondence(int n, int D, QSymCache& cache, std::size_t term_limit) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "key-correspondence";
  rep.params["n"] = std::to_string(n);
  rep.params["D"] = std::to_string(D);
  if (n < 2) fail(ErrorCode::InvalidParams, "n must be at least 2");
  if (D < 2 * n + 2) fail(ErrorCode::InvalidParams, "degree bound must be at least 2n+2");

  std::vector<std::pair<std::string, Polynomial>> diffs;
  auto inv = phi_inverse_map(n);
  for (int s = 1; s <= n; ++s)
    diffs.emplace_back("phi(inv(" + VarId::xs(s).text() + ")) - " + VarId::xs(s).text(),
                       phi(inv.images.at(VarId::xs(s)), n, cache) - Polynomial::var(VarId::xs(s)));
  for (int s = 2; s <= n; ++s)
    for (int r = 1; r < s; ++r)
      diffs.emplace_back("phi(-" + std::string("F_{") + std::to_string(n + 1 - r) + "," + std::to_string(n + 1 - s) +
                             "}) - " + VarId::q(r, s).text(),
                         phi(inv.images.at(VarId::q(r, s)), n, cache) - Polynomial::var(VarId::q(r, s)));

  int inhom = 0;
  for (const auto& [label, d] : diffs)
    if (!graded_degree(d).homogeneous) {
      ++inhom;
      rep.witness(label + " is not homogeneous");
    }
  rep.add("differences homogeneous", inhom ? Status::Fail : Status::Pass,
          std::to_string(diffs.size() - static_cast<std::size_t>(inhom)) + "/" + std::to_string(diffs.size()));

  nlohmann::json certs = nlohmann::json::array();
  try {
    GroebnerOptions o;
    o.degree_bound = D;
    o.term_limit = term_limit;
    std::vector<Polynomial> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(cache.E(i, n));
    auto gb = buchberger(gens, o);
    int bad = check_members(diffs, gb, rep, certs);
    rep.add("membership in (E_1,...,E_n)", bad ? Status::Fail : Status::Pass,
            std::to_string(diffs.size() - static_cast<std::size_t>(bad)) + "/" + std::to_string(diffs.size()));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ResourceLimit) throw;
    rep.add("membership in (E_1,...,E_n)", Status::Inconclusive, e.what());
  }
  rep.data["membership_certificates"] = certs;
  rep.finalize();
  rep.wall_time_ms = sw.ms();
  return rep;
}

VerificationReport verify_hilbert_equality(const HessenbergFunction& h, int D, Side side, QSymCache& cache,
                                           bool attempt_groebner, std::size_t term_limit) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "hilbert-eq";
  const int n = h.n();
  rep.params["n"] = std::to_string(n);
  rep.params["h"] = h.csv();
  rep.params["D"] = std::to_string(D);
  rep.params["side"] = side == Side::Coordinate ? "coordinate" : side == Side::Quantum ? "quantum" : "both";
  if (D < 0) fail(ErrorCode::InvalidParams, "degree bound must be nonnegative");

  auto pc = product_series_coordinate(h, D), pq = product_series_quantum(h, D), closed = product_series_closed(h, D);
  bool routes = same_expansion(pc, pq) && same_expansion(pc, closed);
  rep.add("product formula routes agree", routes ? Status::Pass : Status::Fail, closed.symbolic());
  if (!routes) rep.witness("coordinate " + pc.coefficients_text() + " vs quantum " + pq.coefficients_text());
  rep.data["closed_form"] = closed.symbolic();
  rep.data["expansion"] = closed.coefficients_text();

  auto one_side = [&](const std::string& name, const std::vector<Polynomial>& gens, const std::vector<VarId>& ring,
                      const HilbertSeries& expected) {
    const std::string label = name + " staircase equals product formula";
    if (!attempt_groebner) {
      rep.add(label, Status::NotAttempted, "above the Groebner bound");
      return;
    }
    try {
      auto s = staircase_series(gens, ring, D, term_limit);
      bool ok = same_expansion(s, expected);
      rep.add(label, ok ? Status::Pass : Status::Fail, s.coefficients_text());
      if (!ok) rep.witness(name + " staircase " + s.coefficients_text() + " vs " + expected.coefficients_text());
      rep.data[name + "_staircase"] = s.coefficients_text();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ResourceLimit) throw;
      rep.add(label, Status::Inconclusive, e.what());
    }
  };
  if (side != Side::Quantum)
    one_side("coordinate", generator_polys(ideal_generators(h, GeneratorFlavor::F)), coordinate_ring_vars(n), pc);
  if (side != Side::Coordinate) one_side("quantum", quantum_generators(h, cache), quantum_ring_vars(h), pq);
  rep.finalize();
  rep.wall_time_ms = sw.ms();
  return rep;
}

VerificationReport verify_main_theorem(const HessenbergFunction& h, const MainTheoremOptions& opts,
                                       QSymCache& cache) {
  Stopwatch sw;
  VerificationReport rep;
  rep.check_id = "main-theorem";
  const int n = h.n();
  const int D = opts.membership_bound > 0 ? opts.membership_bound : 2 * n + 4;
  rep.params["n"] = std::to_string(n);
  rep.params["h"] = h.csv();
  rep.params["D"] = std::to_string(D);
  if (D < 2 * n) fail(ErrorCode::InvalidParams, "membership bound must be at least 2n");

  IsoWitness w = iso_witness(h, cache);

  int bad_deg = 0;
  for (const auto& [v, img] : w.forward_images) {
    auto g = graded_degree(img);
    if (!img.is_zero() && (!g.homogeneous || g.degree != 2 * (v.row() - v.col()))) {
      ++bad_deg;
      rep.witness("image of " + v.text() + " is not homogeneous of degree " + std::to_string(2 * (v.row() - v.col())));
    }
  }
  rep.add("forward images preserve degree", bad_deg ? Status::Fail : Status::Pass);

  // A zeroed q_rs must be sent to a generator, a surviving one must not.
  int bad_inv = 0;
  for (int s = 2; s <= n; ++s)
    for (int r = 1; r < s; ++r) {
      int i = n + 1 - r, j = n + 1 - s;
      if (h.q_survives(r, s) == (i > h(j))) {
        ++bad_inv;
        rep.witness("q" + std::to_string(r) + "," + std::to_string(s) + " does not match generator F_{" +
                    std::to_string(i) + "," + std::to_string(j) + "}");
      }
    }
  rep.add("inverse sends zeroed q to generators", bad_inv ? Status::Fail : Status::Pass);

  const auto gens = ideal_generators(h, GeneratorFlavor::F);
  nlohmann::json certs = nlohmann::json::array();
  const std::string a_label = "(a) well-definedness", b_label = "(b) inverse round trips";
  if (!opts.attempt_groebner) {
    rep.add(a_label, Status::NotAttempted, "membership skipped above the Groebner bound");
    rep.add(b_label, Status::NotAttempted, "membership skipped above the Groebner bound");
  } else {
    GroebnerOptions o;
    o.degree_bound = D;
    o.term_limit = opts.term_limit;
    bool a_done = false;
    try {
      auto qb = buchberger(quantum_generators(h, cache), o);
      std::vector<std::pair<std::string, Polynomial>> items;
      for (const auto& g : gens)
        items.emplace_back("phi_h(F_{" + std::to_string(g.i) + "," + std::to_string(g.j) + "})", phi_h(g.poly, h, cache));
      int bad = check_members(items, qb, rep, certs);
      rep.add(a_label, bad ? Status::Fail : Status::Pass,
              std::to_string(items.size() - static_cast<std::size_t>(bad)) + "/" + std::to_string(items.size()) +
                  " generator images reduce to zero");
      a_done = true;

      std::vector<std::pair<std::string, Polynomial>> q_items, x_items;
      for (const auto& [v, img] : w.inverse_images)
        q_items.emplace_back("phi_h(inv(" + v.text() + ")) - " + v.text(), phi_h(img, h, cache) - Polynomial::var(v));
      int bad_q = check_members(q_items, qb, rep, certs);

      auto cb = buchberger(generator_polys(gens), o);
      for (const auto& [v, img] : w.forward_images)
        x_items.emplace_back("inv(phi_h(" + flag_name(v.row(), v.col()) + ")) - " + v.text(),
                             phi_inverse(img, n) - Polynomial::var(v));
      int bad_x = check_members(x_items, cb, rep, certs);
      std::size_t total = q_items.size() + x_items.size();
      rep.add(b_label, bad_q + bad_x ? Status::Fail : Status::Pass,
              std::to_string(total - static_cast<std::size_t>(bad_q + bad_x)) + "/" + std::to_string(total) +
                  " round trips reduce to zero");
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ResourceLimit) throw;
      if (!a_done) rep.add(a_label, Status::Inconclusive, e.what());
      rep.add(b_label, Status::Inconclusive, e.what());
    }
  }
  rep.data["membership_certificates"] = certs;

  auto hil = verify_hilbert_equality(h, opts.hilbert_bound, Side::Both, cache, opts.attempt_groebner, opts.term_limit);
  for (const auto& sc : hil.subchecks) rep.add("(c) " + sc.name, sc.status, sc.detail);
  for (const auto& wt : hil.witnesses) rep.witness(wt);
  rep.data["hilbert"] = hil.data;

  nlohmann::json fwd = nlohmann::json::object(), inv = nlohmann::json::object();
  for (const auto& [v, img] : w.forward_images) fwd[v.text()] = img.text();
  for (const auto& [v, img] : w.inverse_images) inv[v.text()] = img.text();
  rep.data["forward_images"] = fwd;
  rep.data["inverse_images"] = inv;
  rep.finalize();
  rep.wall_time_ms = sw.ms();
  return rep;
}

}  // namespace hessq
