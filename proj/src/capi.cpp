// Licensed under the Apache License 2.0 (see LICENSE file).
#include "hessq/hessq.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "hessq/checks.hpp"
#include "hessq/error.hpp"
#include "hessq/flag.hpp"
#include "hessq/hessenberg.hpp"
#include "hessq/iso.hpp"
#include "hessq/poly.hpp"
#include "hessq/qsym.hpp"
#include "hessq/singular.hpp"

struct hessq_poly {
  hessq::Polynomial p;
};
struct hessq_hessfn {
  hessq::HessenbergFunction h;
};
struct hessq_report {
  hessq::VerificationReport r;
};
struct hessq_report_list {
  std::vector<hessq_report> items;
};

namespace {

thread_local std::string g_last_error;

template <class F>
hessq_status guard(F&& f) {
  try {
    f();
    g_last_error.clear();
    return HESSQ_OK;
  } catch (const hessq::Error& e) {
    g_last_error = e.what();
    return static_cast<hessq_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return HESSQ_ERR_RESOURCE_LIMIT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HESSQ_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown exception";
    return HESSQ_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) hessq::fail(hessq::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hessq::Format to_format(hessq_format f) {
  switch (f) {
    case HESSQ_FORMAT_TEXT: return hessq::Format::Text;
    case HESSQ_FORMAT_JSON: return hessq::Format::Json;
    case HESSQ_FORMAT_LATEX: return hessq::Format::Latex;
  }
  hessq::fail(hessq::ErrorCode::InvalidArgument, "unknown format");
}

template <class Make>
hessq_status make_poly(hessq_poly** out, Make&& make) {
  return guard([&] {
    need(out, "out");
    *out = new hessq_poly{make()};
  });
}

template <class Make>
hessq_status make_hessfn(hessq_hessfn** out, Make&& make) {
  return guard([&] {
    need(out, "out");
    *out = new hessq_hessfn{make()};
  });
}

nlohmann::json poly_json(const hessq::Polynomial& p) { return nlohmann::json::parse(p.json()); }

// Rows of labelled polynomials against labelled columns.
std::string render_matrix(const std::vector<std::string>& rows, const std::vector<std::string>& cols,
                          const hessq::PolyMatrix& m, hessq_format f) {
  if (f == HESSQ_FORMAT_JSON) {
    nlohmann::json j;
    j["rows"] = rows;
    j["columns"] = cols;
    j["entries"] = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      nlohmann::json row = nlohmann::json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(poly_json(m(r, c)));
      j["entries"].push_back(row);
    }
    return j.dump(2) + "\n";
  }
  std::string out;
  if (f == HESSQ_FORMAT_LATEX) {
    out = "\\begin{pmatrix}\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? " & " : "  ") + m(r, c).latex();
      out += r + 1 < m.rows() ? " \\\\\n" : "\n";
    }
    return out + "\\end{pmatrix}\n";
  }
  out = "columns:";
  for (const auto& c : cols) out += " " + c;
  out += "\n";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += rows[r] + ":";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? " | " : " ") + m(r, c).text();
    out += "\n";
  }
  return out;
}

// name = value pairs.
std::string render_assignments(const std::vector<std::pair<std::string, hessq::Polynomial>>& items,
                               hessq_format f) {
  if (f == HESSQ_FORMAT_JSON) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [k, p] : items) j.push_back({{"name", k}, {"poly", poly_json(p)}});
    return j.dump(2) + "\n";
  }
  std::string out;
  for (const auto& [k, p] : items)
    out += f == HESSQ_FORMAT_LATEX ? k + " &\\mapsto " + p.latex() + " \\\\\n" : k + " = " + p.text() + "\n";
  return out;
}

std::string render_report(const hessq::VerificationReport& r, hessq_format f, bool timing) {
  switch (f) {
    case HESSQ_FORMAT_JSON: return r.to_json(timing).dump(2) + "\n";
    case HESSQ_FORMAT_LATEX: return r.to_latex();
    case HESSQ_FORMAT_TEXT: break;
  }
  std::string s = r.to_text();
  if (timing) s += "  wall time: " + std::to_string(r.wall_time_ms) + " ms\n";
  return s;
}

std::vector<std::string> join_params() {
  std::vector<std::string> out;
  for (const auto& c : hessq::check_registry()) {
    std::string s;
    for (const auto& p : c.params) s += (s.empty() ? "" : ",") + p;
    out.push_back(s);
  }
  return out;
}

const hessq::CheckInfo* info_at(size_t k) {
  const auto& reg = hessq::check_registry();
  return k < reg.size() ? &reg[k] : nullptr;
}

}  // namespace

extern "C" {

const char* hessq_version(void) { return "1.0.0"; }

const char* hessq_status_name(hessq_status s) {
  if (s == HESSQ_OK) return "OK";
  return hessq::error_code_name(static_cast<hessq::ErrorCode>(s));
}

const char* hessq_last_error(void) { return g_last_error.c_str(); }

void hessq_string_free(char* s) { std::free(s); }

hessq_status hessq_hessfn_parse(const char* csv, hessq_hessfn** out) {
  return make_hessfn(out, [&] {
    need(csv, "csv");
    return hessq::HessenbergFunction::parse(csv);
  });
}
hessq_status hessq_hessfn_peterson(int n, hessq_hessfn** out) {
  return make_hessfn(out, [&] { return hessq::HessenbergFunction::peterson(n); });
}
hessq_status hessq_hessfn_full(int n, hessq_hessfn** out) {
  return make_hessfn(out, [&] { return hessq::HessenbergFunction::full(n); });
}
hessq_status hessq_hessfn_h_m(int m, int n, hessq_hessfn** out) {
  return make_hessfn(out, [&] { return hessq::HessenbergFunction::h_m(m, n); });
}
void hessq_hessfn_free(hessq_hessfn* h) { delete h; }
int hessq_hessfn_n(const hessq_hessfn* h) { return h ? h->h.n() : 0; }
int hessq_hessfn_dimension(const hessq_hessfn* h) { return h ? h->h.dimension() : 0; }
int hessq_hessfn_is_indecomposable(const hessq_hessfn* h) { return h && h->h.is_indecomposable() ? 1 : 0; }
hessq_status hessq_hessfn_csv(const hessq_hessfn* h, char** out) {
  return guard([&] {
    need(h, "h");
    need(out, "out");
    *out = dup(h->h.csv());
  });
}
hessq_status hessq_hessfn_staircase(const hessq_hessfn* h, char** out) {
  return guard([&] {
    need(h, "h");
    need(out, "out");
    *out = dup(h->h.staircase());
  });
}

hessq_status hessq_poly_E(int i, int n, const hessq_hessfn* h, hessq_poly** out) {
  return hessq_poly_E_interval(i, 1, n, h, out);
}
hessq_status hessq_poly_E_interval(int i, int a, int b, const hessq_hessfn* h, hessq_poly** out) {
  return make_poly(out, [&] {
    if (i < 0 || a < 1 || a > b + 1 || (h && b > h->h.n()))
      hessq::fail(hessq::ErrorCode::IndexOutOfRange, "E_i^[a,b] needs i >= 0, 1 <= a <= b+1, b <= n");
    auto& cache = hessq::QSymCache::global();
    return h ? cache.E_interval_h(i, a, b, h->h) : cache.E_interval(i, a, b);
  });
}
hessq_status hessq_poly_F(int i, int j, int n, hessq_poly** out) {
  return make_poly(out, [&] { return hessq::F(i, j, n); });
}
hessq_status hessq_poly_F_tilde(int i, int j, int m, int n, hessq_poly** out) {
  return make_poly(out, [&] { return hessq::F_tilde(i, j, m, n); });
}
hessq_status hessq_poly_phi(const hessq_poly* p, int n, const hessq_hessfn* h, hessq_poly** out) {
  return make_poly(out, [&] {
    need(p, "p");
    auto& cache = hessq::QSymCache::global();
    if (!h) return hessq::phi(p->p, n, cache);
    if (h->h.n() != n) hessq::fail(hessq::ErrorCode::SizeMismatch, "n disagrees with the length of h");
    return hessq::phi_h(p->p, h->h, cache);
  });
}
hessq_status hessq_poly_phi_inverse(const hessq_poly* p, int n, hessq_poly** out) {
  return make_poly(out, [&] {
    need(p, "p");
    return hessq::phi_inverse(p->p, n);
  });
}
hessq_status hessq_poly_from_json(const char* json, hessq_poly** out) {
  return make_poly(out, [&] {
    need(json, "json");
    return hessq::polynomial_from_json(json);
  });
}
void hessq_poly_free(hessq_poly* p) { delete p; }
size_t hessq_poly_term_count(const hessq_poly* p) { return p ? p->p.size() : 0; }
int hessq_poly_equal(const hessq_poly* a, const hessq_poly* b) { return a && b && a->p == b->p ? 1 : 0; }
hessq_status hessq_poly_degree(const hessq_poly* p, int* homogeneous, int64_t* degree) {
  return guard([&] {
    need(p, "p");
    auto g = hessq::graded_degree(p->p);
    if (homogeneous) *homogeneous = g.homogeneous ? 1 : 0;
    if (degree) *degree = g.degree;
  });
}
hessq_status hessq_poly_render(const hessq_poly* p, hessq_format f, char** out) {
  return guard([&] {
    need(p, "p");
    need(out, "out");
    *out = dup(p->p.render(to_format(f)));
  });
}

hessq_status hessq_render_jacobian(const hessq_hessfn* h, hessq_format f, char** out) {
  return guard([&] {
    need(h, "h");
    need(out, "out");
    to_format(f);
    auto j = hessq::jacobian(h->h, hessq::QSymCache::global());
    std::vector<std::string> cols;
    for (auto v : j.columns) cols.push_back(v.text());
    *out = dup(render_matrix(j.row_labels, cols, j.entries, f));
  });
}
hessq_status hessq_render_phi_images(const hessq_hessfn* h, hessq_format f, char** out) {
  return guard([&] {
    need(h, "h");
    need(out, "out");
    to_format(f);
    auto w = hessq::iso_witness(h->h, hessq::QSymCache::global());
    std::vector<std::pair<std::string, hessq::Polynomial>> items;
    for (const auto& [v, p] : w.forward_images)
      items.emplace_back(f == HESSQ_FORMAT_LATEX ? v.latex() : v.text(), p);
    *out = dup(render_assignments(items, f));
  });
}
hessq_status hessq_render_generators(const hessq_hessfn* h, int tilde, hessq_format f, char** out) {
  return guard([&] {
    need(h, "h");
    need(out, "out");
    to_format(f);
    auto gens = hessq::ideal_generators(h->h, tilde ? hessq::GeneratorFlavor::FTilde : hessq::GeneratorFlavor::F);
    std::vector<std::pair<std::string, hessq::Polynomial>> items;
    for (const auto& g : gens) {
      std::string idx = std::to_string(g.i) + "," + std::to_string(g.j);
      std::string name = f == HESSQ_FORMAT_LATEX ? (tilde ? "\\tilde F_{" : "F_{") + idx + "}"
                                                 : (tilde ? "F~(" : "F(") + idx + ")";
      items.emplace_back(name, g.poly);
    }
    *out = dup(render_assignments(items, f));
  });
}

size_t hessq_check_count(void) { return hessq::check_registry().size(); }
const char* hessq_check_id(size_t k) {
  auto* c = info_at(k);
  return c ? c->id.c_str() : nullptr;
}
const char* hessq_check_description(size_t k) {
  auto* c = info_at(k);
  return c ? c->description.c_str() : nullptr;
}
const char* hessq_check_params(size_t k) {
  static const std::vector<std::string> joined = join_params();
  return k < joined.size() ? joined[k].c_str() : nullptr;
}
const char* hessq_check_example(size_t k) {
  auto* c = info_at(k);
  return c ? c->example.c_str() : nullptr;
}

hessq_status hessq_run_check(const char* id, const char* params_json, hessq_report** out) {
  return guard([&] {
    need(id, "id");
    need(out, "out");
    hessq::CheckParams params;
    if (params_json) {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(params_json);
      } catch (const nlohmann::json::exception& e) {
        hessq::fail(hessq::ErrorCode::InvalidParams, std::string("params are not valid JSON: ") + e.what());
      }
      if (!j.is_object()) hessq::fail(hessq::ErrorCode::InvalidParams, "params must be a JSON object");
      for (const auto& [k, v] : j.items()) {
        if (v.is_string()) params[k] = v.get<std::string>();
        else if (v.is_number_integer()) params[k] = v.dump();
        else if (v.is_boolean()) params[k] = v.get<bool>() ? "1" : "0";
        else hessq::fail(hessq::ErrorCode::InvalidParams, "parameter '" + k + "' must be a string or integer");
      }
    }
    *out = new hessq_report{hessq::run_check(id, params)};
  });
}
void hessq_report_free(hessq_report* r) { delete r; }
const char* hessq_report_status(const hessq_report* r) { return r ? hessq::status_name(r->r.status) : ""; }
int hessq_report_exit_code(const hessq_report* r) { return r ? hessq::exit_code(r->r.status) : 1; }
hessq_status hessq_report_render(const hessq_report* r, hessq_format f, int include_timing, char** out) {
  return guard([&] {
    need(r, "r");
    need(out, "out");
    to_format(f);
    *out = dup(render_report(r->r, f, include_timing != 0));
  });
}

void hessq_run_all_defaults(hessq_run_all_options* opts) {
  if (!opts) return;
  hessq::RunAllOptions d;
  opts->max_n_identity = d.max_n_identity;
  opts->max_n_groebner = d.max_n_groebner;
  opts->seed = d.seed;
  opts->trials = d.trials;
  opts->workers = d.workers;
}

hessq_status hessq_run_all(const hessq_run_all_options* opts, hessq_report_list** out) {
  return guard([&] {
    need(out, "out");
    hessq::RunAllOptions o;
    if (opts) {
      if (opts->max_n_identity < 3 || opts->max_n_identity > 7 || opts->max_n_groebner < 0 ||
          opts->max_n_groebner > 6 || opts->trials < 0)
        hessq::fail(hessq::ErrorCode::InvalidParams, "run-all needs 3 <= max_n_identity <= 7, 0 <= max_n_groebner <= 6");
      o.max_n_identity = opts->max_n_identity;
      o.max_n_groebner = opts->max_n_groebner;
      o.seed = opts->seed;
      o.trials = opts->trials;
      o.workers = opts->workers;
    }
    auto reports = hessq::run_all(o);
    auto* list = new hessq_report_list;
    for (auto& r : reports) list->items.push_back({std::move(r)});
    *out = list;
  });
}
size_t hessq_report_list_size(const hessq_report_list* l) { return l ? l->items.size() : 0; }
const hessq_report* hessq_report_list_get(const hessq_report_list* l, size_t k) {
  return l && k < l->items.size() ? &l->items[k] : nullptr;
}
int hessq_report_list_exit_code(const hessq_report_list* l) {
  if (!l) return 1;
  std::vector<hessq::VerificationReport> rs;
  for (const auto& r : l->items) rs.push_back(r.r);
  return hessq::exit_code(hessq::aggregate(rs));
}
hessq_status hessq_report_list_render(const hessq_report_list* l, hessq_format f, int include_timing, char** out) {
  return guard([&] {
    need(l, "l");
    need(out, "out");
    to_format(f);
    if (f == HESSQ_FORMAT_JSON) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : l->items) j.push_back(r.r.to_json(include_timing != 0));
      *out = dup(j.dump(2) + "\n");
      return;
    }
    std::string s;
    for (const auto& r : l->items) s += render_report(r.r, f, include_timing != 0);
    *out = dup(s);
  });
}
void hessq_report_list_free(hessq_report_list* l) { delete l; }

}  // extern "C"
