// Licensed under the Apache License 2.0 (see LICENSE file).
//
// Command-line front end over the C API.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>

#include <json.hpp>

#include "hessq/hessq.h"

namespace {

// Exit codes beyond the verification outcomes 0/1/2.
constexpr int kExitUsage = 64;
constexpr int kExitSoftware = 70;

struct Options {
  std::optional<int> n, m, i, j, tilde;
  std::optional<std::string> h, interval, side;
  std::optional<int> trunc, trials;
  std::optional<std::uint64_t> seed;
  bool no_groebner = false;
  std::string format = "text";
  std::string out;
  bool timing = false;
  // run-all
  int max_n_identity = 6, max_n_groebner = 4;
  unsigned workers = 0;
};

class ApiError : public std::runtime_error {
 public:
  explicit ApiError(hessq_status s) : std::runtime_error(hessq_last_error()), status(s) {}
  hessq_status status;
};

void ok(hessq_status s) {
  if (s != HESSQ_OK) throw ApiError(s);
}

struct StrDeleter {
  void operator()(char* s) const { hessq_string_free(s); }
};
using Str = std::unique_ptr<char, StrDeleter>;

std::string take(char* s) { return Str(s).get(); }

struct HessfnDeleter {
  void operator()(hessq_hessfn* h) const { hessq_hessfn_free(h); }
};
using Hessfn = std::unique_ptr<hessq_hessfn, HessfnDeleter>;
struct PolyDeleter {
  void operator()(hessq_poly* p) const { hessq_poly_free(p); }
};
using Poly = std::unique_ptr<hessq_poly, PolyDeleter>;
struct ReportDeleter {
  void operator()(hessq_report* r) const { hessq_report_free(r); }
};
using Report = std::unique_ptr<hessq_report, ReportDeleter>;
struct ListDeleter {
  void operator()(hessq_report_list* l) const { hessq_report_list_free(l); }
};
using ReportList = std::unique_ptr<hessq_report_list, ListDeleter>;

hessq_format format_of(const Options& o) {
  if (o.format == "json") return HESSQ_FORMAT_JSON;
  if (o.format == "latex") return HESSQ_FORMAT_LATEX;
  return HESSQ_FORMAT_TEXT;
}

void emit_output(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream f(o.out);
  if (!f) throw std::runtime_error("cannot open " + o.out);
  f << text;
}

Hessfn hessfn_from(const Options& o) {
  hessq_hessfn* h = nullptr;
  ok(hessq_hessfn_parse(o.h->c_str(), &h));
  Hessfn out(h);
  if (o.n && *o.n != hessq_hessfn_n(h)) throw std::invalid_argument("--n disagrees with the length of --h");
  return out;
}

std::string poly_text(hessq_poly* p, hessq_format f) {
  char* s = nullptr;
  ok(hessq_poly_render(p, f, &s));
  return take(s);
}

int require(const std::optional<int>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string("missing ") + flag);
  return *v;
}

int cmd_list(const Options& o) {
  if (format_of(o) == HESSQ_FORMAT_JSON) {
    nlohmann::json j = nlohmann::json::array();
    for (size_t k = 0; k < hessq_check_count(); ++k)
      j.push_back({{"id", hessq_check_id(k)},
                   {"description", hessq_check_description(k)},
                   {"params", hessq_check_params(k)},
                   {"example", hessq_check_example(k)}});
    emit_output(o, j.dump(2));
    return 0;
  }
  std::string s;
  for (size_t k = 0; k < hessq_check_count(); ++k) {
    std::string id = hessq_check_id(k);
    s += id + std::string(id.size() < 22 ? 22 - id.size() : 1, ' ') + hessq_check_description(k) + "\n";
    std::string params = hessq_check_params(k);
    if (!params.empty()) s += std::string(22, ' ') + "params: " + params + "\n";
  }
  emit_output(o, s);
  return 0;
}

int cmd_emit(const std::string& what, const Options& o) {
  const hessq_format f = format_of(o);
  Hessfn h;
  if (o.h) h = hessfn_from(o);
  if (what == "E") {
    int i = require(o.i, "--i");
    hessq_poly* p = nullptr;
    if (o.interval) {
      int a = 0, b = 0;
      char comma = 0;
      std::istringstream ss(*o.interval);
      if (!(ss >> a >> comma >> b) || comma != ',') throw std::invalid_argument("--interval expects a,b");
      ok(hessq_poly_E_interval(i, a, b, h.get(), &p));
    } else {
      int n = o.n ? *o.n : h ? hessq_hessfn_n(h.get()) : require(o.n, "--n");
      ok(hessq_poly_E(i, n, h.get(), &p));
    }
    Poly owned(p);
    emit_output(o, poly_text(p, f));
    return 0;
  }
  if (what == "F") {
    int n = require(o.n, "--n"), i = require(o.i, "--i"), j = require(o.j, "--j");
    hessq_poly* p = nullptr;
    if (o.tilde)
      ok(hessq_poly_F_tilde(i, j, *o.tilde, n, &p));
    else
      ok(hessq_poly_F(i, j, n, &p));
    Poly owned(p);
    emit_output(o, poly_text(p, f));
    return 0;
  }
  if (!h) {
    hessq_hessfn* full = nullptr;
    ok(hessq_hessfn_full(require(o.n, "--n or --h"), &full));
    h.reset(full);
  }
  char* s = nullptr;
  if (what == "jacobian")
    ok(hessq_render_jacobian(h.get(), f, &s));
  else if (what == "phi")
    ok(hessq_render_phi_images(h.get(), f, &s));
  else if (what == "generators")
    ok(hessq_render_generators(h.get(), o.tilde ? 1 : 0, f, &s));
  else
    throw std::invalid_argument("unknown object '" + what + "' (E, F, jacobian, phi, generators)");
  emit_output(o, take(s));
  return 0;
}

int run_and_print(const std::string& id, const nlohmann::json& params, const Options& o) {
  hessq_report* r = nullptr;
  ok(hessq_run_check(id.c_str(), params.dump().c_str(), &r));
  Report owned(r);
  char* s = nullptr;
  ok(hessq_report_render(r, format_of(o), o.timing ? 1 : 0, &s));
  emit_output(o, take(s));
  return hessq_report_exit_code(r);
}

nlohmann::json params_from(const Options& o) {
  nlohmann::json p = nlohmann::json::object();
  if (o.n) p["n"] = *o.n;
  if (o.h) p["h"] = *o.h;
  if (o.m) p["m"] = *o.m;
  if (o.trunc) p["trunc"] = *o.trunc;
  if (o.trials) p["trials"] = *o.trials;
  if (o.seed) p["seed"] = std::to_string(*o.seed);
  if (o.side) p["side"] = *o.side;
  if (o.no_groebner) p["groebner"] = "0";
  return p;
}

std::string resolve_alias(const std::string& name) {
  static const std::map<std::string, std::string> aliases{
      {"main", "main-theorem"}, {"hilbert", "hilbert-eq"}, {"singular", "singular-hm"}, {"xyz", "xyz-identity"},
      {"cyclic", "cyclic-quotient"}, {"key", "key-correspondence"}, {"pet3", "pet3-singular"}};
  auto it = aliases.find(name);
  return it == aliases.end() ? name : it->second;
}

int cmd_run_all(const Options& o) {
  hessq_run_all_options opts;
  hessq_run_all_defaults(&opts);
  opts.max_n_identity = o.max_n_identity;
  opts.max_n_groebner = o.max_n_groebner;
  if (o.seed) opts.seed = *o.seed;
  if (o.trials) opts.trials = *o.trials;
  opts.workers = o.workers;
  hessq_report_list* l = nullptr;
  ok(hessq_run_all(&opts, &l));
  ReportList owned(l);
  char* s = nullptr;
  ok(hessq_report_list_render(l, format_of(o), o.timing ? 1 : 0, &s));
  std::string text = take(s);
  int code = hessq_report_list_exit_code(l);
  if (format_of(o) == HESSQ_FORMAT_TEXT) {
    std::map<std::string, int> counts;
    for (size_t k = 0; k < hessq_report_list_size(l); ++k) ++counts[hessq_report_status(hessq_report_list_get(l, k))];
    text += "summary:";
    for (const auto& [k, v] : counts) text += " " + k + "=" + std::to_string(v);
    text += "\n";
  }
  emit_output(o, text);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantized presentations of regular nilpotent Hessenberg varieties: verification and emission"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    c->add_option("--out", o.out, "Write output to FILE instead of stdout");
  };
  auto timing = [&](CLI::App* c) { c->add_flag("--timing", o.timing, "Include wall times in reports"); };

  auto* list = app.add_subcommand("list", "List the registered checks");
  common(list);

  std::string what;
  auto* emit = app.add_subcommand("emit", "Print E, F, F~, the Jacobian, phi images or generators");
  emit->add_option("object", what, "E | F | jacobian | phi | generators")->required();
  emit->add_option("--n", o.n, "Matrix size");
  emit->add_option("--i", o.i, "Index i");
  emit->add_option("--j", o.j, "Index j");
  emit->add_option("--interval", o.interval, "Interval a,b for E_i^[a,b]");
  emit->add_option("--h", o.h, "Hessenberg function, comma separated");
  emit->add_option("--tilde", o.tilde, "Truncation m for F~; for generators any value selects F~");
  common(emit);

  std::string check;
  auto* verify = app.add_subcommand("verify", "Run one check by id (see list); 'main' names main-theorem");
  verify->add_option("check", check, "Check id")->required();
  verify->add_option("--n", o.n, "Matrix size");
  verify->add_option("--h", o.h, "Hessenberg function, comma separated");
  verify->add_option("--m", o.m, "m for h_m = (m, n, ..., n)");
  verify->add_option("--trunc", o.trunc, "Series truncation degree");
  verify->add_option("--trials", o.trials, "Random trials");
  verify->add_option("--seed", o.seed, "Random seed");
  verify->add_option("--side", o.side, "coordinate | quantum | both");
  verify->add_flag("--no-groebner", o.no_groebner, "Skip membership and staircase computations");
  common(verify);
  timing(verify);

  auto* hilbert = app.add_subcommand("hilbert", "Hilbert series of both quotients against the product formulas");
  hilbert->add_option("--n", o.n, "Matrix size");
  hilbert->add_option("--h", o.h, "Hessenberg function, comma separated")->required();
  hilbert->add_option("--trunc", o.trunc, "Series truncation degree");
  hilbert->add_option("--side", o.side, "coordinate | quantum | both")
      ->check(CLI::IsMember({"coordinate", "quantum", "both"}));
  common(hilbert);
  timing(hilbert);

  auto* singular = app.add_subcommand("singular", "Singular locus of Hess(N,h_m) in the chart");
  singular->add_option("--n", o.n, "Matrix size")->required();
  singular->add_option("--m", o.m, "m for h_m = (m, n, ..., n)")->required();
  singular->add_option("--trials", o.trials, "Random trials");
  singular->add_option("--seed", o.seed, "Random seed");
  common(singular);
  timing(singular);

  auto* appendix = app.add_subcommand("appendix", "Singular cells and components of the Peterson variety");
  appendix->add_option("--n", o.n, "Matrix size")->required();
  common(appendix);
  timing(appendix);

  auto* run_all = app.add_subcommand("run-all", "Run the full verification suite");
  run_all->add_option("--max-n-identity", o.max_n_identity, "Largest n for identity checks");
  run_all->add_option("--max-n-groebner", o.max_n_groebner, "Largest n for membership and staircase work");
  run_all->add_option("--seed", o.seed, "Random seed");
  run_all->add_option("--trials", o.trials, "Random trials for the singular-locus checks");
  run_all->add_option("--workers", o.workers, "Worker threads (0: all cores)");
  common(run_all);
  timing(run_all);

  CLI11_PARSE(app, argc, argv);

  try {
    if (list->parsed()) return cmd_list(o);
    if (emit->parsed()) return cmd_emit(what, o);
    if (verify->parsed()) return run_and_print(resolve_alias(check), params_from(o), o);
    if (hilbert->parsed()) return run_and_print("hilbert-eq", params_from(o), o);
    if (singular->parsed()) return run_and_print("singular-hm", params_from(o), o);
    if (appendix->parsed()) return run_and_print("appendix", params_from(o), o);
    if (run_all->parsed()) return cmd_run_all(o);
  } catch (const ApiError& e) {
    std::cerr << "hessq: " << hessq_status_name(e.status) << ": " << e.what() << "\n";
    return e.status == HESSQ_ERR_INTERNAL ? kExitSoftware : kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "hessq: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "hessq: " << e.what() << "\n";
    return kExitSoftware;
  }
  return kExitUsage;
}
