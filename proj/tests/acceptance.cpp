// Acceptance suite: one line per criterion, run serially at full size.
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hessq/checks.hpp"
#include "hessq/error.hpp"
#include "hessq/hessenberg.hpp"

using namespace hessq;

namespace {

struct Outcome {
  int runs = 0;
  std::vector<std::string> problems;
};

void run(Outcome& o, const std::string& id, const CheckParams& params) {
  ++o.runs;
  std::string label = id;
  for (const auto& [k, v] : params) label += " " + k + "=" + v;
  try {
    VerificationReport r = run_check(id, params);
    if (r.status != Status::Pass) o.problems.push_back(label + ": " + status_name(r.status) + "\n" + r.to_text());
  } catch (const Error& e) {
    o.problems.push_back(label + ": " + error_code_name(e.code()) + ": " + e.what());
  }
}

std::string num(int n) { return std::to_string(n); }

struct Criterion {
  int number;
  const char* title;
  double budget_ms;
  std::function<void(Outcome&)> body;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "recursion equals determinant, n <= 7, with the n = 3 table", 60e3,
       [](Outcome& o) { run(o, "recursion-determinant", {{"n", "7"}}); }},
      {2, "grading of E and F, n <= 6", 60e3, [](Outcome& o) { run(o, "grading", {{"n", "6"}}); }},
      {3, "Cramer identity, n <= 5", 120e3, [](Outcome& o) { run(o, "cramer", {{"n", "5"}}); }},
      {4, "F equals the conjugated entry, n <= 6", 60e3,
       [](Outcome& o) {
         for (int n = 2; n <= 6; ++n) run(o, "conj-entry", {{"n", num(n)}});
       }},
      {5, "F/F~ recursions n <= 7, ideal equality n <= 5", 300e3,
       [](Outcome& o) {
         for (int n = 2; n <= 7; ++n) run(o, "f-recursions", {{"n", num(n)}});
         for (int n = 3; n <= 5; ++n)
           for (const auto& h : all_hessenberg_functions(n))
             if (h.is_indecomposable() && !h.is_full()) run(o, "f-ideal-equality", {{"h", h.csv()}});
       }},
      {6, "Hilbert series equal the product formulas, all h at n = 3, 4, degree 20", 600e3,
       [](Outcome& o) {
         for (int n = 3; n <= 4; ++n)
           for (const auto& h : all_hessenberg_functions(n))
             run(o, "hilbert-eq", {{"h", h.csv()}, {"trunc", "20"}, {"side", "both"}});
       }},
      {7, "main theorem certificate, indecomposable h at n = 3, 4", 900e3,
       [](Outcome& o) {
         for (int n = 3; n <= 4; ++n)
           for (const auto& h : all_hessenberg_functions(n))
             if (h.is_indecomposable()) run(o, "main-theorem", {{"h", h.csv()}});
       }},
      {8, "Jacobian closed forms n <= 6, tabulated n = 3, 4, full rank at 100 points", 300e3,
       [](Outcome& o) {
         for (int n = 2; n <= 6; ++n) run(o, "jacobian", {{"n", num(n)}, {"trials", "100"}, {"seed", "1"}});
       }},
      {9, "Pet_3 singular locus is eB on both sides", 60e3, [](Outcome& o) { run(o, "pet3-singular", {}); }},
      {10, "XY - Z^n identity and cyclic quotient, 3 <= n <= 7", 60e3,
       [](Outcome& o) {
         for (int n = 3; n <= 7; ++n) {
           run(o, "xyz-identity", {{"n", num(n)}});
           run(o, "cyclic-quotient", {{"n", num(n)}});
         }
       }},
      {11, "singular locus of h_m: containment n <= 6, 200 trials, ideal level n <= 4", 600e3,
       [](Outcome& o) {
         for (int n = 3; n <= 6; ++n)
           for (int m = 2; m < n; ++m)
             run(o, "singular-hm", {{"m", num(m)}, {"n", num(n)}, {"trials", "200"}, {"seed", "1"}});
       }},
      {12, "appendix cells and components, 3 <= n <= 12, n = 9 example", 10e3,
       [](Outcome& o) {
         for (int n = 3; n <= 12; ++n) run(o, "appendix", {{"n", num(n)}});
       }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    Stopwatch sw;
    c.body(o);
    double ms = sw.ms();
    bool over = ms > c.budget_ms;
    bool pass = o.problems.empty() && !over;
    failed += !pass;
    std::printf("criterion %2d: %s  %s (%d runs, %.0f ms)\n", c.number, pass ? "PASS" : "FAIL", c.title, o.runs, ms);
    if (over) std::printf("    over the %.0f ms budget\n", c.budget_ms);
    for (const auto& p : o.problems) std::printf("    %s\n", p.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
