// Licensed under the Apache License 2.0 (see LICENSE file).
//
// Flat registry of verification checks, keyed by id.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hessq/report.hpp"

namespace hessq {

// String-valued parameters: n, h (csv), m, trunc, trials, seed, side
// (coordinate | quantum | both), groebner (0 | 1).
using CheckParams = std::map<std::string, std::string>;

struct CheckInfo {
  std::string id;
  std::string description;
  std::vector<std::string> params;  // accepted keys
  std::string example;              // a parameter set that passes
};

const std::vector<CheckInfo>& check_registry();

// Throws UnknownCheck for an unregistered id and InvalidParams for missing,
// unknown or malformed parameters.
VerificationReport run_check(const std::string& id, const CheckParams& params);

struct RunAllOptions {
  int max_n_identity = 6;
  int max_n_groebner = 4;
  std::uint64_t seed = 1;
  int trials = 200;
  unsigned workers = 0;  // 0: hardware concurrency
};

// Full suite. Membership and staircase work above max_n_groebner is marked
// not-attempted. Reports are sorted by check id, then in scheduling order.
std::vector<VerificationReport> run_all(const RunAllOptions& opts = {});

// Checks without a home module.
VerificationReport verify_recursion_determinant(int n);
VerificationReport verify_grading(int n);
VerificationReport verify_conj_entry(int n);

}  // namespace hessq
