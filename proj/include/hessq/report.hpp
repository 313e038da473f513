// Licensed under the Apache License 2.0 (see LICENSE file).
#pragma once

#include <chrono>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace hessq {

enum class Status { Pass, Fail, Inconclusive, NotAttempted };

const char* status_name(Status s);

struct SubCheck {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};

struct VerificationReport {
  std::string check_id;
  std::map<std::string, std::string> params;
  Status status = Status::Pass;
  std::vector<std::string> witnesses;
  std::string reason;
  std::vector<SubCheck> subchecks;
  nlohmann::json data = nlohmann::json::object();
  double wall_time_ms = 0;

  // Records a sub-check; a failing one should come with witnesses.
  void add(std::string name, Status s, std::string detail = {});
  void witness(std::string w) { witnesses.push_back(std::move(w)); }
  // Derives the overall status from the sub-checks.
  void finalize();
  bool passed() const { return status == Status::Pass; }

  nlohmann::json to_json(bool include_timing) const;
  std::string to_text() const;
  std::string to_latex() const;  // tabular of sub-checks
};

// Worst status over a set of reports: fail, then inconclusive, then pass.
Status aggregate(const std::vector<VerificationReport>& reports);
int exit_code(Status s);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace hessq
