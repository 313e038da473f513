// Licensed under the Apache License 2.0 (see LICENSE file).
#include "hessq/report.hpp"

#include <sstream>

namespace hessq {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Inconclusive: return "inconclusive";
    case Status::NotAttempted: return "not-attempted";
  }
  return "unknown";
}

void VerificationReport::add(std::string name, Status s, std::string detail) {
  subchecks.push_back({std::move(name), s, std::move(detail)});
}

void VerificationReport::finalize() {
  bool any_fail = false, any_inconclusive = false, any_pass = false;
  for (const auto& c : subchecks) {
    any_fail |= c.status == Status::Fail;
    any_inconclusive |= c.status == Status::Inconclusive;
    any_pass |= c.status == Status::Pass;
  }
  if (any_fail) status = Status::Fail;
  else if (any_inconclusive) status = Status::Inconclusive;
  else if (any_pass || subchecks.empty()) status = Status::Pass;
  else status = Status::NotAttempted;
  if (status == Status::Fail && witnesses.empty())
    for (const auto& c : subchecks)
      if (c.status == Status::Fail) witnesses.push_back(c.name + ": " + c.detail);
  if (status == Status::Inconclusive && reason.empty())
    for (const auto& c : subchecks)
      if (c.status == Status::Inconclusive) {
        reason = c.name + ": " + c.detail;
        break;
      }
}

nlohmann::json VerificationReport::to_json(bool include_timing) const {
  nlohmann::json j;
  j["check_id"] = check_id;
  j["params"] = params;
  j["status"] = status_name(status);
  j["witnesses"] = witnesses;
  if (!reason.empty()) j["reason"] = reason;
  j["subchecks"] = nlohmann::json::array();
  for (const auto& c : subchecks)
    j["subchecks"].push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  if (!data.empty()) j["data"] = data;
  if (include_timing) j["wall_time_ms"] = wall_time_ms;
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << check_id;
  for (const auto& [k, v] : params) os << " " << k << "=" << v;
  os << ": " << status_name(status) << "\n";
  for (const auto& c : subchecks) {
    os << "  [" << status_name(c.status) << "] " << c.name;
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << "\n";
  }
  if (!reason.empty()) os << "  reason: " << reason << "\n";
  for (const auto& w : witnesses) os << "  witness: " << w << "\n";
  return os.str();
}

namespace {
std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '_': case '&': case '%': case '#': case '$': case '{': case '}':
        out += '\\';
        out += c;
        break;
      case '^': out += "\\^{}"; break;
      case '~': out += "\\~{}"; break;
      case '\\': out += "\\textbackslash{}"; break;
      default: out += c;
    }
  }
  return out;
}
}  // namespace

std::string VerificationReport::to_latex() const {
  std::ostringstream os;
  os << "\\paragraph{" << latex_escape(check_id);
  for (const auto& [k, v] : params) os << " " << latex_escape(k) << "=" << latex_escape(v);
  os << ": " << status_name(status) << "}\n";
  os << "\\begin{tabular}{ll}\n";
  for (const auto& c : subchecks)
    os << latex_escape(status_name(c.status)) << " & " << latex_escape(c.name) << " \\\\\n";
  os << "\\end{tabular}\n";
  if (!reason.empty()) os << "\n" << latex_escape(reason) << "\n";
  for (const auto& w : witnesses) os << "\n\\noindent\\texttt{" << latex_escape(w) << "}\n";
  return os.str();
}

Status aggregate(const std::vector<VerificationReport>& reports) {
  bool any_inconclusive = false;
  for (const auto& r : reports) {
    if (r.status == Status::Fail) return Status::Fail;
    any_inconclusive |= r.status == Status::Inconclusive;
  }
  return any_inconclusive ? Status::Inconclusive : Status::Pass;
}

int exit_code(Status s) {
  switch (s) {
    case Status::Pass:
    case Status::NotAttempted: return 0;
    case Status::Fail: return 1;
    case Status::Inconclusive: return 2;
  }
  return 1;
}

}  // namespace hessq
