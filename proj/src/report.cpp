#include "superint/report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace superint {

std::string toString(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "recorded";
  }
}

PhasePoint residualProbe() { return {1.7, 0.6, 0.4, -0.8}; }
NumericPoint residualProbeNumeric() { return {1.7, 0.6, 1.3, 0.9}; }

namespace {

double termwiseMax(const Expression& e) {
  double m = 0.0;
  for (const auto& [key, c] : e.terms())
    m = std::max(m, std::abs(evalNumeric(Expression::monomial(c, key), residualProbeNumeric())));
  return m;
}

}  // namespace

ResidualSummary ResidualSummary::of(const Expression& e) { return {e.size(), termwiseMax(e)}; }

ResidualSummary ResidualSummary::of(const PhasePolynomial& p) {
  ResidualSummary s;
  const PhasePoint at = residualProbe();
  for (const auto& [m, c] : p.terms()) {
    s.terms += c.size();
    const double mom = std::pow(std::abs(at.p1), m.k) * std::pow(std::abs(at.p2), m.l);
    s.maxAtProbe = std::max(s.maxAtProbe, termwiseMax(c) * mom);
  }
  return s;
}

ResidualSummary ResidualSummary::of(const WeylOperator& op) {
  ResidualSummary s;
  for (const auto& [d, c] : op.terms()) {
    s.terms += c.size();
    s.maxAtProbe = std::max(s.maxAtProbe, termwiseMax(c));
  }
  return s;
}

void VerificationReport::add(CheckResult check) {
  auto pos = std::upper_bound(checks_.begin(), checks_.end(), check.id,
                              [](const std::string& id, const CheckResult& c) { return id < c.id; });
  checks_.insert(pos, std::move(check));
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks_) add(c);
}

void VerificationReport::run(const std::string& id, const std::string& description,
                             const std::function<void(CheckResult&)>& fn) {
  CheckResult r;
  r.id = id;
  r.description = description;
  const auto start = std::chrono::steady_clock::now();
  fn(r);
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  add(std::move(r));
}

const CheckResult* VerificationReport::find(const std::string& id) const {
  for (const auto& c : checks_)
    if (c.id == id) return &c;
  return nullptr;
}

bool VerificationReport::allPassed() const { return failedIds().empty(); }

std::vector<std::string> VerificationReport::failedIds() const {
  std::vector<std::string> ids;
  for (const auto& c : checks_)
    if (c.status == CheckStatus::Fail) ids.push_back(c.id);
  return ids;
}

nlohmann::json VerificationReport::toJson(bool includeTiming) const {
  nlohmann::json checks = nlohmann::json::array();
  nlohmann::json timing = nlohmann::json::object();
  for (const auto& c : checks_) {
    nlohmann::json j = {{"id", c.id},
                        {"description", c.description},
                        {"status", toString(c.status)},
                        {"residual_terms", c.residual.terms},
                        {"residual_max_at_probe", c.residual.maxAtProbe}};
    if (!c.value.empty()) j["value"] = c.value;
    checks.push_back(std::move(j));
    timing[c.id] = {{"millis", c.millis}};
  }
  nlohmann::json doc = {{"schema_version", kReportSchemaVersion}, {"suite", suite_}, {"checks", checks}};
  doc["passed"] = allPassed();
  if (includeTiming) doc["timing"] = timing;
  return doc;
}

std::string VerificationReport::toText(bool includeTiming) const {
  std::ostringstream os;
  if (!suite_.empty()) os << "suite " << suite_ << "\n";
  for (const auto& c : checks_) {
    std::string status = toString(c.status);
    std::transform(status.begin(), status.end(), status.begin(), [](char ch) { return static_cast<char>(std::toupper(ch)); });
    char line[64];
    std::snprintf(line, sizeof line, "terms=%zu max=%.3g", c.residual.terms, c.residual.maxAtProbe);
    os << status << std::string(10 - status.size(), ' ') << c.id << "  " << c.description << "  [" << line << "]";
    if (!c.value.empty()) os << "  value: " << c.value;
    if (includeTiming) os << "  (" << c.millis << " ms)";
    os << "\n";
  }
  const auto failed = failedIds();
  os << (failed.empty() ? "all checks passed" : std::to_string(failed.size()) + " check(s) failed") << "\n";
  return os.str();
}

}  // namespace superint
