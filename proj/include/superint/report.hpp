#ifndef SUPERINT_REPORT_HPP
#define SUPERINT_REPORT_HPP

#include <chrono>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "superint/expression.hpp"
#include "superint/phase_polynomial.hpp"
#include "superint/weyl_operator.hpp"

namespace superint {

enum class CheckStatus { Pass, Fail, Recorded };

std::string toString(CheckStatus status);

/// Size of a residual: stored term count and the largest term magnitude at
/// the fixed probe point.
struct ResidualSummary {
  std::size_t terms = 0;
  double maxAtProbe = 0.0;

  static ResidualSummary of(const Expression& e);
  static ResidualSummary of(const PhasePolynomial& p);
  static ResidualSummary of(const WeylOperator& op);
};

/// x = 17/10, y = 3/5, p = (2/5, -4/5), alpha = 13/10, hbar = 9/10.
PhasePoint residualProbe();
NumericPoint residualProbeNumeric();

struct CheckResult {
  std::string id;
  std::string description;
  CheckStatus status = CheckStatus::Recorded;
  ResidualSummary residual;
  std::string value;  // exact recorded value, if any
  double millis = 0.0;
};

class VerificationReport {
 public:
  explicit VerificationReport(std::string suite = {}) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  /// Sorted by id.
  const std::vector<CheckResult>& checks() const { return checks_; }

  void add(CheckResult check);
  void merge(const VerificationReport& other);

  /// Runs fn, timing it; fn fills in status, residual and value.
  void run(const std::string& id, const std::string& description, const std::function<void(CheckResult&)>& fn);

  const CheckResult* find(const std::string& id) const;
  bool allPassed() const;
  std::vector<std::string> failedIds() const;

  /// {schema_version, suite, checks: [...]}; timing goes to a separate
  /// "timing" object only when requested so that the rest is byte-stable.
  nlohmann::json toJson(bool includeTiming = false) const;
  std::string toText(bool includeTiming = false) const;

 private:
  std::string suite_;
  std::vector<CheckResult> checks_;
};

inline constexpr int kReportSchemaVersion = 1;

}  // namespace superint

#endif  // SUPERINT_REPORT_HPP
