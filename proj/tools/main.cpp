#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "superint/dynamics.hpp"
#include "superint/errors.hpp"
#include "superint/models.hpp"
#include "superint/parser.hpp"

using namespace superint;

namespace {

constexpr int kExitFailedCheck = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "3", "-3/4" or a decimal such as "0.25", converted exactly.
Rational parseRational(const std::string& text, const char* flag) {
  try {
    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational::fromString(text);
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    std::string den = "1" + std::string(text.size() - dot - 1, '0');
    return Rational::fromString(digits + "/" + den);
  } catch (const std::exception&) {
    throw UsageError(std::string("invalid value for ") + flag + ": '" + text + "'");
  }
}

std::optional<Rational> optionalRational(const std::string& text, const char* flag) {
  if (text.empty()) return std::nullopt;
  return parseRational(text, flag);
}

struct Output {
  std::string format = "text";
  std::string path;

  void emit(const std::string& body) const {
    if (path.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open output file '" + path + "'");
    out << body;
  }
  bool json() const { return format == "json"; }
};

void addOutputFlags(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", out.path, "write to this file instead of stdout");
}

std::string dumpJson(const nlohmann::json& j) { return j.dump(2) + "\n"; }

int reportExit(const VerificationReport& report) {
  const auto failed = report.failedIds();
  if (failed.empty()) return 0;
  std::cerr << "failed check(s):";
  for (const auto& id : failed) std::cerr << " " << id;
  std::cerr << "\n";
  return kExitFailedCheck;
}

int emitReport(const VerificationReport& report, const Output& out, bool timing) {
  out.emit(out.json() ? dumpJson(report.toJson(timing)) : report.toText(timing));
  return reportExit(report);
}

template <typename T>
T substituted(const T& value, const std::optional<Rational>& alpha, const std::optional<Rational>& hbar) {
  return value.mapCoefficients([&](const Expression& c) { return substituteParameters(c, alpha, hbar); });
}

int emitResult(const std::string& op, const std::string& result, const Output& out) {
  if (out.json()) {
    out.emit(dumpJson({{"schema_version", kReportSchemaVersion}, {"operation", op}, {"result", result}}));
  } else {
    out.emit(result + "\n");
  }
  return 0;
}

nlohmann::json coeffsJson(const ACoeffs& a) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [index, value] : a.entries()) j[index.str()] = value.str();
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of a nonseparable superintegrable system in two dimensions"};
  app.require_subcommand(1);

  Output out;
  std::string alphaText, hbarText;
  bool timing = false;

  auto* verifyAllCmd = app.add_subcommand("verify-all", "run the theorem, algebra, rank and order-2 suites");
  addOutputFlags(verifyAllCmd, out);
  verifyAllCmd->add_flag("--timing", timing, "include per-check timings");

  std::string lhs, rhs;
  auto* bracketCmd = app.add_subcommand("bracket", "exact Poisson bracket {A, B}, with {x, p1} = 1");
  auto* commutatorCmd = app.add_subcommand("commutator", "exact operator commutator [A, B], with p = -i hbar d");
  for (auto* cmd : {bracketCmd, commutatorCmd}) {
    cmd->add_option("lhs", lhs, "first operand")->required();
    cmd->add_option("rhs", rhs, "second operand")->required();
    cmd->add_option("--alpha", alphaText, "substitute an exact value for alpha");
    cmd->add_option("--hbar", hbarText, "substitute an exact value for hbar");
    addOutputFlags(cmd, out);
  }

  std::string potentialText;
  int order = 3;
  auto* detsolveCmd = app.add_subcommand("detsolve", "admissible leading terms for a potential");
  detsolveCmd->add_option("--potential", potentialText, "potential V(x, y)")->required();
  detsolveCmd->add_option("--order", order, "integral order")->check(CLI::Range(2, 4));
  addOutputFlags(detsolveCmd, out);

  std::string aText = "0", bText = "1", cText = "0";
  auto* drachCmd = app.add_subcommand("drach", "admissibility suite for x^(-2/3)(a + b y + c(4x^2 + 3y^2))");
  drachCmd->add_option("--a", aText, "constant a (default 0)");
  drachCmd->add_option("--b", bText, "constant b (default 1)");
  drachCmd->add_option("--c", cText, "constant c (default 0)");
  addOutputFlags(drachCmd, out);
  drachCmd->add_flag("--timing", timing, "include per-check timings");

  PhasePoint initial{1.0, 0.0, 0.0, 1.0};
  double tEnd = 5.0, dt = 1e-4, alphaValue = 1.0;
  int stride = 100;
  auto* simulateCmd = app.add_subcommand("simulate", "RK4 trajectory with H, X, Y monitors as CSV");
  simulateCmd->add_option("--x0", initial.x, "initial x (default 1)");
  simulateCmd->add_option("--y0", initial.y, "initial y (default 0)");
  simulateCmd->add_option("--p10", initial.p1, "initial p1 (default 0)");
  simulateCmd->add_option("--p20", initial.p2, "initial p2 (default 1)");
  simulateCmd->add_option("--tend", tEnd, "final time (default 5)");
  simulateCmd->add_option("--dt", dt, "step (default 1e-4)");
  simulateCmd->add_option("--alpha", alphaValue, "coupling (default 1)");
  simulateCmd->add_option("--stride", stride, "steps per CSV row (default 100)")->check(CLI::PositiveNumber);
  addOutputFlags(simulateCmd, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (verifyAllCmd->parsed()) return emitReport(verifyAll(), out, timing);

    if (bracketCmd->parsed() || commutatorCmd->parsed()) {
      const auto alpha = optionalRational(alphaText, "--alpha");
      const auto hbar = optionalRational(hbarText, "--hbar");
      if (bracketCmd->parsed()) {
        const PhasePolynomial r = poissonBracket(parsePhasePolynomial(lhs), parsePhasePolynomial(rhs));
        return emitResult("bracket", substituted(r, alpha, hbar).str(), out);
      }
      const WeylOperator r = commutator(parseWeylOperator(lhs), parseWeylOperator(rhs));
      return emitResult("commutator", symmetrizedString(substituted(r, alpha, hbar)), out);
    }

    if (detsolveCmd->parsed()) {
      const Expression v = parseExpression(potentialText);
      const AdmissibleSpace space = solveAdmissibleA(order, v);
      std::optional<ThirdOrderSolution> third;
      if (order == 3) third = solveThirdOrderIntegrals(v, v.dependsOnHbar() ? Flavor::Quantum : Flavor::Classical);
      if (out.json()) {
        nlohmann::json basis = nlohmann::json::array();
        for (const auto& b : space.basis) basis.push_back(coeffsJson(b));
        nlohmann::json doc = {{"schema_version", kReportSchemaVersion},
                              {"operation", "detsolve"},
                              {"potential", v.str()},
                              {"order", order},
                              {"necessary_condition_only", true},
                              {"equations", space.equations},
                              {"unknowns", space.unknowns},
                              {"rank", space.rank},
                              {"basis", basis}};
        if (third) doc["third_order_integrals"] = third->genuineDimension;
        out.emit(dumpJson(doc));
      } else {
        std::ostringstream os;
        os << "order " << order << " admissible leading terms for V = " << v << "\n";
        os << "linear system: " << space.equations << " equations, " << space.unknowns << " unknowns, rank "
           << space.rank << "\n";
        os << "basis (" << space.basis.size() << "):\n";
        for (const auto& b : space.basis) os << "  " << b.str() << "\n";
        if (third) os << "third-order integrals (exact solve): " << third->genuineDimension << "\n";
        out.emit(os.str());
      }
      return 0;
    }

    if (drachCmd->parsed()) {
      const DrachParams params{parseRational(aText, "--a"), parseRational(bText, "--b"), parseRational(cText, "--c")};
      return emitReport(drachSuite(params).report, out, timing);
    }

    if (simulateCmd->parsed()) {
      TrajectorySpec spec = modelTrajectory(initial, alphaValue, tEnd, dt);
      spec.sampleStride = stride;
      const DriftRecord rec = integrate(spec);
      std::ostringstream csv;
      writeCsv(csv, rec);
      std::ostream& summary = out.path.empty() ? std::cerr : std::cout;
      if (out.json()) {
        nlohmann::json drift = nlohmann::json::object();
        for (std::size_t i = 0; i < rec.names.size(); ++i) drift[rec.names[i]] = rec.maxRelativeDrift[i];
        const bool exited = rec.status == TrajectoryStatus::DomainExit;
        summary << dumpJson({{"schema_version", kReportSchemaVersion},
                             {"operation", "simulate"},
                             {"status", exited ? "domain-exit" : "completed"},
                             {"max_relative_drift", drift}});
      } else {
        for (std::size_t i = 0; i < rec.names.size(); ++i)
          summary << "max relative drift " << rec.names[i] << ": " << rec.maxRelativeDrift[i] << "\n";
      }
      out.emit(csv.str());
      if (rec.status == TrajectoryStatus::DomainExit) {
        std::cerr << "failed check: simulate.domain-exit (trajectory reached x <= " << spec.xMin << ")\n";
        return kExitFailedCheck;
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
