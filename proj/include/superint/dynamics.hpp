#ifndef SUPERINT_DYNAMICS_HPP
#define SUPERINT_DYNAMICS_HPP

#include <cmath>
#include <iosfwd>
#include <string>
#include <vector>

#include "superint/phase_polynomial.hpp"

namespace superint {

/// A classical phase-space polynomial with numeric alpha substituted, ready
/// for repeated evaluation in arithmetic Scalar. Coefficients must be real
/// and hbar-free.
template <typename Scalar>
class CompiledPolynomial {
 public:
  struct Point {
    Scalar x, y, p1, p2;
  };

  CompiledPolynomial() = default;
  CompiledPolynomial(const PhasePolynomial& p, double alpha);

  Scalar operator()(const Point& at) const {
    using std::pow;
    Scalar sum = 0;
    for (const Term& t : terms_) {
      Scalar v = t.coeff;
      if (t.xExp != 0) v *= pow(at.x, t.xExp);
      if (t.yExp != 0) v *= pow(at.y, t.yExp);
      for (int i = 0; i < t.k; ++i) v *= at.p1;
      for (int i = 0; i < t.l; ++i) v *= at.p2;
      sum += v;
    }
    return sum;
  }

 private:
  struct Term {
    Scalar coeff;
    Scalar xExp;
    Scalar yExp;
    int k;
    int l;
  };
  std::vector<Term> terms_;
};

struct Monitor {
  std::string name;
  PhasePolynomial observable;
};

struct TrajectorySpec {
  PhasePolynomial hamiltonian;
  PhasePoint initial;
  double alpha = 1.0;
  double tEnd = 1.0;
  double dt = 1e-3;
  std::vector<Monitor> monitors;
  int sampleStride = 1;
  double xMin = 1e-6;
};

enum class TrajectoryStatus { Completed, DomainExit };

/// Working precision of the state and monitors. Extended (80-bit) and Quad
/// (128-bit) push the round-off floor below RK4 truncation error at small dt.
enum class Arithmetic { Double, Extended, Quad };

struct DriftRecord {
  TrajectoryStatus status = TrajectoryStatus::Completed;
  std::vector<double> times;
  std::vector<PhasePoint> states;
  std::vector<std::string> names;
  std::vector<std::vector<double>> values;  // values[monitor][sample]
  std::vector<double> maxRelativeDrift;     // per monitor, over all steps

  double drift(const std::string& name) const;
};

/// Classic RK4 on xdot = dH/dp, pdot = -dH/dx. The last step is shortened to
/// land on tEnd. Drift is |v - v0| / |v0|, or |v - v0| when |v0| < 1e-12.
/// Stops with DomainExit once a stage reaches x <= xMin; throws DomainError
/// on invalid specs or a nonfinite state. Results are reported in double.
DriftRecord integrate(const TrajectorySpec& spec, Arithmetic arithmetic = Arithmetic::Double);

/// Monitors H, X and Y of the classical model system.
TrajectorySpec modelTrajectory(const PhasePoint& initial, double alpha, double tEnd, double dt);

/// "t,x,y,p1,p2," followed by the monitor names; 17 significant digits.
void writeCsv(std::ostream& os, const DriftRecord& record);

}  // namespace superint

#endif  // SUPERINT_DYNAMICS_HPP
