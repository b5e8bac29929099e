#include "superint/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <type_traits>

#include <boost/multiprecision/float128.hpp>

#include "superint/errors.hpp"
#include "superint/models.hpp"

namespace superint {

namespace {

using Quad = boost::multiprecision::float128;
using std::abs;
using std::isfinite;

template <typename Scalar>
Scalar fromDecimal(const std::string& digits) {
  if constexpr (std::is_same_v<Scalar, Quad>) {
    return Quad(digits.c_str());
  } else {
    return static_cast<Scalar>(std::stold(digits));
  }
}

template <typename Scalar>
Scalar exactToScalar(const Rational& r) {
  return fromDecimal<Scalar>(r.numerator().get_str()) / fromDecimal<Scalar>(r.denominator().get_str());
}

}  // namespace

template <typename Scalar>
CompiledPolynomial<Scalar>::CompiledPolynomial(const PhasePolynomial& p, double alpha) {
  for (const auto& [m, c] : p.terms()) {
    for (const auto& [key, coeff] : c.terms()) {
      if (key.hbarPow > 0 || !coeff.im.isZero())
        throw DomainError("only real, hbar-free polynomials can be compiled: " + p.str());
      Scalar value = exactToScalar<Scalar>(coeff.re);
      for (unsigned i = 0; i < key.alphaPow; ++i) value *= Scalar(alpha);
      terms_.push_back({value, exactToScalar<Scalar>(key.xExp), exactToScalar<Scalar>(key.yExp),
                        static_cast<int>(m.k), static_cast<int>(m.l)});
    }
  }
}

template class CompiledPolynomial<double>;
template class CompiledPolynomial<long double>;
template class CompiledPolynomial<Quad>;

double DriftRecord::drift(const std::string& name) const {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return maxRelativeDrift[i];
  throw std::out_of_range("no monitor named " + name);
}

namespace {

template <typename Scalar>
struct Integrator {
  using State = std::array<Scalar, 4>;
  using Point = typename CompiledPolynomial<Scalar>::Point;

  static Point toPoint(const State& s) { return {s[0], s[1], s[2], s[3]}; }
  static PhasePoint toDouble(const State& s) {
    return {static_cast<double>(s[0]), static_cast<double>(s[1]), static_cast<double>(s[2]),
            static_cast<double>(s[3])};
  }

  static State axpy(const State& s, const Scalar& h, const State& k) {
    return {s[0] + h * k[0], s[1] + h * k[1], s[2] + h * k[2], s[3] + h * k[3]};
  }

  CompiledPolynomial<Scalar> dHdx, dHdy, dHdp1, dHdp2;

  State flow(const State& s) const {
    const Point p = toPoint(s);
    return {dHdp1(p), dHdp2(p), -dHdx(p), -dHdy(p)};
  }

  static DriftRecord run(const TrajectorySpec& spec) {
    using V = PhaseVariable;
    const Integrator in{{diff(spec.hamiltonian, V::X), spec.alpha},
                        {diff(spec.hamiltonian, V::Y), spec.alpha},
                        {diff(spec.hamiltonian, V::P1), spec.alpha},
                        {diff(spec.hamiltonian, V::P2), spec.alpha}};
    std::vector<CompiledPolynomial<Scalar>> monitors;
    DriftRecord rec;
    for (const auto& m : spec.monitors) {
      monitors.emplace_back(m.observable, spec.alpha);
      rec.names.push_back(m.name);
    }
    rec.values.resize(monitors.size());
    rec.maxRelativeDrift.assign(monitors.size(), 0.0);

    State s{spec.initial.x, spec.initial.y, spec.initial.p1, spec.initial.p2};
    std::vector<Scalar> initialValues;
    for (const auto& m : monitors) initialValues.push_back(m(toPoint(s)));

    auto record = [&](double t, bool sample) {
      for (std::size_t i = 0; i < monitors.size(); ++i) {
        const Scalar v = monitors[i](toPoint(s));
        const Scalar v0 = initialValues[i];
        const double change = static_cast<double>(abs(v - v0));
        const double base = static_cast<double>(abs(v0));
        rec.maxRelativeDrift[i] = std::max(rec.maxRelativeDrift[i], base < 1e-12 ? change : change / base);
        if (sample) rec.values[i].push_back(static_cast<double>(v));
      }
      if (sample) {
        rec.times.push_back(t);
        rec.states.push_back(toDouble(s));
      }
    };

    record(0.0, true);
    const auto steps = static_cast<long>(std::ceil(spec.tEnd / spec.dt - 1e-9));
    const Scalar dt = spec.dt;
    Scalar t = 0;
    const Scalar xMin = spec.xMin;
    for (long n = 1; n <= steps; ++n) {
      const Scalar h = n == steps ? Scalar(spec.tEnd) - t : dt;
      const State k1 = in.flow(s);
      const State s2 = axpy(s, h / 2, k1);
      const State k2 = in.flow(s2);
      const State s3 = axpy(s, h / 2, k2);
      const State k3 = in.flow(s3);
      const State s4 = axpy(s, h, k3);
      if (s2[0] <= xMin || s3[0] <= xMin || s4[0] <= xMin) {
        rec.status = TrajectoryStatus::DomainExit;
        return rec;
      }
      const State k4 = in.flow(s4);
      for (int i = 0; i < 4; ++i) s[i] += h / 6 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
      t = n == steps ? Scalar(spec.tEnd) : Scalar(n) * dt;
      const double td = static_cast<double>(t);
      for (const Scalar& v : s)
        if (!isfinite(v)) throw DomainError("nonfinite state at t = " + std::to_string(td));
      if (s[0] <= xMin) {
        rec.status = TrajectoryStatus::DomainExit;
        record(td, true);
        return rec;
      }
      record(td, n % spec.sampleStride == 0 || n == steps);
    }
    return rec;
  }
};

}  // namespace

DriftRecord integrate(const TrajectorySpec& spec, Arithmetic arithmetic) {
  if (!(spec.dt > 0.0)) throw DomainError("dt must be positive");
  if (!(spec.tEnd >= 0.0)) throw DomainError("tEnd must be nonnegative");
  if (!(spec.initial.x > spec.xMin)) throw DomainError("initial x must exceed xMin");
  if (spec.sampleStride < 1) throw DomainError("sample stride must be at least 1");
  switch (arithmetic) {
    case Arithmetic::Extended: return Integrator<long double>::run(spec);
    case Arithmetic::Quad: return Integrator<Quad>::run(spec);
    default: return Integrator<double>::run(spec);
  }
}

TrajectorySpec modelTrajectory(const PhasePoint& initial, double alpha, double tEnd, double dt) {
  const SystemSpec sys = modelSystem(Flavor::Classical);
  TrajectorySpec spec;
  spec.hamiltonian = std::get<PhasePolynomial>(sys.get("H"));
  spec.initial = initial;
  spec.alpha = alpha;
  spec.tEnd = tEnd;
  spec.dt = dt;
  for (const char* name : {"H", "X", "Y"}) spec.monitors.push_back({name, std::get<PhasePolynomial>(sys.get(name))});
  return spec;
}

void writeCsv(std::ostream& os, const DriftRecord& record) {
  os << "t,x,y,p1,p2";
  for (const auto& n : record.names) os << "," << n;
  os << "\n";
  const auto oldFlags = os.flags();
  const auto oldPrecision = os.precision(17);
  os.unsetf(std::ios::floatfield);
  for (std::size_t r = 0; r < record.times.size(); ++r) {
    const PhasePoint& p = record.states[r];
    os << record.times[r] << "," << p.x << "," << p.y << "," << p.p1 << "," << p.p2;
    for (const auto& col : record.values) os << "," << col[r];
    os << "\n";
  }
  os.precision(oldPrecision);
  os.flags(oldFlags);
}

}  // namespace superint
