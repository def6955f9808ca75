#include "sg/inhomogeneity.hpp"

#include <algorithm>
#include <cmath>

#include "sg/rootfind.hpp"

namespace sg {

GardnerParams GardnerParams::make(double delta, double epsilon) {
  if (!(delta > 0)) throw DomainError("GardnerParams: delta must be > 0");
  if (!(epsilon > 0 && epsilon < 1))
    throw DomainError("GardnerParams: epsilon must lie in (0,1)");
  GardnerParams g;
  g.delta = delta;
  g.epsilon = epsilon;
  g.a = 12.0 * (1.0 + epsilon) / (12.0 + 8.0 * epsilon);
  // b^2 = 1 - 144(1+eps)/(12+8eps)^2 written cancellation-free:
  // (12+8eps)^2 - 144(1+eps) = 16 eps (3 + 4 eps)
  g.b = 4.0 * std::sqrt(epsilon * (3.0 + 4.0 * epsilon)) / (12.0 + 8.0 * epsilon);
  g.c = std::sqrt(2.0 * (1.0 + epsilon));
  return g;
}

double rho0(double x, double Delta) {
  if (!(Delta > 0)) throw DomainError("rho0: Delta must be > 0");
  double ax = std::fabs(x);
  if (ax < Delta) return 1.0;
  if (ax > Delta) return 0.0;
  return 0.5; // symmetric midpoint convention at |x| = Delta
}

double rho_tanh(double x, double Delta, double delta) {
  if (!(Delta > 0)) throw DomainError("rho_tanh: Delta must be > 0");
  if (!(delta > 0)) throw DomainError("rho_tanh: delta must be > 0 (use rho0)");
  return 0.5 * (std::tanh((x + Delta) / delta) + std::tanh((-x + Delta) / delta));
}

void gardner_pulse(double x, const GardnerParams &g, double &rho, double &s) {
  double z = g.c * x / g.delta;
  double az = std::fabs(z);
  if (az > 700.0) {
    // tail asymptotics of a/(1 + b cosh z); avoids cosh overflow
    rho = 2.0 * g.a / g.b * std::exp(-az);
    s = (z > 0 ? -1.0 : 1.0) * g.a * g.c * 2.0 / g.b * std::exp(-az);
    return;
  }
  double den = 1.0 + g.b * std::cosh(z);
  rho = g.a / den;
  s = -g.a * g.b * g.c * std::sinh(z) / (den * den);
}

double epsilon_of(double Delta, double delta) {
  if (!(Delta > 0) || !(delta > 0))
    throw DomainError("epsilon_of: Delta, delta must be > 0");
  double target = Delta / delta;
  auto width = [](double eps) {
    GardnerParams g = GardnerParams::make(1.0, eps);
    double arg = (3.0 + 4.0 * eps) / (g.b * (3.0 + 2.0 * eps));
    return std::acosh(arg) / g.c; // half-width at rho = 1/2, in units of delta
  };
  // width is decreasing in eps; bisection on log eps spans the many decades
  // eps covers as Delta/delta grows
  auto f = [&](double t) { return width(std::exp(t)) - target; };
  double lo = -400.0, hi = std::log(0.999);
  if (!(f(lo) > 0) || !(f(hi) < 0))
    throw DomainError("epsilon_of: no bracket (Delta/delta infeasible, need >~ 2)");
  double t = bisect(f, lo, hi, 1e-16, 0.0, 400);
  return std::exp(t);
}

void heteroclinic_rho(double xi, int sign, double &rho, double &s) {
  double z = sign >= 0 ? xi / std::sqrt(2.0) : -xi / std::sqrt(2.0);
  rho = 0.5 * (std::tanh(z) + 1.0);
  double sech = 1.0 / std::cosh(z);
  s = (sign >= 0 ? 1.0 : -1.0) * std::sqrt(2.0) / 4.0 * sech * sech;
}

double InhomogeneityProfile::rho(double x) const {
  switch (kind) {
  case ProfileKind::Piecewise:
    return rho0(x, Delta);
  case ProfileKind::TanhHat:
    return rho_tanh(x, Delta, delta);
  case ProfileKind::GardnerPulse: {
    GardnerParams g = GardnerParams::make(delta, epsilon);
    double r, s;
    gardner_pulse(x, g, r, s);
    return r;
  }
  }
  return 0;
}

InhomogeneityProfile InhomogeneityProfile::piecewise(double Delta, double d) {
  if (!(Delta > 0)) throw DomainError("piecewise profile: Delta must be > 0");
  InhomogeneityProfile p;
  p.kind = ProfileKind::Piecewise;
  p.Delta = Delta;
  p.d = d;
  return p;
}

InhomogeneityProfile InhomogeneityProfile::tanh_hat(double Delta, double delta,
                                                    double d) {
  if (!(Delta > 0) || !(delta > 0))
    throw DomainError("tanh_hat profile: Delta, delta must be > 0");
  InhomogeneityProfile p;
  p.kind = ProfileKind::TanhHat;
  p.Delta = Delta;
  p.delta = delta;
  p.d = d;
  return p;
}

InhomogeneityProfile InhomogeneityProfile::gardner(double Delta, double delta,
                                                   double d) {
  InhomogeneityProfile p;
  p.kind = ProfileKind::GardnerPulse;
  p.Delta = Delta;
  p.delta = delta;
  p.epsilon = epsilon_of(Delta, delta);
  p.d = d;
  return p;
}

PulseStepReport pulse_vs_step_report(const GardnerParams &g, double Delta,
                                     double a_exp) {
  double da = std::pow(g.delta, a_exp);
  if (da >= Delta)
    throw DomainError("pulse_vs_step_report: delta^a >= Delta, empty regions");
  PulseStepReport rep;
  rep.rplus_literal = Delta + std::pow(g.delta, a_exp - 1.0);
  rep.bound_stated = std::exp(-std::sqrt(2.0) * std::pow(g.delta, a_exp - 1.0));

  auto scan = [&](double lo, double hi, double &sup_rho, double &sup_s) {
    const int n = 100000;
    for (int i = 0; i <= n; ++i) {
      double x = lo + (hi - lo) * i / n;
      double r, s;
      gardner_pulse(x, g, r, s);
      sup_rho = std::max(sup_rho, std::fabs(r - rho0(x, Delta)));
      sup_s = std::max(sup_s, std::fabs(s));
    }
  };
  // R- and R+ truncate at a tail point where the pulse is below 1e-300
  double far = Delta + 800.0 * g.delta / g.c;
  scan(-far, -Delta - da, rep.sup_rho_minus, rep.sup_s_minus);
  scan(-Delta + da, Delta - da, rep.sup_rho_zero, rep.sup_s_zero);
  scan(Delta + da, far, rep.sup_rho_plus, rep.sup_s_plus);
  return rep;
}

} // namespace sg
