#pragma once

#include <stdexcept>

namespace sg {

struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Hat-like profile parameters: half-width Delta, steepness delta
// (delta = 0 encodes the piecewise-constant limit).
struct HatParams {
  double Delta = 1.0;
  double delta = 0.0;
};

// Table-top pulse rho = a / (1 + b cosh(c x / delta)), the homoclinic orbit of
// delta^2 rho'' = 4 rho^3 - (6+4 eps) rho^2 + 2 (1+eps) rho.
struct GardnerParams {
  double delta = 0.1;
  double epsilon = 0.01;
  double a = 0, b = 0, c = 0; // derived, cached by make()

  static GardnerParams make(double delta, double epsilon);
};

enum class ProfileKind { Piecewise, TanhHat, GardnerPulse };

struct InhomogeneityProfile {
  ProfileKind kind = ProfileKind::Piecewise;
  double Delta = 1.0;   // half-width (for GardnerPulse: the calibrated half-height point)
  double delta = 0.0;   // steepness (TanhHat, GardnerPulse)
  double epsilon = 0.0; // GardnerPulse only
  double d = 0.0;       // inhomogeneity strength multiplying rho in (1 - d rho)

  double rho(double x) const;

  static InhomogeneityProfile piecewise(double Delta, double d);
  static InhomogeneityProfile tanh_hat(double Delta, double delta, double d);
  // epsilon calibrated from (Delta, delta) so that rho(+-Delta) = 1/2.
  static InhomogeneityProfile gardner(double Delta, double delta, double d);
};

// Piecewise-constant hat: 1 inside |x| < Delta, 0 outside, 1/2 at |x| = Delta.
double rho0(double x, double Delta);

// Smooth hat [tanh((x+Delta)/delta) + tanh((-x+Delta)/delta)] / 2.
double rho_tanh(double x, double Delta, double delta);

// Closed-form pulse and its scaled slope s = delta * drho/dx.
void gardner_pulse(double x, const GardnerParams &g, double &rho, double &s);

// Unique eps in (0,1) with gardner pulse value 1/2 at |x| = Delta:
//   Delta/delta = (1/c) arccosh((3+4 eps) / (b (3+2 eps))).
double epsilon_of(double Delta, double delta);

// eps = 0 heteroclinic of the reduced fast system:
//   rho = (tanh(sign * xi / sqrt 2) + 1)/2, s = sign * (sqrt2/4) sech^2(xi/sqrt2).
void heteroclinic_rho(double xi, int sign, double &rho, double &s);

struct PulseStepReport {
  // sup |rho_delta - rho0| per region R-, R0, R+ and sup |s_delta| likewise
  double sup_rho_minus = 0, sup_rho_zero = 0, sup_rho_plus = 0;
  double sup_s_minus = 0, sup_s_zero = 0, sup_s_plus = 0;
  double bound_stated = 0;     // exp(-sqrt2 * delta^(a-1)) as stated in the lemma
  double rplus_literal = 0;    // Delta + delta^(a-1), the lemma's literal R+ edge (recorded)
};

// Region-wise closeness of the calibrated pulse to the step profile.
// Regions: R- = (-inf, -Delta - delta^a], R0 = [-Delta + delta^a, Delta - delta^a],
// R+ = [Delta + delta^a, inf).
PulseStepReport pulse_vs_step_report(const GardnerParams &g, double Delta, double a_exp);

} // namespace sg
