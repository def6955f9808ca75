#pragma once

#include <string>
#include <vector>

#include "sg/front.hpp"

namespace sg {

// Field state of the coupled damped wave system
//   theta_tt = theta_xx - (1 - d rho) sin theta + alpha sin(theta - psi) - gamma theta_t
//   psi_tt   = psi_xx   - (1 - d rho) sin psi   - alpha sin(theta - psi) - gamma psi_t
struct SimState {
  std::vector<double> x, theta, psi, theta_t, psi_t;
  double t = 0, dx = 0.05, dt = 0.04, gamma = 0;
  // scratch filled by step(); w_cache holds 1 - d rho(x_i) and is rebuilt
  // whenever its size disagrees with x (clear it if the profile changes mid-run)
  std::vector<double> w_cache, a_theta, a_psi;
};

SimState make_sim_state(double L, double dx, double dt, double gamma);

// One velocity-Verlet step (half-kick / drift / half-kick, damping handled
// semi-implicitly; exactly symplectic Verlet at gamma = 0). OpenMP-parallel.
void step(SimState &state, const InhomogeneityProfile &profile, double alpha);
// Serial reference implementation with identical arithmetic.
void step_serial(SimState &state, const InhomogeneityProfile &profile, double alpha);

// Discrete energy: trapezoid of kinetic + gradient + potential density with
// V = (1 - d rho)(2 - cos theta - cos psi) - alpha (1 - cos(theta - psi)).
double energy(const SimState &state, const InhomogeneityProfile &profile, double alpha);

// Linear interpolation of the first upward pi-crossing of a field.
double kink_position(const std::vector<double> &x, const std::vector<double> &f);

void to_uv(const std::vector<double> &theta, const std::vector<double> &psi,
           std::vector<double> &u, std::vector<double> &v);

struct ScenarioResult {
  std::vector<double> times, kink_theta, kink_psi, energies;
  SimState final;
  InhomogeneityProfile profile;
  double alpha = 0;
  std::string metadata; // seed amplitude, damping, reflection-time estimate
};

// Named scenarios of the space-time phenomenology:
//  "separate": d=0, alpha=0.1, gamma=0, symmetric kinks + small antisymmetric seed
//  "pin":      d=1, Delta=1, tanh hat delta=1/15, alpha=0.1, gamma=0.1
//  "bifurcate": same but alpha=0.4
ScenarioResult simulate_scenario(const std::string &name, double T,
                                 double dx = 0.05, double dt = 0.04);

} // namespace sg
