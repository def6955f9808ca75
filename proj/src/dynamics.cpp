#include "sg/dynamics.hpp"

#include <cmath>
#include <stdexcept>

namespace sg {

namespace {

constexpr double kPi = 3.14159265358979323846;

void ensure_scratch(SimState &s, const InhomogeneityProfile &profile) {
  size_t n = s.x.size();
  if (s.w_cache.size() != n) {
    s.w_cache.resize(n);
    for (size_t i = 0; i < n; ++i)
      s.w_cache[i] = 1.0 - profile.d * profile.rho(s.x[i]);
  }
  if (s.a_theta.size() != n) {
    s.a_theta.assign(n, 0.0);
    s.a_psi.assign(n, 0.0);
  }
}

inline void force_at(const SimState &s, double alpha, double idx2, size_t i,
                     double &ft, double &fp) {
  double lap_t = (s.theta[i + 1] - 2.0 * s.theta[i] + s.theta[i - 1]) * idx2;
  double lap_p = (s.psi[i + 1] - 2.0 * s.psi[i] + s.psi[i - 1]) * idx2;
  double cpl = alpha * std::sin(s.theta[i] - s.psi[i]);
  ft = lap_t - s.w_cache[i] * std::sin(s.theta[i]) + cpl;
  fp = lap_p - s.w_cache[i] * std::sin(s.psi[i]) - cpl;
}

void forces_parallel(SimState &s, double alpha) {
  const double idx2 = 1.0 / (s.dx * s.dx);
  const long n = (long)s.x.size();
#pragma omp parallel for schedule(static)
  for (long i = 1; i < n - 1; ++i)
    force_at(s, alpha, idx2, (size_t)i, s.a_theta[i], s.a_psi[i]);
}

void forces_serial(SimState &s, double alpha) {
  const double idx2 = 1.0 / (s.dx * s.dx);
  const long n = (long)s.x.size();
  for (long i = 1; i < n - 1; ++i)
    force_at(s, alpha, idx2, (size_t)i, s.a_theta[i], s.a_psi[i]);
}

// half-kick with semi-implicit damping + drift, then the closing half-kick
template <bool Parallel>
void step_impl(SimState &s, const InhomogeneityProfile &profile, double alpha) {
  if (!(s.dt <= 0.9 * s.dx))
    throw std::invalid_argument("step: CFL violated, need dt <= 0.9 dx");
  ensure_scratch(s, profile);
  const long n = (long)s.x.size();
  const double hdt = 0.5 * s.dt;
  const double damp0 = 1.0 - s.gamma * hdt;
  const double damp1 = 1.0 / (1.0 + s.gamma * hdt);

  if (Parallel)
    forces_parallel(s, alpha);
  else
    forces_serial(s, alpha);

  if (Parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 1; i < n - 1; ++i) {
      s.theta_t[i] = damp0 * s.theta_t[i] + hdt * s.a_theta[i];
      s.psi_t[i] = damp0 * s.psi_t[i] + hdt * s.a_psi[i];
      s.theta[i] += s.dt * s.theta_t[i];
      s.psi[i] += s.dt * s.psi_t[i];
    }
  } else {
    for (long i = 1; i < n - 1; ++i) {
      s.theta_t[i] = damp0 * s.theta_t[i] + hdt * s.a_theta[i];
      s.psi_t[i] = damp0 * s.psi_t[i] + hdt * s.a_psi[i];
      s.theta[i] += s.dt * s.theta_t[i];
      s.psi[i] += s.dt * s.psi_t[i];
    }
  }

  if (Parallel)
    forces_parallel(s, alpha);
  else
    forces_serial(s, alpha);

  if (Parallel) {
#pragma omp parallel for schedule(static)
    for (long i = 1; i < n - 1; ++i) {
      s.theta_t[i] = (s.theta_t[i] + hdt * s.a_theta[i]) * damp1;
      s.psi_t[i] = (s.psi_t[i] + hdt * s.a_psi[i]) * damp1;
    }
  } else {
    for (long i = 1; i < n - 1; ++i) {
      s.theta_t[i] = (s.theta_t[i] + hdt * s.a_theta[i]) * damp1;
      s.psi_t[i] = (s.psi_t[i] + hdt * s.a_psi[i]) * damp1;
    }
  }
  s.t += s.dt;
}

} // namespace

SimState make_sim_state(double L, double dx, double dt, double gamma) {
  SimState s;
  s.dx = dx;
  s.dt = dt;
  s.gamma = gamma;
  size_t n = (size_t)std::lround(2.0 * L / dx) + 1;
  s.x.resize(n);
  for (size_t i = 0; i < n; ++i) s.x[i] = -L + dx * (double)i;
  s.theta.assign(n, 0.0);
  s.psi.assign(n, 0.0);
  s.theta_t.assign(n, 0.0);
  s.psi_t.assign(n, 0.0);
  return s;
}

void step(SimState &state, const InhomogeneityProfile &profile, double alpha) {
  step_impl<true>(state, profile, alpha);
}

void step_serial(SimState &state, const InhomogeneityProfile &profile,
                 double alpha) {
  step_impl<false>(state, profile, alpha);
}

double energy(const SimState &s, const InhomogeneityProfile &profile,
              double alpha) {
  size_t n = s.x.size();
  auto pointwise = [&](size_t i) {
    double w = s.w_cache.size() == n ? s.w_cache[i]
                                     : 1.0 - profile.d * profile.rho(s.x[i]);
    double kin = 0.5 * (s.theta_t[i] * s.theta_t[i] + s.psi_t[i] * s.psi_t[i]);
    double pot = w * (2.0 - std::cos(s.theta[i]) - std::cos(s.psi[i])) -
                 alpha * (1.0 - std::cos(s.theta[i] - s.psi[i]));
    return kin + pot;
  };
  double E = 0;
  // trapezoid for the pointwise densities
  for (size_t i = 0; i < n; ++i) {
    double wq = (i == 0 || i == n - 1) ? 0.5 : 1.0;
    E += wq * pointwise(i) * s.dx;
  }
  // cell-based gradient terms
  for (size_t i = 0; i + 1 < n; ++i) {
    double gt = (s.theta[i + 1] - s.theta[i]) / s.dx;
    double gp = (s.psi[i + 1] - s.psi[i]) / s.dx;
    E += 0.5 * (gt * gt + gp * gp) * s.dx;
  }
  return E;
}

double kink_position(const std::vector<double> &x, const std::vector<double> &f) {
  for (size_t i = 0; i + 1 < x.size(); ++i) {
    if (f[i] < kPi && f[i + 1] >= kPi) {
      double t = (kPi - f[i]) / (f[i + 1] - f[i]);
      return x[i] + t * (x[i + 1] - x[i]);
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

void to_uv(const std::vector<double> &theta, const std::vector<double> &psi,
           std::vector<double> &u, std::vector<double> &v) {
  size_t n = theta.size();
  u.resize(n);
  v.resize(n);
  for (size_t i = 0; i < n; ++i) {
    u[i] = 0.5 * (theta[i] + psi[i]);
    v[i] = 0.5 * (theta[i] - psi[i]);
  }
}

ScenarioResult simulate_scenario(const std::string &name, double T, double dx,
                                 double dt) {
  const double L = 50.0;
  ScenarioResult r;
  double gamma, x0, seed;
  if (name == "separate") {
    r.profile = InhomogeneityProfile::piecewise(1.0, 0.0);
    r.alpha = 0.1;
    gamma = 0.0;
    x0 = 0.0;
    seed = 1e-6;
    r.metadata = "free kinks, antisymmetric seed 1e-6, undamped";
  } else if (name == "pin") {
    r.profile = InhomogeneityProfile::tanh_hat(1.0, 1.0 / 15.0, 1.0);
    r.alpha = 0.1;
    gamma = 0.1;
    x0 = 3.0;
    seed = 1e-3;
    r.metadata = "kink released at x = 3, damping 0.1, seed 1e-3";
  } else if (name == "bifurcate") {
    r.profile = InhomogeneityProfile::tanh_hat(1.0, 1.0 / 15.0, 1.0);
    r.alpha = 0.4;
    gamma = 0.1;
    x0 = 0.0;
    seed = 1e-3;
    r.metadata = "pinned kink past onset, damping 0.1, seed 1e-3";
  } else {
    throw std::invalid_argument("simulate_scenario: unknown scenario " + name);
  }

  SimState s = make_sim_state(L, dx, dt, gamma);
  size_t n = s.x.size();
  for (size_t i = 0; i < n; ++i) {
    double kink = 4.0 * std::atan(std::exp(s.x[i] - x0));
    double pert = seed / std::cosh(s.x[i] - x0);
    s.theta[i] = kink + pert;
    s.psi[i] = kink - pert;
  }
  s.theta.front() = s.psi.front() = 0.0;
  s.theta.back() = s.psi.back() = 2.0 * kPi;

  long nsteps = std::lround(T / dt);
  long stride = nsteps > 400 ? nsteps / 400 : 1;
  auto record = [&]() {
    for (size_t i = 0; i < n; ++i)
      if (!std::isfinite(s.theta[i]) || !std::isfinite(s.psi[i]))
        throw std::runtime_error("simulate_scenario: field blow-up at t = " +
                                 std::to_string(s.t));
    r.times.push_back(s.t);
    r.kink_theta.push_back(kink_position(s.x, s.theta));
    r.kink_psi.push_back(kink_position(s.x, s.psi));
    r.energies.push_back(energy(s, r.profile, r.alpha));
  };
  record();
  for (long k = 1; k <= nsteps; ++k) {
    step(s, r.profile, r.alpha);
    if (k % stride == 0 || k == nsteps) record();
  }
  r.final = std::move(s);
  return r;
}

} // namespace sg
