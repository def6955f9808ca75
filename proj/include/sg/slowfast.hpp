#pragma once

#include <array>
#include <vector>

#include "sg/bvp.hpp"

namespace sg {

// (u, p, v, q, rho, s)
using ExtendedState = std::array<double, 6>;

enum class Frame { Slow, Fast };

// Right-hand side of the 6D extended system coupling the stationary fronts to
// the inhomogeneity-generating fast flow.
ExtendedState extended_rhs(const ExtendedState &y, double alpha, double d,
                           double eps, double delta, Frame frame);

struct HypothesisCheck {
  double pu_minus = 0, pu_plus = 0; // dx u at -Delta, +Delta
  double qv_minus = 0, qv_plus = 0; // dx v at -Delta, +Delta
  double sigma_min = 0;             // Newton-Jacobian smallest singular value
  bool u_slopes_ok = false, v_slopes_ok = false, jacobian_ok = false;
};

HypothesisCheck hypothesis_check(const FrontSolution &front, double Delta);

struct PersistenceReport {
  std::vector<double> deltas;
  std::vector<double> dist_u, dist_v; // sup distance to the rho0-front
  std::vector<double> sigma_min;      // transversality proxy per ladder entry
  double fitted_order = 0;            // slope of log(dist) vs log(delta)
  bool monotone = false;
  HypothesisCheck hypotheses; // of the rho0 reference front
};

// Persistence of the rho0-front under the Gardner-pulse profile: solve the
// coupled BVP on a delta ladder (eps calibrated per delta) seeded by the
// rho0-front. nontrivial_branch selects the pitchfork branch (v != 0) as the
// reference instead of the v = 0 branch.
PersistenceReport persistence_study(double alpha, double d, double Delta,
                                    const std::vector<double> &delta_ladder,
                                    bool nontrivial_branch);

// The rho0 reference front used by persistence_study (trivial branch via a
// direct solve, nontrivial branch via continuation from just past onset).
FrontSolution rho0_reference_front(double alpha, double d, double Delta,
                                   bool nontrivial_branch);

} // namespace sg
