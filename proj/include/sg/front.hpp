#pragma once

#include <limits>
#include <vector>

#include "sg/inhomogeneity.hpp"

namespace sg {

struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Hamiltonian-matching data at x = -Delta.
struct MatchingData {
  double h = 0;       // inner Hamiltonian level in (0, 2]
  double u_minus = 0; // angle at x = -Delta
  double p_minus = 0; // slope at x = -Delta
  double x_star = 0;  // outer translation constant
};

// Discretized stationary solution on a uniform grid spanning [-L, L].
// v, q stay identically zero for scalar fronts.
struct FrontSolution {
  std::vector<double> x, u, p, v, q;
  double alpha = 0, d = 0, Delta = 0;
  InhomogeneityProfile profile{};
  double h = std::numeric_limits<double>::quiet_NaN();
  double x_star = std::numeric_limits<double>::quiet_NaN();
  double residual_norm = 0;

  double dx() const { return x.size() > 1 ? x[1] - x[0] : 0.0; }
  // Cubic Hermite interpolation (u, p are value/derivative pairs).
  double u_at(double xq) const;
  double v_at(double xq) const;
  double v_norm_l2() const; // trapezoid L2 norm of v
};

double H0(double u, double p);           // p^2/2 + cos u - 1
double H1(double u, double p, double d); // p^2/2 + (1-d)(1+cos u)

// Unique h in (0,2) with Delta = arccos(h-1)/sqrt(2h).
double h_of_Delta_d1(double Delta);

// u_minus = arccos(-1 + (2-h)/d), p_minus = sqrt((4(d-1)+2h)/d).
void matching_coords(double h, double d, double &u_minus, double &p_minus);

// Closed-form d = 1 front (outer tails + linear core).
double front_d1(double x, double Delta);
MatchingData matching_d1(double Delta); // h, u-, p-, x* of the d = 1 front

// Scalar front for the piecewise hat at general d, by Hamiltonian matching and
// time-of-flight root-finding in h. Grid node spacing <= min(0.0125, Delta/16),
// aligned so that +-Delta are nodes.
FrontSolution front_numeric(double d, double Delta);
MatchingData matching_numeric(double d, double Delta); // h root + matching data

struct AsymValue {
  double u = 0;
  bool warn_small_param = false; // parameter below the asymptotic guard
  double x_star = 0;
};

// d >> 1 approximation: outer tails with x* = Delta - 2 sqrt(2(2-h))/sqrt(d),
// inner plateau pi. Guard: warns below d = 25.
AsymValue front_asym_dlarge(double x, double d, double Delta);

// Delta >> 1 approximation for d != 1 (warns below Delta = 5).
AsymValue front_asym_DeltaLarge(double x, double d, double Delta);

// Perturbed heteroclinic 4 atan(e^xi) - pi + (eps^2/8)(xi/cosh xi + sinh xi),
// valid on |xi| <= L_of_eps(eps).
double perturbed_heteroclinic(double xi, double eps);
double L_of_eps(double eps); // ln(8/eps) refined so the orbit reaches pi

// pi-front of the single-step inhomogeneity, d > 1.
double pi_front(double x, double d);

// Uniform grid on [-L, L] with nodes landing exactly on +-Delta
// (spacing Delta/m for the smallest m >= 16 with Delta/m <= h_target).
std::vector<double> uniform_grid(double Delta, double L_dom, double h_target);

// Truncated-domain half-length used by all solvers.
inline double domain_half_length(double Delta) {
  return Delta + 40.0 > 50.0 ? Delta + 40.0 : 50.0;
}

} // namespace sg
