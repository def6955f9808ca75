#pragma once

#include <array>
#include <string>
#include <vector>

#include "sg/spectrum.hpp"

namespace sg {

enum class LocusPlane { AlphaDelta, DDelta, AlphaD };
enum class LocusMethod { ImplicitD1, AsymDLarge, AsymDeltaLarge, Numeric };

struct LocusPoint {
  double p1 = 0, p2 = 0;    // coordinates in the plane, continuation param first
  double lambda_residual = 0; // |Lambda + 2 alpha| at the point
};

struct LocusCurve {
  LocusPlane plane = LocusPlane::AlphaDelta;
  std::string fixed_name;
  double fixed_value = 0;
  std::vector<LocusPoint> points;
  LocusMethod method = LocusMethod::Numeric;
};

// alpha*(Delta) at d = 1 from the implicit relation (= -eig_d1_implicit/2).
double locus_d1(double Delta);

// Large-d locus: Delta = (1/d) * 2 alpha / sqrt(1 - 2 alpha).
double locus_dlarge(double alpha, double d);

// Large-Delta locus for d > 1: alpha0(d) = -eig_asym_DeltaLarge(d)/2.
double locus_DeltaLarge(double d);

// Numeric locus via the zero-eigenvalue condition Lambda(d, Delta) + 2 alpha = 0.
// The continuation parameter sweeps [lo, hi] with n points; the dependent
// coordinate is alpha (planes AlphaDelta/AlphaD) or d (plane DDelta, secant
// root-find seeded from the previous point).
LocusCurve locus_numeric(LocusPlane plane, double fixed_value, double lo,
                         double hi, int n, ProfileKind kind,
                         double delta = 0.0);

// Scalar-front eigenvalue Lambda(d, Delta) for the given profile kind
// (Piecewise via Hamiltonian matching, TanhHat via the collocation solver).
double lambda_of(double d, double Delta, ProfileKind kind, double delta = 0.0);

// alpha*(Delta) ladder for 0 < d < 1; monotone-decrease flag reported.
struct Case3bTrend {
  std::vector<double> Deltas, alpha_star;
  bool strictly_decreasing = false;
};
Case3bTrend case3b_trend(double d, const std::vector<double> &Deltas);

// Variation-of-parameters correction V21 on x > Delta at the d = 1 bifurcation
// point (decaying boundary conditions at +infinity).
double V21_of(double x, double Delta, double alpha_star);

struct BranchConstant {
  double alpha_star = 0;
  double c = 0; // positive representative of the +- pair
  // quadrature contributions of the radicand
  double term_psi4 = 0; // (4/3) alpha* int_0^inf Psi^4
  double term_v21 = 0;  // int_Delta^inf V21 Psi^2 sin u0
  double term_cos = 0;  // int_Delta^inf (Psi^4/6) cos u0
  double radicand = 0;
  bool supercritical = false;
};

// Lyapunov-Schmidt branch constant c at d = 1.
BranchConstant branch_constant(double Delta);

// Leading-order branch profile v(x) = +- sqrt(alpha - alpha*) c Psi(x) sampled
// on the d = 1 front grid.
struct BranchPrediction {
  std::vector<double> x, v;
  double amplitude = 0; // |c| sqrt(alpha - alpha*)
};
BranchPrediction branch_predict(double Delta, double alpha);

} // namespace sg
