#pragma once

#include <vector>

#include "sg/front.hpp"

namespace sg {

struct SpectralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class EigMethod { ImplicitD1, AsymDLarge, AsymDeltaLarge, NumericFD };

struct EigenResult {
  double Lambda = 0;
  std::vector<double> x, psi; // normalized eigenfunction samples
  double A = 0;               // interior matching constant (d = 1 closed form)
  double R = 0;               // normalization constant (d = 1 closed form)
  EigMethod method = EigMethod::NumericFD;
  double error_estimate = 0;  // grid-refinement estimate (NumericFD)
  bool no_bound_state = false;
};

// Largest Lambda in (-1,0) of the d = 1 implicit relation.
double eig_d1_implicit(double Delta);

// Piecewise closed-form eigenfunction for d = 1 with Appendix-style matching
// constant A; R fixed by numerical normalization.
EigenResult eigenfunction_d1(double Delta, double Lambda);

// Largest eigenvalue of the symmetric second-order FD discretization of
// L = D_xx - (1 - d rho) cos(u0) on the front's grid, Richardson-refined.
EigenResult eig_numeric(const FrontSolution &front);

// Leading-order Delta with eigenvalue Lambda at large d:
// Delta = (-Lambda/sqrt(1+Lambda)) / d.
double eig_asym_dlarge(double Lambda, double d, bool *warned = nullptr);

// Root Lambda0 of the Delta >> 1 implicit relation, d > 1.
double eig_asym_DeltaLarge(double d);

// Decaying/growing solutions of the sine-Gordon linearization about the kink
// 4 atan(e^{x + x*}) at spectral parameter Lambda > -1, with closed-form
// derivatives.
void sg_lin_solutions(double x, double Lambda, double x_star, double &psi1,
                      double &psi2, double &dpsi1, double &dpsi2);

// Topmost eigenvalue of the symmetric FD discretization of psi'' - W psi with
// interior-node potential samples W and spacing h (Dirichlet ends); inverse /
// Rayleigh iteration. Shared by eig_numeric and the BVP monitors.
double fd_top_eigenvalue(const std::vector<double> &W, double h,
                         std::vector<double> *psi = nullptr);

struct CoupledSpectrum {
  double u_block = 0;        // Lambda
  double v_block = 0;        // Lambda + 2 alpha
  double continuum_edge = 0; // -1 + 2 alpha
};
CoupledSpectrum coupled_operator_spectrum(const EigenResult &scalar, double alpha);

} // namespace sg
