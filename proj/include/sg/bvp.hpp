#pragma once

#include <vector>

#include "sg/front.hpp"

namespace sg {

struct SolveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coupled stationary BVP
//   u'' = (1 - d rho) sin u cos v
//   v'' = (1 - d rho) sin v cos u - alpha sin 2v
// on [-L, L] with Dirichlet data u(-L)=0, v(-L)=0, u(L)=2 pi, v(L)=0.
struct BvpProblem {
  InhomogeneityProfile profile{};
  double alpha = 0.1;
  double L_dom = 50.0;   // 0 -> domain_half_length(Delta)
  double h_target = 0.0; // 0 -> min(0.025, steepest profile scale / 4)
};

// Builds the uniform mesh (nodes land exactly on +-Delta) and an initial guess
// from the d = 1 closed-form front with v = 0.
FrontSolution bvp_initial_guess(const BvpProblem &problem);

// Damped-Newton solve of the 4th-order compact (Numerov) discretization.
// Discrete sup residual < 1e-10 on success.
FrontSolution bvp_solve(const BvpProblem &problem, const FrontSolution &guess);

enum class ContParam { alpha, d, Delta };

struct BranchPoint {
  double param_value = 0;
  FrontSolution solution;
  double v_norm = 0;
  double smallest_eig = 0; // leading v-block eigenvalue of the linearization
  double arclength = 0;
};

struct ContinuationResult {
  std::vector<BranchPoint> points;
  std::vector<double> bifurcation_params; // bracketed zero crossings of the monitor
};

struct ContinuationOptions {
  double initial_step = 0.02;
  double min_step = 1e-6;
  double max_step = 0.1;
  bool monitor_eig = true;
  double locate_tol = 1e-6; // bisection tolerance for bifurcation parameters
};

// Pseudo-arclength continuation in the chosen parameter from `from` to `to`.
ContinuationResult bvp_continue(BvpProblem problem, ContParam param, double from,
                                double to, const FrontSolution &start,
                                const ContinuationOptions &opts = {});

// At a pitchfork of the trivial branch (located at problem.alpha = alpha*),
// produce the two v = +-eps0 seeds and converge them slightly past onset.
struct BranchSwitchResult {
  FrontSolution plus, minus;
  double alpha_onset = 0;
};
BranchSwitchResult switch_branch(BvpProblem problem, double alpha_past_onset);

// Few smallest-magnitude eigenvalues of the discretized linearization about a
// solution (block-coupled when v != 0), by shifted inverse iteration.
std::vector<double> jacobian_spectrum(const FrontSolution &sol, int k = 3);

// Leading (largest) eigenvalue of the v-block linearization D_xx - (1-d rho) cos u + 2 alpha
// about a trivial-branch solution; equals Lambda + 2 alpha.
double vblock_leading_eig(const FrontSolution &sol);

// Smallest singular value of the Newton Jacobian at a converged solution
// (transversality proxy), via inverse iteration on J^T J.
double jacobian_sigma_min(const FrontSolution &sol);

} // namespace sg
