#include "sg/slowfast.hpp"

#include <cmath>

#include "sg/spectrum.hpp"

namespace sg {

namespace {

double G(double rho, double eps) {
  return 4.0 * rho * rho * rho - (6.0 + 4.0 * eps) * rho * rho +
         2.0 * (1.0 + eps) * rho;
}

size_t node_index(const FrontSolution &f, double xq) {
  double h = f.dx();
  long i = std::lround((xq - f.x.front()) / h);
  if (i < 0 || (size_t)i >= f.x.size() ||
      std::fabs(f.x[(size_t)i] - xq) > 1e-9 * (1.0 + std::fabs(xq)))
    throw DomainError("slowfast: query point is not a grid node");
  return (size_t)i;
}

} // namespace

ExtendedState extended_rhs(const ExtendedState &y, double alpha, double d,
                           double eps, double delta, Frame frame) {
  const double u = y[0], p = y[1], v = y[2], q = y[3], rho = y[4], s = y[5];
  double w = 1.0 - d * rho;
  double f1 = w * std::sin(u) * std::cos(v);
  double f2 = w * std::sin(v) * std::cos(u) - alpha * std::sin(2.0 * v);
  if (frame == Frame::Slow)
    return {p, f1, q, f2, s / delta, G(rho, eps) / delta};
  return {delta * p, delta * f1, delta * q, delta * f2, s, G(rho, eps)};
}

HypothesisCheck hypothesis_check(const FrontSolution &front, double Delta) {
  HypothesisCheck c;
  size_t im = node_index(front, -Delta);
  size_t ip = node_index(front, Delta);
  c.pu_minus = front.p[im];
  c.pu_plus = front.p[ip];
  c.qv_minus = front.q[im];
  c.qv_plus = front.q[ip];
  c.sigma_min = jacobian_sigma_min(front);
  c.u_slopes_ok = std::fabs(c.pu_minus) > 1e-6 && std::fabs(c.pu_plus) > 1e-6;
  // reported as-is: the v = 0 branch legitimately fails this hypothesis
  c.v_slopes_ok = std::fabs(c.qv_minus) > 1e-6 && std::fabs(c.qv_plus) > 1e-6;
  c.jacobian_ok = c.sigma_min > 1e-8;
  return c;
}

FrontSolution rho0_reference_front(double alpha, double d, double Delta,
                                   bool nontrivial_branch) {
  BvpProblem prob;
  prob.profile = InhomogeneityProfile::piecewise(Delta, d);
  prob.alpha = alpha;
  if (!nontrivial_branch) return bvp_solve(prob, bvp_initial_guess(prob));

  FrontSolution trivial = bvp_solve(prob, bvp_initial_guess(prob));
  double alpha_star = -eig_numeric(trivial).Lambda / 2.0;
  if (!(alpha > alpha_star))
    throw SolveError("rho0_reference_front: alpha below pitchfork onset");

  BvpProblem at_onset = prob;
  at_onset.alpha = alpha_star;
  double alpha_seed = std::min(alpha, alpha_star + 0.01);
  BranchSwitchResult sw = switch_branch(at_onset, alpha_seed);
  if (std::fabs(alpha - alpha_seed) < 1e-12) return sw.plus;

  ContinuationOptions opts;
  opts.monitor_eig = false;
  ContinuationResult cr =
      bvp_continue(prob, ContParam::alpha, alpha_seed, alpha, sw.plus, opts);
  const FrontSolution &last = cr.points.back().solution;
  if (std::fabs(cr.points.back().param_value - alpha) > 1e-8 ||
      last.v_norm_l2() < 1e-7)
    throw SolveError("rho0_reference_front: branch continuation truncated");
  return last;
}

PersistenceReport persistence_study(double alpha, double d, double Delta,
                                    const std::vector<double> &delta_ladder,
                                    bool nontrivial_branch) {
  PersistenceReport rep;
  FrontSolution ref = rho0_reference_front(alpha, d, Delta, nontrivial_branch);
  rep.hypotheses = hypothesis_check(ref, Delta);

  for (double delta : delta_ladder) {
    BvpProblem prob;
    prob.profile = InhomogeneityProfile::gardner(Delta, delta, d);
    prob.alpha = alpha;
    FrontSolution sol = bvp_solve(prob, ref);
    if (nontrivial_branch && sol.v_norm_l2() < 1e-7)
      throw SolveError("persistence_study: Newton collapsed to the v = 0 branch");
    double du = 0, dv = 0;
    for (size_t i = 0; i < sol.x.size(); ++i) {
      du = std::max(du, std::fabs(sol.u[i] - ref.u_at(sol.x[i])));
      dv = std::max(dv, std::fabs(sol.v[i] - ref.v_at(sol.x[i])));
    }
    rep.deltas.push_back(delta);
    rep.dist_u.push_back(du);
    rep.dist_v.push_back(dv);
    rep.sigma_min.push_back(jacobian_sigma_min(sol));
  }

  // least-squares slope of log(dist) against log(delta)
  size_t n = rep.deltas.size();
  if (n >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
      double lx = std::log(rep.deltas[i]);
      double dist = std::max(rep.dist_u[i], rep.dist_v[i]);
      double ly = std::log(std::max(dist, 1e-300));
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    rep.fitted_order = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  }
  rep.monotone = true;
  for (size_t i = 0; i + 1 < n; ++i) {
    bool decreasing_delta = rep.deltas[i + 1] < rep.deltas[i];
    double a0 = std::max(rep.dist_u[i], rep.dist_v[i]);
    double a1 = std::max(rep.dist_u[i + 1], rep.dist_v[i + 1]);
    if (decreasing_delta ? !(a1 < a0) : !(a1 > a0)) rep.monotone = false;
  }
  return rep;
}

} // namespace sg
