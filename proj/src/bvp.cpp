#include "sg/bvp.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <cstdio>
#include <cstdlib>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "sg/rootfind.hpp"
#include "sg/spectrum.hpp"

namespace sg {

namespace {

constexpr double kPi = 3.14159265358979323846;

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;
using Trip = Eigen::Triplet<double>;

double default_h_target(const InhomogeneityProfile &p) {
  double h = 0.025;
  if (p.kind != ProfileKind::Piecewise && p.delta > 0)
    h = std::min(h, p.delta / 4.0);
  return h;
}

// Numerov discretization workspace for the coupled second-order system.
struct Discretization {
  InhomogeneityProfile profile;
  double alpha;
  std::vector<double> x; // full grid incl. boundary nodes
  double h;
  size_t N;              // node count
  size_t M;              // unknowns = 2 (N - 2)
  std::vector<double> w; // 1 - d rho at nodes

  Discretization(const BvpProblem &prob, std::vector<double> grid)
      : profile(prob.profile), alpha(prob.alpha), x(std::move(grid)) {
    N = x.size();
    M = 2 * (N - 2);
    h = x[1] - x[0];
    w.resize(N);
    for (size_t i = 0; i < N; ++i) w[i] = 1.0 - profile.d * profile.rho(x[i]);
  }

  void node_uv(const Vec &y, size_t i, double &u, double &v) const {
    if (i == 0) {
      u = 0;
      v = 0;
    } else if (i == N - 1) {
      u = 2.0 * kPi;
      v = 0;
    } else {
      u = y[2 * (i - 1)];
      v = y[2 * (i - 1) + 1];
    }
  }

  void f_at(size_t i, double u, double v, double &f1, double &f2) const {
    double su = std::sin(u), cu = std::cos(u);
    double sv = std::sin(v), cv = std::cos(v);
    f1 = w[i] * su * cv;
    f2 = w[i] * sv * cu - alpha * std::sin(2.0 * v);
  }

  // 2x2 Jacobian of (f1, f2) w.r.t. (u, v) at node i
  void df_at(size_t i, double u, double v, double J[4]) const {
    double su = std::sin(u), cu = std::cos(u);
    double sv = std::sin(v), cv = std::cos(v);
    J[0] = w[i] * cu * cv;
    J[1] = -w[i] * su * sv;
    J[2] = -w[i] * sv * su;
    J[3] = w[i] * cv * cu - 2.0 * alpha * std::cos(2.0 * v);
  }

  Vec residual(const Vec &y) const {
    std::vector<double> f(2 * N);
    for (size_t i = 0; i < N; ++i) {
      double u, v;
      node_uv(y, i, u, v);
      f_at(i, u, v, f[2 * i], f[2 * i + 1]);
    }
    Vec R(M);
    double ih2 = 1.0 / (h * h);
    for (size_t i = 1; i + 1 < N; ++i) {
      double um, vm, uc, vc, up, vp;
      node_uv(y, i - 1, um, vm);
      node_uv(y, i, uc, vc);
      node_uv(y, i + 1, up, vp);
      R[2 * (i - 1)] = (um - 2 * uc + up) * ih2 -
                       (f[2 * (i - 1)] + 10 * f[2 * i] + f[2 * (i + 1)]) / 12.0;
      R[2 * (i - 1) + 1] =
          (vm - 2 * vc + vp) * ih2 -
          (f[2 * (i - 1) + 1] + 10 * f[2 * i + 1] + f[2 * (i + 1) + 1]) / 12.0;
    }
    return R;
  }

  void jacobian_triplets(const Vec &y, std::vector<Trip> &trip) const {
    double ih2 = 1.0 / (h * h);
    for (size_t i = 1; i + 1 < N; ++i) {
      size_t row = 2 * (i - 1);
      for (int off = -1; off <= 1; ++off) {
        size_t j = i + off;
        if (j == 0 || j == N - 1) continue; // boundary columns absent
        double u, v, J[4];
        node_uv(y, j, u, v);
        df_at(j, u, v, J);
        double fd = off == 0 ? -2.0 * ih2 : ih2;
        double fw = off == 0 ? 10.0 / 12.0 : 1.0 / 12.0;
        size_t col = 2 * (j - 1);
        trip.emplace_back(row, col, fd - fw * J[0]);
        trip.emplace_back(row, col + 1, -fw * J[1]);
        trip.emplace_back(row + 1, col, -fw * J[2]);
        trip.emplace_back(row + 1, col + 1, fd - fw * J[3]);
      }
    }
  }

  SpMat jacobian(const Vec &y) const {
    std::vector<Trip> trip;
    trip.reserve(12 * N);
    jacobian_triplets(y, trip);
    SpMat J(M, M);
    J.setFromTriplets(trip.begin(), trip.end());
    return J;
  }

  Vec pack(const FrontSolution &g) const {
    Vec y(M);
    for (size_t i = 1; i + 1 < N; ++i) {
      y[2 * (i - 1)] = g.u_at(x[i]);
      y[2 * (i - 1) + 1] = g.v_at(x[i]);
    }
    return y;
  }

  FrontSolution unpack(const Vec &y, double res_norm) const {
    FrontSolution s;
    s.profile = profile;
    s.alpha = alpha;
    s.d = profile.d;
    s.Delta = profile.Delta;
    s.residual_norm = res_norm;
    s.x = x;
    s.u.resize(N);
    s.v.resize(N);
    for (size_t i = 0; i < N; ++i) node_uv(y, i, s.u[i], s.v[i]);
    s.p.assign(N, 0.0);
    s.q.assign(N, 0.0);
    auto deriv = [&](const std::vector<double> &f, std::vector<double> &df) {
      for (size_t i = 2; i + 2 < N; ++i)
        df[i] = (-f[i + 2] + 8 * f[i + 1] - 8 * f[i - 1] + f[i - 2]) / (12.0 * h);
      df[0] = (f[1] - f[0]) / h;
      df[1] = (f[2] - f[0]) / (2 * h);
      df[N - 2] = (f[N - 1] - f[N - 3]) / (2 * h);
      df[N - 1] = (f[N - 1] - f[N - 2]) / h;
    };
    deriv(s.u, s.p);
    deriv(s.v, s.q);
    return s;
  }
};

std::vector<double> mesh_for(const BvpProblem &prob) {
  double L = prob.L_dom > 0 ? prob.L_dom : domain_half_length(prob.profile.Delta);
  double ht = prob.h_target > 0 ? prob.h_target : default_h_target(prob.profile);
  return uniform_grid(prob.profile.Delta, L, ht);
}

// Newton with Armijo backtracking; returns the converged unknown vector.
Vec newton_solve(const Discretization &D, Vec y, double *res_out,
                 std::string *trace = nullptr) {
  Eigen::SparseLU<SpMat> lu;
  // rounding floor of the (u_{i-1} - 2u_i + u_{i+1})/h^2 stencil at u ~ 2 pi
  double tol = std::max(1e-10, 4e-15 / (D.h * D.h));
  Vec R = D.residual(y);
  double rn2 = R.squaredNorm();
  for (int it = 0; it < 50; ++it) {
    double sup = R.lpNorm<Eigen::Infinity>();
    if (sup < tol) {
      if (res_out) *res_out = sup;
      return y;
    }
    SpMat J = D.jacobian(y);
    lu.compute(J);
    if (lu.info() != Eigen::Success)
      throw SolveError("bvp_solve: Jacobian factorization failed");
    Vec dy = lu.solve(-R);
    double t = 1.0;
    Vec ytry;
    Vec Rtry;
    double rn2try;
    while (true) {
      ytry = y + t * dy;
      Rtry = D.residual(ytry);
      rn2try = Rtry.squaredNorm();
      if (rn2try <= (1.0 - 1e-4 * t) * rn2 || t < 1e-9) break;
      t *= 0.5;
    }
    if (trace) *trace += " t=" + std::to_string(t);
    if (std::getenv("SG_BVP_DEBUG"))
      std::fprintf(stderr, "newton it=%d sup=%.3e |dy|=%.3e t=%g rn2try=%.3e\n",
                   it, sup, dy.lpNorm<Eigen::Infinity>(), t, rn2try);
    if (t < 1e-9 && rn2try >= rn2) {
      if (sup < 1e-10) { // converged to the rounding floor
        if (res_out) *res_out = sup;
        return y;
      }
      throw SolveError("bvp_solve: Newton stalled (damping trace:" +
                       (trace ? *trace : std::string()) + ")");
    }
    y = ytry;
    R = Rtry;
    rn2 = rn2try;
  }
  throw SolveError("bvp_solve: no convergence in 50 Newton iterations");
}

} // namespace

FrontSolution bvp_initial_guess(const BvpProblem &prob) {
  FrontSolution g = front_numeric(1.0, prob.profile.Delta);
  g.profile = prob.profile;
  g.alpha = prob.alpha;
  return g;
}

FrontSolution bvp_solve(const BvpProblem &prob, const FrontSolution &guess) {
  Discretization D(prob, mesh_for(prob));
  std::string trace;
  double res = 0;
  Vec y = newton_solve(D, D.pack(guess), &res, &trace);
  return D.unpack(y, res);
}

double vblock_leading_eig(const FrontSolution &sol) {
  double h = sol.dx();
  size_t n = sol.x.size();
  auto lam_on = [&](int refine) {
    size_t nn = refine == 1 ? n : 2 * (n - 1) + 1;
    double hh = h / refine;
    std::vector<double> W(nn - 2);
    for (size_t i = 1; i + 1 < nn; ++i) {
      double x = sol.x.front() + hh * i;
      double u = refine == 1 ? sol.u[i] : sol.u_at(x);
      W[i - 1] = (1.0 - sol.d * sol.profile.rho(x)) * std::cos(u) - 2.0 * sol.alpha;
    }
    return fd_top_eigenvalue(W, hh, nullptr);
  };
  double l1 = lam_on(1), l2 = lam_on(2);
  return (4.0 * l2 - l1) / 3.0;
}

namespace {

// Symmetric FD linearization about (u, v) on a refined copy of the solution
// grid; interleaved (du, dv) unknowns at interior nodes.
SpMat linearization_matrix(const FrontSolution &sol, int refine, double &hh,
                           size_t &m) {
  size_t n = sol.x.size();
  size_t nn = refine == 1 ? n : 2 * (n - 1) + 1;
  hh = sol.dx() / refine;
  m = 2 * (nn - 2);
  double ih2 = 1.0 / (hh * hh);
  std::vector<Trip> trip;
  trip.reserve(8 * nn);
  for (size_t i = 1; i + 1 < nn; ++i) {
    double x = sol.x.front() + hh * i;
    double u = refine == 1 ? sol.u[i] : sol.u_at(x);
    double v = refine == 1 ? sol.v[i] : sol.v_at(x);
    double w = 1.0 - sol.d * sol.profile.rho(x);
    double W11 = w * std::cos(u) * std::cos(v);
    double W12 = -w * std::sin(u) * std::sin(v);
    double W22 = w * std::cos(u) * std::cos(v) - 2.0 * sol.alpha * std::cos(2.0 * v);
    size_t r = 2 * (i - 1);
    trip.emplace_back(r, r, -2.0 * ih2 - W11);
    trip.emplace_back(r, r + 1, -W12);
    trip.emplace_back(r + 1, r, -W12);
    trip.emplace_back(r + 1, r + 1, -2.0 * ih2 - W22);
    if (i > 1) {
      trip.emplace_back(r, r - 2, ih2);
      trip.emplace_back(r + 1, r - 1, ih2);
    }
    if (i + 2 < nn) {
      trip.emplace_back(r, r + 2, ih2);
      trip.emplace_back(r + 1, r + 3, ih2);
    }
  }
  SpMat A(m, m);
  A.setFromTriplets(trip.begin(), trip.end());
  return A;
}

// k smallest-magnitude eigenvalues by shift-inverted, deflated inverse iteration
std::vector<double> smallest_eigs(const SpMat &A, int k) {
  size_t m = A.rows();
  Eigen::SparseLU<SpMat> lu;
  double sigma = 0.0;
  for (int attempt = 0; attempt < 3; ++attempt) {
    SpMat As = A;
    if (sigma != 0) {
      SpMat I(m, m);
      I.setIdentity();
      As = A - sigma * I;
    }
    lu.compute(As);
    if (lu.info() == Eigen::Success) break;
    sigma = sigma == 0 ? 1e-8 : sigma * 100;
  }
  if (lu.info() != Eigen::Success)
    throw SolveError("jacobian_spectrum: factorization failed");

  std::vector<Vec> found;
  std::vector<double> eigs;
  for (int e = 0; e < k; ++e) {
    Vec psi(m);
    for (size_t i = 0; i < m; ++i)
      psi[i] = std::sin(0.37 * (double)(i + 1) * (e + 1)) + 0.1; // deterministic start
    psi.normalize();
    double lam = 0;
    for (int it = 0; it < 200; ++it) {
      for (const Vec &f : found) psi -= f.dot(psi) * f;
      psi.normalize();
      Vec z = lu.solve(psi);
      for (const Vec &f : found) z -= f.dot(z) * f;
      z.normalize();
      double lam_new = z.dot(A * z);
      bool done = std::fabs(lam_new - lam) < 1e-13 * (1.0 + std::fabs(lam_new));
      psi = z;
      lam = lam_new;
      if (done && it > 3) break;
    }
    found.push_back(psi);
    eigs.push_back(lam);
  }
  std::sort(eigs.begin(), eigs.end(),
            [](double a, double b) { return std::fabs(a) < std::fabs(b); });
  return eigs;
}

} // namespace

std::vector<double> jacobian_spectrum(const FrontSolution &sol, int k) {
  double h1, h2;
  size_t m1, m2;
  SpMat A1 = linearization_matrix(sol, 1, h1, m1);
  std::vector<double> e1 = smallest_eigs(A1, k);
  SpMat A2 = linearization_matrix(sol, 2, h2, m2);
  std::vector<double> e2 = smallest_eigs(A2, k);
  std::vector<double> out(k);
  for (int i = 0; i < k; ++i) out[i] = (4.0 * e2[i] - e1[i]) / 3.0;
  std::sort(out.begin(), out.end(),
            [](double a, double b) { return std::fabs(a) < std::fabs(b); });
  return out;
}

double jacobian_sigma_min(const FrontSolution &sol) {
  BvpProblem prob;
  prob.profile = sol.profile;
  prob.alpha = sol.alpha;
  prob.L_dom = sol.x.back();
  prob.h_target = sol.dx();
  Discretization D(prob, sol.x);
  Vec y = D.pack(sol);
  SpMat J = D.jacobian(y);
  SpMat Jt = SpMat(J.transpose());
  Eigen::SparseLU<SpMat> lu, lut;
  lu.compute(J);
  lut.compute(Jt);
  if (lu.info() != Eigen::Success || lut.info() != Eigen::Success)
    throw SolveError("jacobian_sigma_min: factorization failed");
  Vec z(D.M);
  for (size_t i = 0; i < D.M; ++i) z[i] = std::sin(0.61 * (double)(i + 1)) + 0.2;
  z.normalize();
  double lam = 0;
  for (int it = 0; it < 100; ++it) {
    Vec w = lu.solve(lut.solve(z)); // (J^T J)^{-1} z
    double lam_new = w.norm();
    w /= lam_new;
    bool done = std::fabs(lam_new - lam) < 1e-10 * lam_new;
    z = w;
    lam = lam_new;
    if (done && it > 3) break;
  }
  return 1.0 / std::sqrt(lam);
}

namespace {

void apply_param(BvpProblem &prob, ContParam p, double val) {
  switch (p) {
  case ContParam::alpha:
    prob.alpha = val;
    break;
  case ContParam::d:
    prob.profile.d = val;
    break;
  case ContParam::Delta:
    prob.profile.Delta = val;
    break;
  }
}

double monitor_eig(const FrontSolution &sol) {
  if (sol.v_norm_l2() < 1e-6) return vblock_leading_eig(sol);
  return jacobian_spectrum(sol, 1)[0];
}

} // namespace

ContinuationResult bvp_continue(BvpProblem problem, ContParam param, double from,
                                double to, const FrontSolution &start,
                                const ContinuationOptions &opts) {
  ContinuationResult result;
  double dir = to > from ? 1.0 : -1.0;

  auto solve_at = [&](double lambda, const FrontSolution &guess) {
    BvpProblem pr = problem;
    apply_param(pr, param, lambda);
    return bvp_solve(pr, guess);
  };

  auto push_point = [&](double lambda, FrontSolution sol, double s) {
    BranchPoint bp;
    bp.param_value = lambda;
    bp.v_norm = sol.v_norm_l2();
    bp.smallest_eig = opts.monitor_eig ? monitor_eig(sol) : 0.0;
    bp.arclength = s;
    bp.solution = std::move(sol);
    result.points.push_back(std::move(bp));
  };

  // Delta continuation re-meshes; natural stepping only.
  if (param == ContParam::Delta) {
    double lam = from;
    FrontSolution sol = solve_at(lam, start);
    push_point(lam, sol, 0.0);
    double ds = opts.initial_step * dir;
    while ((to - lam) * dir > 1e-12) {
      double next = lam + ds;
      if ((next - to) * dir > 0) next = to;
      try {
        FrontSolution snext = solve_at(next, result.points.back().solution);
        lam = next;
        push_point(lam, std::move(snext),
                   result.points.back().arclength + std::fabs(ds));
        ds = std::min(std::fabs(ds) * 1.3, opts.max_step) * dir;
      } catch (const SolveError &) {
        ds *= 0.5;
        if (std::fabs(ds) < opts.min_step) break;
      }
    }
  } else {
    // pseudo-arclength in (y, lambda) on a fixed mesh
    BvpProblem pr0 = problem;
    apply_param(pr0, param, from);
    Discretization D(pr0, mesh_for(pr0));
    const size_t M = D.M;
    double invM = 1.0 / (double)M;
    double btol = std::max(1e-10, 4e-15 / (D.h * D.h));

    auto resid_lambda = [&](const Vec &y, double lambda) {
      Discretization Dl(pr0, D.x);
      Dl.alpha = param == ContParam::alpha ? lambda : problem.alpha;
      if (param == ContParam::d) {
        Dl.profile.d = lambda;
        for (size_t i = 0; i < Dl.N; ++i)
          Dl.w[i] = 1.0 - lambda * Dl.profile.rho(Dl.x[i]);
      }
      return Dl.residual(y);
    };

    double res0;
    BvpProblem prf = problem;
    apply_param(prf, param, from);
    Discretization Df(prf, D.x);
    Vec y = newton_solve(Df, Df.pack(start), &res0);
    double lam = from;
    push_point(lam, Df.unpack(y, res0), 0.0);

    Vec tau_y = Vec::Zero(M);
    double tau_l = dir;
    double ds = opts.initial_step;
    double s_total = 0;
    Vec y_prev = y;
    double lam_prev = lam;
    bool have_prev = false;

    int guard = 0;
    while ((to - lam) * dir > 1e-10 && guard++ < 5000) {
      // predictor
      Vec yp = y + ds * tau_y;
      double lp = lam + ds * tau_l;
      bool clamp = false;
      if ((lp - to) * dir > 0) { // finish with a natural solve exactly at `to`
        clamp = true;
        lp = to;
        yp = y;
      }

      bool ok = true;
      Vec yn = yp;
      double ln = lp;
      try {
        if (clamp) {
          BvpProblem prc = problem;
          apply_param(prc, param, to);
          Discretization Dc(prc, D.x);
          double resc;
          yn = newton_solve(Dc, y, &resc);
          ln = to;
        } else {
          // bordered Newton on [R(y,l); tau . (z - z_pred)]
          for (int it = 0;; ++it) {
            Vec R = resid_lambda(yn, ln);
            double c = invM * tau_y.dot(yn - yp) + tau_l * (ln - lp);
            double sup = R.lpNorm<Eigen::Infinity>();
            if (sup < btol && std::fabs(c) < 1e-12) break;
            if (it >= 12) {
              ok = false;
              break;
            }
            BvpProblem prl = problem;
            apply_param(prl, param, ln);
            Discretization Dl(prl, D.x);
            std::vector<Trip> trip;
            Dl.jacobian_triplets(yn, trip);
            double eps = 1e-7 * (1.0 + std::fabs(ln));
            Vec dRdl = (resid_lambda(yn, ln + eps) - resid_lambda(yn, ln - eps)) /
                       (2.0 * eps);
            for (size_t i = 0; i < M; ++i) {
              if (dRdl[i] != 0) trip.emplace_back(i, M, dRdl[i]);
              if (tau_y[i] != 0) trip.emplace_back(M, i, invM * tau_y[i]);
            }
            trip.emplace_back(M, M, tau_l);
            SpMat B(M + 1, M + 1);
            B.setFromTriplets(trip.begin(), trip.end());
            Eigen::SparseLU<SpMat> lu;
            lu.compute(B);
            if (lu.info() != Eigen::Success) {
              ok = false;
              break;
            }
            Vec rhs(M + 1);
            rhs.head(M) = -R;
            rhs[M] = -c;
            Vec dz = lu.solve(rhs);
            yn += dz.head(M);
            ln += dz[M];
          }
        }
      } catch (const SolveError &) {
        ok = false;
      }

      if (!ok) {
        ds *= 0.5;
        if (ds < opts.min_step) break; // truncated branch
        continue;
      }

      // accept
      y_prev = y;
      lam_prev = lam;
      have_prev = true;
      y = yn;
      lam = ln;
      s_total += ds;
      BvpProblem pra = problem;
      apply_param(pra, param, lam);
      Discretization Da(pra, D.x);
      push_point(lam, Da.unpack(y, Da.residual(y).lpNorm<Eigen::Infinity>()),
                 s_total);
      // secant tangent
      Vec dy = y - y_prev;
      double dl = lam - lam_prev;
      double nrm = std::sqrt(invM * dy.squaredNorm() + dl * dl);
      if (nrm > 0 && have_prev) {
        tau_y = dy / nrm;
        tau_l = dl / nrm;
      }
      ds = std::min(ds * 1.3, opts.max_step);
    }
  }

  // bracket monitor zero crossings
  if (opts.monitor_eig) {
    for (size_t i = 0; i + 1 < result.points.size(); ++i) {
      double e0 = result.points[i].smallest_eig;
      double e1 = result.points[i + 1].smallest_eig;
      if (e0 == 0 || e1 == 0 || std::signbit(e0) == std::signbit(e1)) continue;
      const FrontSolution *seed = &result.points[i].solution;
      auto mu = [&](double lambda) {
        FrontSolution s = solve_at(lambda, *seed);
        return monitor_eig(s);
      };
      double a = result.points[i].param_value;
      double b = result.points[i + 1].param_value;
      if (a > b) std::swap(a, b);
      try {
        result.bifurcation_params.push_back(
            bisect(mu, a, b, opts.locate_tol, 0.0, 80));
      } catch (const RootError &) {
        // monitor noise near the crossing; report the midpoint
        result.bifurcation_params.push_back(0.5 * (a + b));
      }
    }
  }
  return result;
}

BranchSwitchResult switch_branch(BvpProblem problem, double alpha_past_onset) {
  FrontSolution trivial = bvp_solve(problem, bvp_initial_guess(problem));

  // null direction: topmost v-block mode
  double h = trivial.dx();
  size_t n = trivial.x.size();
  std::vector<double> W(n - 2);
  for (size_t i = 1; i + 1 < n; ++i)
    W[i - 1] = (1.0 - trivial.d * trivial.profile.rho(trivial.x[i])) *
                   std::cos(trivial.u[i]) -
               2.0 * trivial.alpha;
  std::vector<double> wvec;
  fd_top_eigenvalue(W, h, &wvec);
  double nrm = 0;
  for (double t : wvec) nrm += t * t * h;
  nrm = std::sqrt(nrm);

  BvpProblem past = problem;
  past.alpha = alpha_past_onset;

  auto seeded = [&](double sign) {
    for (double amp : {1e-3, 3e-3, 1e-2, 3e-2, 1e-1, 3e-1, 0.5, 1.0, 2.0}) {
      FrontSolution guess = trivial;
      for (size_t i = 1; i + 1 < n; ++i) {
        guess.v[i] = sign * amp / nrm * wvec[i - 1];
        guess.q[i] = 0;
      }
      try {
        FrontSolution sol = bvp_solve(past, guess);
        if (sol.v_norm_l2() > 1e-7) return sol;
      } catch (const SolveError &) {
      }
    }
    throw SolveError("switch_branch: no nontrivial branch reached from seeds");
  };

  BranchSwitchResult r;
  r.alpha_onset = problem.alpha;
  r.plus = seeded(+1.0);
  r.minus = seeded(-1.0);
  // orient by the sign of v at the centre
  size_t mid = n / 2;
  if (r.plus.v[mid] < 0) std::swap(r.plus, r.minus);
  return r;
}

} // namespace sg
