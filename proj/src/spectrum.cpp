#include "sg/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "sg/rootfind.hpp"

namespace sg {

namespace {

constexpr double kPi = 3.14159265358979323846;

// lhs - rhs of the d = 1 implicit eigenvalue relation; the tan argument
// sqrt(-Lambda/(2h)) * arccos(h-1) equals sqrt(-Lambda) * Delta.
double d1_relation(double Lambda, double h, double Delta) {
  double s = std::sqrt(1.0 + Lambda);
  double sl = std::sqrt(-Lambda);
  double B = s + 0.5 * std::sqrt(2.0 * (2.0 - h));
  return 0.5 * h - s * B + sl * B * std::tan(sl * Delta);
}

} // namespace

double eig_d1_implicit(double Delta) {
  if (!(Delta > 0)) throw DomainError("eig_d1_implicit: Delta must be > 0");
  double h = h_of_Delta_d1(Delta);
  auto f = [&](double L) { return d1_relation(L, h, Delta); };
  const double lo = -1.0 + 1e-9, hi = -1e-9;
  auto brackets = scan_brackets(f, lo, hi, 2000);
  // discard brackets straddling a tan pole sqrt(-Lambda) Delta = pi/2 + k pi
  std::vector<double> roots;
  for (auto [a, b] : brackets) {
    bool has_pole = false;
    for (int k = 0;; ++k) {
      double Lp = -std::pow((0.5 + k) * kPi / Delta, 2);
      if (Lp < a - 1e-12) break;
      if (Lp > a && Lp < b) {
        has_pole = true;
        break;
      }
    }
    if (!has_pole) roots.push_back(bisect(f, a, b, 1e-16));
  }
  if (roots.empty())
    throw SpectralError("eig_d1_implicit: no root bracketed on the scan grid");
  return *std::max_element(roots.begin(), roots.end()); // largest eigenvalue
}

EigenResult eigenfunction_d1(double Delta, double Lambda) {
  MatchingData m = matching_d1(Delta);
  double s = std::sqrt(1.0 + Lambda);
  double sl = std::sqrt(-Lambda);
  double cosd = std::cos(sl * Delta);
  if (std::fabs(cosd) < 1e-12)
    throw SpectralError("eigenfunction_d1: interior matching singular (cos = 0)");

  EigenResult r;
  r.method = EigMethod::ImplicitD1;
  r.Lambda = Lambda;
  r.A = -(s + std::sqrt(0.5 * (2.0 - m.h))) *
        std::pow(std::tan(m.u_minus / 4.0), s) / cosd;

  auto raw = [&, xs = m.x_star, A = r.A](double x) {
    if (x < -Delta) {
      double y = x + xs;
      return std::exp(s * y) * (std::tanh(y) - s);
    }
    if (x > Delta) {
      double y = x - xs;
      return -std::exp(-s * y) * (std::tanh(y) + s);
    }
    return A * std::cos(sl * x);
  };

  using boost::math::quadrature::gauss_kronrod;
  double Xinf = m.x_star + 16.2 / s;
  auto sq = [&](double x) {
    double v = raw(x);
    return v * v;
  };
  double nrm2 = 2.0 * (gauss_kronrod<double, 15>::integrate(sq, 0.0, Delta, 15, 1e-13) +
                       gauss_kronrod<double, 15>::integrate(sq, Delta, Xinf, 15, 1e-13));
  r.R = 1.0 / std::sqrt(nrm2);

  FrontSolution grid = front_numeric(1.0, Delta); // reuse the standard grid
  r.x = grid.x;
  r.psi.resize(r.x.size());
  for (size_t i = 0; i < r.x.size(); ++i) r.psi[i] = r.R * raw(r.x[i]);
  return r;
}

// Topmost eigenvalue of the symmetric tridiagonal matrix with constant
// off-diagonal 1/h^2 and diagonal -2/h^2 - W_i (interior Dirichlet
// discretization of psi'' - W psi). Sturm-count bisection isolates the largest
// eigenvalue robustly even when it sits close to the discretized continuum;
// shifted inverse iteration then recovers the eigenvector.
double fd_top_eigenvalue(const std::vector<double> &W, double h,
                         std::vector<double> *psi_out) {
  size_t n = W.size();
  double ih2 = 1.0 / (h * h);
  std::vector<double> diag(n);
  for (size_t i = 0; i < n; ++i) diag[i] = -2.0 * ih2 - W[i];

  // number of eigenvalues below sigma = negative pivots of LDL^T of A - sigma I
  auto count_below = [&](double sigma) {
    size_t cnt = 0;
    double d = diag[0] - sigma;
    if (d < 0) ++cnt;
    const double tiny = 1e-300;
    for (size_t i = 1; i < n; ++i) {
      if (std::fabs(d) < tiny) d = d < 0 ? -tiny : tiny;
      d = diag[i] - sigma - ih2 * ih2 / d;
      if (d < 0) ++cnt;
    }
    return cnt;
  };

  double hi = *std::max_element(diag.begin(), diag.end()) + 2.0 * ih2 + 1.0;
  double lo = *std::min_element(diag.begin(), diag.end()) - 2.0 * ih2 - 1.0;
  // invariant: count_below(hi) == n (all eigenvalues below hi), lo below the top
  for (int it = 0; it < 200 && hi - lo > 1e-14 * (1.0 + std::fabs(lo)); ++it) {
    double mid = 0.5 * (lo + hi);
    if (count_below(mid) == n)
      hi = mid;
    else
      lo = mid;
  }
  double lam = 0.5 * (lo + hi);

  if (psi_out) {
    std::vector<double> psi(n, 1.0), z(n), cw(n), dw(n);
    auto normalize = [&](std::vector<double> &v) {
      double nn = 0;
      for (double t : v) nn += t * t;
      nn = std::sqrt(nn);
      for (double &t : v) t /= nn;
    };
    normalize(psi);
    double sigma = hi + std::max(1e-12, 1e-12 * std::fabs(hi)); // definite shift
    auto solve_shifted = [&]() {
      cw[0] = ih2 / (diag[0] - sigma);
      dw[0] = psi[0] / (diag[0] - sigma);
      for (size_t i = 1; i < n; ++i) {
        double mlt = diag[i] - sigma - ih2 * cw[i - 1];
        cw[i] = ih2 / mlt;
        dw[i] = (psi[i] - ih2 * dw[i - 1]) / mlt;
      }
      z[n - 1] = dw[n - 1];
      for (size_t i = n - 1; i-- > 0;) z[i] = dw[i] - cw[i] * z[i + 1];
    };
    for (int it = 0; it < 40; ++it) {
      solve_shifted();
      psi = z;
      normalize(psi);
      // residual against the bisected eigenvalue
      double rmax = 0;
      for (size_t i = 0; i < n; ++i) {
        double Ap = diag[i] * psi[i];
        if (i > 0) Ap += ih2 * psi[i - 1];
        if (i + 1 < n) Ap += ih2 * psi[i + 1];
        rmax = std::max(rmax, std::fabs(Ap - lam * psi[i]));
      }
      if (rmax < 1e-10 * (1.0 + std::fabs(lam))) break;
    }
    if (psi[n / 2] < 0)
      for (double &t : psi) t = -t;
    *psi_out = std::move(psi);
  }
  return lam;
}

EigenResult eig_numeric(const FrontSolution &front) {
  const double d = front.d, Delta = front.Delta;
  double h = front.dx();
  size_t n = front.x.size();

  auto potential_on = [&](int refine, std::vector<double> &W,
                          std::vector<double> &xs) {
    size_t nn = refine == 1 ? n : 2 * (n - 1) + 1;
    double hh = h / refine;
    W.resize(nn - 2);
    xs.resize(nn - 2);
    for (size_t i = 1; i + 1 < nn; ++i) {
      double x = front.x.front() + hh * i;
      double u = (refine == 1) ? front.u[i] : front.u_at(x);
      W[i - 1] = (1.0 - d * front.profile.rho(x)) * std::cos(u);
      xs[i - 1] = x;
    }
    return hh;
  };

  std::vector<double> W, xs, psi;
  double h1 = potential_on(1, W, xs);
  double lam1 = fd_top_eigenvalue(W, h1, nullptr);
  double h2 = potential_on(2, W, xs);
  double lam2 = fd_top_eigenvalue(W, h2, &psi);

  // the potential is even, so enforce evenness of the eigenvector exactly
  for (size_t i = 0, j = psi.size() - 1; i < j; ++i, --j)
    psi[i] = psi[j] = 0.5 * (psi[i] + psi[j]);

  EigenResult r;
  r.method = EigMethod::NumericFD;
  r.Lambda = (4.0 * lam2 - lam1) / 3.0; // Richardson (second-order scheme)
  r.error_estimate = std::fabs(lam2 - lam1) / 3.0;
  r.no_bound_state = r.Lambda <= -1.0 + 1e-8;
  // L2-normalized samples (zero Dirichlet ends included)
  r.x.resize(xs.size() + 2);
  r.psi.resize(xs.size() + 2, 0.0);
  r.x.front() = front.x.front();
  r.x.back() = front.x.back();
  double nrm2 = 0;
  for (size_t i = 0; i < psi.size(); ++i) nrm2 += psi[i] * psi[i] * h2;
  double scale = 1.0 / std::sqrt(nrm2);
  for (size_t i = 0; i < psi.size(); ++i) {
    r.x[i + 1] = xs[i];
    r.psi[i + 1] = psi[i] * scale;
  }
  return r;
}

double eig_asym_dlarge(double Lambda, double d, bool *warned) {
  if (!(Lambda > -1.0 && Lambda < 0.0))
    throw DomainError("eig_asym_dlarge: Lambda must lie in (-1, 0)");
  if (warned) *warned = d < 25.0;
  return (-Lambda / std::sqrt(1.0 + Lambda)) / d;
}

double eig_asym_DeltaLarge(double d) {
  if (!(d > 1.0)) throw DomainError("eig_asym_DeltaLarge: requires d > 1");
  double sd = std::sqrt(d);
  auto f = [&](double L) {
    double s1 = std::sqrt(1.0 + L);
    double s2 = std::sqrt(d - 1.0 + L);
    return (s1 / sd + L + 1.0 / d) * ((d - 1.0) / sd + s2) +
           (1.0 / sd + s1) * ((d - 1.0) / sd * s2 + L + (d - 1.0) * (d - 1.0) / d);
  };
  double lo = -std::min(d - 1.0, 1.0) + 1e-12, hi = -1e-12;
  auto brackets = scan_brackets(f, lo, hi, 2000);
  if (brackets.empty())
    throw SpectralError("eig_asym_DeltaLarge: no root in (-min(d-1,1), 0)");
  auto [a, b] = brackets.back(); // closest to zero
  return bisect(f, a, b, 1e-16);
}

void sg_lin_solutions(double x, double Lambda, double x_star, double &psi1,
                      double &psi2, double &dpsi1, double &dpsi2) {
  if (!(Lambda > -1.0)) throw DomainError("sg_lin_solutions: Lambda must be > -1");
  double s = std::sqrt(1.0 + Lambda);
  double y = x + x_star;
  double th = std::tanh(y);
  double em = std::exp(-s * y), ep = std::exp(s * y);
  psi1 = em * (th + s);
  psi2 = ep * (th - s);
  dpsi1 = em * (-s * th - Lambda - th * th);
  dpsi2 = ep * (s * th - Lambda - th * th);
}

CoupledSpectrum coupled_operator_spectrum(const EigenResult &scalar, double alpha) {
  CoupledSpectrum c;
  c.u_block = scalar.Lambda;
  c.v_block = scalar.Lambda + 2.0 * alpha;
  c.continuum_edge = -1.0 + 2.0 * alpha;
  return c;
}

} // namespace sg
