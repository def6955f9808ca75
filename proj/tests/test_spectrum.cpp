#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "sg/spectrum.hpp"

using namespace sg;

namespace {

constexpr double kPi = 3.14159265358979323846;

// residual of the d = 1 implicit eigenvalue relation
double d1_relation_residual(double Lambda, double Delta) {
  double h = h_of_Delta_d1(Delta);
  double s = std::sqrt(1.0 + Lambda);
  double sl = std::sqrt(-Lambda);
  double B = s + 0.5 * std::sqrt(2.0 * (2.0 - h));
  return 0.5 * h - s * B + sl * B * std::tan(sl * Delta);
}

// piecewise closed-form eigenfunction rebuilt from the returned constants
double psi_closed(double x, double Delta, const EigenResult &e,
                  const MatchingData &m) {
  double s = std::sqrt(1.0 + e.Lambda);
  double sl = std::sqrt(-e.Lambda);
  if (x < -Delta) {
    double y = x + m.x_star;
    return e.R * std::exp(s * y) * (std::tanh(y) - s);
  }
  if (x > Delta) {
    double y = x - m.x_star;
    return -e.R * std::exp(-s * y) * (std::tanh(y) + s);
  }
  return e.R * e.A * std::cos(sl * x);
}

// potential of the scalar linearization for the piecewise hat at d = 1
double potential_d1(double x, double Delta) {
  double w = std::fabs(x) < Delta ? 0.0 : 1.0; // 1 - rho0
  return w * std::cos(front_d1(x, Delta));
}

template <class F> double d2_fd(F f, double x, double h) {
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) -
          f(x - 2 * h)) /
         (12 * h * h);
}

} // namespace

TEST_CASE("implicit eigenvalue at d = 1") {
  double L1 = eig_d1_implicit(1.0);
  CHECK(L1 > -1.0);
  CHECK(L1 < 0.0);
  CHECK(-L1 / 2.0 == doctest::Approx(0.18).epsilon(0.03)); // alpha* ~ 0.18
  CHECK(std::fabs(d1_relation_residual(L1, 1.0)) < 1e-12);
  CHECK_THROWS_AS(eig_d1_implicit(0.0), DomainError);
}

TEST_CASE("implicit and numeric eigenvalues agree across widths") {
  for (double Delta : {0.3, 1.0, 3.0}) {
    double Li = eig_d1_implicit(Delta);
    EigenResult en = eig_numeric(front_numeric(1.0, Delta));
    CHECK(std::fabs(Li - en.Lambda) < 1e-4);
  }
}

TEST_CASE("closed-form eigenfunction: matching, normalization, residual") {
  double Delta = 1.0;
  double Lambda = eig_d1_implicit(Delta);
  EigenResult e = eigenfunction_d1(Delta, Lambda);
  MatchingData m = matching_d1(Delta);

  // C0 and C1 continuity at both matching points
  for (double sgn : {-1.0, 1.0}) {
    double xm = sgn * Delta;
    double in = psi_closed(xm - sgn * 1e-13, Delta, e, m);
    double out = psi_closed(xm + sgn * 1e-13, Delta, e, m);
    CHECK(std::fabs(in - out) < 1e-9);
    // one-sided second-order slopes extrapolated to the interface without
    // sampling the (branch-ambiguous) interface point itself
    double h = 1e-6;
    auto f = [&](double t) { return psi_closed(t, Delta, e, m); };
    auto slope_from = [&](double dir) { // dir = -sgn: inside, +sgn: outside
      double g1 = f(xm + dir * h), g2 = f(xm + dir * 2 * h),
             g3 = f(xm + dir * 3 * h);
      return dir * (-2.5 * g1 + 4.0 * g2 - 1.5 * g3) / h;
    };
    CHECK(std::fabs(slope_from(-sgn) - slope_from(sgn)) < 1e-6);
  }

  // independent quadrature of the normalization
  using boost::math::quadrature::gauss_kronrod;
  auto sq = [&](double x) {
    double p = psi_closed(x, Delta, e, m);
    return p * p;
  };
  double nrm = gauss_kronrod<double, 31>::integrate(sq, -40.0, 40.0, 12, 1e-12);
  CHECK(std::fabs(nrm - 1.0) < 1e-8);

  // operator residual with 4th-order differencing away from the potential jumps
  double worst = 0;
  for (int i = 0; i <= 200; ++i) {
    double x = -8.0 + 16.0 * i / 200.0;
    if (std::fabs(std::fabs(x) - Delta) < 0.05) continue;
    auto f = [&](double t) { return psi_closed(t, Delta, e, m); };
    double res = d2_fd(f, x, 2.4e-3) - potential_d1(x, Delta) * f(x) -
                 Lambda * f(x);
    worst = std::max(worst, std::fabs(res));
  }
  CHECK(worst < 1e-6);

  // evenness of the closed form on the grid samples
  size_t n = e.x.size();
  for (size_t i = 0; i < n; ++i)
    CHECK(std::fabs(e.psi[i] - e.psi[n - 1 - i]) < 1e-8);
}

TEST_CASE("numeric eigensolver fundamentals") {
  // homogeneous front: translation mode with Lambda = 0
  EigenResult e0 = eig_numeric(front_numeric(0.0, 1.0));
  CHECK(std::fabs(e0.Lambda) < 1e-6);
  CHECK_FALSE(e0.no_bound_state);

  // eigenfunction is sign-definite (largest eigenvalue, Sturm property) and even
  EigenResult e1 = eig_numeric(front_numeric(1.0, 1.0));
  size_t n = e1.psi.size();
  double lo = 1e9, hi = -1e9;
  for (size_t i = 1; i + 1 < n; ++i) {
    lo = std::min(lo, e1.psi[i]);
    hi = std::max(hi, e1.psi[i]);
  }
  CHECK(lo > -1e-9 * hi); // no sign change beyond roundoff of the tail zeros
  for (size_t i = 0; i < n; ++i)
    CHECK(std::fabs(e1.psi[i] - e1.psi[n - 1 - i]) < 1e-8);

  // unit L2 norm on the sample grid
  double h = e1.x[1] - e1.x[0];
  double nrm = 0;
  for (size_t i = 0; i + 1 < n; ++i)
    nrm += 0.5 * (e1.psi[i] * e1.psi[i] + e1.psi[i + 1] * e1.psi[i + 1]) * h;
  CHECK(std::fabs(nrm - 1.0) < 1e-6);

  // error estimate brackets the implicit-relation truth
  double Li = eig_d1_implicit(1.0);
  CHECK(std::fabs(e1.Lambda - Li) < 50.0 * e1.error_estimate + 1e-9);
}

TEST_CASE("numeric eigenvalue approaches the large-Delta limit") {
  double L0 = eig_asym_DeltaLarge(2.0);
  EigenResult e = eig_numeric(front_numeric(2.0, 10.0));
  CHECK(std::fabs(e.Lambda - L0) < 5e-3);
}

TEST_CASE("large-d width relation") {
  CHECK_THROWS_AS(eig_asym_dlarge(0.5, 100.0), DomainError);
  CHECK_THROWS_AS(eig_asym_dlarge(-1.5, 100.0), DomainError);

  bool warned = true;
  CHECK(eig_asym_dlarge(-0.5, 100.0, &warned) ==
        doctest::Approx(0.5 / std::sqrt(0.5) / 100.0));
  CHECK_FALSE(warned);
  eig_asym_dlarge(-0.5, 10.0, &warned);
  CHECK(warned);

  // Delta -> 0 as Lambda -> 0-
  CHECK(eig_asym_dlarge(-1e-8, 100.0) < 1e-9);
}

TEST_CASE("large-Delta implicit relation") {
  CHECK_THROWS_AS(eig_asym_DeltaLarge(1.0), DomainError);

  // d -> 1+: Lambda0 = -(d-1) + O((d-1)^2)
  double L0 = eig_asym_DeltaLarge(1.05);
  CHECK(std::fabs(L0 + 0.05) < 0.01);

  // residual of the defining relation
  for (double d : {1.2, 2.0, 5.0}) {
    double L = eig_asym_DeltaLarge(d);
    double sd = std::sqrt(d);
    double s1 = std::sqrt(1.0 + L);
    double s2 = std::sqrt(d - 1.0 + L);
    double res = (s1 / sd + L + 1.0 / d) * ((d - 1.0) / sd + s2) +
                 (1.0 / sd + s1) *
                     ((d - 1.0) / sd * s2 + L + (d - 1.0) * (d - 1.0) / d);
    CHECK(std::fabs(res) < 1e-12);
    CHECK(L > -std::min(d - 1.0, 1.0));
    CHECK(L < 0.0);
  }
}

TEST_CASE("kink linearization solutions") {
  {
    double a = 0, b = 0, c = 0, d = 0;
    CHECK_THROWS_AS(sg_lin_solutions(0.0, -1.5, 0.0, a, b, c, d), DomainError);
  }

  double Lambda = -0.37, xs = 0.3;
  double p1, p2, dp1, dp2;

  // Wronskian is constant (no first-order term in the operator)
  double w_ref = 0;
  double var = 0;
  for (int i = 0; i <= 100; ++i) {
    double x = -4.0 + 8.0 * i / 100.0;
    sg_lin_solutions(x, Lambda, xs, p1, p2, dp1, dp2);
    double w = p1 * dp2 - p2 * dp1;
    if (i == 0) w_ref = w;
    var = std::max(var, std::fabs(w - w_ref));
  }
  CHECK(var < 1e-10);

  // each solution satisfies the linearized equation about the kink
  for (double L : {-0.37, 0.0}) {
    double worst1 = 0, worst2 = 0;
    auto f1 = [&](double t) {
      double a, b, c, d;
      sg_lin_solutions(t, L, xs, a, b, c, d);
      return a;
    };
    auto f2 = [&](double t) {
      double a, b, c, d;
      sg_lin_solutions(t, L, xs, a, b, c, d);
      return b;
    };
    for (int i = 0; i <= 60; ++i) {
      double x = -3.0 + 6.0 * i / 60.0;
      double V = std::cos(4.0 * std::atan(std::exp(x + xs)));
      sg_lin_solutions(x, L, xs, p1, p2, dp1, dp2);
      worst1 = std::max(worst1,
                        std::fabs(d2_fd(f1, x, 2.4e-3) - V * p1 - L * p1));
      worst2 = std::max(worst2,
                        std::fabs(d2_fd(f2, x, 2.4e-3) - V * p2 - L * p2));
    }
    CHECK(worst1 < 1e-8);
    CHECK(worst2 < 1e-8);
  }

  // closed-form derivatives match finite differences
  sg_lin_solutions(0.7, Lambda, xs, p1, p2, dp1, dp2);
  auto g1 = [&](double t) {
    double a, b, c, d;
    sg_lin_solutions(t, Lambda, xs, a, b, c, d);
    return a;
  };
  auto g2 = [&](double t) {
    double a, b, c, d;
    sg_lin_solutions(t, Lambda, xs, a, b, c, d);
    return b;
  };
  double h = 1e-6;
  CHECK(std::fabs((g1(0.7 + h) - g1(0.7 - h)) / (2 * h) - dp1) < 1e-8);
  CHECK(std::fabs((g2(0.7 + h) - g2(0.7 - h)) / (2 * h) - dp2) < 1e-8);
}

TEST_CASE("coupled-operator block spectrum") {
  EigenResult scalar;
  scalar.Lambda = -0.369;

  CoupledSpectrum c0 = coupled_operator_spectrum(scalar, 0.0);
  CHECK(c0.u_block == scalar.Lambda);
  CHECK(c0.v_block == scalar.Lambda);
  CHECK(c0.continuum_edge == -1.0);

  CoupledSpectrum cz = coupled_operator_spectrum(scalar, -scalar.Lambda / 2.0);
  CHECK(std::fabs(cz.v_block) < 1e-15);

  // near the bifurcation coupling the v-block sits near zero (the two-digit
  // quoted value 0.18 leaves |v-block| = 2|alpha - alpha*| ~ 9e-3)
  double L1 = eig_d1_implicit(1.0);
  EigenResult e;
  e.Lambda = L1;
  CHECK(std::fabs(coupled_operator_spectrum(e, 0.1845).v_block) < 2e-3);
  CHECK(std::fabs(coupled_operator_spectrum(e, 0.18).v_block) < 1e-2);
}

TEST_CASE("tridiagonal top-eigenvalue kernel on a known potential") {
  // W = 1 - 2 sech^2 has top eigenvalue 0 (translation mode of the kink)
  double h = 0.01, L = 30.0;
  size_t n = (size_t)std::lround(2 * L / h) - 1;
  std::vector<double> W(n);
  for (size_t i = 0; i < n; ++i) {
    double x = -L + h * (double)(i + 1);
    double sech = 1.0 / std::cosh(x);
    W[i] = 1.0 - 2.0 * sech * sech;
  }
  std::vector<double> psi;
  double lam = fd_top_eigenvalue(W, h, &psi);
  CHECK(std::fabs(lam) < 5e-5); // second-order discretization bias only

  // eigenvector: positive at the center, shaped like sech
  CHECK(psi[n / 2] > 0);
  double scale = psi[n / 2];
  double worst = 0;
  for (size_t i = 0; i < n; i += 50) {
    double x = -L + h * (double)(i + 1);
    worst = std::max(worst, std::fabs(psi[i] - scale / std::cosh(x)));
  }
  CHECK(worst < 5e-4 * scale + 1e-12);
}
