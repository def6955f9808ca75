#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "sg/bifurcation.hpp"

using namespace sg;

namespace {

constexpr double kPi = 3.14159265358979323846;

// tail branch of the d = 1 front and eigenfunction, rebuilt from public data
struct TailForms {
  MatchingData m;
  EigenResult e;
  double s;

  explicit TailForms(double Delta)
      : m(matching_d1(Delta)), e(eigenfunction_d1(Delta, eig_d1_implicit(Delta))),
        s(std::sqrt(1.0 + e.Lambda)) {}

  double u0(double x) const {
    return 2.0 * kPi - 4.0 * std::atan(std::exp(-(x - m.x_star)));
  }
  double psi(double x) const {
    double y = x - m.x_star;
    return -e.R * std::exp(-s * y) * (std::tanh(y) + s);
  }
};

} // namespace

TEST_CASE("d = 1 locus and its equivalence to the eigenvalue relation") {
  double a1 = locus_d1(1.0);
  CHECK(a1 > 0.175);
  CHECK(a1 < 0.185);
  CHECK(std::fabs(a1 + eig_d1_implicit(1.0) / 2.0) < 1e-14);
}

TEST_CASE("large-d locus formula") {
  CHECK_THROWS_AS(locus_dlarge(0.0, 100.0), DomainError);
  CHECK_THROWS_AS(locus_dlarge(0.5, 100.0), DomainError);
  CHECK(locus_dlarge(0.25, 100.0) ==
        doctest::Approx(0.005 / std::sqrt(0.5)).epsilon(1e-14));
  CHECK(locus_dlarge(1e-9, 50.0) < 1e-9); // alpha -> 0 gives Delta -> 0
}

TEST_CASE("large-Delta locus") {
  // d -> 1+: alpha0 = (d-1)/2 + O((d-1)^2)
  CHECK(std::fabs(locus_DeltaLarge(1.05) - 0.025) < 0.005);
  CHECK(std::fabs(locus_DeltaLarge(1.01) - 0.005) < 1e-4);

  // Theorem bound alpha0 < min(d-1, 1)/2
  for (double d : {1.2, 2.0, 5.0}) {
    double a0 = locus_DeltaLarge(d);
    CHECK(a0 >= 0.0);
    CHECK(a0 < 0.5 * std::min(d - 1.0, 1.0));
  }
}

TEST_CASE("numeric locus agrees with the d = 1 implicit formula") {
  LocusCurve curve = locus_numeric(LocusPlane::AlphaDelta, 1.0, 0.3, 5.0, 8,
                                   ProfileKind::Piecewise);
  CHECK(curve.points.size() == 8);
  double prev = -1;
  for (const auto &pt : curve.points) {
    CHECK(pt.p1 > prev); // ordered in the continuation parameter
    prev = pt.p1;
    CHECK(std::fabs(pt.p2 - locus_d1(pt.p1)) < 1e-3);
  }
}

TEST_CASE("numeric locus reproduces the branch-termination point in d") {
  LocusCurve curve = locus_numeric(LocusPlane::DDelta, 0.4, 1.0, 1.0, 1,
                                   ProfileKind::Piecewise);
  REQUIRE(curve.points.size() == 1);
  CHECK(curve.points[0].p2 == doctest::Approx(2.33).epsilon(0.05 / 2.33));
  CHECK(curve.points[0].lambda_residual < 1e-6);
}

TEST_CASE("smooth and piecewise hats give nearby loci") {
  double a_pw = locus_d1(1.0);
  LocusCurve sm = locus_numeric(LocusPlane::AlphaDelta, 1.0, 1.0, 1.0, 1,
                                ProfileKind::TanhHat, 1.0 / 15.0);
  CHECK(std::fabs(sm.points[0].p2 - a_pw) < 0.01);
}

TEST_CASE("locus for weak inhomogeneity decays with the width") {
  Case3bTrend t = case3b_trend(0.5, {4.0, 8.0, 12.0});
  CHECK(t.strictly_decreasing);
  CHECK(t.alpha_star.back() < 0.01);
  CHECK_THROWS_AS(case3b_trend(1.5, {4.0}), DomainError);
}

TEST_CASE("variation-of-parameters correction on the tail") {
  double Delta = 1.0;
  TailForms tf(Delta);
  double alpha_star = -tf.e.Lambda / 2.0;

  CHECK_THROWS_AS(V21_of(0.5, Delta, alpha_star), DomainError); // x <= Delta

  // decay at infinity
  CHECK(std::fabs(V21_of(18.0, Delta, alpha_star)) < 1e-10);

  // the first kernel element Y1 = sech(x - x*) annihilates the homogeneous
  // part of the linearized operator
  auto Y1 = [&](double x) { return 1.0 / std::cosh(x - tf.m.x_star); };
  double worstY = 0;
  for (int i = 0; i <= 40; ++i) {
    double x = Delta + 0.1 + 6.0 * i / 40.0;
    double h = 2.4e-3;
    double d2 = (-Y1(x + 2 * h) + 16 * Y1(x + h) - 30 * Y1(x) +
                 16 * Y1(x - h) - Y1(x - 2 * h)) /
                (12 * h * h);
    worstY = std::max(worstY, std::fabs(d2 - std::cos(tf.u0(x)) * Y1(x)));
  }
  CHECK(worstY < 1e-9);

  // full ODE residual V'' - cos(u0) V + (1/2) sin(u0) Psi^2 = 0
  double worstV = 0;
  for (double x : {1.6, 2.4, 3.5}) {
    double h = 5e-3;
    auto V = [&](double t) { return V21_of(t, Delta, alpha_star); };
    double d2 = (-V(x + 2 * h) + 16 * V(x + h) - 30 * V(x) + 16 * V(x - h) -
                 V(x - 2 * h)) /
                (12 * h * h);
    double P = tf.psi(x);
    double res = d2 - std::cos(tf.u0(x)) * V(x) +
                 0.5 * std::sin(tf.u0(x)) * P * P;
    worstV = std::max(worstV, std::fabs(res));
  }
  CHECK(worstV < 1e-7);
}

TEST_CASE("branch constant at the standard width") {
  BranchConstant bc = branch_constant(1.0);
  CHECK(bc.alpha_star == doctest::Approx(locus_d1(1.0)).epsilon(1e-12));
  CHECK(bc.supercritical);
  CHECK(bc.radicand > 0.0);
  CHECK(bc.c > 0.0);
  CHECK(std::isfinite(bc.c));
  // the radicand decomposes into its recorded quadrature terms
  CHECK(bc.radicand ==
        doctest::Approx(bc.term_psi4 - bc.term_v21 - bc.term_cos).epsilon(1e-12));
}

TEST_CASE("leading-order branch prediction") {
  BranchConstant bc = branch_constant(1.0);
  CHECK_THROWS_AS(branch_predict(1.0, bc.alpha_star), DomainError);
  CHECK_THROWS_AS(branch_predict(1.0, 0.1), DomainError);

  BranchPrediction p = branch_predict(1.0, bc.alpha_star + 0.004);
  CHECK(p.amplitude == doctest::Approx(bc.c * std::sqrt(0.004)));
  REQUIRE(p.x.size() == p.v.size());

  // profile is the scaled eigenfunction: max matches amplitude * max Psi
  double vmax = 0;
  for (double v : p.v) vmax = std::max(vmax, std::fabs(v));
  EigenResult e = eigenfunction_d1(1.0, -2.0 * bc.alpha_star);
  double pmax = 0;
  for (double q : e.psi) pmax = std::max(pmax, std::fabs(q));
  CHECK(vmax == doctest::Approx(p.amplitude * pmax).epsilon(1e-12));

  // amplitude obeys the square-root law exactly at leading order
  BranchPrediction p4 = branch_predict(1.0, bc.alpha_star + 0.016);
  CHECK(p4.amplitude == doctest::Approx(2.0 * p.amplitude).epsilon(1e-12));
}
