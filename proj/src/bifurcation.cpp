#include "sg/bifurcation.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "sg/bvp.hpp"
#include "sg/rootfind.hpp"

namespace sg {

namespace {

constexpr double kPi = 3.14159265358979323846;
using boost::math::quadrature::gauss_kronrod;

double gk(const std::function<double(double)> &f, double a, double b) {
  return gauss_kronrod<double, 15>::integrate(f, a, b, 15, 1e-12);
}

// Closed-form quantities of the d = 1 bifurcation point at half-width Delta.
struct D1Point {
  MatchingData m;
  double Lambda, s, sl; // s = sqrt(1+Lambda), sl = sqrt(-Lambda)
  double alpha_star;
  double A, R, Xinf;

  explicit D1Point(double Delta) : Delta_(Delta) {
    Lambda = eig_d1_implicit(Delta);
    alpha_star = -Lambda / 2.0;
    m = matching_d1(Delta);
    s = std::sqrt(1.0 + Lambda);
    sl = std::sqrt(-Lambda);
    EigenResult e = eigenfunction_d1(Delta, Lambda);
    A = e.A;
    R = e.R;
    Xinf = m.x_star + 16.2 / s;
  }

  // normalized eigenfunction, tail branch x > Delta
  double Psi_tail(double x) const {
    double y = x - m.x_star;
    return -R * std::exp(-s * y) * (std::tanh(y) + s);
  }
  double Psi_mid(double x) const { return R * A * std::cos(sl * x); }
  // front angle on the tail, with accurate sin/cos near 2 pi
  void u0_tail(double x, double &sinu, double &cosu) const {
    double t = 4.0 * std::atan(std::exp(-(x - m.x_star)));
    sinu = -std::sin(t);
    cosu = std::cos(t);
  }
  double Y1(double x) const { return 1.0 / std::cosh(x - m.x_star); }
  double Y2(double x) const {
    double y = x - m.x_star;
    return std::sinh(y) + y / std::cosh(y);
  }
  double Y1p(double x) const {
    double y = x - m.x_star;
    return -std::tanh(y) / std::cosh(y);
  }
  double Y2p(double x) const {
    double y = x - m.x_star;
    double ch = std::cosh(y);
    return ch + 1.0 / ch - y * std::sinh(y) / (ch * ch);
  }
  double V21(double x) const {
    auto g1 = [&](double t) {
      double sinu, cosu;
      u0_tail(t, sinu, cosu);
      double P = Psi_tail(t);
      return Y1(t) * sinu * P * P;
    };
    auto g2 = [&](double t) {
      double sinu, cosu;
      u0_tail(t, sinu, cosu);
      double P = Psi_tail(t);
      return Y2(t) * sinu * P * P;
    };
    double I1 = gk(g1, x, Xinf);
    double I2 = gk(g2, x, Xinf);
    return -Y1(x) / 4.0 * I2 + Y2(x) / 4.0 * I1;
  }
  double V21p(double x) const {
    auto g1 = [&](double t) {
      double sinu, cosu;
      u0_tail(t, sinu, cosu);
      double P = Psi_tail(t);
      return Y1(t) * sinu * P * P;
    };
    auto g2 = [&](double t) {
      double sinu, cosu;
      u0_tail(t, sinu, cosu);
      double P = Psi_tail(t);
      return Y2(t) * sinu * P * P;
    };
    // the quadrature-limit terms cancel by the Wronskian structure
    return -Y1p(x) / 4.0 * gk(g2, x, Xinf) + Y2p(x) / 4.0 * gk(g1, x, Xinf);
  }
  // Full second-order correction on x > Delta: the source vanishes on
  // (-Delta, Delta) where the correction is odd and linear, so the decaying
  // particular solution picks up a homogeneous sech component fixed by C^1
  // matching at x = Delta.
  double mu() const {
    double num = V21(Delta_) - Delta_ * V21p(Delta_);
    double den = Delta_ * Y1p(Delta_) - Y1(Delta_);
    return num / den;
  }
  double V2(double x, double mu_val) const { return V21(x) + mu_val * Y1(x); }

private:
  double Delta_;
};

} // namespace

double locus_d1(double Delta) { return -eig_d1_implicit(Delta) / 2.0; }

double locus_dlarge(double alpha, double d) {
  if (!(alpha > 0.0 && alpha < 0.5))
    throw DomainError("locus_dlarge: alpha must lie in (0, 1/2)");
  return 2.0 * alpha / std::sqrt(1.0 - 2.0 * alpha) / d;
}

double locus_DeltaLarge(double d) { return -eig_asym_DeltaLarge(d) / 2.0; }

double lambda_of(double d, double Delta, ProfileKind kind, double delta) {
  if (kind == ProfileKind::Piecewise) {
    return eig_numeric(front_numeric(d, Delta)).Lambda;
  }
  if (kind == ProfileKind::TanhHat) {
    BvpProblem prob;
    prob.profile = InhomogeneityProfile::tanh_hat(Delta, delta, d);
    prob.alpha = 0.25; // irrelevant on the v = 0 branch
    FrontSolution sol = bvp_solve(prob, bvp_initial_guess(prob));
    return eig_numeric(sol).Lambda;
  }
  throw DomainError("lambda_of: unsupported profile kind");
}

LocusCurve locus_numeric(LocusPlane plane, double fixed_value, double lo,
                         double hi, int n, ProfileKind kind, double delta) {
  LocusCurve curve;
  curve.plane = plane;
  curve.fixed_value = fixed_value;
  curve.method = LocusMethod::Numeric;

  if (plane == LocusPlane::AlphaDelta || plane == LocusPlane::AlphaD) {
    curve.fixed_name = plane == LocusPlane::AlphaDelta ? "d" : "Delta";
    for (int i = 0; i < n; ++i) {
      double t = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
      double d = plane == LocusPlane::AlphaDelta ? fixed_value : t;
      double Delta = plane == LocusPlane::AlphaDelta ? t : fixed_value;
      double lam = lambda_of(d, Delta, kind, delta);
      curve.points.push_back({t, -lam / 2.0, 0.0});
    }
    return curve;
  }

  // DDelta: fixed alpha, sweep Delta, root-find d with Lambda(d, Delta) + 2 alpha = 0
  curve.fixed_name = "alpha";
  double alpha = fixed_value;
  double d_prev = -1;
  for (int i = 0; i < n; ++i) {
    double Delta = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
    auto g = [&](double d) { return lambda_of(d, Delta, kind, delta) + 2.0 * alpha; };
    double d_root;
    if (d_prev > 0) {
      d_root = secant(g, d_prev, d_prev * 1.02 + 0.01, 1e-8);
    } else {
      auto brs = scan_brackets(g, 0.05, 8.0, 24);
      if (brs.empty())
        throw SpectralError("locus_numeric: no d bracket at Delta = " +
                            std::to_string(Delta));
      double d0 = bisect(g, brs.front().first, brs.front().second, 1e-4);
      d_root = secant(g, d0, d0 * 1.01, 1e-8);
    }
    d_prev = d_root;
    curve.points.push_back({Delta, d_root, std::fabs(g(d_root))});
  }
  return curve;
}

Case3bTrend case3b_trend(double d, const std::vector<double> &Deltas) {
  if (!(d > 0.0 && d < 1.0))
    throw DomainError("case3b_trend: requires 0 < d < 1");
  Case3bTrend t;
  t.Deltas = Deltas;
  for (double Delta : Deltas)
    t.alpha_star.push_back(-lambda_of(d, Delta, ProfileKind::Piecewise) / 2.0);
  t.strictly_decreasing = true;
  for (size_t i = 0; i + 1 < t.alpha_star.size(); ++i)
    if (!(t.alpha_star[i + 1] < t.alpha_star[i])) t.strictly_decreasing = false;
  return t;
}

double V21_of(double x, double Delta, double alpha_star) {
  if (!(x > Delta))
    throw DomainError("V21_of: defined on x > Delta");
  D1Point pt(Delta);
  (void)alpha_star; // the bifurcation point fixes Lambda = -2 alpha*
  return pt.V21(x);
}

BranchConstant branch_constant(double Delta) {
  D1Point pt(Delta);
  BranchConstant bc;
  bc.alpha_star = pt.alpha_star;

  auto psi4_mid = [&](double x) { return std::pow(pt.Psi_mid(x), 4); };
  auto psi4_tail = [&](double x) { return std::pow(pt.Psi_tail(x), 4); };
  bc.term_psi4 = 4.0 / 3.0 * pt.alpha_star *
                 (gk(psi4_mid, 0.0, Delta) + gk(psi4_tail, Delta, pt.Xinf));

  double mu = pt.mu();
  auto v21_integrand = [&](double x) {
    double sinu, cosu;
    pt.u0_tail(x, sinu, cosu);
    double P = pt.Psi_tail(x);
    return pt.V2(x, mu) * P * P * sinu;
  };
  bc.term_v21 = gk(v21_integrand, Delta, pt.Xinf);

  auto cos_integrand = [&](double x) {
    double sinu, cosu;
    pt.u0_tail(x, sinu, cosu);
    return std::pow(pt.Psi_tail(x), 4) / 6.0 * cosu;
  };
  bc.term_cos = gk(cos_integrand, Delta, pt.Xinf);

  bc.radicand = bc.term_psi4 - (bc.term_v21 + bc.term_cos);
  bc.supercritical = bc.radicand > 0;
  if (!bc.supercritical)
    throw SpectralError("branch_constant: nonpositive radicand (degenerate pitchfork)");
  bc.c = 1.0 / std::sqrt(bc.radicand);
  return bc;
}

BranchPrediction branch_predict(double Delta, double alpha) {
  BranchConstant bc = branch_constant(Delta);
  if (!(alpha > bc.alpha_star))
    throw DomainError("branch_predict: alpha must exceed alpha*(Delta)");
  EigenResult e = eigenfunction_d1(Delta, -2.0 * bc.alpha_star);
  BranchPrediction p;
  p.amplitude = bc.c * std::sqrt(alpha - bc.alpha_star);
  p.x = e.x;
  p.v.resize(e.psi.size());
  for (size_t i = 0; i < e.psi.size(); ++i) p.v[i] = p.amplitude * e.psi[i];
  return p;
}

} // namespace sg
