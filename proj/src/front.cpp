#include "sg/front.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <boost/numeric/odeint.hpp>

#include "sg/rootfind.hpp"

namespace sg {

namespace {

constexpr double kPi = 3.14159265358979323846;
using State2 = std::array<double, 2>;

// inner phase-plane flow u' = p, p' = (1 - d) sin u
struct InnerRhs {
  double d;
  void operator()(const State2 &y, State2 &dy, double) const {
    dy[0] = y[1];
    dy[1] = (1.0 - d) * std::sin(y[0]);
  }
};

// u at x = 0 for the inner flow started at (u-, p-) at x = -Delta
double inner_endpoint(double h, double d, double Delta) {
  double um, pm;
  matching_coords(h, d, um, pm);
  State2 y{um, pm};
  InnerRhs rhs{d};
  boost::numeric::odeint::runge_kutta_fehlberg78<State2> stepper;
  const int n = 2000;
  double dt = Delta / n;
  double x = -Delta;
  for (int i = 0; i < n; ++i) {
    stepper.do_step(rhs, y, x, dt);
    x += dt;
  }
  return y[0];
}

} // namespace

double H0(double u, double p) { return 0.5 * p * p + std::cos(u) - 1.0; }

double H1(double u, double p, double d) {
  return 0.5 * p * p + (1.0 - d) * (1.0 + std::cos(u));
}

double h_of_Delta_d1(double Delta) {
  if (!(Delta > 0)) throw DomainError("h_of_Delta_d1: Delta must be > 0");
  // Delta(h) = arccos(h-1)/sqrt(2h) is a decreasing bijection (0,2) -> (0,inf)
  auto f = [Delta](double h) {
    return std::acos(h - 1.0) / std::sqrt(2.0 * h) - Delta;
  };
  return bisect(f, 1e-300, 2.0 - 1e-16, 1e-16, 0.0, 2000);
}

void matching_coords(double h, double d, double &u_minus, double &p_minus) {
  double carg = -1.0 + (2.0 - h) / d;
  double rad = (4.0 * (d - 1.0) + 2.0 * h) / d;
  // clamp roundoff at the feasibility boundary (h at an endpoint of its range)
  if (carg > 1.0 && carg < 1.0 + 1e-10) carg = 1.0;
  if (carg < -1.0 && carg > -1.0 - 1e-10) carg = -1.0;
  if (rad < 0.0 && rad > -1e-10) rad = 0.0;
  if (carg < -1.0 || carg > 1.0 || rad < 0.0)
    throw DomainError("matching_coords: no matched front at this (h, d)");
  u_minus = std::acos(carg);
  p_minus = std::sqrt(rad);
}

MatchingData matching_d1(double Delta) {
  MatchingData m;
  m.h = h_of_Delta_d1(Delta);
  matching_coords(m.h, 1.0, m.u_minus, m.p_minus);
  m.x_star = std::log(std::tan(m.u_minus / 4.0)) + Delta;
  return m;
}

double front_d1(double x, double Delta) {
  MatchingData m = matching_d1(Delta);
  if (x < -Delta) return 4.0 * std::atan(std::exp(x + m.x_star));
  if (x > Delta) return 2.0 * kPi - 4.0 * std::atan(std::exp(-(x - m.x_star)));
  return kPi + std::sqrt(2.0 * m.h) * x;
}

MatchingData matching_numeric(double d, double Delta) {
  if (!(Delta > 0)) throw DomainError("matching_numeric: Delta must be > 0");
  if (d == 1.0) return matching_d1(Delta);
  MatchingData m;
  if (d == 0.0) { // homogeneous: the inner region is the plain kink, h = 2
    m.h = 2.0;
    m.u_minus = 4.0 * std::atan(std::exp(-Delta));
    m.p_minus = 2.0 / std::cosh(Delta);
    m.x_star = 0.0;
    return m;
  }
  // Root-find the inner level h via the time-of-flight condition u(0) = pi.
  // Work in s = ln(h - h_min): the root is exponentially close to h_min for
  // Delta >> 1 (h_min = 0 for d > 1, 2(1-d) for d < 1).
  double h_min = std::max(0.0, 2.0 * (1.0 - d));
  double span = 2.0 - h_min;
  auto g = [&](double s) {
    return inner_endpoint(h_min + std::exp(s), d, Delta) - kPi;
  };
  double hi = std::log(span);
  double lo = -690.0;
  double glo = g(lo), ghi = g(hi);
  if (!(glo < 0.0) || !(ghi > 0.0))
    throw ConstructionError("front_numeric: no h bracket (g(lo)=" +
                            std::to_string(glo) + ", g(hi)=" + std::to_string(ghi) + ")");
  double s = bisect(g, lo, hi, 5e-16, 1e-13, 300);
  m.h = h_min + std::exp(s);
  matching_coords(m.h, d, m.u_minus, m.p_minus);
  m.x_star = std::log(std::tan(m.u_minus / 4.0)) + Delta;
  return m;
}

std::vector<double> uniform_grid(double Delta, double L_dom, double h_target) {
  int m = std::max<int>(16, (int)std::ceil(Delta / h_target - 1e-12));
  double h = Delta / m;
  int n_half = (int)std::ceil(L_dom / h - 1e-12);
  std::vector<double> x(2 * n_half + 1);
  for (int i = 0; i <= 2 * n_half; ++i) x[i] = (i - n_half) * h;
  return x;
}

FrontSolution front_numeric(double d, double Delta) {
  MatchingData m = matching_numeric(d, Delta);
  FrontSolution f;
  f.d = d;
  f.Delta = Delta;
  f.profile = InhomogeneityProfile::piecewise(Delta, d);
  f.h = m.h;
  f.x_star = m.x_star;
  f.x = uniform_grid(Delta, domain_half_length(Delta), 0.0125);
  size_t n = f.x.size();
  f.u.assign(n, 0.0);
  f.p.assign(n, 0.0);
  f.v.assign(n, 0.0);
  f.q.assign(n, 0.0);

  auto tail_left = [&](double x, double &u, double &p) {
    double y = x + m.x_star;
    u = 4.0 * std::atan(std::exp(y));
    p = 2.0 / std::cosh(y);
  };

  if (d == 0.0) {
    for (size_t i = 0; i < n; ++i) {
      double x = f.x[i];
      if (x <= 0) {
        tail_left(x, f.u[i], f.p[i]);
      } else {
        double u, p;
        tail_left(-x, u, p);
        f.u[i] = 2.0 * kPi - u;
        f.p[i] = p;
      }
    }
    f.residual_norm = 0.0;
    return f;
  }

  // inner nodes in [-Delta, 0]: integrate with dense recording at grid times
  std::vector<size_t> inner_idx;
  std::vector<double> inner_times;
  for (size_t i = 0; i < n; ++i)
    if (f.x[i] >= -Delta - 1e-13 && f.x[i] <= 1e-13) {
      inner_idx.push_back(i);
      inner_times.push_back(f.x[i]);
    }
  inner_times.front() = -Delta; // exact endpoints despite roundoff
  inner_times.back() = 0.0;

  State2 y{m.u_minus, m.p_minus};
  InnerRhs rhs{d};
  auto stepper = boost::numeric::odeint::make_controlled(
      1e-13, 1e-13,
      boost::numeric::odeint::runge_kutta_fehlberg78<State2>());
  size_t k = 0;
  double h_res = 0.0;
  boost::numeric::odeint::integrate_times(
      stepper, rhs, y, inner_times.begin(), inner_times.end(),
      std::min(Delta / 2000.0, 1e-2),
      [&](const State2 &yy, double) {
        size_t i = inner_idx[k++];
        f.u[i] = yy[0];
        f.p[i] = yy[1];
        h_res = std::max(h_res, std::fabs(H1(yy[0], yy[1], d) - m.h));
      });

  size_t mid = inner_idx.back(); // node at x = 0
  for (size_t i = 0; i < n; ++i) {
    double x = f.x[i];
    if (x < -Delta - 1e-13) {
      tail_left(x, f.u[i], f.p[i]);
    } else if (x > 1e-13) {
      size_t j = 2 * mid - i; // mirror node
      if (x <= Delta + 1e-13) {
        f.u[i] = 2.0 * kPi - f.u[j];
        f.p[i] = f.p[j];
      } else {
        double u, p;
        tail_left(-x, u, p);
        f.u[i] = 2.0 * kPi - u;
        f.p[i] = p;
      }
    }
  }
  f.residual_norm = h_res;
  return f;
}

AsymValue front_asym_dlarge(double x, double d, double Delta) {
  AsymValue r;
  r.warn_small_param = d < 25.0;
  double h = matching_numeric(d, Delta).h;
  r.x_star = Delta - 2.0 * std::sqrt(2.0 * (2.0 - h)) / std::sqrt(d);
  if (x < -Delta)
    r.u = 4.0 * std::atan(std::exp(x + r.x_star));
  else if (x > Delta)
    r.u = 2.0 * kPi - 4.0 * std::atan(std::exp(-(x - r.x_star)));
  else
    r.u = kPi;
  return r;
}

AsymValue front_asym_DeltaLarge(double x, double d, double Delta) {
  if (d == 1.0)
    throw DomainError("front_asym_DeltaLarge: d = 1 has the exact front_d1");
  AsymValue r;
  r.warn_small_param = Delta < 5.0;
  if (d > 1.0) {
    double u0m = std::acos((2.0 - d) / d);
    double L = std::log(std::tan((u0m + kPi) / 4.0));
    r.x_star = Delta + std::log(std::tan(u0m / 4.0));
    auto inner = [&](double xx) { // valid on [-Delta, 0]
      double xt = std::sqrt(d - 1.0) * (xx + Delta) + L;
      return 4.0 * std::atan(std::exp(xt)) - kPi;
    };
    if (x < -Delta)
      r.u = 4.0 * std::atan(std::exp(x + r.x_star));
    else if (x > Delta)
      r.u = 2.0 * kPi - 4.0 * std::atan(std::exp(-(x - r.x_star)));
    else if (x <= 0)
      r.u = inner(x);
    else
      r.u = 2.0 * kPi - inner(-x);
  } else {
    double sq = std::sqrt(1.0 - d);
    double eps = 8.0 * (1.0 - sq) / std::sqrt(d) * std::exp(-Delta * sq);
    r.x_star = Delta * (1.0 - sq) + std::log(2.0 * sq * (1.0 - sq) / d);
    if (x < -Delta) {
      r.u = 4.0 * std::atan(std::exp(x + r.x_star));
    } else if (x > Delta) {
      r.u = 2.0 * kPi - 4.0 * std::atan(std::exp(-(x - r.x_star)));
    } else {
      double xi = x * sq;
      r.u = 4.0 * std::atan(std::exp(xi)) +
            eps * eps * (xi / std::cosh(xi) + std::sinh(xi));
    }
  }
  return r;
}

double L_of_eps(double eps) {
  if (!(eps > 0.0 && eps <= 0.2))
    throw DomainError("L_of_eps: eps must lie in (0, 0.2]");
  double guess = std::log(8.0 / eps);
  auto f = [eps](double L) {
    return 4.0 * std::atan(std::exp(L)) - kPi +
           eps * eps / 8.0 * (L / std::cosh(L) + std::sinh(L)) - kPi;
  };
  return bisect(f, guess - 1.5, guess + 1.5, 1e-14);
}

double perturbed_heteroclinic(double xi, double eps) {
  if (!(eps >= 0.0 && eps <= 0.2))
    throw DomainError("perturbed_heteroclinic: eps must lie in [0, 0.2]");
  if (eps > 0.0 && std::fabs(xi) > L_of_eps(eps))
    throw DomainError("perturbed_heteroclinic: |xi| beyond validity range L(eps)");
  return 4.0 * std::atan(std::exp(xi)) - kPi +
         eps * eps / 8.0 * (xi / std::cosh(xi) + std::sinh(xi));
}

double pi_front(double x, double d) {
  if (!(d > 1.0)) throw DomainError("pi_front: requires d > 1");
  double u0m = std::acos((2.0 - d) / d);
  if (x < 0) {
    double x1 = std::log(std::tan(u0m / 4.0));
    return 4.0 * std::atan(std::exp(x + x1));
  }
  double x2 = std::log(std::tan((u0m + kPi) / 4.0));
  return 4.0 * std::atan(std::exp(std::sqrt(d - 1.0) * x + x2)) - kPi;
}

namespace {

double hermite_at(const std::vector<double> &x, const std::vector<double> &f,
                  const std::vector<double> &df, double xq) {
  if (x.size() < 2) return f.empty() ? 0.0 : f[0];
  double h = x[1] - x[0];
  double s = (xq - x[0]) / h;
  long i = (long)std::floor(s);
  if (i < 0) i = 0;
  if (i > (long)x.size() - 2) i = (long)x.size() - 2;
  double t = (xq - x[i]) / h;
  double t2 = t * t, t3 = t2 * t;
  double h00 = 2 * t3 - 3 * t2 + 1, h10 = t3 - 2 * t2 + t;
  double h01 = -2 * t3 + 3 * t2, h11 = t3 - t2;
  return h00 * f[i] + h * h10 * df[i] + h01 * f[i + 1] + h * h11 * df[i + 1];
}

} // namespace

double FrontSolution::u_at(double xq) const { return hermite_at(x, u, p, xq); }
double FrontSolution::v_at(double xq) const { return hermite_at(x, v, q, xq); }

double FrontSolution::v_norm_l2() const {
  if (v.empty()) return 0.0;
  double h = dx();
  double s = 0.0;
  for (size_t i = 0; i + 1 < v.size(); ++i)
    s += 0.5 * (v[i] * v[i] + v[i + 1] * v[i + 1]) * h;
  return std::sqrt(s);
}

} // namespace sg
