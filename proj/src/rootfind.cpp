#include "sg/rootfind.hpp"

#include <cmath>

namespace sg {

double bisect(const std::function<double(double)> &f, double a, double b,
              double xtol, double ftol, int maxit) {
  double fa = f(a), fb = f(b);
  if (fa == 0) return a;
  if (fb == 0) return b;
  if (std::signbit(fa) == std::signbit(fb))
    throw RootError("bisect: no sign change on bracket");
  for (int it = 0; it < maxit; ++it) {
    double m = 0.5 * (a + b);
    double fm = f(m);
    if (fm == 0 || (ftol > 0 && std::fabs(fm) < ftol)) return m;
    if (std::signbit(fm) == std::signbit(fa)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
    if (b - a < xtol * (1.0 + std::fabs(a) + std::fabs(b))) break;
  }
  return 0.5 * (a + b);
}

std::vector<std::pair<double, double>>
scan_brackets(const std::function<double(double)> &f, double a, double b, int n) {
  std::vector<std::pair<double, double>> out;
  double xp = a, fp = f(a);
  for (int i = 1; i <= n; ++i) {
    double x = a + (b - a) * i / n;
    double fx = f(x);
    if (std::isfinite(fp) && std::isfinite(fx) &&
        std::signbit(fp) != std::signbit(fx))
      out.emplace_back(xp, x);
    xp = x;
    fp = fx;
  }
  return out;
}

double secant(const std::function<double(double)> &f, double x0, double x1,
              double ftol, int maxit) {
  double f0 = f(x0), f1 = f(x1);
  for (int it = 0; it < maxit; ++it) {
    if (std::fabs(f1) < ftol) return x1;
    double denom = f1 - f0;
    if (denom == 0) break;
    double x2 = x1 - f1 * (x1 - x0) / denom;
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f(x1);
  }
  if (std::fabs(f1) < ftol * 100) return x1; // accept a near-root
  throw RootError("secant: no convergence");
}

} // namespace sg
