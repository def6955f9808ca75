#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sg {

struct RootError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bisection on a sign-changing bracket [a, b]. Stops when the interval is
// below xtol (absolute + relative) or f hits ftol.
double bisect(const std::function<double(double)> &f, double a, double b,
              double xtol = 1e-15, double ftol = 0.0, int maxit = 200);

// Sample f at n+1 equispaced points on [a, b] and collect all sign-change
// brackets, in order.
std::vector<std::pair<double, double>>
scan_brackets(const std::function<double(double)> &f, double a, double b, int n);

// Secant iteration; falls back to bisection behaviour is the caller's job.
double secant(const std::function<double(double)> &f, double x0, double x1,
              double ftol = 1e-12, int maxit = 100);

} // namespace sg
