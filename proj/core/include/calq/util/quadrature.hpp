#ifndef CALQ_UTIL_QUADRATURE_HPP
#define CALQ_UTIL_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <vector>

namespace calq::util {

using Complex = std::complex<double>;

struct QuadratureResult {
  Complex value{0.0, 0.0};
  double error_estimate = 0.0;  // step-halving estimate, absolute
  int evaluations = 0;
};

/// Adaptive composite Simpson on [a, b] with absolute tolerance `tol`.
/// The error estimate is the accumulated |S_fine - S_coarse|/15 over
/// accepted panels (Richardson), so discontinuous integrands report an
/// honest residual instead of a fake zero.
QuadratureResult adaptive_simpson(const std::function<Complex(double)>& f,
                                  double a, double b, double tol = 1e-8,
                                  int max_depth = 28);

/// Composite weights for n uniformly spaced samples on an interval of total
/// length L (n >= 2). Simpson where the panel count allows, 3/8 correction
/// on an odd tail, trapezoid for n < 4.
std::vector<double> uniform_weights(int n, double length);

/// Trapezoid weights for a periodic uniform grid (all equal; spectral
/// accuracy for smooth periodic integrands).
std::vector<double> periodic_weights(int n, double period);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double r2 = 0.0;
};

/// Ordinary least-squares fit y = intercept + slope * x.
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace calq::util

#endif
