#include "calq/util/quadrature.hpp"

#include <cmath>

#include "calq/util/error.hpp"

namespace calq::util {

namespace {

struct PanelState {
  const std::function<Complex(double)>* f;
  double tol;
  int max_depth;
  Complex sum;
  double err;
  int evals;
};

Complex simpson(Complex fa, Complex fm, Complex fb, double h) {
  return (h / 6.0) * (fa + 4.0 * fm + fb);
}

void refine(PanelState& st, double a, double b, Complex fa, Complex fm,
            Complex fb, Complex whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const Complex flm = (*st.f)(lm);
  const Complex frm = (*st.f)(rm);
  st.evals += 2;
  const Complex left = simpson(fa, flm, fm, m - a);
  const Complex right = simpson(fm, frm, fb, b - m);
  const Complex delta = left + right - whole;
  if (depth >= st.max_depth || std::abs(delta) <= 15.0 * tol) {
    st.sum += left + right + delta / 15.0;
    st.err += std::abs(delta) / 15.0;
    return;
  }
  refine(st, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1);
  refine(st, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

QuadratureResult adaptive_simpson(const std::function<Complex(double)>& f,
                                  double a, double b, double tol,
                                  int max_depth) {
  QuadratureResult out;
  if (a == b) return out;
  PanelState st{&f, tol, max_depth, Complex(0.0, 0.0), 0.0, 0};
  // Seed with a handful of panels so narrow features away from the
  // midpoint are not missed by the first Simpson test.
  const int seed_panels = 8;
  const double h = (b - a) / seed_panels;
  for (int p = 0; p < seed_panels; ++p) {
    const double pa = a + p * h;
    const double pb = pa + h;
    const double pm = 0.5 * (pa + pb);
    const Complex fa = f(pa), fm = f(pm), fb = f(pb);
    st.evals += 3;
    refine(st, pa, pb, fa, fm, fb, simpson(fa, fm, fb, h),
           tol / seed_panels, 0);
  }
  out.value = st.sum;
  out.error_estimate = st.err;
  out.evaluations = st.evals;
  return out;
}

std::vector<double> uniform_weights(int n, double length) {
  require(n >= 2, ErrorKind::Validation, "uniform_weights: need n >= 2");
  const double h = length / (n - 1);
  std::vector<double> w(n, 0.0);
  if (n < 4) {
    w.assign(n, h);
    w.front() = w.back() = 0.5 * h;
    if (n == 3) {  // single Simpson panel
      w = {h / 3.0, 4.0 * h / 3.0, h / 3.0};
    }
    return w;
  }
  int simpson_end = n - 1;        // index of last node of the Simpson block
  const bool odd_tail = (n - 1) % 2 != 0;
  if (odd_tail) simpson_end = n - 4;  // leave a 3-panel tail for 3/8 rule
  for (int i = 0; i < simpson_end; i += 2) {
    w[i] += h / 3.0;
    w[i + 1] += 4.0 * h / 3.0;
    w[i + 2] += h / 3.0;
  }
  if (odd_tail) {
    const int s = simpson_end;
    w[s] += 3.0 * h / 8.0;
    w[s + 1] += 9.0 * h / 8.0;
    w[s + 2] += 9.0 * h / 8.0;
    w[s + 3] += 3.0 * h / 8.0;
  }
  return w;
}

std::vector<double> periodic_weights(int n, double period) {
  require(n >= 1, ErrorKind::Validation, "periodic_weights: need n >= 1");
  return std::vector<double>(n, period / n);
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  require(x.size() == y.size() && x.size() >= 2, ErrorKind::Validation,
          "fit_line: need matching x/y with at least 2 points");
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double denom = n * sxx - sx * sx;
  LineFit fit;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  const double ybar = sy / n;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double pred = fit.intercept + fit.slope * x[i];
    ss_res += (y[i] - pred) * (y[i] - pred);
    ss_tot += (y[i] - ybar) * (y[i] - ybar);
  }
  fit.r2 = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  if (x.size() > 2) {
    const double var = ss_res / (n - 2.0);
    fit.slope_stderr = std::sqrt(var * n / denom);
  }
  return fit;
}

}  // namespace calq::util
