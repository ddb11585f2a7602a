#include "calq/geometry/grids.hpp"

#include <cmath>

#include "calq/geometry/angular_set.hpp"
#include "calq/util/error.hpp"

namespace calq::geometry {

CrossSectionGrid::CrossSectionGrid(StarDomain2D domain, int nr, int ntheta)
    : domain_(std::move(domain)), nr_(nr), ntheta_(ntheta) {
  util::require(nr_ >= 8 && ntheta_ >= 8, ErrorKind::Validation,
                "CrossSectionGrid: resolutions must be >= 8");
  ds_ = 1.0 / (nr_ - 1);
  dtheta_ = kTwoPi / ntheta_;
  area_weights_.assign(node_count(), 0.0);
  for (int k = 0; k < ntheta_; ++k) {
    const double rho = domain_.rho(theta(k));
    const double rho2dt = rho * rho * dtheta_;
    for (int j = 0; j < nr_; ++j) {
      // Exact split of int s ds over midpoint cells.
      double s_int;
      if (j == 0) {
        s_int = ds_ * ds_ / 8.0;
      } else if (j == nr_ - 1) {
        s_int = 0.5 * (1.0 - (1.0 - 0.5 * ds_) * (1.0 - 0.5 * ds_));
      } else {
        s_int = s(j) * ds_;
      }
      area_weights_[index(j, k)] = s_int * rho2dt;
      total_area_ += s_int * rho2dt;
    }
  }
}

Eigen::Vector2d CrossSectionGrid::position(int j, int k) const {
  const double t = theta(k);
  return domain_.center() +
         s(j) * domain_.rho(t) * Eigen::Vector2d(std::cos(t), std::sin(t));
}

Complex CrossSectionGrid::interpolate_impl(
    const std::function<Complex(int)>& value_at, const Eigen::Vector2d& p,
    bool zero_outside) const {
  const Eigen::Vector2d d = p - domain_.center();
  const double r = d.norm();
  double t = r > 0 ? std::atan2(d.y(), d.x()) : 0.0;
  t = wrap_angle(t);
  const double rho = domain_.rho(t);
  double s_val = r / rho;
  if (s_val > 1.0) {
    if (zero_outside) return {0.0, 0.0};
    s_val = 1.0;
  }
  const double tf = t / dtheta_;
  int k0 = static_cast<int>(std::floor(tf));
  double wt = tf - k0;
  k0 %= ntheta_;
  const int k1 = (k0 + 1) % ntheta_;
  const double sf = s_val / ds_;
  int j0 = static_cast<int>(std::floor(sf));
  if (j0 >= nr_ - 1) j0 = nr_ - 2;
  const double ws = sf - j0;
  const int j1 = j0 + 1;
  return (1 - ws) * ((1 - wt) * value_at(index(j0, k0)) +
                     wt * value_at(index(j0, k1))) +
         ws * ((1 - wt) * value_at(index(j1, k0)) +
               wt * value_at(index(j1, k1)));
}

Complex CrossSectionGrid::interpolate(const std::vector<Complex>& values,
                                      const Eigen::Vector2d& p,
                                      bool zero_outside) const {
  return interpolate_impl([&](int i) { return values[i]; }, p, zero_outside);
}

Complex CrossSectionGrid::interpolate(const Eigen::VectorXcd& values,
                                      const Eigen::Vector2d& p,
                                      bool zero_outside) const {
  return interpolate_impl([&](int i) { return values[i]; }, p, zero_outside);
}

CylinderGrid::CylinderGrid(double a1, double b1, CrossSectionGrid cross_section,
                           int n1)
    : a1_(a1), b1_(b1), n1_(n1), cs_(std::move(cross_section)) {
  util::require(a1_ < b1_, ErrorKind::Validation,
                "CylinderGrid: need a1 < b1");
  util::require(n1_ >= 8, ErrorKind::Validation,
                "CylinderGrid: x1 resolution must be >= 8");
  dx1_ = (b1_ - a1_) / (n1_ - 1);
  x1_weights_.assign(n1_, dx1_);
  x1_weights_.front() = x1_weights_.back() = 0.5 * dx1_;
  build_boundary_samples();
}

Eigen::Vector3d CylinderGrid::position(int i, int j, int k) const {
  const Eigen::Vector2d p = cs_.position(j, k);
  return {x1(i), p.x(), p.y()};
}

double CylinderGrid::boundary_area() const {
  return 2.0 * cs_.total_area() + (b1_ - a1_) * cs_.domain().perimeter();
}

void CylinderGrid::build_boundary_samples() {
  boundary_samples_.clear();
  const int nr = cs_.nr();
  const int nth = cs_.ntheta();
  // Caps: every cross-section node, axis included once.
  for (int cap = 0; cap < 2; ++cap) {
    const int i = cap == 0 ? 0 : n1_ - 1;
    const double sign = cap == 0 ? -1.0 : 1.0;
    for (int j = 0; j < nr; ++j) {
      for (int k = 0; k < (j == 0 ? 1 : nth); ++k) {
        BoundarySample b;
        b.patch = cap == 0 ? BoundaryPatch::CapLow : BoundaryPatch::CapHigh;
        b.i = i;
        b.j = j;
        b.k = k;
        b.theta = cs_.theta(k);
        b.position = position(i, j, k);
        b.normal = Eigen::Vector3d(sign, 0, 0);
        b.weight = j == 0 ? cs_.area_weight(0, 0) * nth : cs_.area_weight(j, k);
        b.corner = (j == nr - 1);
        boundary_samples_.push_back(b);
      }
    }
  }
  // Lateral surface.
  for (int i = 0; i < n1_; ++i) {
    for (int k = 0; k < nth; ++k) {
      BoundarySample b;
      b.patch = BoundaryPatch::Lateral;
      b.i = i;
      b.j = nr - 1;
      b.k = k;
      b.theta = cs_.theta(k);
      b.position = position(i, nr - 1, k);
      const Eigen::Vector2d n2 = cs_.domain().outward_normal(b.theta);
      b.normal = Eigen::Vector3d(0, n2.x(), n2.y());
      b.weight = x1_weights_[i] * cs_.domain().arc_element(b.theta) *
                 cs_.dtheta();
      b.corner = (i == 0 || i == n1_ - 1);
      boundary_samples_.push_back(b);
    }
  }
}

}  // namespace calq::geometry
