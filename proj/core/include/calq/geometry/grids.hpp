#ifndef CALQ_GEOMETRY_GRIDS_HPP
#define CALQ_GEOMETRY_GRIDS_HPP

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "calq/geometry/star_domain.hpp"

namespace calq::geometry {

using Complex = std::complex<double>;

/// Tensor grid on a star-shaped cross-section in mapped polar coordinates
/// (s, theta), s in [0,1] along each ray, radius s * rho(theta). The axis
/// s = 0 is one geometric point stored ntheta times; fields must hold equal
/// values on the duplicates, and area weights split the axis cell across
/// them so flat sums never double count.
class CrossSectionGrid {
 public:
  CrossSectionGrid(StarDomain2D domain, int nr, int ntheta);

  const StarDomain2D& domain() const { return domain_; }
  int nr() const { return nr_; }
  int ntheta() const { return ntheta_; }
  int node_count() const { return nr_ * ntheta_; }
  double ds() const { return ds_; }
  double dtheta() const { return dtheta_; }

  int index(int j, int k) const { return j * ntheta_ + k; }
  double s(int j) const { return j * ds_; }
  double theta(int k) const { return k * dtheta_; }
  double radius(int j, int k) const { return s(j) * domain_.rho(theta(k)); }
  Eigen::Vector2d position(int j, int k) const;

  /// Quadrature weight of node (j,k); exact partition of the area integral
  /// in s, periodic trapezoid in theta.
  double area_weight(int j, int k) const { return area_weights_[index(j, k)]; }
  const std::vector<double>& area_weights() const { return area_weights_; }
  double total_area() const { return total_area_; }

  /// Bilinear interpolation in (s, theta); returns zero_outside ? 0 : the
  /// clamped rim value when p leaves the domain.
  Complex interpolate(const std::vector<Complex>& values,
                      const Eigen::Vector2d& p, bool zero_outside = true) const;
  Complex interpolate(const Eigen::VectorXcd& values, const Eigen::Vector2d& p,
                      bool zero_outside = true) const;

 private:
  Complex interpolate_impl(const std::function<Complex(int)>& value_at,
                           const Eigen::Vector2d& p, bool zero_outside) const;

  StarDomain2D domain_;
  int nr_, ntheta_;
  double ds_, dtheta_;
  std::vector<double> area_weights_;
  double total_area_ = 0;
};

enum class BoundaryPatch { CapLow, CapHigh, Lateral };

struct BoundarySample {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  Eigen::Vector3d normal = Eigen::Vector3d::Zero();  // outward unit
  double weight = 0.0;                               // surface quadrature
  BoundaryPatch patch = BoundaryPatch::Lateral;
  int i = 0, j = 0, k = 0;  // grid indices (x1, radial, angular)
  double theta = 0.0;       // cross-section angular coordinate
  bool corner = false;      // within one cell of the cap/lateral rim
};

/// Product grid over [a1, b1] x cross-section. Uniform in x1.
class CylinderGrid {
 public:
  CylinderGrid(double a1, double b1, CrossSectionGrid cross_section, int n1);

  double a1() const { return a1_; }
  double b1() const { return b1_; }
  int n1() const { return n1_; }
  double dx1() const { return dx1_; }
  const CrossSectionGrid& cross_section() const { return cs_; }
  int nr() const { return cs_.nr(); }
  int ntheta() const { return cs_.ntheta(); }

  int node_count() const { return n1_ * cs_.node_count(); }
  int index(int i, int j, int k) const {
    return i * cs_.node_count() + cs_.index(j, k);
  }
  double x1(int i) const { return a1_ + i * dx1_; }
  Eigen::Vector3d position(int i, int j, int k) const;

  double volume_weight(int i, int j, int k) const {
    return x1_weights_[i] * cs_.area_weight(j, k);
  }
  double total_volume() const { return (b1_ - a1_) * cs_.total_area(); }
  double boundary_area() const;

  /// Shared boundary sample set (caps + lateral); partitions and traces use
  /// exactly this set, in this order.
  const std::vector<BoundarySample>& boundary_samples() const {
    return boundary_samples_;
  }

  bool is_boundary_node(int i, int j) const {
    return i == 0 || i == n1_ - 1 || j == cs_.nr() - 1;
  }

 private:
  void build_boundary_samples();

  double a1_, b1_, dx1_;
  int n1_;
  CrossSectionGrid cs_;
  std::vector<double> x1_weights_;
  std::vector<BoundarySample> boundary_samples_;
};

}  // namespace calq::geometry

#endif
