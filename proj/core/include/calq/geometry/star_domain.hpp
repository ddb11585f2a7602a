#ifndef CALQ_GEOMETRY_STAR_DOMAIN_HPP
#define CALQ_GEOMETRY_STAR_DOMAIN_HPP

#include <Eigen/Dense>
#include <vector>

namespace calq::geometry {

/// Star-shaped planar domain whose boundary radius rho(theta) is the
/// trigonometric interpolant of positive samples at uniformly spaced
/// angles. The interpolant is C-infinity, so boundary points, tangents and
/// outward normals are exact.
class StarDomain2D {
 public:
  StarDomain2D(const Eigen::Vector2d& center, std::vector<double> radius_samples);

  static StarDomain2D disk(const Eigen::Vector2d& center, double radius,
                           int n_samples = 16);

  const Eigen::Vector2d& center() const { return center_; }
  const std::vector<double>& radius_samples() const { return radius_samples_; }

  double rho(double theta) const;
  double drho(double theta) const;   // d rho / d theta
  double ddrho(double theta) const;  // second derivative

  Eigen::Vector2d boundary_point(double theta) const;
  /// Unnormalized tangent d/dtheta of the boundary curve.
  Eigen::Vector2d boundary_tangent(double theta) const;
  Eigen::Vector2d outward_normal(double theta) const;
  /// |d boundary / d theta| = sqrt(rho^2 + rho'^2), the arclength element.
  double arc_element(double theta) const;

  bool contains(const Eigen::Vector2d& p, double pad = 0.0) const;
  /// Signed defining function |p - center| - rho(theta(p)); negative inside.
  double boundary_defect(const Eigen::Vector2d& p) const;

  double min_radius() const { return min_rho_; }
  double max_radius() const { return max_rho_; }
  double diameter() const { return 2.0 * max_rho_; }
  double area() const;
  double perimeter() const;

  bool is_disk(double rel_tol = 1e-12) const;

 private:
  void build_coefficients();
  void validate();

  Eigen::Vector2d center_;
  std::vector<double> radius_samples_;
  std::vector<double> cos_coef_;  // a_k, k = 0..N/2
  std::vector<double> sin_coef_;  // b_k, k = 1..ceil(N/2)-1
  double min_rho_ = 0, max_rho_ = 0;
};

}  // namespace calq::geometry

#endif
