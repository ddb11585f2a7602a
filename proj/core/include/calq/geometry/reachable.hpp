#ifndef CALQ_GEOMETRY_REACHABLE_HPP
#define CALQ_GEOMETRY_REACHABLE_HPP

#include <Eigen/Dense>
#include <vector>

#include "calq/geometry/angular_set.hpp"
#include "calq/geometry/grids.hpp"

namespace calq::geometry {

/// The region of the closed cross-section covered by lines that keep the
/// inaccessible boundary part (convexified to K_hull) on one side. "On one
/// side" is non-strict: a line may touch the hull boundary.
struct ReachableSet {
  std::vector<Eigen::Vector2d> k_hull;  // convex hull of boundary \ E samples
  std::vector<char> o_mask;             // per cross-section grid node
  std::vector<char> o_touch;            // admissible only via touching lines
  int n_angles = 0;

  double masked_area(const CrossSectionGrid& grid) const;
};

/// True when the line with direction angle `angle` and signed offset sigma
/// (line = sigma * omega_perp + t * omega) does not meet the open interior
/// of the convex polygon `hull`.
bool line_avoids_hull_interior(const std::vector<Eigen::Vector2d>& hull,
                               double angle, double sigma, double pad = 0.0);

std::vector<Eigen::Vector2d> convex_hull(std::vector<Eigen::Vector2d> points);

/// Hull of the boundary samples off E, at `n_boundary` dense angles.
std::vector<Eigen::Vector2d> inaccessible_hull(const StarDomain2D& dom0,
                                               const AngularIntervalSet& E,
                                               int n_boundary = 2048);

ReachableSet reachable_set(const StarDomain2D& dom0,
                           const AngularIntervalSet& E,
                           const CrossSectionGrid& grid, int n_angles = 512,
                           int n_boundary = 2048);

}  // namespace calq::geometry

#endif
