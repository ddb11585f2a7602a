#ifndef CALQ_GEOMETRY_CYLINDER_HPP
#define CALQ_GEOMETRY_CYLINDER_HPP

#include "calq/geometry/grids.hpp"

namespace calq::geometry {

/// Domain descriptor for the product domain: x1 in [a1, b1] times a star
/// cross-section, with the grid resolution it should be discretized at.
/// The 3D Dirichlet solver additionally requires the cross-section to be a
/// disk; general star sections serve the 2D transform and geometry paths.
struct CylinderDomain {
  double a1 = -1.0;
  double b1 = 1.0;
  StarDomain2D cross_section = StarDomain2D::disk({0.0, 0.0}, 1.0);
  int n1 = 16, nr = 9, ntheta = 16;

  CylinderGrid make_grid() const {
    return CylinderGrid(a1, b1, CrossSectionGrid(cross_section, nr, ntheta), n1);
  }
};

}  // namespace calq::geometry

#endif
