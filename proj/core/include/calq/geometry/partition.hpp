#ifndef CALQ_GEOMETRY_PARTITION_HPP
#define CALQ_GEOMETRY_PARTITION_HPP

#include <memory>
#include <vector>

#include "calq/geometry/angular_set.hpp"
#include "calq/geometry/grids.hpp"
#include "calq/geometry/weights.hpp"

namespace calq::geometry {

enum class BoundaryLabel { Plus, Minus, Tangential };

struct GammaMargins {
  double dirichlet = 0.0;  // enlargement distance for Gamma_D
  double neumann = 0.0;    // enlargement distance for Gamma_N
};

/// Sign decomposition of the cylinder boundary with respect to a weight,
/// split of the tangential part into accessible / inaccessible pieces, and
/// the measurement sets Gamma_D, Gamma_N. Index-aligned with
/// grid->boundary_samples().
struct BoundaryPartition {
  std::shared_ptr<const CylinderGrid> grid;
  std::vector<BoundaryLabel> labels;
  std::vector<char> gamma_a, gamma_i, gamma_D, gamma_N;
  AngularIntervalSet E;
  GammaMargins margins;
  double tangential_tolerance = 1e-8;

  std::size_t size() const { return labels.size(); }
  const std::vector<BoundarySample>& samples() const {
    return grid->boundary_samples();
  }

  /// Re-checks every structural invariant (disjoint cover, tangential
  /// consistency, Gamma_i placement, containments). Throws on violation.
  void validate() const;
};

/// Labels every boundary sample by sign of grad(phi) . nu, splits the
/// tangential set along E, and produces Gamma_D / Gamma_N as the smallest
/// sample sets containing (minus u Gamma_a) and (plus u Gamma_a) enlarged
/// by the margins.
BoundaryPartition partition_boundary(std::shared_ptr<const CylinderGrid> grid,
                                     const CarlemanWeight& weight,
                                     const AngularIntervalSet& E,
                                     const GammaMargins& margins = {},
                                     double tangential_tolerance = 1e-8);

}  // namespace calq::geometry

#endif
