#include "calq/geometry/partition.hpp"

#include <cmath>

#include "calq/util/error.hpp"

namespace calq::geometry {

BoundaryPartition partition_boundary(std::shared_ptr<const CylinderGrid> grid,
                                     const CarlemanWeight& weight,
                                     const AngularIntervalSet& E,
                                     const GammaMargins& margins,
                                     double tangential_tolerance) {
  util::require(tangential_tolerance >= 0, ErrorKind::Validation,
                "partition_boundary: tolerance must be >= 0");
  const auto& samples = grid->boundary_samples();
  for (const auto& s : samples) {
    util::require(weight.singular_distance(s.position) > 1e-9,
                  ErrorKind::SingularPoint,
                  "partition_boundary: weight singular on the boundary");
  }

  BoundaryPartition part;
  part.grid = std::move(grid);
  part.E = E;
  part.margins = margins;
  part.tangential_tolerance = tangential_tolerance;
  const std::size_t n = samples.size();
  part.labels.resize(n);
  part.gamma_a.assign(n, 0);
  part.gamma_i.assign(n, 0);
  part.gamma_D.assign(n, 0);
  part.gamma_N.assign(n, 0);

  for (std::size_t idx = 0; idx < n; ++idx) {
    const auto& s = samples[idx];
    const double g = weight.eval(s.position).gradient.dot(s.normal);
    if (std::abs(g) <= tangential_tolerance) {
      part.labels[idx] = BoundaryLabel::Tangential;
      const bool lateral = s.patch == BoundaryPatch::Lateral;
      if (lateral && !E.contains(s.theta)) {
        part.gamma_i[idx] = 1;
      } else {
        part.gamma_a[idx] = 1;
      }
    } else {
      part.labels[idx] = g > 0 ? BoundaryLabel::Plus : BoundaryLabel::Minus;
    }
  }

  // Base sets, then margin enlargement by Euclidean distance.
  auto enlarge = [&](const std::vector<char>& base, double margin,
                     std::vector<char>& out) {
    out = base;
    if (margin <= 0) return;
    for (std::size_t i = 0; i < n; ++i) {
      if (out[i]) continue;
      for (std::size_t b = 0; b < n; ++b) {
        if (!base[b]) continue;
        if ((samples[i].position - samples[b].position).norm() <= margin) {
          out[i] = 1;
          break;
        }
      }
    }
  };
  std::vector<char> base_D(n, 0), base_N(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    base_D[i] = (part.labels[i] == BoundaryLabel::Minus || part.gamma_a[i]);
    base_N[i] = (part.labels[i] == BoundaryLabel::Plus || part.gamma_a[i]);
  }
  enlarge(base_D, margins.dirichlet, part.gamma_D);
  enlarge(base_N, margins.neumann, part.gamma_N);
  part.validate();
  return part;
}

void BoundaryPartition::validate() const {
  const auto& s = samples();
  util::require(labels.size() == s.size() && gamma_a.size() == s.size() &&
                    gamma_i.size() == s.size() && gamma_D.size() == s.size() &&
                    gamma_N.size() == s.size(),
                ErrorKind::InconsistentPartition,
                "partition arrays misaligned with boundary samples");
  for (std::size_t i = 0; i < s.size(); ++i) {
    const bool tangential = labels[i] == BoundaryLabel::Tangential;
    if ((gamma_a[i] || gamma_i[i]) && !tangential) {
      util::fail(ErrorKind::InconsistentPartition,
                 "Gamma_a/Gamma_i contains a non-tangential sample");
    }
    if (tangential) {
      util::require(gamma_a[i] != gamma_i[i],
                    ErrorKind::InconsistentPartition,
                    "tangential sample must be in exactly one of "
                    "Gamma_a, Gamma_i");
    }
    if (gamma_i[i]) {
      const bool off_E =
          s[i].patch == BoundaryPatch::Lateral && !E.contains(s[i].theta);
      util::require(off_E, ErrorKind::InconsistentPartition,
                    "Gamma_i sample not in R x (boundary minus E)");
    }
    if ((labels[i] == BoundaryLabel::Minus || gamma_a[i]) && !gamma_D[i]) {
      util::fail(ErrorKind::InconsistentPartition,
                 "Gamma_D does not contain minus u Gamma_a");
    }
    if ((labels[i] == BoundaryLabel::Plus || gamma_a[i]) && !gamma_N[i]) {
      util::fail(ErrorKind::InconsistentPartition,
                 "Gamma_N does not contain plus u Gamma_a");
    }
  }
}

}  // namespace calq::geometry
