#include "calq/geometry/reachable.hpp"

#include <algorithm>
#include <cmath>

#include "calq/util/error.hpp"

namespace calq::geometry {

std::vector<Eigen::Vector2d> convex_hull(std::vector<Eigen::Vector2d> pts) {
  if (pts.size() < 3) return pts;
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  auto cross = [](const Eigen::Vector2d& o, const Eigen::Vector2d& a,
                  const Eigen::Vector2d& b) {
    return (a.x() - o.x()) * (b.y() - o.y()) -
           (a.y() - o.y()) * (b.x() - o.x());
  };
  std::vector<Eigen::Vector2d> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {  // lower chain
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper chain
    while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

std::vector<Eigen::Vector2d> inaccessible_hull(const StarDomain2D& dom0,
                                               const AngularIntervalSet& E,
                                               int n_boundary) {
  std::vector<Eigen::Vector2d> pts;
  for (int j = 0; j < n_boundary; ++j) {
    const double t = kTwoPi * j / n_boundary;
    if (!E.contains(t)) pts.push_back(dom0.boundary_point(t));
  }
  return convex_hull(std::move(pts));
}

bool line_avoids_hull_interior(const std::vector<Eigen::Vector2d>& hull,
                               double angle, double sigma, double pad) {
  if (hull.size() < 3) return true;  // degenerate hull has empty interior
  const Eigen::Vector2d omega_perp(-std::sin(angle), std::cos(angle));
  double lo = hull[0].dot(omega_perp), hi = lo;
  for (const auto& v : hull) {
    const double p = v.dot(omega_perp);
    lo = std::min(lo, p);
    hi = std::max(hi, p);
  }
  return sigma <= lo + pad || sigma >= hi - pad;
}

double ReachableSet::masked_area(const CrossSectionGrid& grid) const {
  double a = 0;
  for (int j = 0; j < grid.nr(); ++j) {
    for (int k = 0; k < grid.ntheta(); ++k) {
      const int idx = grid.index(j, k);
      if (o_mask[idx]) a += grid.area_weight(j, k);
    }
  }
  return a;
}

ReachableSet reachable_set(const StarDomain2D& dom0,
                           const AngularIntervalSet& E,
                           const CrossSectionGrid& grid, int n_angles,
                           int n_boundary) {
  util::require(n_angles >= 8, ErrorKind::Validation,
                "reachable_set: need at least 8 sampled angles");
  ReachableSet out;
  out.n_angles = n_angles;
  out.k_hull = inaccessible_hull(dom0, E, n_boundary);
  out.o_mask.assign(grid.node_count(), 0);
  out.o_touch.assign(grid.node_count(), 0);

  if (out.k_hull.size() < 3) {
    // Empty interior: every line is admissible, O covers the closed domain.
    out.o_mask.assign(grid.node_count(), 1);
    return out;
  }

  // Projection interval of the hull per sampled direction.
  std::vector<double> lo(n_angles), hi(n_angles);
  std::vector<Eigen::Vector2d> perp(n_angles);
  for (int a = 0; a < n_angles; ++a) {
    const double angle = kTwoPi * 0.5 * a / n_angles;  // directions mod pi
    perp[a] = Eigen::Vector2d(-std::sin(angle), std::cos(angle));
    double l = out.k_hull[0].dot(perp[a]), h = l;
    for (const auto& v : out.k_hull) {
      const double p = v.dot(perp[a]);
      l = std::min(l, p);
      h = std::max(h, p);
    }
    lo[a] = l;
    hi[a] = h;
  }

  const double touch_tol = 1e-9 * std::max(1.0, dom0.max_radius());
  for (int j = 0; j < grid.nr(); ++j) {
    for (int k = 0; k < grid.ntheta(); ++k) {
      const Eigen::Vector2d p = grid.position(j, k);
      bool admissible = false;
      bool clear = false;  // admissible with positive clearance from K
      for (int a = 0; a < n_angles && !clear; ++a) {
        const double sigma = p.dot(perp[a]);
        if (sigma <= lo[a] || sigma >= hi[a]) {
          admissible = true;
          if (sigma <= lo[a] - touch_tol || sigma >= hi[a] + touch_tol) {
            clear = true;
          }
        }
      }
      const int idx = grid.index(j, k);
      out.o_mask[idx] = admissible ? 1 : 0;
      out.o_touch[idx] = (admissible && !clear) ? 1 : 0;
    }
  }
  return out;
}

}  // namespace calq::geometry
