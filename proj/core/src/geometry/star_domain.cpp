#include "calq/geometry/star_domain.hpp"

#include <cmath>

#include "calq/geometry/angular_set.hpp"
#include "calq/util/error.hpp"

namespace calq::geometry {

namespace {

constexpr int kDenseCheck = 1024;

bool segments_intersect(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                        const Eigen::Vector2d& c, const Eigen::Vector2d& d) {
  auto orient = [](const Eigen::Vector2d& p, const Eigen::Vector2d& q,
                   const Eigen::Vector2d& r) {
    const double v = (q.x() - p.x()) * (r.y() - p.y()) -
                     (q.y() - p.y()) * (r.x() - p.x());
    return (v > 0) - (v < 0);
  };
  const int o1 = orient(a, b, c), o2 = orient(a, b, d);
  const int o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o1 != o2 && o3 != o4;
}

}  // namespace

StarDomain2D::StarDomain2D(const Eigen::Vector2d& center,
                           std::vector<double> radius_samples)
    : center_(center), radius_samples_(std::move(radius_samples)) {
  util::require(radius_samples_.size() >= 4, ErrorKind::Validation,
                "StarDomain2D: need at least 4 radius samples");
  for (double r : radius_samples_) {
    util::require(std::isfinite(r) && r > 0, ErrorKind::Validation,
                  "StarDomain2D: radius samples must be positive");
  }
  build_coefficients();
  validate();
}

StarDomain2D StarDomain2D::disk(const Eigen::Vector2d& center, double radius,
                                int n_samples) {
  return StarDomain2D(center, std::vector<double>(n_samples, radius));
}

void StarDomain2D::build_coefficients() {
  const int n = static_cast<int>(radius_samples_.size());
  const int half = n / 2;
  cos_coef_.assign(half + 1, 0.0);
  sin_coef_.assign(half + 1, 0.0);
  for (int k = 0; k <= half; ++k) {
    double ck = 0, sk = 0;
    for (int j = 0; j < n; ++j) {
      const double t = kTwoPi * k * j / n;
      ck += radius_samples_[j] * std::cos(t);
      sk += radius_samples_[j] * std::sin(t);
    }
    cos_coef_[k] = 2.0 * ck / n;
    sin_coef_[k] = 2.0 * sk / n;
  }
  cos_coef_[0] *= 0.5;
  if (n % 2 == 0) cos_coef_[half] *= 0.5;
}

double StarDomain2D::rho(double theta) const {
  double v = cos_coef_[0];
  for (std::size_t k = 1; k < cos_coef_.size(); ++k) {
    v += cos_coef_[k] * std::cos(k * theta) + sin_coef_[k] * std::sin(k * theta);
  }
  return v;
}

double StarDomain2D::drho(double theta) const {
  double v = 0;
  for (std::size_t k = 1; k < cos_coef_.size(); ++k) {
    v += k * (-cos_coef_[k] * std::sin(k * theta) +
              sin_coef_[k] * std::cos(k * theta));
  }
  return v;
}

double StarDomain2D::ddrho(double theta) const {
  double v = 0;
  for (std::size_t k = 1; k < cos_coef_.size(); ++k) {
    const double kk = static_cast<double>(k) * k;
    v -= kk * (cos_coef_[k] * std::cos(k * theta) +
               sin_coef_[k] * std::sin(k * theta));
  }
  return v;
}

Eigen::Vector2d StarDomain2D::boundary_point(double theta) const {
  return center_ + rho(theta) * Eigen::Vector2d(std::cos(theta), std::sin(theta));
}

Eigen::Vector2d StarDomain2D::boundary_tangent(double theta) const {
  const double r = rho(theta), dr = drho(theta);
  const double c = std::cos(theta), s = std::sin(theta);
  return {dr * c - r * s, dr * s + r * c};
}

Eigen::Vector2d StarDomain2D::outward_normal(double theta) const {
  const Eigen::Vector2d t = boundary_tangent(theta);
  // Counterclockwise parametrization: rotate the tangent by -90 degrees.
  return Eigen::Vector2d(t.y(), -t.x()).normalized();
}

double StarDomain2D::arc_element(double theta) const {
  const double r = rho(theta), dr = drho(theta);
  return std::sqrt(r * r + dr * dr);
}

bool StarDomain2D::contains(const Eigen::Vector2d& p, double pad) const {
  return boundary_defect(p) <= pad;
}

double StarDomain2D::boundary_defect(const Eigen::Vector2d& p) const {
  const Eigen::Vector2d d = p - center_;
  const double r = d.norm();
  if (r == 0.0) return -min_rho_;
  return r - rho(std::atan2(d.y(), d.x()));
}

double StarDomain2D::area() const {
  double v = 0;
  for (int j = 0; j < kDenseCheck; ++j) {
    const double t = kTwoPi * j / kDenseCheck;
    const double r = rho(t);
    v += 0.5 * r * r;
  }
  return v * kTwoPi / kDenseCheck;
}

double StarDomain2D::perimeter() const {
  double v = 0;
  for (int j = 0; j < kDenseCheck; ++j) {
    v += arc_element(kTwoPi * j / kDenseCheck);
  }
  return v * kTwoPi / kDenseCheck;
}

bool StarDomain2D::is_disk(double rel_tol) const {
  const double mean = cos_coef_[0];
  return (max_rho_ - min_rho_) <= rel_tol * mean;
}

void StarDomain2D::validate() {
  min_rho_ = rho(0.0);
  max_rho_ = min_rho_;
  std::vector<Eigen::Vector2d> poly(kDenseCheck);
  for (int j = 0; j < kDenseCheck; ++j) {
    const double t = kTwoPi * j / kDenseCheck;
    const double r = rho(t);
    util::require(r > 0, ErrorKind::Validation,
                  "StarDomain2D: interpolated radius not positive everywhere");
    min_rho_ = std::min(min_rho_, r);
    max_rho_ = std::max(max_rho_, r);
    poly[j] = boundary_point(t);
  }
  // Simplicity check on the dense polygon; skip neighboring segments.
  for (int i = 0; i < kDenseCheck; ++i) {
    const Eigen::Vector2d& a = poly[i];
    const Eigen::Vector2d& b = poly[(i + 1) % kDenseCheck];
    for (int j = i + 2; j < kDenseCheck; ++j) {
      if (i == 0 && j == kDenseCheck - 1) continue;
      if (segments_intersect(a, b, poly[j], poly[(j + 1) % kDenseCheck])) {
        util::fail(ErrorKind::Validation,
                   "StarDomain2D: boundary curve self-intersects");
      }
    }
  }
}

}  // namespace calq::geometry
