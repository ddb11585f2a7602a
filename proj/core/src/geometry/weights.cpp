#include "calq/geometry/weights.hpp"

#include <cmath>
#include <limits>

#include "calq/util/error.hpp"

namespace calq::geometry {

namespace {

constexpr double kSingularTol = 1e-12;

// arg(z) = 2 arctan(Im z / (|z| + Re z)), principal branch, valid off
// the cut (-inf, 0].
double arg2(double re, double im) {
  return 2.0 * std::atan2(im, std::hypot(re, im) + re);
}

}  // namespace

std::string to_string(WeightVariant v) {
  switch (v) {
    case WeightVariant::Linear: return "linear";
    case WeightVariant::Log: return "log";
    case WeightVariant::InvertedLinear: return "inverted-linear";
    case WeightVariant::ArgPlane: return "arg-plane";
    case WeightVariant::ArgQuadric: return "arg-quadric";
    case WeightVariant::LogRatio: return "log-ratio";
  }
  return "?";
}

WeightVariant weight_variant_from_string(const std::string& name) {
  if (name == "linear") return WeightVariant::Linear;
  if (name == "log") return WeightVariant::Log;
  if (name == "inverted-linear") return WeightVariant::InvertedLinear;
  if (name == "arg-plane") return WeightVariant::ArgPlane;
  if (name == "arg-quadric") return WeightVariant::ArgQuadric;
  if (name == "log-ratio") return WeightVariant::LogRatio;
  util::fail(ErrorKind::Validation, "unknown weight variant: " + name);
}

CarlemanWeight::CarlemanWeight(WeightVariant variant, Params params)
    : variant_(variant), params_(std::move(params)) {
  util::require(std::abs(params_.alpha.norm() - 1.0) < 1e-10,
                ErrorKind::Validation, "CarlemanWeight: |alpha| must be 1");
  if (variant_ == WeightVariant::ArgPlane) {
    util::require(std::abs(params_.beta.norm() - 1.0) < 1e-10,
                  ErrorKind::Validation, "CarlemanWeight: |beta| must be 1");
    util::require(std::abs(params_.alpha.dot(params_.beta)) < 1e-10,
                  ErrorKind::Validation,
                  "CarlemanWeight: alpha and beta must be orthogonal");
  }
  if (variant_ == WeightVariant::ArgQuadric ||
      variant_ == WeightVariant::LogRatio) {
    util::require(params_.xi.norm() > 0, ErrorKind::Validation,
                  "CarlemanWeight: xi must be nonzero");
  }
}

CarlemanWeight CarlemanWeight::linear(const Eigen::Vector3d& alpha) {
  Params p;
  p.alpha = alpha.normalized();
  return CarlemanWeight(WeightVariant::Linear, p);
}

CarlemanWeight CarlemanWeight::log_weight(const Eigen::Vector3d& x0) {
  Params p;
  p.x0 = x0;
  return CarlemanWeight(WeightVariant::Log, p);
}

double CarlemanWeight::singular_distance(const Eigen::Vector3d& x) const {
  const Eigen::Vector3d y = x - params_.x0;
  switch (variant_) {
    case WeightVariant::Linear:
      return std::numeric_limits<double>::infinity();
    case WeightVariant::Log:
    case WeightVariant::InvertedLinear:
      return y.norm();
    case WeightVariant::ArgPlane: {
      const double u = params_.alpha.dot(y);
      const double w = params_.beta.dot(y);
      return u <= 0 ? std::abs(w) : std::hypot(u, w);
    }
    case WeightVariant::ArgQuadric: {
      const double a = y.squaredNorm() - params_.xi.squaredNorm();
      const double b = 2.0 * y.dot(params_.xi);
      const double c = std::cos(params_.theta), s = std::sin(params_.theta);
      const double zr = c * a - s * b;
      const double zi = s * a + c * b;
      return zr <= 0 ? std::abs(zi) : std::hypot(zr, zi);
    }
    case WeightVariant::LogRatio:
      return std::min((y + params_.xi).norm(), (y - params_.xi).norm());
  }
  return 0.0;
}

WeightEval CarlemanWeight::eval(const Eigen::Vector3d& x) const {
  const Eigen::Vector3d y = x - params_.x0;
  const double scale = std::max(1.0, y.norm());
  util::require(singular_distance(x) > kSingularTol * scale,
                ErrorKind::SingularPoint,
                "weight evaluated too close to its singular set");
  WeightEval out;
  switch (variant_) {
    case WeightVariant::Linear: {
      out.value = params_.alpha.dot(y);
      out.gradient = params_.alpha;
      break;
    }
    case WeightVariant::Log: {
      const double r2 = y.squaredNorm();
      out.value = 0.5 * std::log(r2);
      out.gradient = y / r2;
      break;
    }
    case WeightVariant::InvertedLinear: {
      const double r2 = y.squaredNorm();
      const double ay = params_.alpha.dot(y);
      out.value = ay / r2;
      out.gradient = params_.alpha / r2 - 2.0 * ay * y / (r2 * r2);
      break;
    }
    case WeightVariant::ArgPlane: {
      const double u = params_.alpha.dot(y);
      const double w = params_.beta.dot(y);
      out.value = arg2(u, w);
      const double m2 = u * u + w * w;
      out.gradient = (u * params_.beta - w * params_.alpha) / m2;
      break;
    }
    case WeightVariant::ArgQuadric: {
      const double a = y.squaredNorm() - params_.xi.squaredNorm();
      const double b = 2.0 * y.dot(params_.xi);
      const double c = std::cos(params_.theta), s = std::sin(params_.theta);
      const double zr = c * a - s * b;
      const double zi = s * a + c * b;
      out.value = arg2(zr, zi);
      const Eigen::Vector3d grad_zr = 2.0 * (c * y - s * params_.xi);
      const Eigen::Vector3d grad_zi = 2.0 * (s * y + c * params_.xi);
      out.gradient = (zr * grad_zi - zi * grad_zr) / (zr * zr + zi * zi);
      break;
    }
    case WeightVariant::LogRatio: {
      const Eigen::Vector3d p = y + params_.xi;
      const Eigen::Vector3d m = y - params_.xi;
      out.value = std::log(p.squaredNorm()) - std::log(m.squaredNorm());
      out.gradient = 2.0 * p / p.squaredNorm() - 2.0 * m / m.squaredNorm();
      break;
    }
  }
  return out;
}

}  // namespace calq::geometry
