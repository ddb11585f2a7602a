#ifndef CALQ_GEOMETRY_WEIGHTS_HPP
#define CALQ_GEOMETRY_WEIGHTS_HPP

#include <Eigen/Dense>
#include <string>

namespace calq::geometry {

/// The six limiting Carleman weight families in R^3, up to translation and
/// scaling. Parameters: unit vector alpha; unit vector beta orthogonal to
/// alpha (arg-plane); rotation angle theta and nonzero vector xi
/// (arg-quadric, log-ratio); translation x0 (all variants).
enum class WeightVariant {
  Linear,          // alpha . (x - x0)
  Log,             // log |x - x0|
  InvertedLinear,  // alpha . (x - x0) / |x - x0|^2
  ArgPlane,        // arg((alpha + i beta) . (x - x0))
  ArgQuadric,      // arg(e^{i theta} ((x - x0) + i xi)^2)
  LogRatio,        // log(|x - x0 + xi|^2 / |x - x0 - xi|^2)
};

std::string to_string(WeightVariant v);
WeightVariant weight_variant_from_string(const std::string& name);

struct WeightEval {
  double value = 0.0;
  Eigen::Vector3d gradient = Eigen::Vector3d::Zero();
};

class CarlemanWeight {
 public:
  struct Params {
    Eigen::Vector3d alpha = Eigen::Vector3d::UnitX();
    Eigen::Vector3d beta = Eigen::Vector3d::UnitY();
    Eigen::Vector3d xi = Eigen::Vector3d::UnitX();
    Eigen::Vector3d x0 = Eigen::Vector3d::Zero();
    double theta = 0.0;
  };

  CarlemanWeight(WeightVariant variant, Params params);

  static CarlemanWeight linear(const Eigen::Vector3d& alpha);
  static CarlemanWeight log_weight(const Eigen::Vector3d& x0);

  WeightVariant variant() const { return variant_; }
  const Params& params() const { return params_; }

  /// Value and exact analytic gradient. Throws SingularPoint if x is within
  /// machine tolerance of the variant's singular set.
  WeightEval eval(const Eigen::Vector3d& x) const;

  /// Distance proxy to the singular set; +inf for the linear weight. For
  /// arg-quadric the guard is measured in the conformal image plane.
  double singular_distance(const Eigen::Vector3d& x) const;

 private:
  WeightVariant variant_;
  Params params_;
};

}  // namespace calq::geometry

#endif
