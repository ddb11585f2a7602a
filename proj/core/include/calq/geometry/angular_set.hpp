#ifndef CALQ_GEOMETRY_ANGULAR_SET_HPP
#define CALQ_GEOMETRY_ANGULAR_SET_HPP

#include <utility>
#include <vector>

namespace calq::geometry {

constexpr double kTwoPi = 6.283185307179586477;

/// Finite union of open angular intervals on the circle, used for the
/// accessible part E of the cross-section boundary. Intervals may be given
/// in any order, wrap through 2*pi (e.g. [350 deg, 10 deg]), and overlap;
/// construction normalizes to a disjoint sorted list.
class AngularIntervalSet {
 public:
  AngularIntervalSet() = default;
  explicit AngularIntervalSet(
      const std::vector<std::pair<double, double>>& intervals);

  static AngularIntervalSet full_circle();
  static AngularIntervalSet empty_set();

  bool contains(double theta) const;
  bool is_empty() const { return intervals_.empty(); }
  bool is_full() const { return full_; }
  double measure() const;

  /// Normalized disjoint intervals with 0 <= lo < 2*pi, lo < hi <= lo + 2*pi.
  /// An interval crossing 0 is stored un-split with hi > 2*pi.
  const std::vector<std::pair<double, double>>& intervals() const {
    return intervals_;
  }

 private:
  std::vector<std::pair<double, double>> intervals_;
  bool full_ = false;
};

/// theta reduced to [0, 2*pi)
double wrap_angle(double theta);

}  // namespace calq::geometry

#endif
