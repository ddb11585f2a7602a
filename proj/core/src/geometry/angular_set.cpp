#include "calq/geometry/angular_set.hpp"

#include <algorithm>
#include <cmath>

#include "calq/util/error.hpp"

namespace calq::geometry {

double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0) t += kTwoPi;
  return t;
}

AngularIntervalSet::AngularIntervalSet(
    const std::vector<std::pair<double, double>>& intervals) {
  std::vector<std::pair<double, double>> segs;
  for (auto [a, b] : intervals) {
    util::require(std::isfinite(a) && std::isfinite(b), ErrorKind::Validation,
                  "angular interval endpoints must be finite");
    double width = b - a;
    if (width >= kTwoPi) {
      full_ = true;
      intervals_ = {{0.0, kTwoPi}};
      return;
    }
    if (width <= 0) width += kTwoPi * std::ceil(-width / kTwoPi + 1.0);
    if (width <= 0 || width >= kTwoPi) {
      full_ = width >= kTwoPi;
      if (full_) {
        intervals_ = {{0.0, kTwoPi}};
        return;
      }
      continue;  // zero-width interval contributes nothing (open set)
    }
    const double lo = wrap_angle(a);
    segs.emplace_back(lo, lo + width);
  }
  if (segs.empty()) return;
  // Split wrap-through segments to simplify the merge, re-join afterwards.
  std::vector<std::pair<double, double>> flat;
  for (auto [lo, hi] : segs) {
    if (hi <= kTwoPi) {
      flat.emplace_back(lo, hi);
    } else {
      flat.emplace_back(lo, kTwoPi);
      flat.emplace_back(0.0, hi - kTwoPi);
    }
  }
  std::sort(flat.begin(), flat.end());
  std::vector<std::pair<double, double>> merged;
  for (auto seg : flat) {
    if (!merged.empty() && seg.first <= merged.back().second + 1e-15) {
      merged.back().second = std::max(merged.back().second, seg.second);
    } else {
      merged.push_back(seg);
    }
  }
  // Re-join a pair touching across 0 into a single wrapped interval.
  if (merged.size() >= 2 && merged.front().first <= 1e-15 &&
      merged.back().second >= kTwoPi - 1e-15) {
    merged.back().second = kTwoPi + merged.front().second;
    merged.erase(merged.begin());
  }
  double total = 0;
  for (auto [lo, hi] : merged) total += hi - lo;
  if (total >= kTwoPi - 1e-12) {
    full_ = true;
    intervals_ = {{0.0, kTwoPi}};
    return;
  }
  intervals_ = std::move(merged);
}

AngularIntervalSet AngularIntervalSet::full_circle() {
  AngularIntervalSet s;
  s.full_ = true;
  s.intervals_ = {{0.0, kTwoPi}};
  return s;
}

AngularIntervalSet AngularIntervalSet::empty_set() { return {}; }

bool AngularIntervalSet::contains(double theta) const {
  if (full_) return true;
  const double t = wrap_angle(theta);
  for (auto [lo, hi] : intervals_) {
    if (t > lo && t < hi) return true;
    if (hi > kTwoPi && t + kTwoPi > lo && t + kTwoPi < hi) return true;
  }
  return false;
}

double AngularIntervalSet::measure() const {
  if (full_) return kTwoPi;
  double total = 0;
  for (auto [lo, hi] : intervals_) total += hi - lo;
  return total;
}

}  // namespace calq::geometry
