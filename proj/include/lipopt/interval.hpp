#pragma once

#include <cmath>

#include "lipopt/errors.hpp"

namespace lipopt {

/// Closed search domain [lo, hi]. Endpoints are finite and lo < hi strictly.
class Interval {
public:
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi))
      throw InvalidConfigError("interval endpoints must be finite");
    if (!(lo < hi)) throw InvalidConfigError("interval requires lo < hi");
  }

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double width() const noexcept { return hi_ - lo_; }
  bool contains(double x) const noexcept { return x >= lo_ && x <= hi_; }

  friend bool operator==(const Interval& a, const Interval& b) noexcept {
    return a.lo_ == b.lo_ && a.hi_ == b.hi_;
  }

private:
  double lo_;
  double hi_;
};

}  // namespace lipopt
