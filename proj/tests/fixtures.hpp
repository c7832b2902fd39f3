#pragma once

// Ground-truth values for the benchmark landscapes, computed before the build
// with an independent grid + golden-section implementation (numpy, 10^6-point
// grids). The oracle here must reproduce them to 1e-6.
namespace fixtures {

inline constexpr double kF1XStar = 10.0;  // boundary minimum of x sin(x) on [0, 10]
inline constexpr double kF1FStar = -5.440211108893697;

inline constexpr double kF2XStar = 2.22411599463889;
inline constexpr double kF2FStar = -5.801148205517009;

inline constexpr double kF3XStar = 36.5171316754173;
inline constexpr double kF3FStar = -0.9900256145968123;

// max |f1'| over [0, 10] on a 10^6-point grid of the analytic derivative
inline constexpr double kMaxAbsDf1 = 9.631707288577132;

inline constexpr double kOracleTol = 1e-6;

}  // namespace fixtures
