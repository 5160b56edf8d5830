#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>

namespace gamow {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

// sin(q x) / q, continued to q = 0. Even in q, so either square-root branch
// of q^2 gives the same value.
inline cplx sin_over_q(cplx q, double x) {
  const cplx qx = q * x;
  if (std::abs(qx) < 1e-4) {
    const cplx t = qx * qx;
    return x * (1.0 - t / 6.0 + t * t / 120.0);
  }
  return std::sin(qx) / q;
}

// Principal square root with a signed-zero imaginary part normalized to +0,
// so that real negative arguments always map onto the positive imaginary axis.
inline cplx principal_sqrt(cplx z) {
  if (z.imag() == 0.0) z = cplx(z.real(), 0.0);
  return std::sqrt(z);
}

// (1 / 2 pi i) times the closed-contour integral of f around `center` on a
// circle of the given radius, by the M-node trapezoid rule. For integrands
// analytic in an annulus around the circle the error decays geometrically in M.
template <class F>
auto contour_residue(F&& f, cplx center, double radius, int nodes) {
  using Value = decltype(f(center));
  Value sum{};
  bool first = true;
  for (int j = 0; j < nodes; ++j) {
    const cplx phase = std::polar(1.0, 2.0 * kPi * j / nodes);
    const cplx z = center + radius * phase;
    Value term = f(z) * (radius * phase);
    if (first) {
      sum = term;
      first = false;
    } else {
      sum = sum + term;
    }
  }
  return Value(sum / static_cast<double>(nodes));
}

// Radius for residue contours around a pole: half the distance to the nearest
// threshold, and at most half of |Im E0| (or 0.1 for poles with |Im E0| < 1e-10), so that the
// circle stays off every branch cut of the sheet.
double residue_contour_radius(cplx pole_energy, std::span<const double> thresholds);

}  // namespace gamow
