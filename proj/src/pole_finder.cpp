#include "gamow/pole_finder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gamow/coupled_channel.hpp"
#include "gamow/error.hpp"
#include "gamow/single_channel.hpp"

namespace gamow::poles {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double safe_abs(const Objective& f, cplx e) {
  try {
    const double v = std::abs(f(e));
    return std::isfinite(v) ? v : kInf;
  } catch (const Error&) {
    return kInf;
  }
}

cplx safe_eval(const Objective& f, cplx e) {
  try {
    return f(e);
  } catch (const Error&) {
    return cplx(kInf, 0.0);
  }
}

bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

bool newton(cplx& e, const Objective& f, const RefineOptions& opt) {
  for (int it = 0; it < opt.max_iterations; ++it) {
    const cplx v = safe_eval(f, e);
    if (!finite(v)) return false;
    if (std::abs(v) < opt.value_tol) return true;
    const double h = 1e-7 * std::max(1.0, std::abs(e));
    const cplx d = (safe_eval(f, e + h) - safe_eval(f, e - h)) / (2.0 * h);
    if (!finite(d) || d == 0.0) return false;
    const cplx step = v / d;
    e -= step;
    if (!finite(e)) return false;
    if (std::abs(step) < opt.step_tol * std::max(1.0, std::abs(e))) return true;
  }
  return false;
}

bool muller(cplx& e, const Objective& f, const RefineOptions& opt) {
  const double h = 1e-3 * std::max(1.0, std::abs(e));
  cplx x0 = e - h, x1 = e + h, x2 = e;
  cplx f0 = safe_eval(f, x0), f1 = safe_eval(f, x1), f2 = safe_eval(f, x2);
  for (int it = 0; it < opt.max_iterations; ++it) {
    if (!finite(f0) || !finite(f1) || !finite(f2)) return false;
    if (std::abs(f2) < opt.value_tol) {
      e = x2;
      return true;
    }
    const cplx d01 = (f1 - f0) / (x1 - x0);
    const cplx d12 = (f2 - f1) / (x2 - x1);
    const cplx a = (d12 - d01) / (x2 - x0);
    const cplx b = d12 + a * (x2 - x1);
    const cplx disc = std::sqrt(b * b - 4.0 * a * f2);
    const cplx den = std::abs(b + disc) >= std::abs(b - disc) ? b + disc : b - disc;
    if (den == 0.0) return false;
    const cplx step = 2.0 * f2 / den;
    x0 = x1;
    f0 = f1;
    x1 = x2;
    f1 = f2;
    x2 = x2 - step;
    f2 = safe_eval(f, x2);
    if (std::abs(step) < opt.step_tol * std::max(1.0, std::abs(x2))) {
      e = x2;
      return true;
    }
  }
  return false;
}

}  // namespace

void SearchRegion::validate() const {
  if (!(re_min < re_max)) fail(Errc::kInvalidArgument, "search region needs re_min < re_max");
  if (!(im_min <= im_max)) fail(Errc::kInvalidArgument, "search region needs im_min <= im_max");
  if (grid_nx < 2 || grid_ny < 2) fail(Errc::kInvalidArgument, "search grid needs >= 2 points");
}

double SearchRegion::cell_diagonal() const {
  return std::hypot((re_max - re_min) / (grid_nx - 1), (im_max - im_min) / (grid_ny - 1));
}

bool SearchRegion::contains(cplx e, double margin) const {
  return e.real() >= re_min - margin && e.real() <= re_max + margin &&
         e.imag() >= im_min - margin && e.imag() <= im_max + margin;
}

std::vector<cplx> scan_candidates(const SearchRegion& region, const Objective& objective) {
  region.validate();
  const int nx = region.grid_nx, ny = region.grid_ny;
  const double dx = (region.re_max - region.re_min) / (nx - 1);
  const double dy = (region.im_max - region.im_min) / (ny - 1);
  auto point = [&](int i, int j) {
    return cplx(region.re_min + i * dx, region.im_min + j * dy);
  };
  std::vector<double> grid(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) grid[j * nx + i] = safe_abs(objective, point(i, j));

  std::vector<double> sorted = grid;
  std::nth_element(sorted.begin(), sorted.begin() + sorted.size() / 2, sorted.end());
  const double median = sorted[sorted.size() / 2];

  // Edges are skipped along any axis that has interior points; a monotone
  // objective would otherwise always "minimize" on the boundary.
  const int i_lo = nx > 2 ? 1 : 0, i_hi = nx > 2 ? nx - 2 : nx - 1;
  const int j_lo = ny > 2 ? 1 : 0, j_hi = ny > 2 ? ny - 2 : ny - 1;
  std::vector<cplx> out;
  const double radius = region.cell_diagonal();
  for (int j = j_lo; j <= j_hi; ++j) {
    for (int i = i_lo; i <= i_hi; ++i) {
      const double v = grid[j * nx + i];
      if (!(v < median)) continue;
      bool is_min = true;
      for (int dj = -1; dj <= 1 && is_min; ++dj)
        for (int di = -1; di <= 1; ++di) {
          if (!di && !dj) continue;
          const int ii = i + di, jj = j + dj;
          if (ii < 0 || jj < 0 || ii >= nx || jj >= ny) continue;
          if (grid[jj * nx + ii] < v) {
            is_min = false;
            break;
          }
        }
      if (!is_min) continue;
      const cplx e = point(i, j);
      const bool dup = std::any_of(out.begin(), out.end(),
                                   [&](cplx o) { return std::abs(o - e) <= radius; });
      if (!dup) out.push_back(e);
    }
  }
  return out;
}

cplx refine(cplx seed, const Objective& objective, const RefineOptions& options) {
  auto accept = [&](cplx e) {
    const cplx v = safe_eval(objective, e);
    return finite(e) && finite(v) && std::abs(v) <= options.residual_tol;
  };
  cplx e = seed;
  if (newton(e, objective, options) && accept(e)) return e;
  e = seed;
  if (muller(e, objective, options) && accept(e)) {
    // Polish with Newton; Muller's last step may stop short of full accuracy.
    cplx polished = e;
    if (newton(polished, objective, options) && accept(polished)) return polished;
    return e;
  }
  fail(Errc::kNoConvergence, "pole refinement did not converge from seed (" +
                                 std::to_string(seed.real()) + ", " +
                                 std::to_string(seed.imag()) + ")");
}

Pole classify(cplx energy, const RiemannSheet& sheet, const PotentialModel& model) {
  constexpr double eps = 1e-10;
  PoleKind kind = PoleKind::kUnclassified;
  const bool physical = sheet.is_physical();
  if (physical && std::abs(energy.imag()) < eps && energy.real() < model.min_threshold())
    kind = PoleKind::kBound;
  else if (!physical && energy.imag() < -eps)
    kind = PoleKind::kResonance;
  else if (!physical && std::abs(energy.imag()) < eps)
    kind = PoleKind::kVirtual;
  // Drop round-off in the imaginary part of poles on the real axis.
  if (std::abs(energy.imag()) < eps) energy = cplx(energy.real(), 0.0);
  return Pole::at(energy, sheet, kind);
}

Objective jost_objective(const PotentialModel& model, const RiemannSheet& sheet) {
  if (sheet.size() != model.channel_count())
    fail(Errc::kInvalidArgument, "sheet size does not match the channel count");
  if (model.channel_count() == 1) {
    const auto well = single::SquareWell::from_model(model);
    const ImSign s = sheet[0];
    return [well, s](cplx e) {
      const cplx k = well.wavenumber(e, s);
      return single::jost_plus(k, well) * std::exp(-kI * k * well.range);
    };
  }
  if (model.channel_count() == 2) {
    return [model, sheet](cplx e) {
      const auto k = coupled::wavenumbers(e, model, sheet);
      return coupled::jost_matrix(k, model).determinant() *
             std::exp(-kI * (k(0) + k(1)) * model.range);
    };
  }
  fail(Errc::kUnsupported, "pole search supports one or two channels");
}

bool is_pole(cplx energy, const PotentialModel& model, const RiemannSheet& sheet) {
  try {
    if (model.channel_count() == 1) {
      const auto well = single::SquareWell::from_model(model);
      return single::is_jost_zero(well.wavenumber(energy, sheet[0]), well);
    }
    const auto k = coupled::wavenumbers(energy, model, sheet);
    return std::abs(coupled::jost_matrix(k, model).determinant()) <
           coupled::pole_tolerance(k, model);
  } catch (const Error& e) {
    if (e.code() == Errc::kUnsupported || e.code() == Errc::kInvalidArgument) throw;
    return false;
  }
}

std::vector<Pole> find_poles(const PotentialModel& model, const RiemannSheet& sheet,
                             const SearchRegion& region) {
  const Objective f = jost_objective(model, sheet);
  const double pad = region.cell_diagonal();
  std::vector<Pole> out;
  for (cplx seed : scan_candidates(region, f)) {
    cplx e;
    try {
      e = refine(seed, f);
    } catch (const Error& err) {
      if (err.code() != Errc::kNoConvergence) throw;
      continue;
    }
    if (!region.contains(e, pad) || !is_pole(e, model, sheet)) continue;
    const Pole p = classify(e, sheet, model);
    const bool dup = std::any_of(out.begin(), out.end(), [&](const Pole& o) {
      return std::abs(o.energy - p.energy) < 1e-8 * std::max(1.0, std::abs(p.energy));
    });
    if (!dup) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const Pole& a, const Pole& b) {
    if (a.energy.real() != b.energy.real()) return a.energy.real() < b.energy.real();
    return a.energy.imag() < b.energy.imag();
  });
  return out;
}

}  // namespace gamow::poles
