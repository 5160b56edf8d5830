#pragma once

#include <functional>
#include <vector>

#include "gamow/model.hpp"

namespace gamow::poles {

struct SearchRegion {
  double re_min = 0.0, re_max = 1.0;
  double im_min = 0.0, im_max = 0.0;
  int grid_nx = 41, grid_ny = 41;

  // Throws InvalidArgument unless re_min < re_max, im_min <= im_max, grids >= 2.
  void validate() const;
  double cell_diagonal() const;
  bool contains(cplx e, double margin = 0.0) const;
};

using Objective = std::function<cplx(cplx)>;

// Interior local minima of |objective| on the grid that lie strictly below the
// median grid value, merged when closer than one cell diagonal. Points where
// the objective throws are treated as +inf.
std::vector<cplx> scan_candidates(const SearchRegion& region, const Objective& objective);

struct RefineOptions {
  int max_iterations = 100;
  double step_tol = 1e-12;      // relative to max(1, |E|)
  double value_tol = 1e-13;     // |objective| accepted as converged
  double residual_tol = 1e-9;   // final acceptance of the root
};

// Newton with a central-difference derivative, Muller's method as fallback.
// Throws NoConvergence if neither reaches a root.
cplx refine(cplx seed, const Objective& objective, const RefineOptions& options = {});

// bound: physical sheet, |Im E| < 1e-10, Re E below the lowest threshold.
// resonance: Im E < -1e-10 on a sheet with a (-) sign.
// virtual: |Im E| < 1e-10 on a non-physical sheet. Otherwise unclassified.
Pole classify(cplx energy, const RiemannSheet& sheet, const PotentialModel& model);

// f_+ e^{-ika} (one channel) or det F_+ e^{-i(k1+k2)a} (two channels).
Objective jost_objective(const PotentialModel& model, const RiemannSheet& sheet);

// Scaled zero test shared with the solvers' pole tolerance.
bool is_pole(cplx energy, const PotentialModel& model, const RiemannSheet& sheet);

// Scan, refine, classify, and deduplicate; only verified zeros inside the
// region (padded by one cell) are returned, sorted by real then imaginary part.
std::vector<Pole> find_poles(const PotentialModel& model, const RiemannSheet& sheet,
                             const SearchRegion& region);

}  // namespace gamow::poles
