#pragma once

#include "gamow/model.hpp"

namespace gamow::single {

// One-channel s-wave square well of reduced depth V0 and range a.
struct SquareWell {
  double depth = 0.0;
  double range = 1.0;
  double threshold = 0.0;
  Units units;

  static SquareWell from_model(const PotentialModel& model);

  cplx wavenumber(cplx energy, ImSign sign) const {
    return channel_wavenumber(energy, threshold, sign, units);
  }
  cplx interior_wavenumber(cplx k) const { return std::sqrt(k * k - depth); }
};

// f_+(k) = e^{ika} (cos qa - i (k/q) sin qa).
cplx jost_plus(cplx k, const SquareWell& well);
inline cplx jost_minus(cplx k, const SquareWell& well) { return jost_plus(-k, well); }

// |f_+(k)| below 1e-10 max(1, |e^{ika}|) counts as a zero.
double pole_tolerance(cplx k, const SquareWell& well);
bool is_jost_zero(cplx k, const SquareWell& well);

// S(k) = f_-(k) / f_+(k). Throws PoleAtEnergy at a zero of f_+.
cplx s_matrix(cplx k, const SquareWell& well);
cplx s_matrix_at(cplx energy, ImSign sheet, const SquareWell& well);

cplx regular_solution(double r, cplx k, const SquareWell& well);
cplx regular_solution_derivative(double r, cplx k, const SquareWell& well);
cplx jost_solution(double r, cplx k, const SquareWell& well);
cplx jost_solution_derivative(double r, cplx k, const SquareWell& well);

// G(r, s; E) = -(2m/hbar^2) phi(r<) f(r>) / (k f_+(k)).
cplx green_function(double r, double s, cplx energy, ImSign sheet, const SquareWell& well);

struct ResidueOptions {
  int nodes = 64;
  double radius_scale = 1.0;
};

// Res[S(E)] at E0 by a circular contour in the energy plane.
cplx residue_of_s(cplx pole_energy, ImSign sheet, const SquareWell& well,
                  const ResidueOptions& options = {});
// Same residue taken in the k variable, around k0.
cplx residue_of_s_in_k(cplx pole_energy, ImSign sheet, const SquareWell& well,
                       const ResidueOptions& options = {});

class GamowState {
 public:
  GamowState(Pole pole, SquareWell well, cplx k0, cplx q0, cplx norm);

  const Pole& pole() const { return pole_; }
  const SquareWell& well() const { return well_; }
  cplx k0() const { return k0_; }
  cplx q0() const { return q0_; }
  // Asymptotic constant N: u(r) = N e^{i k0 r} outside the well.
  cplx norm() const { return norm_; }
  // b with u(r) = b sin(q0 r) inside the well.
  cplx interior_coeff() const { return interior_; }

  cplx evaluate(double r) const;
  cplx derivative(double r) const;

  // Copy with N (and hence u) multiplied by `factor`; used to corrupt a state
  // on purpose in verification runs.
  GamowState rescaled(cplx factor) const;

 private:
  Pole pole_;
  SquareWell well_;
  cplx k0_, q0_, norm_, interior_;
};

// Normalized Gamow state, N^2 = (i m / hbar^2 k0) Res[S(E)]_{E0}. The sign of
// N is fixed by Re N > 0 (Im N > 0 on ties).
GamowState gamow_state(const Pole& pole, const SquareWell& well);

}  // namespace gamow::single
