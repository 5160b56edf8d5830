#pragma once

#include <Eigen/Dense>

#include "gamow/model.hpp"

namespace gamow::coupled {

using Mat2 = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2cd;

// Eigen-decomposition of K^2 - V inside the well: O (K^2 - V) O^{-1} = diag(q+^2, q-^2).
struct InteriorDiagonalization {
  cplx q_plus_sq, q_minus_sq;
  cplx q_plus, q_minus;
  Mat2 O;
  Mat2 O_inv;
  cplx eigvec_norm;  // N with N^2 = V12^2 + (k1^2 - V11 - q+^2)^2

  Vec2 q() const { return Vec2(q_plus, q_minus); }
};

// All operations below require a two-channel model and a two-sign sheet and
// throw Unsupported otherwise.
InteriorDiagonalization diagonalize_interior(cplx energy, const PotentialModel& model,
                                             const RiemannSheet& sheet);
InteriorDiagonalization diagonalize_interior(const Vec2& k, const PotentialModel& model);

Vec2 wavenumbers(cplx energy, const PotentialModel& model, const RiemannSheet& sheet);

// Jost matrix F+ and its k -> -k partner F-.
Mat2 jost_matrix(cplx energy, const PotentialModel& model, const RiemannSheet& sheet);
Mat2 jost_matrix_minus(cplx energy, const PotentialModel& model, const RiemannSheet& sheet);
Mat2 jost_matrix(const Vec2& k, const PotentialModel& model);

cplx jost_det(cplx energy, const PotentialModel& model, const RiemannSheet& sheet);
// det(K^{-1} O^{-1} cos(Qa) - i O^{-1} Q^{-1} sin(Qa)); same zero set as jost_det.
cplx jost_det_reduced(cplx energy, const PotentialModel& model, const RiemannSheet& sheet);
// |det F+| below 1e-10 max(1, |e^{i(k1+k2)a}|) counts as a zero.
double pole_tolerance(const Vec2& k, const PotentialModel& model);

Mat2 regular_solution_matrix(double r, cplx energy, const PotentialModel& model,
                             const RiemannSheet& sheet);
Mat2 regular_solution_matrix_derivative(double r, cplx energy, const PotentialModel& model,
                                        const RiemannSheet& sheet);
Mat2 jost_solution_matrix(double r, cplx energy, const PotentialModel& model,
                          const RiemannSheet& sheet);
Mat2 jost_solution_matrix_derivative(double r, cplx energy, const PotentialModel& model,
                                     const RiemannSheet& sheet);

// W(Phi, F) = Phi^T F' - Phi'^T F at radius r; equals -F+^T K for every r.
Mat2 wronskian(double r, cplx energy, const PotentialModel& model, const RiemannSheet& sheet);

// G(r, s; E) = -(2 mu / hbar^2) Phi(s) F+^{-1} K^{-1} F^T(r) for r > s and
// G(s, r)^T for r < s.
Mat2 green_matrix(double r, double s, cplx energy, const PotentialModel& model,
                  const RiemannSheet& sheet);
Mat2 green_matrix(double r, double s, const Vec2& k, const PotentialModel& model);

struct SMatrices {
  Mat2 unitary;      // K^{1/2} F- F+^{-1} K^{-1/2}
  Mat2 non_unitary;  // F- F+^{-1}
};

SMatrices s_matrices(cplx energy, const PotentialModel& model, const RiemannSheet& sheet);
Mat2 s_matrix_unitary(cplx energy, const PotentialModel& model, const RiemannSheet& sheet);

enum class SMatrixKind { kUnitary, kNonUnitary };

struct ResidueOptions {
  int nodes = 64;
  double radius_scale = 1.0;
};

Mat2 residue_of_s_matrix(cplx pole_energy, const PotentialModel& model, const RiemannSheet& sheet,
                         SMatrixKind kind = SMatrixKind::kUnitary,
                         const ResidueOptions& options = {});
// Res[G(r, s; E)] at a pole, by the same contour.
Mat2 residue_of_green_matrix(double r, double s, cplx pole_energy, const PotentialModel& model,
                             const RiemannSheet& sheet, const ResidueOptions& options = {});
// Residue of the unitary S-matrix in the channel-1 wave number, around k_{1,0}.
Mat2 residue_of_s_matrix_in_k1(cplx pole_energy, const PotentialModel& model,
                               const RiemannSheet& sheet, const ResidueOptions& options = {});

class MultiGamowState {
 public:
  MultiGamowState(Pole pole, PotentialModel model, Vec2 k0, InteriorDiagonalization diag,
                  Vec2 interior_b, Vec2 norm, Mat2 norm_products);

  const Pole& pole() const { return pole_; }
  const PotentialModel& model() const { return model_; }
  const Vec2& k0() const { return k0_; }
  const InteriorDiagonalization& diag() const { return diag_; }
  const Vec2& interior_b() const { return b_; }
  // Asymptotic constants: u_alpha(r) = N_alpha e^{i k_alpha0 r} outside the well.
  const Vec2& norm() const { return norm_; }
  // N N^T as obtained from the S-matrix residue, before the square root.
  const Mat2& norm_products() const { return norm_products_; }
  // C with u(r) = C sin(q r) componentwise inside the well (q = (q+, q-)).
  Mat2 interior_modes() const { return scale_.asDiagonal() * diag_.O_inv * b_.asDiagonal(); }

  Vec2 evaluate(double r) const;
  Vec2 derivative(double r) const;

  // Copy whose channel components are multiplied by `factors` (u_alpha -> f_alpha u_alpha).
  MultiGamowState rescaled(const Vec2& factors) const;

 private:
  Pole pole_;
  PotentialModel model_;
  Vec2 k0_;
  InteriorDiagonalization diag_;
  Vec2 b_;
  Vec2 norm_;
  Mat2 norm_products_;
  Vec2 scale_ = Vec2::Ones();
};

// Normalized multichannel Gamow state with N_a N_b = (i mu / hbar^2) Res[S_nu]_{ab} / k_b0.
MultiGamowState gamow_state(const Pole& pole, const PotentialModel& model);

}  // namespace gamow::coupled
