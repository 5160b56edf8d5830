#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gamow/golden_rule.hpp"
#include "gamow/state.hpp"

namespace gamow::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

CheckResult make_result(std::string name, double measured, double tolerance,
                        std::string detail = {});

// |int_0^inf sum_alpha u_alpha^2 dr - 1|: interior by adaptive quadrature,
// exterior in closed form sum N^2 (-e^{2 i k a} / (2 i k)). Tolerance 1e-6.
CheckResult bound_norm_check(const RadialState& state);
// Same expression for a resonance; the exterior term is the analytic
// continuation of the bound-state formula. Tolerance 1e-6.
CheckResult regularized_resonant_norm(const RadialState& state);

struct RadialPair {
  double r, s;
};
// 25 (r, s) pairs with r > s spanning both sides of the well edge.
std::vector<RadialPair> default_factorization_grid(double range);

// max relative deviation of the contour residue of G(r, s; E) at the pole
// from U(s) U^T(r). Tolerance 1e-6.
CheckResult green_residue_factorization(const RadialState& state,
                                        const std::vector<RadialPair>& grid = {});

using ChannelFunction = std::function<Eigen::VectorXcd(double)>;

// max |-u'' + (V - K^2) u| / max(1, |u|) by a 5-point stencil with h = 1e-4.
// `depth` is the interior reduced potential; k2 the channel wave numbers squared.
CheckResult schrodinger_residual(const ChannelFunction& u, const Eigen::MatrixXd& depth,
                                 double range, const Eigen::VectorXcd& k2,
                                 const std::vector<double>& radii);
CheckResult schrodinger_residual(const RadialState& state, const std::vector<double>& radii = {});

struct DecouplingOptions {
  bool include_widths = true;
  golden::QuadratureConfig quadrature;
};

// Compares a decoupled two-channel model (V12 = 0) channel by channel with the
// single-channel solver: pole energies, wave functions, and decay constants.
// Tolerance 1e-9.
CheckResult decoupling_equivalence(const PotentialModel& model,
                                   const std::vector<std::pair<std::size_t, Pole>>& channel_poles,
                                   const DecouplingOptions& options = {});

// N_a N_b from the S_nu residue in E versus the residue of S in k1 combined
// with sqrt(k10^2 / (k_a0 k_b0)). Tolerance 1e-8.
CheckResult baz_equivalence(const coupled::MultiGamowState& state, double k_radius_scale = 1.0);

// Max imaginary-to-modulus ratio of the components of N for a bound state.
CheckResult bound_norm_phase(const RadialState& state);

// Residue matrix rank-1 test: sigma_2 / sigma_1 of Res[S]. Tolerance 1e-8.
CheckResult residue_rank_one(const coupled::MultiGamowState& state);

// Every check appropriate to the state's kind.
std::vector<CheckResult> default_suite(const RadialState& state);

}  // namespace gamow::verify
