#pragma once

#include <vector>

#include "gamow/quadrature.hpp"
#include "gamow/state.hpp"

namespace gamow::golden {

// Half-width used in the Lorentzian denominator (E - E_R)^2 + w^2.
enum class LorentzianWidth {
  kHalfGamma,     // w = Gamma_R / 2, the Golden Rule as written
  kQuarterGamma,  // w = Gamma_R / 4, reproduces the published two-channel tables
};

struct QuadratureConfig {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  int max_panels = 20000;
  // Upper limit of the total energy E; see partial_decay_constant.
  double e_max_cap = 1e4;
  LorentzianWidth width = LorentzianWidth::kHalfGamma;
};

struct SpectrumSample {
  double kinetic_energy = 0.0;
  double total_energy = 0.0;
  double density = 0.0;
};

struct ChannelWidth {
  double gamma = 0.0;      // partial decay constant Gamma_alpha
  double gamma_bar = 0.0;  // partial width Gamma_alpha * Gamma_R
  double branching = 0.0;
  double error = 0.0;      // quadrature error estimate on gamma
};

struct DecayReport {
  Pole pole;
  std::vector<ChannelWidth> per_channel;
  double gamma_total = 0.0;
  double gamma_bar_total = 0.0;
};

// l = 0 free radial wave sqrt(2 mu / (pi hbar^2 k)) sin(kr), delta-normalized in
// the kinetic energy Ep (k = sqrt(2 mu Ep) / hbar). Throws ThresholdEnergy if Ep <= 0.
double free_radial_wave(double r, double ep, const Units& units = {});

// sum_beta Vbar_{alpha beta} int_0^a psi0(r; Ep) u_beta(r) dr (64-point Gauss-Legendre).
cplx matrix_element(double ep, std::size_t channel, const RadialState& state);
// Same integral from the closed-form antiderivative of sin(kr) sin(qr).
cplx matrix_element_closed_form(double ep, std::size_t channel, const RadialState& state);

SpectrumSample spectrum_point(double ep, std::size_t channel, const RadialState& state,
                              LorentzianWidth width = LorentzianWidth::kHalfGamma);

// Integral of the spectrum over Ep in (0, E_max - E_th]. Panels are seeded at
// E_R +- Gamma_R, E_R +- 5 Gamma_R and E_R + 200 Gamma_R, then doubled out to
// the cap; the variable t = sqrt(Ep) removes the threshold square root.
ChannelWidth partial_decay_constant(std::size_t channel, const RadialState& state,
                                    const QuadratureConfig& cfg = {});

DecayReport decay_report(const RadialState& state, const QuadratureConfig& cfg = {});

// Relative difference between |M / (E_res - E)|^2 and the Lorentzian form of
// spectrum_point (half width Gamma_R / 2).
double amplitude_identity_discrepancy(double ep, std::size_t channel, const RadialState& state);

}  // namespace gamow::golden
