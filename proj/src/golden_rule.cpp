#include "gamow/golden_rule.hpp"

#include <algorithm>
#include <cmath>

#include "gamow/error.hpp"

namespace gamow::golden {
namespace {

void require_above_threshold(double ep) {
  if (!(ep > 0.0)) fail(Errc::kThresholdEnergy, "kinetic energy must be positive");
}

void require_channel(std::size_t channel, const RadialState& state) {
  if (channel >= state.channel_count())
    fail(Errc::kInvalidArgument, "channel index out of range");
}

double free_k(double ep, const Units& units) { return std::sqrt(units.energy_to_k2() * ep); }

double free_prefactor(double k, const Units& units) {
  return std::sqrt(units.energy_to_k2() / (kPi * k));
}

// Vbar_{alpha beta} in energy units; the model stores the reduced depth.
double vbar(const PotentialModel& m, std::size_t a, std::size_t b) {
  return m.depth(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) /
         m.units.energy_to_k2();
}

double half_width(const Pole& pole, LorentzianWidth w) {
  return w == LorentzianWidth::kQuarterGamma ? 0.25 * pole.gamma_r : 0.5 * pole.gamma_r;
}

}  // namespace

double free_radial_wave(double r, double ep, const Units& units) {
  require_above_threshold(ep);
  const double k = free_k(ep, units);
  return free_prefactor(k, units) * std::sin(k * r);
}

cplx matrix_element(double ep, std::size_t channel, const RadialState& state) {
  require_above_threshold(ep);
  require_channel(channel, state);
  const auto& m = state.model();
  const std::size_t n = state.channel_count();
  cplx total = 0.0;
  for (std::size_t b = 0; b < n; ++b) {
    const double v = vbar(m, channel, b);
    if (v == 0.0) continue;
    const cplx overlap = quad::gauss_legendre<cplx>(
        [&](double r) {
          return free_radial_wave(r, ep, m.units) * state.evaluate(r)(static_cast<Eigen::Index>(b));
        },
        0.0, m.range);
    total += v * overlap;
  }
  return total;
}

cplx matrix_element_closed_form(double ep, std::size_t channel, const RadialState& state) {
  require_above_threshold(ep);
  require_channel(channel, state);
  const auto& m = state.model();
  const double k = free_k(ep, m.units);
  const double a = m.range;
  const auto& modes = state.modes();
  const auto& q = state.q();
  cplx total = 0.0;
  for (std::size_t b = 0; b < state.channel_count(); ++b) {
    const double v = vbar(m, channel, b);
    if (v == 0.0) continue;
    cplx overlap = 0.0;
    for (Eigen::Index j = 0; j < q.size(); ++j) {
      // int_0^a sin(kr) sin(qr) dr = (sin((k-q)a)/(k-q) - sin((k+q)a)/(k+q)) / 2
      const cplx s = 0.5 * (sin_over_q(k - q(j), a) - sin_over_q(k + q(j), a));
      overlap += modes(static_cast<Eigen::Index>(b), j) * s;
    }
    total += v * free_prefactor(k, m.units) * overlap;
  }
  return total;
}

SpectrumSample spectrum_point(double ep, std::size_t channel, const RadialState& state,
                              LorentzianWidth width) {
  const cplx me = matrix_element(ep, channel, state);
  const Pole& p = state.pole();
  SpectrumSample s;
  s.kinetic_energy = ep;
  s.total_energy = ep + state.model().threshold(channel);
  const double w = half_width(p, width);
  const double de = s.total_energy - p.e_r;
  s.density = std::norm(me) / (de * de + w * w);
  return s;
}

ChannelWidth partial_decay_constant(std::size_t channel, const RadialState& state,
                                    const QuadratureConfig& cfg) {
  require_channel(channel, state);
  const Pole& p = state.pole();
  if (!(p.gamma_r > 0.0))
    fail(Errc::kNotResonance, "partial decay constants need a pole with Gamma_R > 0");
  const double th = state.model().threshold(channel);
  const double ep_max = cfg.e_max_cap - th;
  if (!(ep_max > 0.0)) fail(Errc::kInvalidArgument, "channel threshold lies above e_max_cap");

  std::vector<double> ep_points = {0.0, ep_max};
  const double er = p.e_r, g = p.gamma_r;
  for (double e : {er - 5 * g, er - g, er + g, er + 5 * g}) ep_points.push_back(e - th);
  double b = er + 200 * g - th;
  if (!(b > 0.0)) b = 1.0;
  while (b < ep_max) {
    ep_points.push_back(b);
    b *= 2.0;
  }
  std::vector<double> t_points;
  for (double ep : ep_points)
    if (ep >= 0.0 && ep <= ep_max) t_points.push_back(std::sqrt(ep));
  std::sort(t_points.begin(), t_points.end());
  t_points.erase(std::unique(t_points.begin(), t_points.end(),
                             [](double x, double y) { return std::abs(x - y) < 1e-12; }),
                 t_points.end());

  quad::AdaptiveOptions opt;
  opt.abs_tol = cfg.abs_tol;
  opt.rel_tol = cfg.rel_tol;
  opt.max_panels = cfg.max_panels;
  const auto res = quad::integrate<double>(
      [&](double t) { return 2.0 * t * spectrum_point(t * t, channel, state, cfg.width).density; },
      std::span<const double>(t_points), opt);
  ChannelWidth out;
  out.gamma = res.value;
  out.gamma_bar = res.value * p.gamma_r;
  out.error = res.error;
  return out;
}

DecayReport decay_report(const RadialState& state, const QuadratureConfig& cfg) {
  DecayReport rep;
  rep.pole = state.pole();
  for (std::size_t a = 0; a < state.channel_count(); ++a) {
    if (state.model().threshold(a) >= cfg.e_max_cap) continue;
    rep.per_channel.push_back(partial_decay_constant(a, state, cfg));
  }
  for (const auto& c : rep.per_channel) rep.gamma_total += c.gamma;
  rep.gamma_bar_total = rep.gamma_total * rep.pole.gamma_r;
  for (auto& c : rep.per_channel)
    c.branching = rep.gamma_total > 0.0 ? c.gamma / rep.gamma_total : 0.0;
  return rep;
}

double amplitude_identity_discrepancy(double ep, std::size_t channel,
                                      const RadialState& state) {
  const cplx me = matrix_element(ep, channel, state);
  const double e = ep + state.model().threshold(channel);
  const cplx amplitude = me / (state.pole().energy - e);
  const double direct = std::norm(amplitude);
  const double lorentz = spectrum_point(ep, channel, state, LorentzianWidth::kHalfGamma).density;
  const double scale = std::max(std::abs(direct), std::abs(lorentz));
  return scale == 0.0 ? 0.0 : std::abs(direct - lorentz) / scale;
}

}  // namespace gamow::golden
