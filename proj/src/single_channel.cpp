#include "gamow/single_channel.hpp"

#include "gamow/error.hpp"

namespace gamow::single {
namespace {

cplx fix_sign(cplx n) {
  if (n.real() < 0.0 || (n.real() == 0.0 && n.imag() < 0.0)) return -n;
  return n;
}

ImSign sheet_sign(const Pole& pole) {
  if (pole.sheet.size() != 1)
    fail(Errc::kInvalidArgument, "single-channel pole needs a one-sign sheet");
  return pole.sheet[0];
}

}  // namespace

SquareWell SquareWell::from_model(const PotentialModel& model) {
  if (model.channel_count() != 1)
    fail(Errc::kUnsupported, "single-channel solver needs a one-channel model");
  return SquareWell{model.depth(0, 0), model.range, model.threshold(0), model.units};
}

cplx jost_plus(cplx k, const SquareWell& w) {
  const cplx q = w.interior_wavenumber(k);
  const double a = w.range;
  return std::exp(kI * k * a) * (std::cos(q * a) - kI * k * sin_over_q(q, a));
}

double pole_tolerance(cplx k, const SquareWell& w) {
  return 1e-10 * std::max(1.0, std::abs(std::exp(kI * k * w.range)));
}

bool is_jost_zero(cplx k, const SquareWell& w) {
  return std::abs(jost_plus(k, w)) < pole_tolerance(k, w);
}

cplx s_matrix(cplx k, const SquareWell& w) {
  const cplx fp = jost_plus(k, w);
  if (std::abs(fp) < pole_tolerance(k, w))
    fail(Errc::kPoleAtEnergy, "S-matrix evaluated at a zero of the Jost function");
  return jost_plus(-k, w) / fp;
}

cplx s_matrix_at(cplx energy, ImSign sheet, const SquareWell& w) {
  return s_matrix(w.wavenumber(energy, sheet), w);
}

cplx regular_solution(double r, cplx k, const SquareWell& w) {
  if (r < w.range) return k * sin_over_q(w.interior_wavenumber(k), r);
  return 0.5 * kI * (jost_plus(k, w) * std::exp(-kI * k * r) -
                     jost_plus(-k, w) * std::exp(kI * k * r));
}

cplx regular_solution_derivative(double r, cplx k, const SquareWell& w) {
  if (r < w.range) return k * std::cos(w.interior_wavenumber(k) * r);
  return 0.5 * k * (jost_plus(k, w) * std::exp(-kI * k * r) +
                    jost_plus(-k, w) * std::exp(kI * k * r));
}

cplx jost_solution(double r, cplx k, const SquareWell& w) {
  const double a = w.range;
  if (r >= a) return std::exp(kI * k * r);
  const cplx q = w.interior_wavenumber(k);
  return std::exp(kI * k * a) * (std::cos(q * (r - a)) + kI * k * sin_over_q(q, r - a));
}

cplx jost_solution_derivative(double r, cplx k, const SquareWell& w) {
  const double a = w.range;
  if (r >= a) return kI * k * std::exp(kI * k * r);
  const cplx q = w.interior_wavenumber(k);
  return std::exp(kI * k * a) *
         (-q * q * sin_over_q(q, r - a) + kI * k * std::cos(q * (r - a)));
}

cplx green_function(double r, double s, cplx energy, ImSign sheet, const SquareWell& w) {
  const cplx k = w.wavenumber(energy, sheet);
  const cplx fp = jost_plus(k, w);
  if (std::abs(fp) < pole_tolerance(k, w))
    fail(Errc::kPoleAtEnergy, "Green function evaluated at a pole");
  const double lesser = std::min(r, s);
  const double greater = std::max(r, s);
  return -w.units.energy_to_k2() * regular_solution(lesser, k, w) *
         jost_solution(greater, k, w) / (k * fp);
}

cplx residue_of_s(cplx pole_energy, ImSign sheet, const SquareWell& w,
                  const ResidueOptions& options) {
  const double th[] = {w.threshold};
  const double radius = options.radius_scale * residue_contour_radius(pole_energy, th);
  // f_- / f_+ directly; s_matrix() would reject nodes that sit near other zeros.
  return contour_residue(
      [&](cplx e) {
        const cplx k = w.wavenumber(e, sheet);
        return jost_plus(-k, w) / jost_plus(k, w);
      },
      pole_energy, radius, options.nodes);
}

cplx residue_of_s_in_k(cplx pole_energy, ImSign sheet, const SquareWell& w,
                       const ResidueOptions& options) {
  const cplx k0 = w.wavenumber(pole_energy, sheet);
  const double th[] = {w.threshold};
  const double e_radius = residue_contour_radius(pole_energy, th);
  // |dE/dk| = hbar^2 |k0| / mu; keep the k-circle's image comparable to the E-circle.
  const double dedk = 2.0 * std::abs(k0) / w.units.energy_to_k2();
  double radius = 0.5 * e_radius / std::max(dedk, 1e-300);
  radius = std::min(radius, 0.5 * std::abs(k0));
  radius *= options.radius_scale;
  return contour_residue([&](cplx k) { return jost_plus(-k, w) / jost_plus(k, w); }, k0, radius,
                         options.nodes);
}

GamowState::GamowState(Pole pole, SquareWell well, cplx k0, cplx q0, cplx norm)
    : pole_(std::move(pole)), well_(well), k0_(k0), q0_(q0), norm_(norm) {
  interior_ = norm_ * std::exp(kI * k0_ * well_.range) / std::sin(q0_ * well_.range);
}

cplx GamowState::evaluate(double r) const {
  if (r < well_.range) return interior_ * std::sin(q0_ * r);
  return norm_ * std::exp(kI * k0_ * r);
}

cplx GamowState::derivative(double r) const {
  if (r < well_.range) return interior_ * q0_ * std::cos(q0_ * r);
  return kI * k0_ * norm_ * std::exp(kI * k0_ * r);
}

GamowState GamowState::rescaled(cplx factor) const {
  return GamowState(pole_, well_, k0_, q0_, norm_ * factor);
}

GamowState gamow_state(const Pole& pole, const SquareWell& w) {
  const ImSign sheet = sheet_sign(pole);
  const cplx k0 = w.wavenumber(pole.energy, sheet);
  if (!is_jost_zero(k0, w))
    fail(Errc::kNotAPole, "energy is not a zero of the Jost function on this sheet");
  const cplx q0 = w.interior_wavenumber(k0);
  if (std::abs(std::sin(q0 * w.range)) < 1e-14)
    fail(Errc::kNotAPole, "sin(q0 a) vanishes; no purely outgoing solution");
  const cplx res = residue_of_s(pole.energy, sheet, w);
  const double mass_over_hbar2 = 0.5 * w.units.energy_to_k2();
  const cplx norm2 = kI * mass_over_hbar2 / k0 * res;
  return GamowState(pole, w, k0, q0, fix_sign(std::sqrt(norm2)));
}

}  // namespace gamow::single
