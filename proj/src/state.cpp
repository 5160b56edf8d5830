#include "gamow/state.hpp"

namespace gamow {

RadialState::RadialState(Pole pole, PotentialModel model, Eigen::VectorXcd k0,
                         Eigen::VectorXcd norm, Eigen::MatrixXcd modes, Eigen::VectorXcd q)
    : pole_(std::move(pole)),
      model_(std::move(model)),
      k0_(std::move(k0)),
      norm_(std::move(norm)),
      modes_(std::move(modes)),
      q_(std::move(q)) {}

RadialState RadialState::from(const single::GamowState& s) {
  const auto& w = s.well();
  PotentialModel model = PotentialModel::single(w.depth, w.range, w.threshold);
  model.units = w.units;
  Eigen::VectorXcd k0(1), norm(1), q(1);
  k0 << s.k0();
  norm << s.norm();
  q << s.q0();
  Eigen::MatrixXcd modes(1, 1);
  modes << s.interior_coeff();
  return RadialState(s.pole(), std::move(model), k0, norm, modes, q);
}

RadialState RadialState::from(const coupled::MultiGamowState& s) {
  return RadialState(s.pole(), s.model(), s.k0(), s.norm(), s.interior_modes(), s.diag().q());
}

Eigen::VectorXcd RadialState::evaluate(double r) const {
  if (r >= model_.range) return norm_.cwiseProduct((kI * k0_ * r).array().exp().matrix());
  return modes_ * (q_ * r).array().sin().matrix();
}

Eigen::VectorXcd RadialState::derivative(double r) const {
  if (r >= model_.range)
    return (kI * k0_).cwiseProduct(norm_).cwiseProduct((kI * k0_ * r).array().exp().matrix());
  return modes_ * q_.cwiseProduct((q_ * r).array().cos().matrix());
}

}  // namespace gamow
