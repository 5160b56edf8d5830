#pragma once

#include <Eigen/Dense>

#include "gamow/coupled_channel.hpp"
#include "gamow/single_channel.hpp"

namespace gamow {

// Channel-generic view of a normalized Gamow state of a square well:
//   u(r) = C sin(q r)            for r < a (C mixes interior modes into channels)
//   u_alpha(r) = N_alpha e^{i k_alpha0 r}  for r >= a.
class RadialState {
 public:
  RadialState(Pole pole, PotentialModel model, Eigen::VectorXcd k0, Eigen::VectorXcd norm,
              Eigen::MatrixXcd modes, Eigen::VectorXcd q);

  static RadialState from(const single::GamowState& state);
  static RadialState from(const coupled::MultiGamowState& state);

  const Pole& pole() const { return pole_; }
  const PotentialModel& model() const { return model_; }
  std::size_t channel_count() const { return model_.channel_count(); }
  const Eigen::VectorXcd& k0() const { return k0_; }
  const Eigen::VectorXcd& norm() const { return norm_; }
  const Eigen::MatrixXcd& modes() const { return modes_; }
  const Eigen::VectorXcd& q() const { return q_; }

  Eigen::VectorXcd evaluate(double r) const;
  Eigen::VectorXcd derivative(double r) const;

 private:
  Pole pole_;
  PotentialModel model_;
  Eigen::VectorXcd k0_;
  Eigen::VectorXcd norm_;
  Eigen::MatrixXcd modes_;
  Eigen::VectorXcd q_;
};

}  // namespace gamow
