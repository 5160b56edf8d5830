#pragma once

#include <random>

#include "gamow/coupled_channel.hpp"
#include "gamow/single_channel.hpp"
#include "gamow/state.hpp"
#include "oracles.hpp"

namespace fx {

using gamow::cplx;

inline gamow::PotentialModel single_model() { return gamow::PotentialModel::single(-4.0); }
inline gamow::PotentialModel two_model() {
  return gamow::PotentialModel::two_channel(0.0, 4.0, -4.0, -1.0, -4.0);
}
inline gamow::PotentialModel decoupled_model() {
  return gamow::PotentialModel::two_channel(0.0, 4.0, -4.0, 0.0, -4.0);
}
inline gamow::single::SquareWell well() {
  return gamow::single::SquareWell::from_model(single_model());
}

inline gamow::Pole single_bound() {
  return gamow::Pole::at(oracle::kSingleBoundE, gamow::RiemannSheet::physical(1),
                         gamow::PoleKind::kBound);
}
inline gamow::Pole single_resonance() {
  return gamow::Pole::at({oracle::kSingleResRe, oracle::kSingleResIm},
                         gamow::RiemannSheet::parse("-"), gamow::PoleKind::kResonance);
}
inline gamow::Pole two_bound() {
  return gamow::Pole::at(oracle::kTwoBoundE, gamow::RiemannSheet::physical(2),
                         gamow::PoleKind::kBound);
}
inline gamow::Pole two_resonance() {
  return gamow::Pole::at({oracle::kTwoResRe, oracle::kTwoResIm},
                         gamow::RiemannSheet::parse("-,+"), gamow::PoleKind::kResonance);
}

inline gamow::RadialState single_state(const gamow::Pole& p) {
  return gamow::RadialState::from(gamow::single::gamow_state(p, well()));
}
inline gamow::RadialState two_state(const gamow::Pole& p) {
  return gamow::RadialState::from(gamow::coupled::gamow_state(p, two_model()));
}

// Reproducible complex energies in a box.
inline std::vector<cplx> random_energies(int n, double re_lo, double re_hi, double im_lo,
                                         double im_hi, unsigned seed = 12345) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(re_lo, re_hi), im(im_lo, im_hi);
  std::vector<cplx> out;
  for (int i = 0; i < n; ++i) out.emplace_back(re(rng), im(rng));
  return out;
}

inline double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace fx
