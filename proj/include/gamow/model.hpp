#pragma once

#include <Eigen/Dense>
#include <string>
#include <string_view>
#include <vector>

#include "gamow/numeric.hpp"

namespace gamow {

// Unit system. With the defaults (hbar = 1, 2 mu = 1) energies are measured in
// hbar^2 / (2 mu a^2) and lengths in the well range a.
struct Units {
  double hbar = 1.0;
  double two_mu = 1.0;

  // 2 mu / hbar^2: converts an energy into a squared wave number.
  double energy_to_k2() const { return two_mu / (hbar * hbar); }
  bool operator==(const Units&) const = default;
};

struct Channel {
  int index = 1;
  double threshold = 0.0;
};

enum class ImSign : int { kPlus = 1, kMinus = -1 };

// A sheet of the energy Riemann surface, labelled by the required sign of
// Im k_alpha in every channel.
class RiemannSheet {
 public:
  RiemannSheet() = default;
  explicit RiemannSheet(std::vector<ImSign> signs) : signs_(std::move(signs)) {}

  static RiemannSheet physical(std::size_t channels);
  static RiemannSheet from_ints(std::span<const int> signs);
  // Accepts "+,-", "(+,-)", "+-", "1,-1".
  static RiemannSheet parse(std::string_view text);

  std::size_t size() const { return signs_.size(); }
  ImSign operator[](std::size_t i) const { return signs_[i]; }
  const std::vector<ImSign>& signs() const { return signs_; }
  bool is_physical() const;
  RiemannSheet flipped(std::size_t channel) const;
  std::string to_string() const;  // "(-,+)"

  bool operator==(const RiemannSheet&) const = default;

 private:
  std::vector<ImSign> signs_;
};

// Square-well coupled-channel potential. The depth matrix is the reduced one
// (already multiplied by 2 mu / hbar^2); all wells share one range.
struct PotentialModel {
  std::vector<Channel> channels;
  Eigen::MatrixXd depth;
  double range = 1.0;
  Units units;

  std::size_t channel_count() const { return channels.size(); }
  double threshold(std::size_t alpha) const { return channels.at(alpha).threshold; }
  std::vector<double> thresholds() const;
  double min_threshold() const;
  bool is_decoupled() const;

  static PotentialModel single(double depth, double range = 1.0, double threshold = 0.0);
  static PotentialModel two_channel(double threshold1, double threshold2, double v11,
                                    double v12, double v22, double range = 1.0);
};

struct ChannelMomenta {
  cplx energy;
  std::vector<cplx> k;
};

enum class PoleKind { kBound, kResonance, kVirtual, kUnclassified };

const char* to_string(PoleKind kind);

struct Pole {
  cplx energy;
  double e_r = 0.0;
  double gamma_r = 0.0;
  RiemannSheet sheet;
  PoleKind kind = PoleKind::kUnclassified;

  // E0 = E_R - i Gamma_R / 2.
  static Pole at(cplx energy, RiemannSheet sheet, PoleKind kind);
};

// Wave number of one channel on the half-sheet selected by `sign`. When the
// principal root is real (real energy at or above threshold) the upper-half
// E-plane limit is returned regardless of the sign.
cplx channel_wavenumber(cplx energy, double threshold, ImSign sign, const Units& units = {});

ChannelMomenta channel_wavenumbers(cplx energy, const PotentialModel& model,
                                   const RiemannSheet& sheet);

// Symmetric depth matrix, positive range, nondecreasing thresholds.
PotentialModel validate_model(PotentialModel model);

}  // namespace gamow
