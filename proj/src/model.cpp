#include "gamow/model.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "gamow/error.hpp"

namespace gamow {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::kOk: return "Ok";
    case Errc::kInvalidArgument: return "InvalidArgument";
    case Errc::kAsymmetricPotential: return "AsymmetricPotential";
    case Errc::kNonpositiveRange: return "NonpositiveRange";
    case Errc::kUnsortedThresholds: return "UnsortedThresholds";
    case Errc::kUnsupported: return "Unsupported";
    case Errc::kAtBranchPoint: return "AtBranchPoint";
    case Errc::kPoleAtEnergy: return "PoleAtEnergy";
    case Errc::kNotAPole: return "NotAPole";
    case Errc::kDegenerateModes: return "DegenerateModes";
    case Errc::kRankTwoNullspace: return "RankTwoNullspace";
    case Errc::kContourTouchesBranchPoint: return "ContourTouchesBranchPoint";
    case Errc::kNoConvergence: return "NoConvergence";
    case Errc::kThresholdEnergy: return "ThresholdEnergy";
    case Errc::kQuadratureNoConvergence: return "QuadratureNoConvergence";
    case Errc::kNotBound: return "NotBound";
    case Errc::kNotResonance: return "NotResonance";
    case Errc::kParseError: return "ParseError";
    case Errc::kSchemaError: return "SchemaError";
    case Errc::kPoleNotFound: return "PoleNotFound";
    case Errc::kIoError: return "IoError";
    case Errc::kInternal: return "Internal";
  }
  return "Unknown";
}

double residue_contour_radius(cplx pole_energy, std::span<const double> thresholds) {
  double nearest = std::numeric_limits<double>::infinity();
  for (double t : thresholds) nearest = std::min(nearest, std::abs(pole_energy - t));
  double radius = 0.5 * nearest;
  // Round-off imaginary parts of real poles would collapse the circle.
  if (std::abs(pole_energy.imag()) >= 1e-10)
    radius = std::min(radius, 0.5 * std::abs(pole_energy.imag()));
  else
    radius = std::min(radius, 0.1);
  if (!(radius > 0.0))
    fail(Errc::kContourTouchesBranchPoint, "residue contour radius collapses to zero");
  return radius;
}

RiemannSheet RiemannSheet::physical(std::size_t channels) {
  return RiemannSheet(std::vector<ImSign>(channels, ImSign::kPlus));
}

RiemannSheet RiemannSheet::from_ints(std::span<const int> signs) {
  std::vector<ImSign> out;
  out.reserve(signs.size());
  for (int s : signs) {
    if (s == 1)
      out.push_back(ImSign::kPlus);
    else if (s == -1)
      out.push_back(ImSign::kMinus);
    else
      fail(Errc::kInvalidArgument, "sheet signs must be +1 or -1");
  }
  return RiemannSheet(std::move(out));
}

RiemannSheet RiemannSheet::parse(std::string_view text) {
  std::vector<ImSign> out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '+') {
      out.push_back(ImSign::kPlus);
    } else if (c == '-') {
      // "-1" and "-" both mean minus.
      out.push_back(ImSign::kMinus);
      if (i + 1 < text.size() && text[i + 1] == '1') ++i;
    } else if (c == '1') {
      out.push_back(ImSign::kPlus);
    } else if (c == ',' || c == '(' || c == ')' || std::isspace(static_cast<unsigned char>(c))) {
      continue;
    } else {
      fail(Errc::kInvalidArgument, "cannot parse sheet '" + std::string(text) + "'");
    }
  }
  if (out.empty()) fail(Errc::kInvalidArgument, "empty sheet specification");
  return RiemannSheet(std::move(out));
}

bool RiemannSheet::is_physical() const {
  return std::all_of(signs_.begin(), signs_.end(), [](ImSign s) { return s == ImSign::kPlus; });
}

RiemannSheet RiemannSheet::flipped(std::size_t channel) const {
  auto signs = signs_;
  signs.at(channel) = signs[channel] == ImSign::kPlus ? ImSign::kMinus : ImSign::kPlus;
  return RiemannSheet(std::move(signs));
}

std::string RiemannSheet::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < signs_.size(); ++i) {
    if (i) s += ',';
    s += signs_[i] == ImSign::kPlus ? '+' : '-';
  }
  return s + ')';
}

std::vector<double> PotentialModel::thresholds() const {
  std::vector<double> out;
  out.reserve(channels.size());
  for (const auto& c : channels) out.push_back(c.threshold);
  return out;
}

double PotentialModel::min_threshold() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& c : channels) m = std::min(m, c.threshold);
  return m;
}

bool PotentialModel::is_decoupled() const {
  for (Eigen::Index i = 0; i < depth.rows(); ++i)
    for (Eigen::Index j = 0; j < depth.cols(); ++j)
      if (i != j && depth(i, j) != 0.0) return false;
  return true;
}

PotentialModel PotentialModel::single(double depth, double range, double threshold) {
  PotentialModel m;
  m.channels = {Channel{1, threshold}};
  m.depth = Eigen::MatrixXd::Constant(1, 1, depth);
  m.range = range;
  return m;
}

PotentialModel PotentialModel::two_channel(double threshold1, double threshold2, double v11,
                                           double v12, double v22, double range) {
  PotentialModel m;
  m.channels = {Channel{1, threshold1}, Channel{2, threshold2}};
  m.depth.resize(2, 2);
  m.depth << v11, v12, v12, v22;
  m.range = range;
  return m;
}

const char* to_string(PoleKind kind) {
  switch (kind) {
    case PoleKind::kBound: return "bound";
    case PoleKind::kResonance: return "resonance";
    case PoleKind::kVirtual: return "virtual";
    case PoleKind::kUnclassified: return "unclassified";
  }
  return "unclassified";
}

Pole Pole::at(cplx energy, RiemannSheet sheet, PoleKind kind) {
  Pole p;
  p.energy = energy;
  p.e_r = energy.real();
  p.gamma_r = std::max(0.0, -2.0 * energy.imag());
  p.sheet = std::move(sheet);
  p.kind = kind;
  return p;
}

cplx channel_wavenumber(cplx energy, double threshold, ImSign sign, const Units& units) {
  const cplx k = principal_sqrt(units.energy_to_k2() * (energy - threshold));
  if (k.imag() == 0.0) return k;
  const bool want_positive = sign == ImSign::kPlus;
  return (k.imag() > 0.0) == want_positive ? k : -k;
}

ChannelMomenta channel_wavenumbers(cplx energy, const PotentialModel& model,
                                   const RiemannSheet& sheet) {
  if (sheet.size() != model.channel_count())
    fail(Errc::kInvalidArgument, "sheet has " + std::to_string(sheet.size()) +
                                     " signs for a " + std::to_string(model.channel_count()) +
                                     "-channel model");
  ChannelMomenta out{energy, {}};
  out.k.reserve(sheet.size());
  for (std::size_t a = 0; a < sheet.size(); ++a)
    out.k.push_back(channel_wavenumber(energy, model.threshold(a), sheet[a], model.units));
  return out;
}

PotentialModel validate_model(PotentialModel model) {
  const auto n = static_cast<Eigen::Index>(model.channels.size());
  if (n == 0) fail(Errc::kInvalidArgument, "model has no channels");
  if (model.depth.rows() != n || model.depth.cols() != n)
    fail(Errc::kInvalidArgument, "depth matrix must be " + std::to_string(n) + "x" +
                                     std::to_string(n));
  if (!(model.range > 0.0) || !std::isfinite(model.range))
    fail(Errc::kNonpositiveRange, "range must be positive, got " + std::to_string(model.range));
  if (!(model.units.hbar > 0.0) || !(model.units.two_mu > 0.0))
    fail(Errc::kInvalidArgument, "hbar and 2mu must be positive");
  const double scale = std::max(1.0, model.depth.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (std::abs(model.depth(i, j) - model.depth(j, i)) > 1e-12 * scale)
        fail(Errc::kAsymmetricPotential, "V(" + std::to_string(i + 1) + "," +
                                             std::to_string(j + 1) + ") != V(" +
                                             std::to_string(j + 1) + "," +
                                             std::to_string(i + 1) + ")");
  for (Eigen::Index i = 1; i < n; ++i)
    if (model.channels[i].threshold < model.channels[i - 1].threshold)
      fail(Errc::kUnsortedThresholds, "channel thresholds must be nondecreasing");
  return model;
}

}  // namespace gamow
