#pragma once

#include <stdexcept>
#include <string>

namespace gamow {

// Values are mirrored one-to-one by gamow_status in gamow.h.
enum class Errc : int {
  kOk = 0,
  kInvalidArgument = 1,
  kAsymmetricPotential = 2,
  kNonpositiveRange = 3,
  kUnsortedThresholds = 4,
  kUnsupported = 5,
  kAtBranchPoint = 6,
  kPoleAtEnergy = 7,
  kNotAPole = 8,
  kDegenerateModes = 9,
  kRankTwoNullspace = 10,
  kContourTouchesBranchPoint = 11,
  kNoConvergence = 12,
  kThresholdEnergy = 13,
  kQuadratureNoConvergence = 14,
  kNotBound = 15,
  kNotResonance = 16,
  kParseError = 17,
  kSchemaError = 18,
  kPoleNotFound = 19,
  kIoError = 20,
  kInternal = 99,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace gamow
