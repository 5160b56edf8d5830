#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gamow/golden_rule.hpp"
#include "gamow/pole_finder.hpp"

namespace gamow::io {

struct RegionSpec {
  poles::SearchRegion region;
  std::optional<RiemannSheet> sheet;  // falls back to RunConfig::sheet
};

struct RunConfig {
  PotentialModel model;
  RiemannSheet sheet;
  std::vector<RegionSpec> regions;
  std::vector<double> r_grid;   // wave-function radii
  std::vector<double> ep_grid;  // spectrum kinetic energies; empty selects a default per channel
  golden::QuadratureConfig quadrature;
  std::string canonical;  // normalized JSON of the accepted config
};

// Strict JSON config. Keys: channels (or its alias thresholds), V, a, sheet,
// region, grids, tolerances. Throws ParseError on malformed JSON and
// SchemaError (message starts with the key path) on anything else.
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);

// Replaces the default sheet, e.g. from a --sheet flag.
void override_sheet(RunConfig& config, const RiemannSheet& sheet);

// FNV-1a 64-bit over the canonical config text.
std::uint64_t config_hash(const RunConfig& config);
std::uint64_t fnv1a(std::string_view data);

struct PoleSelector {
  std::optional<std::size_t> index;  // row of the pole table (0-based)
  std::optional<cplx> near;          // closest pole to this energy
};

struct CommandOptions {
  PoleSelector selector;
  std::optional<std::size_t> channel;  // 0-based; all channels when empty
  double corrupt_norm = 1.0;           // debug: scale N before verification
};

struct OutputFile {
  std::string name;
  std::string content;
};

struct CommandOutput {
  std::vector<OutputFile> files;
  std::string summary;  // human-readable text for stdout
  int exit_code = 0;
};

std::vector<Pole> all_poles(const RunConfig& config);
Pole select_pole(const RunConfig& config, const PoleSelector& selector, bool need_resonance);
RadialState build_state(const PotentialModel& model, const Pole& pole, double corrupt_norm = 1.0);

// Spectrum grid: 25 log-spaced points on [1e-6, 0.1] united with 400 linear
// points up to E_R - E_th + 10 Gamma_R.
std::vector<double> default_ep_grid(const Pole& pole, double threshold);

CommandOutput cmd_poles(const RunConfig& config);
CommandOutput cmd_wavefunction(const RunConfig& config, const CommandOptions& options);
CommandOutput cmd_spectrum(const RunConfig& config, const CommandOptions& options);
CommandOutput cmd_observables(const RunConfig& config, const CommandOptions& options);
CommandOutput cmd_verify(const RunConfig& config, const CommandOptions& options);

CommandOutput run_command(std::string_view command, const RunConfig& config,
                          const CommandOptions& options);

// Writes every file into `dir` (created if missing). Throws IoError.
void write_outputs(const CommandOutput& output, const std::string& dir);

// "%.8e": 9 significant digits.
std::string csv_number(double x);

}  // namespace gamow::io
