#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "gamow/gamow.h"

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitConfig = 65;
constexpr int kExitRuntime = 70;

int report(const char* what, gamow_status status, int code) {
  std::fprintf(stderr, "gamow: %s: %s: %s\n", what, gamow_status_name(status), gamow_last_error());
  return code;
}

bool parse_near(const std::string& text, double& re, double& im) {
  char tail = 0;
  return std::sscanf(text.c_str(), " %lf , %lf %c", &re, &im, &tail) == 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound and resonant states of square-well potentials and their decay observables"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, output_dir = ".", sheet;
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--output-dir", output_dir, "Directory for CSV/JSON output");
  app.add_option("--sheet", sheet, "Default Riemann sheet, e.g. \"(-,+)\"");

  long pole = -1;
  std::string near;
  int channel = 0;
  double corrupt = 1.0;
  auto add_selector = [&](CLI::App* sub) {
    auto* p = sub->add_option("--pole", pole, "Row of the pole table (0-based)");
    sub->add_option("--near", near, "Select the pole closest to \"re,im\"")->excludes(p);
  };

  app.add_subcommand("poles", "Locate and classify S-matrix poles");
  auto* wf = app.add_subcommand("wavefunction", "Tabulate a normalized Gamow state");
  add_selector(wf);
  auto* sp = app.add_subcommand("spectrum", "Tabulate decay energy spectra");
  add_selector(sp);
  sp->add_option("--channel", channel, "Channel (1-based); all when omitted")
      ->check(CLI::PositiveNumber);
  auto* ob = app.add_subcommand("observables", "Partial decay constants, widths, branching");
  add_selector(ob);
  auto* ve = app.add_subcommand("verify", "Run the verification suite; exit code = failures");
  ve->add_option("--corrupt-norm", corrupt, "Debug: scale the normalization constants");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  gamow_command_options opts;
  gamow_command_options_init(&opts);
  opts.pole_index = pole;
  opts.channel = channel;
  opts.corrupt_norm = corrupt;
  if (!near.empty()) {
    if (!parse_near(near, opts.near_re, opts.near_im)) {
      std::fprintf(stderr, "gamow: --near expects \"re,im\"\n");
      return kExitUsage;
    }
    opts.has_near = 1;
  }

  gamow_config* cfg = nullptr;
  gamow_status st = gamow_config_load(config_path.c_str(), &cfg);
  if (st != GAMOW_OK) return report("config", st, kExitConfig);
  if (!sheet.empty()) {
    st = gamow_config_set_sheet(cfg, sheet.c_str());
    if (st != GAMOW_OK) {
      gamow_config_free(cfg);
      return report("--sheet", st, kExitUsage);
    }
  }

  const std::string command = app.get_subcommands().front()->get_name();
  gamow_result* result = nullptr;
  st = gamow_run(cfg, command.c_str(), &opts, output_dir.c_str(), &result);
  gamow_config_free(cfg);
  if (st != GAMOW_OK) return report(command.c_str(), st, kExitRuntime);
  std::fputs(gamow_result_summary(result), stdout);
  const int rc = gamow_result_exit_code(result);
  gamow_result_free(result);
  return rc > 63 ? 63 : rc;
}
