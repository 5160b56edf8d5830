#include "gamow/gamow.h"

#include <cstdio>
#include <cstring>
#include <exception>
#include <memory>
#include <optional>
#include <string>

#include "gamow/io.hpp"

struct gamow_model {
  gamow::PotentialModel model;
};

struct gamow_state {
  gamow::RadialState state;
};

struct gamow_config {
  gamow::io::RunConfig config;
};

struct gamow_result {
  gamow::io::CommandOutput output;
};

namespace {

thread_local std::string last_error;

template <class F>
gamow_status guarded(F&& f) {
  try {
    f();
    last_error.clear();
    return GAMOW_OK;
  } catch (const gamow::Error& e) {
    last_error = e.what();
    return static_cast<gamow_status>(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return GAMOW_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return GAMOW_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) gamow::fail(gamow::Errc::kInvalidArgument, what);
}

gamow::RiemannSheet sheet_or_physical(const char* sheet, std::size_t n) {
  return sheet ? gamow::RiemannSheet::parse(sheet) : gamow::RiemannSheet::physical(n);
}

gamow::golden::LorentzianWidth to_width(gamow_width w) {
  return w == GAMOW_WIDTH_QUARTER ? gamow::golden::LorentzianWidth::kQuarterGamma
                                  : gamow::golden::LorentzianWidth::kHalfGamma;
}

gamow_pole_kind to_c(gamow::PoleKind k) {
  switch (k) {
    case gamow::PoleKind::kBound: return GAMOW_BOUND;
    case gamow::PoleKind::kResonance: return GAMOW_RESONANCE;
    case gamow::PoleKind::kVirtual: return GAMOW_VIRTUAL;
    case gamow::PoleKind::kUnclassified: return GAMOW_UNCLASSIFIED;
  }
  return GAMOW_UNCLASSIFIED;
}

gamow::PoleKind from_c(gamow_pole_kind k) {
  switch (k) {
    case GAMOW_BOUND: return gamow::PoleKind::kBound;
    case GAMOW_RESONANCE: return gamow::PoleKind::kResonance;
    case GAMOW_VIRTUAL: return gamow::PoleKind::kVirtual;
    default: return gamow::PoleKind::kUnclassified;
  }
}

}  // namespace

extern "C" {

const char* gamow_last_error(void) { return last_error.c_str(); }

const char* gamow_status_name(gamow_status status) {
  return gamow::errc_name(static_cast<gamow::Errc>(status));
}

void gamow_region_init(gamow_region* region) {
  if (!region) return;
  *region = gamow_region{0.0, 1.0, 0.0, 0.0, 41, 41};
}

void gamow_command_options_init(gamow_command_options* options) {
  if (!options) return;
  *options = gamow_command_options{-1, 0, 0.0, 0.0, 0, 1.0};
}

gamow_status gamow_model_create(size_t n, const double* thresholds, const double* depth,
                                double range, gamow_model** out) {
  return guarded([&] {
    require(out && thresholds && depth && n > 0, "null argument or zero channels");
    *out = nullptr;
    auto m = std::make_unique<gamow_model>();
    for (size_t i = 0; i < n; ++i)
      m->model.channels.push_back({static_cast<int>(i + 1), thresholds[i]});
    m->model.depth.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        m->model.depth(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            depth[i * n + j];
    m->model.range = range;
    m->model = gamow::validate_model(std::move(m->model));
    *out = m.release();
  });
}

void gamow_model_free(gamow_model* model) { delete model; }

size_t gamow_model_channels(const gamow_model* model) {
  return model ? model->model.channel_count() : 0;
}

gamow_status gamow_jost_det(const gamow_model* model, const char* sheet, double re_e,
                            double im_e, double* re_out, double* im_out) {
  return guarded([&] {
    require(model && re_out && im_out, "null argument");
    const auto& m = model->model;
    const auto s = sheet_or_physical(sheet, m.channel_count());
    const gamow::cplx e(re_e, im_e);
    gamow::cplx d;
    if (m.channel_count() == 1) {
      const auto w = gamow::single::SquareWell::from_model(m);
      require(s.size() == 1, "sheet needs one sign");
      d = gamow::single::jost_plus(w.wavenumber(e, s[0]), w);
    } else {
      d = gamow::coupled::jost_det(e, m, s);
    }
    *re_out = d.real();
    *im_out = d.imag();
  });
}

gamow_status gamow_find_poles(const gamow_model* model, const char* sheet,
                              const gamow_region* region, gamow_pole* poles, size_t capacity,
                              size_t* count) {
  return guarded([&] {
    require(model && region && count, "null argument");
    require(poles || capacity == 0, "null pole buffer with nonzero capacity");
    const auto s = sheet_or_physical(sheet, model->model.channel_count());
    gamow::poles::SearchRegion r{region->re_min, region->re_max, region->im_min,
                                 region->im_max, region->grid_nx, region->grid_ny};
    const auto found = gamow::poles::find_poles(model->model, s, r);
    *count = found.size();
    for (size_t i = 0; i < found.size() && i < capacity; ++i) {
      const auto& p = found[i];
      gamow_pole& o = poles[i];
      o.re_energy = p.energy.real();
      o.im_energy = p.energy.imag();
      o.e_r = p.e_r;
      o.gamma_r = p.gamma_r;
      o.kind = to_c(p.kind);
      std::snprintf(o.sheet, sizeof o.sheet, "%s", p.sheet.to_string().c_str());
    }
  });
}

gamow_status gamow_state_create(const gamow_model* model, const gamow_pole* pole,
                                gamow_state** out) {
  return guarded([&] {
    require(model && pole && out, "null argument");
    *out = nullptr;
    const auto p = gamow::Pole::at({pole->re_energy, pole->im_energy},
                                   gamow::RiemannSheet::parse(pole->sheet), from_c(pole->kind));
    *out = new gamow_state{gamow::io::build_state(model->model, p)};
  });
}

void gamow_state_free(gamow_state* state) { delete state; }

gamow_status gamow_state_norm(const gamow_state* state, double* out) {
  return guarded([&] {
    require(state && out, "null argument");
    const auto& n = state->state.norm();
    for (Eigen::Index i = 0; i < n.size(); ++i) {
      out[2 * i] = n(i).real();
      out[2 * i + 1] = n(i).imag();
    }
  });
}

gamow_status gamow_state_evaluate(const gamow_state* state, double r, double* out) {
  return guarded([&] {
    require(state && out, "null argument");
    require(r >= 0.0, "radius must be >= 0");
    const auto u = state->state.evaluate(r);
    for (Eigen::Index i = 0; i < u.size(); ++i) {
      out[2 * i] = u(i).real();
      out[2 * i + 1] = u(i).imag();
    }
  });
}

gamow_status gamow_spectrum_density(const gamow_state* state, int channel, double ep,
                                    gamow_width width, double* density) {
  return guarded([&] {
    require(state && density, "null argument");
    require(channel >= 1 && static_cast<size_t>(channel) <= state->state.channel_count(),
            "channel out of range");
    *density = gamow::golden::spectrum_point(ep, static_cast<size_t>(channel - 1), state->state,
                                             to_width(width))
                   .density;
  });
}

gamow_status gamow_partial_decay_constant(const gamow_state* state, int channel,
                                          gamow_width width, double* gamma) {
  return guarded([&] {
    require(state && gamma, "null argument");
    require(channel >= 1 && static_cast<size_t>(channel) <= state->state.channel_count(),
            "channel out of range");
    gamow::golden::QuadratureConfig cfg;
    cfg.width = to_width(width);
    *gamma = gamow::golden::partial_decay_constant(static_cast<size_t>(channel - 1), state->state,
                                                   cfg)
                 .gamma;
  });
}

gamow_status gamow_config_load(const char* path, gamow_config** out) {
  return guarded([&] {
    require(path && out, "null argument");
    *out = nullptr;
    *out = new gamow_config{gamow::io::load_config(path)};
  });
}

gamow_status gamow_config_parse(const char* text, gamow_config** out) {
  return guarded([&] {
    require(text && out, "null argument");
    *out = nullptr;
    *out = new gamow_config{gamow::io::parse_config(text)};
  });
}

gamow_status gamow_config_set_sheet(gamow_config* config, const char* sheet) {
  return guarded([&] {
    require(config && sheet, "null argument");
    gamow::io::override_sheet(config->config, gamow::RiemannSheet::parse(sheet));
  });
}

void gamow_config_free(gamow_config* config) { delete config; }

gamow_status gamow_run(const gamow_config* config, const char* command,
                       const gamow_command_options* options, const char* output_dir,
                       gamow_result** out) {
  return guarded([&] {
    require(config && command && out, "null argument");
    *out = nullptr;
    gamow::io::CommandOptions opt;
    if (options) {
      if (options->pole_index >= 0) opt.selector.index = static_cast<size_t>(options->pole_index);
      if (options->has_near) opt.selector.near = gamow::cplx(options->near_re, options->near_im);
      if (options->channel < 0) gamow::fail(gamow::Errc::kInvalidArgument, "channel must be >= 1");
      if (options->channel > 0) opt.channel = static_cast<size_t>(options->channel - 1);
      opt.corrupt_norm = options->corrupt_norm;
    }
    auto result = std::make_unique<gamow_result>();
    result->output = gamow::io::run_command(command, config->config, opt);
    if (output_dir) gamow::io::write_outputs(result->output, output_dir);
    *out = result.release();
  });
}

const char* gamow_result_summary(const gamow_result* result) {
  return result ? result->output.summary.c_str() : "";
}

int gamow_result_exit_code(const gamow_result* result) {
  return result ? result->output.exit_code : 0;
}

size_t gamow_result_file_count(const gamow_result* result) {
  return result ? result->output.files.size() : 0;
}

const char* gamow_result_file_name(const gamow_result* result, size_t i) {
  if (!result || i >= result->output.files.size()) return nullptr;
  return result->output.files[i].name.c_str();
}

const char* gamow_result_file_content(const gamow_result* result, size_t i) {
  if (!result || i >= result->output.files.size()) return nullptr;
  return result->output.files[i].content.c_str();
}

void gamow_result_free(gamow_result* result) { delete result; }

}  // extern "C"
