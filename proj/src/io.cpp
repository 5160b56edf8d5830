#include "gamow/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gamow/error.hpp"
#include "gamow/verification.hpp"

namespace gamow::io {
namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  fail(Errc::kSchemaError, path + ": " + what);
}

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) schema_error(path, "expected a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) schema_error(path, "expected a finite number");
  return v;
}

double positive_at(const json& j, const std::string& path) {
  const double v = number_at(j, path);
  if (!(v > 0.0)) schema_error(path, "must be > 0");
  return v;
}

int int_at(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<int>();
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  for (const auto& [key, _] : obj.items()) {
    const bool ok = std::any_of(allowed.begin(), allowed.end(),
                                [&](const char* a) { return key == a; });
    if (!ok) schema_error(path.empty() ? key : path + "." + key, "unknown key");
  }
}

RiemannSheet sheet_at(const json& j, const std::string& path) {
  try {
    if (j.is_string()) return RiemannSheet::parse(j.get<std::string>());
    if (j.is_array()) {
      std::vector<int> signs;
      for (std::size_t i = 0; i < j.size(); ++i)
        signs.push_back(int_at(j[i], path + "[" + std::to_string(i) + "]"));
      return RiemannSheet::from_ints(signs);
    }
  } catch (const Error& e) {
    if (e.code() == Errc::kSchemaError) throw;
    schema_error(path, e.what());
  }
  schema_error(path, "expected a sheet string like \"(-,+)\" or an array of +1/-1");
}

std::vector<double> increasing_array(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) schema_error(path, "expected a non-empty array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(number_at(j[i], path + "[" + std::to_string(i) + "]"));
    if (i && !(out[i] > out[i - 1])) schema_error(path, "must be strictly increasing");
  }
  return out;
}

std::vector<double> r_grid_at(const json& j, const std::string& path) {
  if (j.is_array()) {
    auto g = increasing_array(j, path);
    if (g.front() < 0.0) schema_error(path, "radii must be >= 0");
    return g;
  }
  check_keys(j, path, {"start", "stop", "step"});
  for (const char* k : {"start", "stop", "step"})
    if (!j.contains(k)) schema_error(path + "." + k, "missing");
  const double start = number_at(j["start"], path + ".start");
  const double stop = number_at(j["stop"], path + ".stop");
  const double step = positive_at(j["step"], path + ".step");
  if (start < 0.0) schema_error(path + ".start", "must be >= 0");
  if (!(stop > start)) schema_error(path + ".stop", "must exceed start");
  std::vector<double> g;
  const auto n = static_cast<long>(std::floor((stop - start) / step * (1 + 1e-12)));
  for (long i = 0; i <= n; ++i) g.push_back(start + static_cast<double>(i) * step);
  return g;
}

RegionSpec region_at(const json& j, const std::string& path) {
  check_keys(j, path, {"re_min", "re_max", "im_min", "im_max", "grid_nx", "grid_ny", "sheet"});
  RegionSpec spec;
  auto& r = spec.region;
  for (const char* k : {"re_min", "re_max", "im_min", "im_max"})
    if (!j.contains(k)) schema_error(path + "." + k, "missing");
  r.re_min = number_at(j["re_min"], path + ".re_min");
  r.re_max = number_at(j["re_max"], path + ".re_max");
  r.im_min = number_at(j["im_min"], path + ".im_min");
  r.im_max = number_at(j["im_max"], path + ".im_max");
  if (j.contains("grid_nx")) r.grid_nx = int_at(j["grid_nx"], path + ".grid_nx");
  if (j.contains("grid_ny")) r.grid_ny = int_at(j["grid_ny"], path + ".grid_ny");
  if (j.contains("sheet")) spec.sheet = sheet_at(j["sheet"], path + ".sheet");
  try {
    r.validate();
  } catch (const Error& e) {
    schema_error(path, e.what());
  }
  return spec;
}

std::string sheet_json(const RiemannSheet& s) { return s.to_string(); }

json canonicalize(const RunConfig& c) {
  json j;
  json channels = json::array();
  for (const auto& ch : c.model.channels) channels.push_back(ch.threshold);
  j["channels"] = channels;
  json v = json::array();
  for (Eigen::Index i = 0; i < c.model.depth.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index k = 0; k < c.model.depth.cols(); ++k) row.push_back(c.model.depth(i, k));
    v.push_back(row);
  }
  j["V"] = v;
  j["a"] = c.model.range;
  j["sheet"] = sheet_json(c.sheet);
  json regions = json::array();
  for (const auto& rs : c.regions) {
    json r = {{"re_min", rs.region.re_min}, {"re_max", rs.region.re_max},
              {"im_min", rs.region.im_min}, {"im_max", rs.region.im_max},
              {"grid_nx", rs.region.grid_nx}, {"grid_ny", rs.region.grid_ny}};
    if (rs.sheet) r["sheet"] = sheet_json(*rs.sheet);
    regions.push_back(r);
  }
  j["region"] = regions;
  j["grids"] = {{"r", c.r_grid}, {"ep", c.ep_grid}};
  const auto& q = c.quadrature;
  j["tolerances"] = {{"abs", q.abs_tol},
                     {"rel", q.rel_tol},
                     {"max_panels", q.max_panels},
                     {"e_max_cap", q.e_max_cap},
                     {"lorentzian_width",
                      q.width == golden::LorentzianWidth::kQuarterGamma ? "quarter" : "half"}};
  return j;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string energy_label(cplx e) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.6f%+.6fi", e.real(), e.imag());
  return buf;
}

std::string pole_label(const Pole& p) { return energy_label(p.energy) + " " + p.sheet.to_string(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string hash_hex(const RunConfig& c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(config_hash(c)));
  return buf;
}

std::string csv_header(const RunConfig& c, const std::string& command,
                       const std::vector<std::string>& columns) {
  std::string s = "# gamow " + command + " config_hash=" + hash_hex(c) + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) s += (i ? "," : "") + columns[i];
  return s + "\n";
}

json json_header(const RunConfig& c, const std::string& command) {
  return {{"schema", 1}, {"command", command}, {"config_hash", hash_hex(c)}};
}

double round6(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  return std::strtod(fmt("%.6g", x).c_str(), nullptr);
}

double abs_jost_det(const PotentialModel& m, const Pole& p) {
  if (m.channel_count() == 1) {
    const auto w = single::SquareWell::from_model(m);
    return std::abs(single::jost_plus(w.wavenumber(p.energy, p.sheet[0]), w));
  }
  return std::abs(coupled::jost_det(p.energy, m, p.sheet));
}

json pole_json(const PotentialModel& m, const Pole& p) {
  return {{"re_E", p.energy.real()},       {"im_E", p.energy.imag()},
          {"E_R", p.e_r},                  {"Gamma_R", p.gamma_r},
          {"kind", to_string(p.kind)},     {"sheet", p.sheet.to_string()},
          {"abs_jost_det", abs_jost_det(m, p)}};
}

}  // namespace

std::string csv_number(double x) { return fmt("%.8e", x); }

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t config_hash(const RunConfig& config) { return fnv1a(config.canonical); }

RunConfig parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    fail(Errc::kParseError, std::string("config is not valid JSON: ") + e.what());
  }
  check_keys(j, "", {"channels", "thresholds", "V", "a", "sheet", "region", "grids", "tolerances"});

  RunConfig c;
  const bool has_channels = j.contains("channels");
  if (has_channels && j.contains("thresholds"))
    schema_error("thresholds", "give either channels or thresholds, not both");
  const std::string ch_key = has_channels ? "channels" : "thresholds";
  if (!j.contains(ch_key)) schema_error("channels", "missing");
  const json& chs = j[ch_key];
  if (!chs.is_array() || chs.empty()) schema_error(ch_key, "expected a non-empty array");
  for (std::size_t i = 0; i < chs.size(); ++i) {
    const std::string p = ch_key + "[" + std::to_string(i) + "]";
    Channel ch{static_cast<int>(i + 1), 0.0};
    if (chs[i].is_object()) {
      check_keys(chs[i], p, {"threshold"});
      if (!chs[i].contains("threshold")) schema_error(p + ".threshold", "missing");
      ch.threshold = number_at(chs[i]["threshold"], p + ".threshold");
    } else {
      ch.threshold = number_at(chs[i], p);
    }
    c.model.channels.push_back(ch);
  }
  const auto n = c.model.channels.size();

  if (!j.contains("V")) schema_error("V", "missing");
  const json& v = j["V"];
  if (!v.is_array() || v.size() != n)
    schema_error("V", "expected a " + std::to_string(n) + "x" + std::to_string(n) + " array");
  c.model.depth.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    const std::string pr = "V[" + std::to_string(r) + "]";
    if (!v[r].is_array() || v[r].size() != n)
      schema_error(pr, "expected " + std::to_string(n) + " entries");
    for (std::size_t k = 0; k < n; ++k)
      c.model.depth(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(k)) =
          number_at(v[r][k], pr + "[" + std::to_string(k) + "]");
  }

  if (!j.contains("a")) schema_error("a", "missing");
  c.model.range = number_at(j["a"], "a");

  try {
    c.model = validate_model(std::move(c.model));
  } catch (const Error& e) {
    const std::string key = e.code() == Errc::kNonpositiveRange ? "a"
                            : e.code() == Errc::kUnsortedThresholds ? ch_key
                                                                    : "V";
    schema_error(key, e.what());
  }

  c.sheet = j.contains("sheet") ? sheet_at(j["sheet"], "sheet") : RiemannSheet::physical(n);
  if (c.sheet.size() != n) schema_error("sheet", "needs one sign per channel");

  if (j.contains("region")) {
    const json& r = j["region"];
    if (r.is_array()) {
      for (std::size_t i = 0; i < r.size(); ++i)
        c.regions.push_back(region_at(r[i], "region[" + std::to_string(i) + "]"));
    } else {
      c.regions.push_back(region_at(r, "region"));
    }
    for (std::size_t i = 0; i < c.regions.size(); ++i)
      if (c.regions[i].sheet && c.regions[i].sheet->size() != n)
        schema_error("region[" + std::to_string(i) + "].sheet", "needs one sign per channel");
  }

  for (int i = 0; i <= 300; ++i) c.r_grid.push_back(0.01 * i);
  if (j.contains("grids")) {
    const json& g = j["grids"];
    check_keys(g, "grids", {"r", "ep"});
    if (g.contains("r")) c.r_grid = r_grid_at(g["r"], "grids.r");
    if (g.contains("ep")) {
      c.ep_grid = increasing_array(g["ep"], "grids.ep");
      if (!(c.ep_grid.front() > 0.0)) schema_error("grids.ep", "kinetic energies must be > 0");
    }
  }

  if (j.contains("tolerances")) {
    const json& t = j["tolerances"];
    check_keys(t, "tolerances", {"abs", "rel", "max_panels", "e_max_cap", "lorentzian_width"});
    auto& q = c.quadrature;
    if (t.contains("abs")) q.abs_tol = positive_at(t["abs"], "tolerances.abs");
    if (t.contains("rel")) q.rel_tol = positive_at(t["rel"], "tolerances.rel");
    if (t.contains("e_max_cap")) q.e_max_cap = positive_at(t["e_max_cap"], "tolerances.e_max_cap");
    if (t.contains("max_panels")) {
      q.max_panels = int_at(t["max_panels"], "tolerances.max_panels");
      if (q.max_panels < 1) schema_error("tolerances.max_panels", "must be >= 1");
    }
    if (t.contains("lorentzian_width")) {
      const json& w = t["lorentzian_width"];
      if (w == "half")
        q.width = golden::LorentzianWidth::kHalfGamma;
      else if (w == "quarter")
        q.width = golden::LorentzianWidth::kQuarterGamma;
      else
        schema_error("tolerances.lorentzian_width", "expected \"half\" or \"quarter\"");
    }
  }
  c.canonical = canonicalize(c).dump();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::kIoError, "cannot open config file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

void override_sheet(RunConfig& config, const RiemannSheet& sheet) {
  if (sheet.size() != config.model.channel_count())
    fail(Errc::kInvalidArgument, "--sheet needs one sign per channel");
  config.sheet = sheet;
  config.canonical = canonicalize(config).dump();
}

std::vector<Pole> all_poles(const RunConfig& config) {
  std::vector<Pole> out;
  for (const auto& spec : config.regions) {
    const RiemannSheet& sheet = spec.sheet ? *spec.sheet : config.sheet;
    for (auto& p : poles::find_poles(config.model, sheet, spec.region)) {
      const bool dup = std::any_of(out.begin(), out.end(), [&](const Pole& o) {
        return o.sheet == p.sheet &&
               std::abs(o.energy - p.energy) < 1e-8 * std::max(1.0, std::abs(p.energy));
      });
      if (!dup) out.push_back(std::move(p));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Pole& a, const Pole& b) {
    if (a.energy.real() != b.energy.real()) return a.energy.real() < b.energy.real();
    return a.energy.imag() < b.energy.imag();
  });
  return out;
}

Pole select_pole(const RunConfig& config, const PoleSelector& selector, bool need_resonance) {
  const auto found = all_poles(config);
  if (found.empty()) fail(Errc::kPoleNotFound, "no poles found in the configured regions");
  const Pole* pick = nullptr;
  if (selector.index) {
    if (*selector.index >= found.size())
      fail(Errc::kPoleNotFound, "pole index " + std::to_string(*selector.index) + " out of range (" +
                                    std::to_string(found.size()) + " poles)");
    pick = &found[*selector.index];
  } else if (selector.near) {
    pick = &*std::min_element(found.begin(), found.end(), [&](const Pole& a, const Pole& b) {
      return std::abs(a.energy - *selector.near) < std::abs(b.energy - *selector.near);
    });
  } else if (need_resonance) {
    const auto it = std::find_if(found.begin(), found.end(),
                                 [](const Pole& p) { return p.kind == PoleKind::kResonance; });
    if (it == found.end()) fail(Errc::kNotResonance, "no resonance among the poles found");
    pick = &*it;
  } else {
    pick = &found.front();
  }
  if (need_resonance && pick->kind != PoleKind::kResonance)
    fail(Errc::kNotResonance, "selected pole " + pole_label(*pick) + " is not a resonance");
  return *pick;
}

RadialState build_state(const PotentialModel& model, const Pole& pole, double corrupt_norm) {
  if (model.channel_count() == 1) {
    auto s = single::gamow_state(pole, single::SquareWell::from_model(model));
    if (corrupt_norm != 1.0) s = s.rescaled(corrupt_norm);
    return RadialState::from(s);
  }
  auto s = coupled::gamow_state(pole, model);
  if (corrupt_norm != 1.0) s = s.rescaled(coupled::Vec2::Constant(corrupt_norm));
  return RadialState::from(s);
}

std::vector<double> default_ep_grid(const Pole& pole, double threshold) {
  std::vector<double> g;
  constexpr int n_log = 25;
  for (int i = 0; i < n_log; ++i) g.push_back(std::pow(10.0, -6.0 + 5.0 * i / (n_log - 1)));
  const double top = std::max(pole.e_r - threshold, 0.0) + 10.0 * pole.gamma_r;
  constexpr int n_lin = 400;
  for (int i = 1; i <= n_lin; ++i) g.push_back(top * i / n_lin);
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

CommandOutput cmd_poles(const RunConfig& config) {
  const auto found = all_poles(config);
  CommandOutput out;
  std::string csv = csv_header(config, "poles", {"re_E", "im_E", "kind", "sheet", "abs_jost_det"});
  json doc = json_header(config, "poles");
  doc["poles"] = json::array();
  out.summary = std::to_string(found.size()) + " pole(s)\n";
  for (const auto& p : found) {
    const double det = abs_jost_det(config.model, p);
    csv += csv_number(p.energy.real()) + "," + csv_number(p.energy.imag()) + "," +
           to_string(p.kind) + "," + csv_field(p.sheet.to_string()) + "," + csv_number(det) + "\n";
    doc["poles"].push_back(pole_json(config.model, p));
    out.summary += "  " + pole_label(p) + "  " + to_string(p.kind) + "\n";
  }
  out.files.push_back({"poles.csv", csv});
  out.files.push_back({"poles.json", doc.dump(2) + "\n"});
  return out;
}

CommandOutput cmd_wavefunction(const RunConfig& config, const CommandOptions& options) {
  const Pole pole = select_pole(config, options.selector, false);
  const RadialState state = build_state(config.model, pole);
  const std::size_t n = state.channel_count();
  std::vector<std::string> cols = {"r"};
  for (std::size_t c = 1; c <= n; ++c) {
    cols.push_back("re_u" + std::to_string(c));
    cols.push_back("im_u" + std::to_string(c));
  }
  std::string csv = csv_header(config, "wavefunction", cols);
  for (double r : config.r_grid) {
    const Eigen::VectorXcd u = state.evaluate(r);
    csv += csv_number(r);
    for (Eigen::Index c = 0; c < u.size(); ++c)
      csv += "," + csv_number(u(c).real()) + "," + csv_number(u(c).imag());
    csv += "\n";
  }
  CommandOutput out;
  out.files.push_back({"wavefunction.csv", csv});
  out.summary = "wave function of " + pole_label(pole) + " at " +
                std::to_string(config.r_grid.size()) + " radii\n";
  return out;
}

CommandOutput cmd_spectrum(const RunConfig& config, const CommandOptions& options) {
  const Pole pole = select_pole(config, options.selector, true);
  const RadialState state = build_state(config.model, pole);
  std::vector<std::size_t> channels;
  if (options.channel) {
    if (*options.channel >= state.channel_count())
      fail(Errc::kInvalidArgument, "channel out of range");
    channels.push_back(*options.channel);
  } else {
    for (std::size_t c = 0; c < state.channel_count(); ++c) channels.push_back(c);
  }
  CommandOutput out;
  out.summary = "decay spectrum of " + pole_label(pole) + "\n";
  for (std::size_t c : channels) {
    const double th = config.model.threshold(c);
    const auto grid = config.ep_grid.empty() ? default_ep_grid(pole, th) : config.ep_grid;
    std::string csv = csv_header(config, "spectrum channel=" + std::to_string(c + 1),
                                 {"Ep", "E_total", "density"});
    for (double ep : grid) {
      const auto s = golden::spectrum_point(ep, c, state, config.quadrature.width);
      csv += csv_number(s.kinetic_energy) + "," + csv_number(s.total_energy) + "," +
             csv_number(s.density) + "\n";
    }
    const std::string name = "spectrum_ch" + std::to_string(c + 1) + ".csv";
    out.files.push_back({name, csv});
    out.summary += "  " + name + ": " + std::to_string(grid.size()) + " points\n";
  }
  return out;
}

CommandOutput cmd_observables(const RunConfig& config, const CommandOptions& options) {
  const Pole pole = select_pole(config, options.selector, true);
  const RadialState state = build_state(config.model, pole);
  const auto rep = golden::decay_report(state, config.quadrature);
  json doc = json_header(config, "observables");
  doc["pole"] = pole_json(config.model, pole);
  doc["E_R"] = round6(pole.e_r);
  doc["Gamma_R"] = round6(pole.gamma_r);
  doc["lorentzian_width"] =
      config.quadrature.width == golden::LorentzianWidth::kQuarterGamma ? "quarter" : "half";
  doc["channels"] = json::array();
  std::string text = "pole " + pole_label(pole) + "\n";
  for (std::size_t c = 0; c < rep.per_channel.size(); ++c) {
    const auto& w = rep.per_channel[c];
    doc["channels"].push_back({{"channel", c + 1},
                               {"Gamma", round6(w.gamma)},
                               {"Gamma_bar", round6(w.gamma_bar)},
                               {"branching", round6(w.branching)}});
    text += "  channel " + std::to_string(c + 1) + ": Gamma=" + fmt("%.6g", w.gamma) +
            " Gamma_bar=" + fmt("%.6g", w.gamma_bar) + " branching=" + fmt("%.6g", w.branching) +
            "\n";
  }
  doc["Gamma"] = round6(rep.gamma_total);
  doc["Gamma_bar"] = round6(rep.gamma_bar_total);
  text += "  total: Gamma=" + fmt("%.6g", rep.gamma_total) +
          " Gamma_bar=" + fmt("%.6g", rep.gamma_bar_total) + "\n";
  CommandOutput out;
  out.files.push_back({"observables.json", doc.dump(2) + "\n"});
  out.summary = text;
  return out;
}

CommandOutput cmd_verify(const RunConfig& config, const CommandOptions& options) {
  struct Row {
    std::string pole;
    verify::CheckResult check;
  };
  std::vector<Row> rows;
  const auto& m = config.model;
  const auto found = all_poles(config);
  for (const auto& p : found) {
    const std::string label = pole_label(p);
    const RadialState state = build_state(m, p, options.corrupt_norm);
    for (auto& c : verify::default_suite(state)) rows.push_back({label, std::move(c)});
    if (m.channel_count() == 2) {
      auto multi = coupled::gamow_state(p, m);
      if (options.corrupt_norm != 1.0)
        multi = multi.rescaled(coupled::Vec2::Constant(options.corrupt_norm));
      rows.push_back({label, verify::residue_rank_one(multi)});
      if (p.kind == PoleKind::kBound) rows.push_back({label, verify::baz_equivalence(multi)});
    }
    if (p.kind == PoleKind::kResonance) {
      double worst = 0.0;
      for (std::size_t c = 0; c < m.channel_count(); ++c) {
        const double top = std::max(p.e_r - m.threshold(c), 0.1);
        for (double ep : {1e-6, 0.5 * top, top, 2.0 * top})
          worst = std::max(worst, golden::amplitude_identity_discrepancy(ep, c, state));
      }
      rows.push_back({label, verify::make_result("amplitude_identity", worst, 1e-12,
                                                 "|M/(E_res-E)|^2 vs Lorentzian")});
    }
  }
  if (m.channel_count() == 2 && m.is_decoupled() && !found.empty()) {
    std::vector<std::pair<std::size_t, Pole>> per_channel;
    for (const auto& p : found) {
      for (std::size_t c = 0; c < 2; ++c) {
        const auto ci = static_cast<Eigen::Index>(c);
        auto single_model = PotentialModel::single(m.depth(ci, ci), m.range, m.threshold(c));
        single_model.units = m.units;
        const RiemannSheet s1(std::vector<ImSign>{p.sheet[c]});
        if (!poles::is_pole(p.energy, single_model, s1)) continue;
        Pole q = poles::classify(p.energy, s1, single_model);
        if (q.kind == PoleKind::kUnclassified) continue;
        per_channel.emplace_back(c, q);
        break;
      }
    }
    rows.push_back({"all", verify::decoupling_equivalence(m, per_channel)});
  }

  CommandOutput out;
  std::string csv = csv_header(config, "verify",
                               {"check", "pole", "passed", "measured", "tolerance", "detail"});
  json doc = json_header(config, "verify");
  doc["checks"] = json::array();
  int failures = 0;
  for (const auto& r : rows) {
    const auto& c = r.check;
    if (!c.passed) ++failures;
    csv += c.name + "," + csv_field(r.pole) + "," + (c.passed ? "true" : "false") + "," +
           csv_number(c.measured) + "," + csv_number(c.tolerance) + "," + csv_field(c.detail) +
           "\n";
    doc["checks"].push_back({{"name", c.name},
                             {"pole", r.pole},
                             {"passed", c.passed},
                             {"measured", c.measured},
                             {"tolerance", c.tolerance},
                             {"detail", c.detail}});
    out.summary += std::string(c.passed ? "PASS " : "FAIL ") + c.name + " [" + r.pole + "] " +
                   fmt("%.3e", c.measured) + " <= " + fmt("%.1e", c.tolerance) + "\n";
  }
  doc["failures"] = failures;
  out.summary += std::to_string(rows.size() - failures) + "/" + std::to_string(rows.size()) +
                 " checks passed\n";
  out.files.push_back({"verify.csv", csv});
  out.files.push_back({"verify.json", doc.dump(2) + "\n"});
  out.exit_code = failures;
  return out;
}

CommandOutput run_command(std::string_view command, const RunConfig& config,
                          const CommandOptions& options) {
  if (command == "poles") return cmd_poles(config);
  if (command == "wavefunction") return cmd_wavefunction(config, options);
  if (command == "spectrum") return cmd_spectrum(config, options);
  if (command == "observables") return cmd_observables(config, options);
  if (command == "verify") return cmd_verify(config, options);
  fail(Errc::kInvalidArgument, "unknown command '" + std::string(command) + "'");
}

void write_outputs(const CommandOutput& output, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(Errc::kIoError, "cannot create output directory " + dir + ": " + ec.message());
  for (const auto& f : output.files) {
    const fs::path p = fs::path(dir) / f.name;
    std::ofstream os(p, std::ios::binary | std::ios::trunc);
    os << f.content;
    if (!os) fail(Errc::kIoError, "cannot write " + p.string());
  }
}

}  // namespace gamow::io
