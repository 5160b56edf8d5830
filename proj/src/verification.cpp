#include "gamow/verification.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cstdio>

#include "gamow/error.hpp"
#include "gamow/pole_finder.hpp"

namespace gamow::verify {
namespace {

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

cplx norm_integral(const RadialState& state) {
  const auto& m = state.model();
  const double a = m.range;
  quad::AdaptiveOptions opt;
  opt.abs_tol = 1e-13;
  opt.rel_tol = 1e-13;
  const cplx interior =
      quad::integrate<cplx>(
          [&](double r) {
            const Eigen::VectorXcd u = state.evaluate(r);
            return cplx(u.transpose() * u);
          },
          0.0, a, opt)
          .value;
  cplx exterior = 0.0;
  for (Eigen::Index c = 0; c < state.k0().size(); ++c) {
    const cplx k = state.k0()(c);
    const cplx n = state.norm()(c);
    if (n == 0.0) continue;
    exterior += n * n * (-std::exp(2.0 * kI * k * a) / (2.0 * kI * k));
  }
  return interior + exterior;
}

// Relative max-entry difference between two matrices.
double rel_diff(const Eigen::MatrixXcd& x, const Eigen::MatrixXcd& ref) {
  const double scale = ref.cwiseAbs().maxCoeff();
  const double d = (x - ref).cwiseAbs().maxCoeff();
  return scale > 0.0 ? d / scale : d;
}

std::vector<double> default_radii(double a) {
  return {0.25 * a, 0.5 * a, 0.75 * a, 1.25 * a, 1.5 * a, 2.0 * a, 3.0 * a};
}

single::SquareWell well_of(const PotentialModel& m, std::size_t channel) {
  const auto c = static_cast<Eigen::Index>(channel);
  return single::SquareWell{m.depth(c, c), m.range, m.threshold(channel), m.units};
}

}  // namespace

CheckResult make_result(std::string name, double measured, double tolerance,
                        std::string detail) {
  CheckResult r;
  r.name = std::move(name);
  r.measured = measured;
  r.tolerance = tolerance;
  r.passed = std::isfinite(measured) && measured <= tolerance;
  r.detail = std::move(detail);
  return r;
}

CheckResult bound_norm_check(const RadialState& state) {
  if (state.pole().kind != PoleKind::kBound)
    fail(Errc::kNotBound, "bound_norm_check needs a bound state");
  const cplx total = norm_integral(state);
  return make_result("bound_norm", std::abs(total - 1.0), 1e-6,
                     "norm = " + fmt("%.12g", total.real()) + fmt(" %+.3gi", total.imag()));
}

CheckResult regularized_resonant_norm(const RadialState& state) {
  if (state.pole().kind != PoleKind::kResonance)
    fail(Errc::kNotResonance, "regularized_resonant_norm needs a resonance");
  const cplx total = norm_integral(state);
  return make_result("regularized_resonant_norm", std::abs(total - 1.0), 1e-6,
                     "norm = " + fmt("%.12g", total.real()) + fmt(" %+.3gi", total.imag()));
}

std::vector<RadialPair> default_factorization_grid(double range) {
  std::vector<RadialPair> grid;
  for (double r : {0.5, 0.9, 1.3, 1.8, 2.5})
    for (double f : {0.1, 0.3, 0.5, 0.7, 0.9}) grid.push_back({r * range, f * r * range});
  return grid;
}

CheckResult green_residue_factorization(const RadialState& state,
                                        const std::vector<RadialPair>& grid_in) {
  const auto& m = state.model();
  const Pole& pole = state.pole();
  const auto grid = grid_in.empty() ? default_factorization_grid(m.range) : grid_in;
  double worst = 0.0;
  for (const auto& [r, s] : grid) {
    if (!(r > s)) fail(Errc::kInvalidArgument, "factorization grid needs r > s");
    const Eigen::VectorXcd ur = state.evaluate(r);
    const Eigen::VectorXcd us = state.evaluate(s);
    const Eigen::MatrixXcd expected = us * ur.transpose();
    Eigen::MatrixXcd res;
    if (state.channel_count() == 1) {
      const auto w = well_of(m, 0);
      const double th[] = {w.threshold};
      const double rho = residue_contour_radius(pole.energy, th);
      const cplx g = contour_residue(
          [&](cplx e) { return single::green_function(r, s, e, pole.sheet[0], w); }, pole.energy,
          rho, 64);
      res = Eigen::MatrixXcd::Constant(1, 1, g);
    } else {
      res = coupled::residue_of_green_matrix(r, s, pole.energy, m, pole.sheet);
    }
    worst = std::max(worst, rel_diff(res, expected));
  }
  return make_result("green_residue_factorization", worst, 1e-6,
                     std::to_string(grid.size()) + " (r, s) pairs");
}

CheckResult schrodinger_residual(const ChannelFunction& u, const Eigen::MatrixXd& depth,
                                 double range, const Eigen::VectorXcd& k2,
                                 const std::vector<double>& radii) {
  constexpr double h = 1e-4;
  double worst = 0.0;
  for (double r : radii) {
    if (std::abs(r - range) <= 2 * h)
      fail(Errc::kInvalidArgument, "residual radii must stay clear of the well edge");
    const Eigen::VectorXcd u0 = u(r);
    const Eigen::VectorXcd d2 =
        (-u(r + 2 * h) + 16.0 * u(r + h) - 30.0 * u0 + 16.0 * u(r - h) - u(r - 2 * h)) /
        (12.0 * h * h);
    Eigen::VectorXcd res = -d2 - k2.cwiseProduct(u0);
    if (r < range) res += depth.cast<cplx>() * u0;
    for (Eigen::Index c = 0; c < res.size(); ++c)
      worst = std::max(worst, std::abs(res(c)) / std::max(1.0, std::abs(u0(c))));
  }
  return make_result("schrodinger_residual", worst, 1e-5,
                     std::to_string(radii.size()) + " radii, h = 1e-4");
}

CheckResult schrodinger_residual(const RadialState& state, const std::vector<double>& radii_in) {
  const auto& m = state.model();
  const auto radii = radii_in.empty() ? default_radii(m.range) : radii_in;
  const Eigen::VectorXcd k2 = state.k0().cwiseProduct(state.k0());
  return schrodinger_residual([&](double r) { return state.evaluate(r); }, m.depth, m.range, k2,
                              radii);
}

CheckResult decoupling_equivalence(const PotentialModel& model,
                                   const std::vector<std::pair<std::size_t, Pole>>& channel_poles,
                                   const DecouplingOptions& options) {
  if (model.channel_count() != 2 || !model.is_decoupled())
    fail(Errc::kInvalidArgument, "decoupling_equivalence needs a two-channel model with V12 = 0");
  double worst = 0.0;
  std::string detail;
  for (const auto& [channel, p1] : channel_poles) {
    if (channel > 1) fail(Errc::kInvalidArgument, "channel index out of range");
    const auto w = well_of(model, channel);
    const auto s1 = single::gamow_state(p1, w);
    const std::size_t other = 1 - channel;

    std::vector<ImSign> signs(2, ImSign::kPlus);
    signs[channel] = p1.sheet[0];
    const RiemannSheet sheet2(signs);

    // det F+ continued analytically from the single-channel pole, so that a
    // real pole above the other threshold is refined without crossing its cut.
    const auto k0 = coupled::wavenumbers(p1.energy, model, sheet2);
    auto objective = [&](cplx e) {
      coupled::Vec2 k;
      for (int c = 0; c < 2; ++c) {
        const double th = model.threshold(c);
        k(c) = k0(c) * principal_sqrt((e - th) / (p1.energy - th));
      }
      return coupled::jost_matrix(k, model).determinant() *
             std::exp(-kI * (k(0) + k(1)) * model.range);
    };
    const cplx e2 = poles::refine(p1.energy, objective);
    const double de = std::abs(e2 - p1.energy) / std::max(1.0, std::abs(p1.energy));
    worst = std::max(worst, de);

    Pole p2 = Pole::at(p1.kind == PoleKind::kResonance ? e2 : cplx(e2.real(), 0.0), sheet2,
                       p1.kind);
    const auto s2 = coupled::gamow_state(p2, model);
    double dwave = 0.0, scale = 0.0;
    for (double r : {0.1, 0.3, 0.5, 0.7, 0.9, 1.2, 1.5, 2.0, 3.0}) {
      const double x = r * model.range;
      const cplx u1 = s1.evaluate(x);
      const auto u2 = s2.evaluate(x);
      scale = std::max(scale, std::abs(u1));
      dwave = std::max({dwave, std::abs(u2(static_cast<Eigen::Index>(channel)) - u1),
                        std::abs(u2(static_cast<Eigen::Index>(other)))});
    }
    dwave /= std::max(scale, 1e-300);
    worst = std::max(worst, dwave);
    detail += "ch" + std::to_string(channel + 1) + ": dE=" + fmt("%.2e", de) +
              " du=" + fmt("%.2e", dwave);

    if (options.include_widths && p1.kind == PoleKind::kResonance) {
      const auto g1 = golden::partial_decay_constant(0, RadialState::from(s1), options.quadrature);
      const auto r2 = RadialState::from(s2);
      const auto ga = golden::partial_decay_constant(channel, r2, options.quadrature);
      const auto gb = golden::partial_decay_constant(other, r2, options.quadrature);
      const double dg = std::max(std::abs(ga.gamma - g1.gamma) / std::max(g1.gamma, 1e-300),
                                 std::abs(gb.gamma));
      worst = std::max(worst, dg);
      detail += " dGamma=" + fmt("%.2e", dg);
    }
    detail += "; ";
  }
  return make_result("decoupling_equivalence", worst, 1e-9, detail);
}

CheckResult baz_equivalence(const coupled::MultiGamowState& state, double k_radius_scale) {
  const Pole& p = state.pole();
  if (p.kind != PoleKind::kBound) fail(Errc::kNotBound, "baz_equivalence needs a bound state");
  coupled::ResidueOptions opt;
  opt.radius_scale = k_radius_scale;
  const coupled::Mat2 rk = coupled::residue_of_s_matrix_in_k1(p.energy, state.model(), p.sheet, opt);
  const coupled::Vec2& k = state.k0();
  coupled::Mat2 baz;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      baz(a, b) = kI * principal_sqrt(k(0) * k(0) / (k(a) * k(b))) * rk(a, b);
  const coupled::Mat2 nn = state.norm() * state.norm().transpose();
  return make_result("baz_equivalence", rel_diff(baz, nn), 1e-8,
                     "k1 contour scale " + fmt("%g", k_radius_scale));
}

CheckResult bound_norm_phase(const RadialState& state) {
  double worst = 0.0;
  for (Eigen::Index c = 0; c < state.norm().size(); ++c) {
    const cplx n = state.norm()(c);
    if (std::abs(n) > 0.0) worst = std::max(worst, std::abs(n.imag()) / std::abs(n));
  }
  return make_result("bound_norm_phase", worst, 1e-8, "max |Im N| / |N|");
}

CheckResult residue_rank_one(const coupled::MultiGamowState& state) {
  const Pole& p = state.pole();
  const coupled::Mat2 res = coupled::residue_of_s_matrix(p.energy, state.model(), p.sheet);
  Eigen::JacobiSVD<coupled::Mat2> svd(res);
  const auto& sv = svd.singularValues();
  return make_result("residue_rank_one", sv(1) / sv(0), 1e-8, "sigma2 / sigma1 of Res[S]");
}

std::vector<CheckResult> default_suite(const RadialState& state) {
  std::vector<CheckResult> out;
  if (state.pole().kind == PoleKind::kBound) {
    out.push_back(bound_norm_check(state));
    out.push_back(bound_norm_phase(state));
  } else if (state.pole().kind == PoleKind::kResonance) {
    out.push_back(regularized_resonant_norm(state));
  }
  out.push_back(green_residue_factorization(state));
  out.push_back(schrodinger_residual(state));
  return out;
}

}  // namespace gamow::verify
