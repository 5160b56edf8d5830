#include "gamow/coupled_channel.hpp"

#include <Eigen/SVD>

#include "gamow/error.hpp"

namespace gamow::coupled {
namespace {

using Mat4 = Eigen::Matrix4cd;

void require_two(const PotentialModel& model) {
  if (model.channel_count() != 2)
    fail(Errc::kUnsupported, "closed-form coupled-channel path supports exactly 2 channels");
}

Vec2 momenta(cplx energy, const PotentialModel& model, const RiemannSheet& sheet) {
  require_two(model);
  const auto m = channel_wavenumbers(energy, model, sheet);
  return Vec2(m.k[0], m.k[1]);
}

void require_off_branch(const Vec2& k) {
  if (k(0) == 0.0 || k(1) == 0.0)
    fail(Errc::kAtBranchPoint, "a channel wave number vanishes (energy at a threshold)");
}

Mat2 diag(const Vec2& v) { return v.asDiagonal(); }

Vec2 exp_ik(const Vec2& k, double r) {
  return Vec2(std::exp(kI * k(0) * r), std::exp(kI * k(1) * r));
}

Vec2 sinc(const Vec2& q, double x) { return Vec2(sin_over_q(q(0), x), sin_over_q(q(1), x)); }

Vec2 cosv(const Vec2& q, double x) { return Vec2(std::cos(q(0) * x), std::cos(q(1) * x)); }

struct Setup {
  Vec2 k;
  InteriorDiagonalization d;
};

Setup setup(cplx energy, const PotentialModel& model, const RiemannSheet& sheet) {
  Setup s;
  s.k = momenta(energy, model, sheet);
  s.d = diagonalize_interior(s.k, model);
  return s;
}

Mat2 regular_inside(double r, const Setup& s) {
  return s.d.O_inv * diag(sinc(s.d.q(), r)) * s.d.O * diag(s.k);
}

Mat2 regular_inside_derivative(double r, const Setup& s) {
  return s.d.O_inv * diag(cosv(s.d.q(), r)) * s.d.O * diag(s.k);
}

Mat2 jost_solution_at(double r, const Setup& s, double a) {
  if (r >= a) return diag(exp_ik(s.k, r));
  const Vec2 q = s.d.q();
  return s.d.O_inv *
         (diag(cosv(q, r - a)) * s.d.O + kI * diag(sinc(q, r - a)) * s.d.O * diag(s.k)) *
         diag(exp_ik(s.k, a));
}

Mat2 jost_solution_derivative_at(double r, const Setup& s, double a) {
  if (r >= a) return kI * diag(s.k) * diag(exp_ik(s.k, r));
  const Vec2 q = s.d.q();
  const Vec2 q2(s.d.q_plus_sq, s.d.q_minus_sq);
  const Vec2 qsin = -q2.cwiseProduct(sinc(q, r - a));
  return s.d.O_inv *
         (diag(qsin) * s.d.O + kI * diag(cosv(q, r - a)) * s.d.O * diag(s.k)) *
         diag(exp_ik(s.k, a));
}

// Channel momenta near E0 by analytic continuation from k0. Unlike fixed sheet
// signs this stays continuous on circles that cross a real-axis cut, which
// happens for real poles above an open threshold.
Vec2 continued_momenta(cplx energy, cplx e0, const Vec2& k0, const PotentialModel& model) {
  Vec2 k;
  for (int a = 0; a < 2; ++a) {
    const double th = model.threshold(a);
    k(a) = k0(a) * principal_sqrt((energy - th) / (e0 - th));
  }
  return k;
}

Mat2 s_nu_at(const Vec2& k, const PotentialModel& model) {
  return jost_matrix(Vec2(-k), model) * jost_matrix(k, model).inverse();
}

Mat2 unitarize(const Mat2& snu, const Vec2& k) {
  const Vec2 root(principal_sqrt(k(0)), principal_sqrt(k(1)));
  return diag(root) * snu * diag(root.cwiseInverse());
}

// N with its sign tied to the dominant channel: Re N_lead > 0, then Im N_lead > 0.
void fix_overall_sign(Vec2& norm, Vec2& b) {
  const double scale = norm.cwiseAbs().maxCoeff();
  Eigen::Index lead = 0;
  if (std::abs(norm(0)) <= 1e-12 * scale) lead = 1;
  const cplx n = norm(lead);
  if (n.real() < 0.0 || (n.real() == 0.0 && n.imag() < 0.0)) {
    norm = -norm;
    b = -b;
  }
}

}  // namespace

Vec2 wavenumbers(cplx energy, const PotentialModel& model, const RiemannSheet& sheet) {
  return momenta(energy, model, sheet);
}

InteriorDiagonalization diagonalize_interior(const Vec2& k, const PotentialModel& model) {
  require_two(model);
  const cplx A = k(0) * k(0) - model.depth(0, 0);
  const cplx B = k(1) * k(1) - model.depth(1, 1);
  const double v12 = model.depth(0, 1);
  const double v21 = model.depth(1, 0);

  InteriorDiagonalization d;
  if (v12 == 0.0 && v21 == 0.0) {
    d.q_plus_sq = A;
    d.q_minus_sq = B;
    d.O = Mat2::Identity();
    d.O_inv = Mat2::Identity();
    d.eigvec_norm = 1.0;
  } else {
    cplx disc = principal_sqrt((A - B) * (A - B) + 4.0 * v12 * v21);
    // Either root is a valid labelling; keep the one with the larger N^2.
    if (std::abs(A - B - disc) < std::abs(A - B + disc)) disc = -disc;
    if (std::abs(disc) < 1e-12)
      fail(Errc::kDegenerateModes, "coincident interior eigenvalues q+^2 = q-^2");
    d.q_plus_sq = 0.5 * (A + B + disc);
    d.q_minus_sq = 0.5 * (A + B - disc);
    const cplx x = A - d.q_plus_sq;
    d.eigvec_norm = std::sqrt(v12 * v12 + x * x);
    d.O << v12, x, -x, v21;
    d.O /= d.eigvec_norm;
    d.O_inv = d.O.transpose();
  }
  d.q_plus = principal_sqrt(d.q_plus_sq);
  d.q_minus = principal_sqrt(d.q_minus_sq);
  return d;
}

InteriorDiagonalization diagonalize_interior(cplx energy, const PotentialModel& model,
                                             const RiemannSheet& sheet) {
  return diagonalize_interior(momenta(energy, model, sheet), model);
}

Mat2 jost_matrix(const Vec2& k, const PotentialModel& model) {
  require_off_branch(k);
  const auto d = diagonalize_interior(k, model);
  const double a = model.range;
  const Vec2 q = d.q();
  const Mat2 inner = diag(k.cwiseInverse()) * d.O_inv * diag(cosv(q, a)) -
                     kI * d.O_inv * diag(sinc(q, a));
  return diag(exp_ik(k, a)) * inner * d.O * diag(k);
}

Mat2 jost_matrix(cplx energy, const PotentialModel& model, const RiemannSheet& sheet) {
  return jost_matrix(momenta(energy, model, sheet), model);
}

Mat2 jost_matrix_minus(cplx energy, const PotentialModel& model, const RiemannSheet& sheet) {
  return jost_matrix(Vec2(-momenta(energy, model, sheet)), model);
}

cplx jost_det(cplx energy, const PotentialModel& model, const RiemannSheet& sheet) {
  return jost_matrix(energy, model, sheet).determinant();
}

cplx jost_det_reduced(cplx energy, const PotentialModel& model, const RiemannSheet& sheet) {
  const Vec2 k = momenta(energy, model, sheet);
  require_off_branch(k);
  const auto d = diagonalize_interior(k, model);
  const Vec2 q = d.q();
  const double a = model.range;
  const Mat2 m = diag(k.cwiseInverse()) * d.O_inv * diag(cosv(q, a)) -
                 kI * d.O_inv * diag(sinc(q, a));
  return m.determinant();
}

double pole_tolerance(const Vec2& k, const PotentialModel& model) {
  return 1e-10 * std::max(1.0, std::abs(std::exp(kI * (k(0) + k(1)) * model.range)));
}

Mat2 regular_solution_matrix(double r, cplx energy, const PotentialModel& model,
                             const RiemannSheet& sheet) {
  const Setup s = setup(energy, model, sheet);
  if (r < model.range) return regular_inside(r, s);
  const Mat2 fp = jost_matrix(s.k, model);
  const Mat2 fm = jost_matrix(Vec2(-s.k), model);
  return 0.5 * kI * (diag(exp_ik(-s.k, r)) * fp - diag(exp_ik(s.k, r)) * fm);
}

Mat2 regular_solution_matrix_derivative(double r, cplx energy, const PotentialModel& model,
                                        const RiemannSheet& sheet) {
  const Setup s = setup(energy, model, sheet);
  if (r < model.range) return regular_inside_derivative(r, s);
  const Mat2 fp = jost_matrix(s.k, model);
  const Mat2 fm = jost_matrix(Vec2(-s.k), model);
  return 0.5 * diag(s.k) * (diag(exp_ik(-s.k, r)) * fp + diag(exp_ik(s.k, r)) * fm);
}

Mat2 jost_solution_matrix(double r, cplx energy, const PotentialModel& model,
                          const RiemannSheet& sheet) {
  return jost_solution_at(r, setup(energy, model, sheet), model.range);
}

Mat2 jost_solution_matrix_derivative(double r, cplx energy, const PotentialModel& model,
                                     const RiemannSheet& sheet) {
  return jost_solution_derivative_at(r, setup(energy, model, sheet), model.range);
}

Mat2 wronskian(double r, cplx energy, const PotentialModel& model, const RiemannSheet& sheet) {
  const Mat2 phi = regular_solution_matrix(r, energy, model, sheet);
  const Mat2 dphi = regular_solution_matrix_derivative(r, energy, model, sheet);
  const Mat2 f = jost_solution_matrix(r, energy, model, sheet);
  const Mat2 df = jost_solution_matrix_derivative(r, energy, model, sheet);
  return phi.transpose() * df - dphi.transpose() * f;
}

Mat2 green_matrix(double r, double s, const Vec2& k, const PotentialModel& model) {
  require_off_branch(k);
  Setup st;
  st.k = k;
  st.d = diagonalize_interior(k, model);
  const Mat2 fp = jost_matrix(k, model);
  if (std::abs(fp.determinant()) < pole_tolerance(k, model))
    fail(Errc::kPoleAtEnergy, "Green matrix evaluated at a zero of det F+");
  const double c = model.units.energy_to_k2();
  const double a = model.range;
  const Mat2 fm = jost_matrix(Vec2(-k), model);
  auto phi = [&](double x) -> Mat2 {
    if (x < a) return regular_inside(x, st);
    return 0.5 * kI * (diag(exp_ik(-k, x)) * fp - diag(exp_ik(k, x)) * fm);
  };
  const Mat2 kinv = diag(k.cwiseInverse());
  if (r >= s)
    return -c * phi(s) * fp.inverse() * kinv * jost_solution_at(r, st, a).transpose();
  return -c * jost_solution_at(s, st, a) * kinv * fp.transpose().inverse() * phi(r).transpose();
}

Mat2 green_matrix(double r, double s, cplx energy, const PotentialModel& model,
                  const RiemannSheet& sheet) {
  return green_matrix(r, s, momenta(energy, model, sheet), model);
}

Mat2 residue_of_green_matrix(double r, double s, cplx pole_energy, const PotentialModel& model,
                             const RiemannSheet& sheet, const ResidueOptions& options) {
  const Vec2 k0 = momenta(pole_energy, model, sheet);
  const auto th = model.thresholds();
  const double radius = options.radius_scale * residue_contour_radius(pole_energy, th);
  return contour_residue(
      [&](cplx e) -> Mat2 {
        return green_matrix(r, s, continued_momenta(e, pole_energy, k0, model), model);
      },
      pole_energy, radius, options.nodes);
}

SMatrices s_matrices(cplx energy, const PotentialModel& model, const RiemannSheet& sheet) {
  const Vec2 k = momenta(energy, model, sheet);
  const Mat2 fp = jost_matrix(k, model);
  if (std::abs(fp.determinant()) < pole_tolerance(k, model))
    fail(Errc::kPoleAtEnergy, "S-matrix evaluated at a zero of det F+");
  const Mat2 fm = jost_matrix(Vec2(-k), model);
  SMatrices out;
  out.non_unitary = fm * fp.inverse();
  out.unitary = unitarize(out.non_unitary, k);
  return out;
}

Mat2 s_matrix_unitary(cplx energy, const PotentialModel& model, const RiemannSheet& sheet) {
  return s_matrices(energy, model, sheet).unitary;
}

Mat2 residue_of_s_matrix(cplx pole_energy, const PotentialModel& model, const RiemannSheet& sheet,
                         SMatrixKind kind, const ResidueOptions& options) {
  const Vec2 k0 = momenta(pole_energy, model, sheet);
  const auto th = model.thresholds();
  const double radius = options.radius_scale * residue_contour_radius(pole_energy, th);
  return contour_residue(
      [&](cplx e) -> Mat2 {
        const Vec2 k = continued_momenta(e, pole_energy, k0, model);
        const Mat2 snu = s_nu_at(k, model);
        return kind == SMatrixKind::kNonUnitary ? snu : unitarize(snu, k);
      },
      pole_energy, radius, options.nodes);
}

Mat2 residue_of_s_matrix_in_k1(cplx pole_energy, const PotentialModel& model,
                               const RiemannSheet& sheet, const ResidueOptions& options) {
  const Vec2 k0 = momenta(pole_energy, model, sheet);
  const auto th = model.thresholds();
  const double c = model.units.energy_to_k2();
  const double e_radius = residue_contour_radius(pole_energy, th);
  // |dE/dk1| = 2 |k10| / c maps the energy radius onto the k1 plane.
  const double dedk = 2.0 * std::abs(k0(0)) / c;
  double radius = std::min(0.5 * e_radius / std::max(dedk, 1e-300), 0.5 * std::abs(k0(0)));
  radius *= options.radius_scale;
  const double th1 = model.threshold(0);
  return contour_residue(
      [&](cplx k1) -> Mat2 {
        const cplx e = th1 + k1 * k1 / c;
        Vec2 k = continued_momenta(e, pole_energy, k0, model);
        k(0) = k1;
        return unitarize(s_nu_at(k, model), k);
      },
      k0(0), radius, options.nodes);
}

MultiGamowState::MultiGamowState(Pole pole, PotentialModel model, Vec2 k0,
                                 InteriorDiagonalization diag, Vec2 interior_b, Vec2 norm,
                                 Mat2 norm_products)
    : pole_(std::move(pole)),
      model_(std::move(model)),
      k0_(k0),
      diag_(std::move(diag)),
      b_(interior_b),
      norm_(norm),
      norm_products_(norm_products) {}

Vec2 MultiGamowState::evaluate(double r) const {
  if (r >= model_.range) return norm_.cwiseProduct(exp_ik(k0_, r));
  const Vec2 s(std::sin(diag_.q_plus * r), std::sin(diag_.q_minus * r));
  return scale_.cwiseProduct(diag_.O_inv * s.cwiseProduct(b_));
}

Vec2 MultiGamowState::derivative(double r) const {
  if (r >= model_.range) return kI * k0_.cwiseProduct(norm_).cwiseProduct(exp_ik(k0_, r));
  const Vec2 c(diag_.q_plus * std::cos(diag_.q_plus * r),
               diag_.q_minus * std::cos(diag_.q_minus * r));
  return scale_.cwiseProduct(diag_.O_inv * c.cwiseProduct(b_));
}

// Interior amplitudes are channel-mixed, so the factors act after O^{-1}.
MultiGamowState MultiGamowState::rescaled(const Vec2& factors) const {
  MultiGamowState out = *this;
  out.scale_ = scale_.cwiseProduct(factors);
  out.norm_ = norm_.cwiseProduct(factors);
  return out;
}

MultiGamowState gamow_state(const Pole& pole, const PotentialModel& model) {
  const Vec2 k0 = momenta(pole.energy, model, pole.sheet);
  require_off_branch(k0);
  const Mat2 fp = jost_matrix(k0, model);
  if (std::abs(fp.determinant()) >= pole_tolerance(k0, model))
    fail(Errc::kNotAPole, "energy is not a zero of det F+ on this sheet");
  const auto d = diagonalize_interior(k0, model);
  const double a = model.range;

  // Matching at r = a: e^{iKa} N = O^{-1} sin(Qa) B and iK e^{iKa} N = O^{-1} Q cos(Qa) B.
  const Vec2 e = exp_ik(k0, a);
  const Vec2 sin_qa(std::sin(d.q_plus * a), std::sin(d.q_minus * a));
  const Vec2 qcos_qa(d.q_plus * std::cos(d.q_plus * a), d.q_minus * std::cos(d.q_minus * a));
  Mat4 m = Mat4::Zero();
  m.block<2, 2>(0, 0) = diag(e);
  m.block<2, 2>(0, 2) = -d.O_inv * diag(sin_qa);
  m.block<2, 2>(2, 0) = kI * diag(k0) * diag(e);
  m.block<2, 2>(2, 2) = -d.O_inv * diag(qcos_qa);
  Eigen::JacobiSVD<Mat4> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  if (sv(2) <= 1e-8 * sv(0))
    fail(Errc::kRankTwoNullspace, "matching conditions leave a two-dimensional null space");
  const Eigen::Vector4cd v = svd.matrixV().col(3);
  Vec2 n_dir = v.head<2>();
  Vec2 b_dir = v.tail<2>();

  const Mat2 res = residue_of_s_matrix(pole.energy, model, pole.sheet, SMatrixKind::kNonUnitary);
  const double mu_over_hbar2 = 0.5 * model.units.energy_to_k2();
  Mat2 nn = kI * mu_over_hbar2 * res * diag(k0.cwiseInverse());

  Eigen::Index lead = std::abs(n_dir(0)) >= std::abs(n_dir(1)) ? 0 : 1;
  const cplx c = std::sqrt(nn(lead, lead) / (n_dir(lead) * n_dir(lead)));
  Vec2 norm = c * n_dir;
  Vec2 b = c * b_dir;
  fix_overall_sign(norm, b);
  return MultiGamowState(pole, model, k0, d, b, norm, nn);
}

}  // namespace gamow::coupled
