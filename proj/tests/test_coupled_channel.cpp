#include "doctest.h"
#include "fixtures.hpp"
#include "gamow/error.hpp"

using namespace gamow;
using namespace gamow::coupled;

namespace {

double max_abs(const Mat2& m) { return m.cwiseAbs().maxCoeff(); }

Mat2 kmat(cplx e, const PotentialModel& m, const RiemannSheet& s) {
  return wavenumbers(e, m, s).asDiagonal();
}

const char* kSheets[] = {"+,+", "-,+", "+,-", "-,-"};

}  // namespace

TEST_SUITE("coupled_channel") {
  TEST_CASE("interior diagonalization is orthogonal and diagonalizing") {
    const auto m = fx::two_model();
    for (const char* sn : kSheets) {
      const auto sheet = RiemannSheet::parse(sn);
      for (cplx e : fx::random_energies(50, -5, 10, -3, 3, 99)) {
        const auto d = diagonalize_interior(e, m, sheet);
        CHECK(max_abs(d.O * d.O.transpose() - Mat2::Identity()) < 1e-10);
        const Vec2 k = wavenumbers(e, m, sheet);
        const Mat2 h = Mat2(k.cwiseProduct(k).asDiagonal()) - m.depth.cast<cplx>();
        const Mat2 t = d.O * h * d.O_inv;
        CHECK(std::abs(t(0, 1)) < 1e-10);
        CHECK(std::abs(t(1, 0)) < 1e-10);
        CHECK(std::abs(t(0, 0) - d.q_plus_sq) < 1e-10);
        CHECK(std::abs(t(1, 1) - d.q_minus_sq) < 1e-10);
      }
    }
  }

  TEST_CASE("decoupled diagonalization") {
    const auto m = fx::decoupled_model();
    const cplx e(1.5, 0.2);
    const auto d = diagonalize_interior(e, m, RiemannSheet::physical(2));
    CHECK(std::abs(d.q_plus_sq - (e + 4.0)) < 1e-14);
    CHECK(std::abs(d.q_minus_sq - (e - 4.0 + 4.0)) < 1e-14);
    CHECK(max_abs(d.O - Mat2::Identity()) < 1e-15);
  }

  TEST_CASE("degenerate modes are rejected") {
    // Identical channels with a coupling too weak to split q+^2 and q-^2.
    auto m = PotentialModel::two_channel(0.0, 0.0, -4.0, 1e-14, -4.0);
    try {
      diagonalize_interior(cplx(1.0, 0.0), m, RiemannSheet::physical(2));
      FAIL("expected DegenerateModes");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::kDegenerateModes);
    }
  }

  TEST_CASE("Jost matrix reduces to single-channel Jost functions when decoupled") {
    const auto m = fx::decoupled_model();
    const auto w = fx::well();
    for (cplx e : fx::random_energies(10, -2, 8, -2, 2, 5)) {
      const auto sheet = RiemannSheet::parse("-,+");
      const Vec2 k = wavenumbers(e, m, sheet);
      const Mat2 f = jost_matrix(e, m, sheet);
      CHECK(std::abs(f(0, 1)) < 1e-13);
      CHECK(std::abs(f(1, 0)) < 1e-13);
      CHECK(std::abs(f(0, 0) - single::jost_plus(k(0), w)) < 1e-12);
      CHECK(std::abs(f(1, 1) - single::jost_plus(k(1), w)) < 1e-12);
    }
  }

  TEST_CASE("Jost determinant zeros at the known poles") {
    const auto m = fx::two_model();
    CHECK(std::abs(jost_det(oracle::kTwoBoundE, m, RiemannSheet::physical(2))) < 1e-8);
    CHECK(std::abs(jost_det({oracle::kTwoResRe, oracle::kTwoResIm}, m,
                            RiemannSheet::parse("-,+"))) < 1e-8);
    CHECK(std::abs(jost_det_reduced(oracle::kTwoBoundE, m, RiemannSheet::physical(2))) < 1e-8);
    CHECK(std::abs(jost_det_reduced({oracle::kTwoResRe, oracle::kTwoResIm}, m,
                                    RiemannSheet::parse("-,+"))) < 1e-8);
    CHECK(std::abs(jost_det(oracle::kSingleBoundE, m, RiemannSheet::physical(2))) > 1e-3);
    const auto weak = PotentialModel::two_channel(0.0, 4.0, -1e-3, -1e-4, -1e-3);
    CHECK(std::abs(jost_det(50.0, weak, RiemannSheet::physical(2)) - 1.0) < 1e-2);
  }

  TEST_CASE("branch point is rejected") {
    try {
      jost_matrix(4.0, fx::two_model(), RiemannSheet::physical(2));
      FAIL("expected AtBranchPoint");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::kAtBranchPoint);
    }
  }

  TEST_CASE("solution matrices: boundary values, continuity, identities") {
    const auto m = fx::two_model();
    const auto s = RiemannSheet::parse("-,+");
    const cplx e(2.3, -0.4);
    const Mat2 k = kmat(e, m, s);
    CHECK(max_abs(regular_solution_matrix(0.0, e, m, s)) == 0.0);
    const double h = 1e-6;
    CHECK(max_abs((regular_solution_matrix(h, e, m, s) - regular_solution_matrix(-h, e, m, s)) /
                      (2 * h) - k) < 1e-8);
    const double a = m.range, eps = 1e-12;
    CHECK(max_abs(regular_solution_matrix(a - eps, e, m, s) - regular_solution_matrix(a + eps, e, m, s)) < 1e-10);
    CHECK(max_abs(regular_solution_matrix_derivative(a - eps, e, m, s) -
                  regular_solution_matrix_derivative(a + eps, e, m, s)) < 1e-10);
    CHECK(max_abs(jost_solution_matrix(a - eps, e, m, s) - jost_solution_matrix(a + eps, e, m, s)) < 1e-10);
    CHECK(max_abs(jost_solution_matrix_derivative(a - eps, e, m, s) -
                  jost_solution_matrix_derivative(a + eps, e, m, s)) < 1e-10);
    const Mat2 out = jost_solution_matrix(2.0, e, m, s);
    const Vec2 kv = wavenumbers(e, m, s);
    CHECK(std::abs(out(0, 0) - std::exp(kI * kv(0) * 2.0)) < 1e-15);
    CHECK(std::abs(out(1, 1) - std::exp(kI * kv(1) * 2.0)) < 1e-15);
    CHECK(std::abs(out(0, 1)) == 0.0);
    const Mat2 fp = jost_matrix(e, m, s);
    CHECK(max_abs(jost_solution_matrix(0.0, e, m, s) - k.inverse() * fp.transpose() * k) < 1e-10);
  }

  TEST_CASE("Wronskian is constant and equals -F+^T K") {
    const auto m = fx::two_model();
    for (const char* sn : kSheets) {
      const auto s = RiemannSheet::parse(sn);
      const cplx e(2.3, -0.4);
      const Mat2 want = -jost_matrix(e, m, s).transpose() * kmat(e, m, s);
      for (double r : {0.3, 0.8, 1.7})
        CHECK(max_abs(wronskian(r, e, m, s) - want) < 1e-10 * std::max(1.0, max_abs(want)));
    }
  }

  TEST_CASE("Green matrix satisfies the Schroedinger equation in s") {
    const auto m = fx::two_model();
    const auto sh = RiemannSheet::physical(2);
    const cplx e(1.7, 0.3);
    const Mat2 k2 = kmat(e, m, sh) * kmat(e, m, sh);
    const double r = 0.55, h = 1e-3;
    for (double s : {0.2, 0.8, 1.6}) {
      auto g = [&](double x) { return green_matrix(r, x, e, m, sh); };
      const Mat2 d2 = (-g(s + 2 * h) + 16.0 * g(s + h) - 30.0 * g(s) + 16.0 * g(s - h) - g(s - 2 * h)) /
                      (12.0 * h * h);
      const Mat2 v = s < m.range ? Mat2(m.depth.cast<cplx>()) : Mat2::Zero();
      CHECK(max_abs(-d2 + (v - k2) * g(s)) < 1e-6);
    }
    CHECK(max_abs(green_matrix(0.4, 0.9, e, m, sh) - green_matrix(0.9, 0.4, e, m, sh).transpose()) < 1e-12);
  }

  TEST_CASE("Green matrix diverges at the resonance") {
    const auto m = fx::two_model();
    const auto sh = RiemannSheet::parse("-,+");
    const cplx e0(oracle::kTwoResRe, oracle::kTwoResIm);
    double prev = 0.0;
    for (double d : {1e-2, 1e-4, 1e-6}) {
      const double v = max_abs(green_matrix(0.8, 0.4, e0 + d, m, sh));
      CHECK(v > prev);
      prev = v;
    }
  }

  TEST_CASE("S-matrix is unitary and symmetric above both thresholds") {
    const auto m = fx::two_model();
    for (int i = 0; i < 20; ++i) {
      const double e = 4.05 + 0.5 * i;
      const Mat2 s = s_matrix_unitary(e, m, RiemannSheet::physical(2));
      CHECK(max_abs(s * s.adjoint() - Mat2::Identity()) < 1e-10);
      CHECK(std::abs(s(0, 1) - s(1, 0)) < 1e-10);
    }
    try {
      s_matrix_unitary(oracle::kTwoBoundE, m, RiemannSheet::physical(2));
      FAIL("expected PoleAtEnergy");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::kPoleAtEnergy);
    }
  }

  TEST_CASE("residues converge in the node count and are rank one") {
    const auto m = fx::two_model();
    for (const auto& p : {fx::two_bound(), fx::two_resonance()}) {
      const Mat2 r64 = residue_of_s_matrix(p.energy, m, p.sheet, SMatrixKind::kUnitary, {64, 1.0});
      const Mat2 r128 = residue_of_s_matrix(p.energy, m, p.sheet, SMatrixKind::kUnitary, {128, 1.0});
      CHECK(max_abs(r128 - r64) < 1e-10 * max_abs(r64));
      Eigen::JacobiSVD<Mat2> svd(r64);
      CHECK(svd.singularValues()(1) / svd.singularValues()(0) < 1e-8);
    }
  }

  TEST_CASE("Gamow states match the oracle") {
    const auto m = fx::two_model();
    const auto b = gamow_state(fx::two_bound(), m);
    for (int i = 0; i < 2; ++i) {
      CHECK(std::abs(b.norm()(i) - oracle::kTwoBoundN[i]) < 1e-9);
      CHECK(std::abs(b.norm()(i).imag()) < 1e-8 * std::abs(b.norm()(i)));
    }
    const auto r = gamow_state(fx::two_resonance(), m);
    for (int i = 0; i < 2; ++i)
      CHECK(std::abs(r.norm()(i) - cplx(oracle::kTwoResN[i][0], oracle::kTwoResN[i][1])) < 1e-9);
    for (const auto* st : {&b, &r}) {
      CHECK(st->evaluate(0.0).norm() == 0.0);
      for (double x : {1.5, 2.0, 3.0}) {
        const Vec2 u = st->evaluate(x);
        for (int i = 0; i < 2; ++i)
          CHECK(std::abs(u(i) / std::exp(kI * st->k0()(i) * x) - st->norm()(i)) <
                1e-10 * std::abs(st->norm()(i)));
      }
      const double eps = 1e-12;
      CHECK((st->evaluate(1.0 - eps) - st->evaluate(1.0 + eps)).norm() < 1e-10);
      CHECK((st->derivative(1.0 - eps) - st->derivative(1.0 + eps)).norm() < 1e-10);
    }
  }

  TEST_CASE("decoupled channel-1 pole reproduces the single-channel state") {
    const auto p = Pole::at(oracle::kSingleBoundE, RiemannSheet::physical(2), PoleKind::kBound);
    const auto st = gamow_state(p, fx::decoupled_model());
    const auto ref = single::gamow_state(fx::single_bound(), fx::well());
    for (double r : {0.2, 0.6, 1.0, 1.7, 2.6}) {
      const Vec2 u = st.evaluate(r);
      CHECK(std::abs(u(1)) < 1e-14);
      CHECK(std::abs(u(0) - ref.evaluate(r)) < 1e-10);
    }
  }

  TEST_CASE("non-pole and unsupported inputs") {
    const auto p = Pole::at({-1.0, 0.0}, RiemannSheet::physical(2), PoleKind::kBound);
    try {
      gamow_state(p, fx::two_model());
      FAIL("expected NotAPole");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::kNotAPole);
    }
    try {
      jost_matrix(1.0, fx::single_model(), RiemannSheet::physical(1));
      FAIL("expected Unsupported");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::kUnsupported);
    }
  }
}
