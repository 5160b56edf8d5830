#include "doctest.h"
#include "fixtures.hpp"
#include "gamow/error.hpp"
#include "gamow/pole_finder.hpp"

using namespace gamow;
using namespace gamow::poles;

TEST_SUITE("pole_finder") {
  TEST_CASE("scan finds one seed per paper pole") {
    const auto m = fx::single_model();
    auto seeds = scan_candidates({-4, 0, -0.01, 0.01}, jost_objective(m, RiemannSheet::physical(1)));
    REQUIRE(seeds.size() == 1);
    CHECK(std::abs(seeds[0].real() + 0.41) < 0.1);
    seeds = scan_candidates({10, 16, -16, -10}, jost_objective(m, RiemannSheet::parse("-")));
    REQUIRE(seeds.size() == 1);
    CHECK(std::abs(seeds[0] - cplx(12.7, -13.0)) < 0.3);
    const auto free = PotentialModel::single(0.0);
    CHECK(scan_candidates({-4, 0, -0.01, 0.01}, jost_objective(free, RiemannSheet::physical(1))).empty());
  }

  TEST_CASE("refine converges to the paper poles") {
    const auto m1 = fx::single_model();
    const cplx b = refine(-0.41, jost_objective(m1, RiemannSheet::physical(1)));
    CHECK(std::abs(b - oracle::kSingleBoundE) < 1e-12);
    const auto m2 = fx::two_model();
    const auto sh = RiemannSheet::parse("-,+");
    const cplx r = refine({3.6, -0.05}, jost_objective(m2, sh));
    CHECK(std::abs(r - cplx(oracle::kTwoResRe, oracle::kTwoResIm)) < 1e-12);
    CHECK(std::abs(refine(r, jost_objective(m2, sh)) - r) < 1e-12);
    CHECK(std::abs(jost_objective(m2, sh)(r)) < 1e-10);
  }

  TEST_CASE("refine reports NoConvergence without a zero") {
    try {
      refine({1.0, 1.0}, [](cplx) { return cplx(1.0, 0.0); });
      FAIL("expected NoConvergence");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::kNoConvergence);
    }
  }

  TEST_CASE("classification") {
    const auto m = fx::two_model();
    const cplx res(oracle::kTwoResRe, oracle::kTwoResIm);
    CHECK(classify(oracle::kTwoBoundE, RiemannSheet::physical(2), m).kind == PoleKind::kBound);
    CHECK(classify(res, RiemannSheet::parse("-,+"), m).kind == PoleKind::kResonance);
    CHECK(classify(res, RiemannSheet::physical(2), m).kind == PoleKind::kUnclassified);
    CHECK(classify({-0.2, 0.0}, RiemannSheet::parse("-,-"), m).kind == PoleKind::kVirtual);
    const auto p = classify({-0.3, 1e-14}, RiemannSheet::physical(2), m);
    CHECK(p.energy.imag() == 0.0);
    CHECK(p.gamma_r == 0.0);
  }

  TEST_CASE("find_poles reproduces the paper tables") {
    auto b = find_poles(fx::two_model(), RiemannSheet::physical(2), {-4, 0, -0.01, 0.01});
    REQUIRE(b.size() == 1);
    CHECK(std::abs(b[0].energy - oracle::kTwoBoundE) < 1e-12);
    auto r = find_poles(fx::two_model(), RiemannSheet::parse("-,+"), {3, 4, -0.5, 0});
    REQUIRE(r.size() == 1);
    CHECK(r[0].kind == PoleKind::kResonance);
    auto d = find_poles(fx::decoupled_model(), RiemannSheet::physical(2), {-4, 3.99, -0.01, 0.01, 161, 5});
    REQUIRE(d.size() == 2);
    CHECK(std::abs(d[0].energy - oracle::kDecoupledE[0]) < 1e-12);
    CHECK(std::abs(d[1].energy - oracle::kDecoupledE[1]) < 1e-12);
    CHECK(find_poles(fx::two_model(), RiemannSheet::physical(2), {0.5, 1, 0.5, 1}).empty());
  }

  TEST_CASE("channel-2 pole moves continuously as the coupling is switched on") {
    const auto sh = RiemannSheet::parse("-,+");
    cplx e = oracle::kDecoupledE[1];
    for (int i = 1; i <= 10; ++i) {
      const auto m = PotentialModel::two_channel(0, 4, -4, -0.1 * i, -4);
      const cplx next = refine(e, jost_objective(m, sh));
      CHECK(std::abs(next - e) < 0.2);
      CHECK(is_pole(next, m, sh));
      e = next;
    }
    CHECK(std::abs(e - cplx(oracle::kTwoResRe, oracle::kTwoResIm)) < 1e-10);
  }

  TEST_CASE("region validation") {
    CHECK_THROWS_AS(SearchRegion({1, 0, 0, 0}).validate(), Error);
    CHECK_THROWS_AS(SearchRegion({0, 1, 1, 0}).validate(), Error);
    CHECK_THROWS_AS(SearchRegion({0, 1, 0, 0, 1, 5}).validate(), Error);
  }
}
