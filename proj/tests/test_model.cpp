#include "doctest.h"
#include "fixtures.hpp"
#include "gamow/error.hpp"

using namespace gamow;

TEST_SUITE("model") {
  TEST_CASE("channel wave numbers square to the channel energies") {
    const auto m = fx::two_model();
    for (const char* s : {"+,+", "-,+", "+,-", "-,-"}) {
      const auto sheet = RiemannSheet::parse(s);
      for (cplx e : fx::random_energies(50, -5, 10, -3, 3)) {
        const auto mk = channel_wavenumbers(e, m, sheet);
        REQUIRE(mk.k.size() == 2);
        for (std::size_t a = 0; a < 2; ++a) {
          CHECK(std::abs(mk.k[a] * mk.k[a] - (e - m.threshold(a))) < 1e-13 * std::max(1.0, std::abs(e)));
          CHECK(mk.k[a].imag() * static_cast<int>(sheet[a]) > 0.0);
        }
      }
    }
  }

  TEST_CASE("flipping a sheet sign negates that wave number") {
    const auto m = fx::two_model();
    const auto sheet = RiemannSheet::parse("+,+");
    for (cplx e : fx::random_energies(20, -5, 10, -3, 3, 7)) {
      const auto a = channel_wavenumbers(e, m, sheet);
      const auto b = channel_wavenumbers(e, m, sheet.flipped(0));
      CHECK(b.k[0] == -a.k[0]);
      CHECK(b.k[1] == a.k[1]);
    }
  }

  TEST_CASE("bound-state energy on the physical sheet") {
    const auto mk = channel_wavenumbers(-0.486193, fx::two_model(), RiemannSheet::physical(2));
    CHECK(mk.k[0].real() == 0.0);
    CHECK(mk.k[0].imag() == doctest::Approx(0.6972754118710913).epsilon(1e-14));
    CHECK(mk.k[1].imag() == doctest::Approx(oracle::kK2AtBoundGuess).epsilon(1e-14));
  }

  TEST_CASE("threshold energy gives k = 0 and real energies above use the upper limit") {
    const auto m = fx::two_model();
    CHECK(channel_wavenumbers(4.0, m, RiemannSheet::physical(2)).k[1] == cplx(0.0, 0.0));
    const auto mk = channel_wavenumbers(5.0, m, RiemannSheet::parse("-,-"));
    CHECK(mk.k[0] == cplx(std::sqrt(5.0), 0.0));
    CHECK(mk.k[1] == cplx(1.0, 0.0));
  }

  TEST_CASE("resonance sheet signs") {
    const auto mk = channel_wavenumbers({3.66303, -0.0581467}, fx::two_model(),
                                        RiemannSheet::parse("(-,+)"));
    CHECK(mk.k[0].imag() < 0.0);
    CHECK(mk.k[1].imag() > 0.0);
  }

  TEST_CASE("sheet parsing and printing") {
    CHECK(RiemannSheet::parse("(-,+)").to_string() == "(-,+)");
    CHECK(RiemannSheet::parse("-+") == RiemannSheet::parse("-1,1"));
    CHECK(RiemannSheet::physical(2).is_physical());
    CHECK_FALSE(RiemannSheet::parse("+,-").is_physical());
    CHECK_THROWS_AS(RiemannSheet::parse("(x)"), Error);
  }

  TEST_CASE("validate_model") {
    CHECK_NOTHROW(validate_model(fx::two_model()));
    auto asym = fx::two_model();
    asym.depth(1, 0) = 0.0;
    try {
      validate_model(asym);
      FAIL("expected AsymmetricPotential");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::kAsymmetricPotential);
    }
    auto zero_range = fx::two_model();
    zero_range.range = 0.0;
    try {
      validate_model(zero_range);
      FAIL("expected NonpositiveRange");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::kNonpositiveRange);
    }
    auto unsorted = fx::two_model();
    unsorted.channels[0].threshold = 5.0;
    try {
      validate_model(unsorted);
      FAIL("expected UnsortedThresholds");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::kUnsortedThresholds);
    }
  }

  TEST_CASE("pole parametrization") {
    const auto p = Pole::at({3.0, -0.25}, RiemannSheet::parse("-,+"), PoleKind::kResonance);
    CHECK(p.e_r == 3.0);
    CHECK(p.gamma_r == 0.5);
  }

  TEST_CASE("residue contour radius") {
    const double th[] = {0.0, 4.0};
    CHECK(residue_contour_radius({-0.486193, 0.0}, th) == doctest::Approx(0.1));
    CHECK(residue_contour_radius({3.66303, -0.0581467}, th) == doctest::Approx(0.0290733));
    CHECK(residue_contour_radius({3.9, -1.0}, th) == doctest::Approx(0.5));
    CHECK(residue_contour_radius({3.95, 0.0}, th) == doctest::Approx(0.025));
    CHECK(residue_contour_radius({-1.0, 1e-12}, th) == doctest::Approx(0.1));
    CHECK_THROWS_AS(residue_contour_radius({4.0, 0.0}, th), Error);
  }
}
