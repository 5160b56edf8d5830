#include <cmath>

#include "doctest.h"
#include "gamow/error.hpp"
#include "gamow/numeric.hpp"
#include "gamow/quadrature.hpp"

using namespace gamow;

TEST_SUITE("quadrature") {
  TEST_CASE("adaptive rule integrates smooth and peaked functions") {
    auto r = quad::integrate<double>([](double x) { return std::exp(x); }, 0.0, 1.0);
    CHECK(std::abs(r.value - (std::exp(1.0) - 1.0)) < 1e-13);
    const double w = 1e-3;
    auto lor = [w](double x) { return w / (x * x + w * w); };
    const double pts[] = {-1.0, 0.0, 1.0};
    auto l = quad::integrate<double>(lor, std::span<const double>(pts), {1e-12, 1e-12, 20000});
    CHECK(std::abs(l.value - 2.0 * std::atan(1.0 / w)) < 1e-10);
    auto c = quad::integrate<cplx>([](double x) { return std::exp(kI * x); }, 0.0, kPi);
    CHECK(std::abs(c.value - cplx(0.0, 2.0)) < 1e-13);
  }

  TEST_CASE("square-root endpoint behaviour converges") {
    auto r = quad::integrate<double>([](double x) { return std::sqrt(x); }, 0.0, 1.0,
                                     {1e-12, 1e-12, 20000});
    CHECK(std::abs(r.value - 2.0 / 3.0) < 1e-11);
  }

  TEST_CASE("results are reproducible bit for bit") {
    auto f = [](double x) { return std::sin(50 * x) / (1 + x * x); };
    auto a = quad::integrate<double>(f, 0.0, 10.0);
    auto b = quad::integrate<double>(f, 0.0, 10.0);
    CHECK(a.value == b.value);
    CHECK(a.panels == b.panels);
  }

  TEST_CASE("panel limit raises QuadratureNoConvergence") {
    try {
      quad::integrate<double>([](double x) { return 1.0 / std::sqrt(std::abs(x - 0.3)); }, 0.0, 1.0,
                              {1e-15, 1e-15, 5});
      FAIL("expected QuadratureNoConvergence");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::kQuadratureNoConvergence);
    }
    CHECK_THROWS_AS(quad::integrate<double>([](double) { return 1.0; }, 1.0, 0.0), Error);
  }

  TEST_CASE("64-point Gauss-Legendre rule") {
    const auto& g = quad::gauss_legendre_64();
    REQUIRE(g.nodes.size() == 64);
    double sum = 0.0;
    for (double w : g.weights) sum += w;
    CHECK(std::abs(sum - 2.0) < 1e-14);
    // Exact for polynomials up to degree 127.
    auto p = quad::gauss_legendre<double>([](double x) { return std::pow(x, 126); }, -1.0, 1.0);
    CHECK(std::abs(p - 2.0 / 127.0) < 1e-15);
    auto s = quad::gauss_legendre<double>([](double x) { return std::sin(x); }, 0.0, kPi);
    CHECK(std::abs(s - 2.0) < 1e-14);
  }

  TEST_CASE("contour residue of a simple pole") {
    const cplx z0(0.3, -0.2), c(1.5, 0.5);
    const cplx r = contour_residue([&](cplx z) { return c / (z - z0) + std::exp(z); }, z0, 0.1, 64);
    CHECK(std::abs(r - c) < 1e-14);
  }

  TEST_CASE("sin_over_q series branch") {
    CHECK(sin_over_q(cplx(0.0, 0.0), 2.0) == cplx(2.0, 0.0));
    const cplx q(3e-5, 1e-5);
    CHECK(std::abs(sin_over_q(q, 1.0) - std::sin(q) / q) < 1e-15);
    CHECK(sin_over_q(q, 1.0) == sin_over_q(-q, 1.0));
  }
}
