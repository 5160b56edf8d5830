#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <span>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "gamow/error.hpp"

namespace gamow::quad {

struct AdaptiveOptions {
  double abs_tol = 1e-9;
  double rel_tol = 1e-9;
  int max_panels = 20000;
};

template <class Value>
struct Result {
  Value value{};
  double error = 0.0;
  int panels = 0;
};

namespace detail {

template <class Value>
struct Panel {
  double a, b;
  Value value;
  double error;
};

// One 31-point Kronrod panel with its embedded 15-point Gauss estimate.
template <class Value, class F>
Panel<Value> gk31(F& f, double a, double b) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
  using G = boost::math::quadrature::gauss<double, 15>;
  const auto& x = GK::abscissa();
  const auto& wk = GK::weights();
  const auto& wg = G::weights();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const Value f0 = f(c);
  Value kron = f0 * wk[0];
  Value gauss = f0 * wg[0];
  for (std::size_t i = 1; i < x.size(); ++i) {
    const Value s = f(c - h * x[i]) + f(c + h * x[i]);
    kron += s * wk[i];
    if (i % 2 == 0) gauss += s * wg[i / 2];
  }
  return {a, b, kron * h, std::abs((kron - gauss) * h)};
}

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration over the sorted breakpoints
// [x0, x1, ..., xn]. The panel with the largest error estimate is bisected
// until the summed estimate drops below max(abs_tol, rel_tol |I|). Panel
// values are summed in position order so the result is reproducible.
template <class Value, class F>
Result<Value> integrate(F&& f, std::span<const double> breakpoints,
                        const AdaptiveOptions& opt = {}) {
  using P = detail::Panel<Value>;
  if (breakpoints.size() < 2) fail(Errc::kInvalidArgument, "need at least two breakpoints");
  std::vector<P> done;
  auto worse = [](const P& l, const P& r) {
    if (l.error != r.error) return l.error < r.error;
    return l.a > r.a;
  };
  std::priority_queue<P, std::vector<P>, decltype(worse)> heap(worse);
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i] < breakpoints[i + 1]))
      fail(Errc::kInvalidArgument, "breakpoints must be strictly increasing");
    heap.push(detail::gk31<Value>(f, breakpoints[i], breakpoints[i + 1]));
  }

  auto totals = [&]() {
    std::vector<P> all = done;
    auto copy = heap;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(), [](const P& l, const P& r) { return l.a < r.a; });
    Result<Value> res;
    for (const auto& p : all) {
      res.value += p.value;
      res.error += p.error;
    }
    res.panels = static_cast<int>(all.size());
    return res;
  };

  double err_sum = 0.0;
  Value val_sum{};
  {
    auto copy = heap;
    while (!copy.empty()) {
      err_sum += copy.top().error;
      val_sum += copy.top().value;
      copy.pop();
    }
  }
  int panels = static_cast<int>(heap.size());
  while (err_sum > std::max(opt.abs_tol, opt.rel_tol * std::abs(val_sum))) {
    if (panels >= opt.max_panels)
      fail(Errc::kQuadratureNoConvergence,
           "adaptive quadrature hit the panel limit with error estimate " +
               std::to_string(err_sum));
    P worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      // Panel cannot be split further in double precision; accept it.
      done.push_back(worst);
      err_sum -= worst.error;
      if (heap.empty()) break;
      continue;
    }
    P left = detail::gk31<Value>(f, worst.a, mid);
    P right = detail::gk31<Value>(f, mid, worst.b);
    err_sum += left.error + right.error - worst.error;
    val_sum += left.value + right.value - worst.value;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  // Re-sum from scratch in position order; the running sums only steer the loop.
  return totals();
}

template <class Value, class F>
Result<Value> integrate(F&& f, double a, double b, const AdaptiveOptions& opt = {}) {
  const double pts[] = {a, b};
  return integrate<Value>(std::forward<F>(f), std::span<const double>(pts), opt);
}

// Fixed 64-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendre64 {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussLegendre64& gauss_legendre_64();

template <class Value, class F>
Value gauss_legendre(F&& f, double a, double b) {
  const auto& rule = gauss_legendre_64();
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  Value sum{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += f(c + h * rule.nodes[i]) * rule.weights[i];
  return sum * h;
}

}  // namespace gamow::quad
