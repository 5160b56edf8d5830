#include "gamow/quadrature.hpp"

#include <boost/math/special_functions/legendre.hpp>

namespace gamow::quad {

const GaussLegendre64& gauss_legendre_64() {
  static const GaussLegendre64 rule = [] {
    constexpr int n = 64;
    GaussLegendre64 r;
    // Boost returns the nonnegative zeros only; the rule is symmetric.
    const auto zeros = boost::math::legendre_p_zeros<double>(n);
    for (auto it = zeros.rbegin(); it != zeros.rend(); ++it) {
      const double x = -*it;
      const double dp = boost::math::legendre_p_prime<double>(n, x);
      r.nodes.push_back(x);
      r.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
    }
    for (double x : zeros) {
      if (x == 0.0) continue;
      const double dp = boost::math::legendre_p_prime<double>(n, x);
      r.nodes.push_back(x);
      r.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
    }
    return r;
  }();
  return rule;
}

}  // namespace gamow::quad
