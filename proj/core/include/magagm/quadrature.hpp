#pragma once

#include <vector>

#include "magagm/precision.hpp"

namespace magagm {

struct QuadratureResult {
  BigReal value;
  // Difference between the last two refinement levels.
  BigReal error_estimate;
  int levels = 0;
  bool converged = false;
};

// Tanh-sinh (double exponential) quadrature on a finite interval.
//
// Abscissas and weights for every refinement level are built once at
// construction; integration is const and reentrant. The integrand is called
// as f(x, x - a, b - x) so that kernels with endpoint singularities can use
// the accurately computed distances to the endpoints instead of recomputing
// them with cancellation.
class TanhSinh {
 public:
  explicit TanhSinh(const PrecisionContext& ctx, int max_level = 9);

  template <typename F>
  QuadratureResult integrate(F&& f, const BigReal& a, const BigReal& b, const BigReal& rel_tol) const;

  // Integral over [a, inf) through the substitution x = a + u/(1-u). The
  // integrand is called as f(x) and should decay at least like x^-2.
  template <typename F>
  QuadratureResult integrate_to_infinity(F&& f, const BigReal& a, const BigReal& rel_tol) const;

  int max_level() const { return static_cast<int>(levels_.size()) - 1; }

 private:
  struct Node {
    BigReal complement;  // 1 - |u|, computed without cancellation
    BigReal weight;
  };

  mpfr_prec_t bits_;
  BigReal center_weight_;
  // levels_[0] holds t = 1, 2, ...; levels_[l] the odd multiples of 2^-l.
  std::vector<std::vector<Node>> levels_;
};

template <typename F>
QuadratureResult TanhSinh::integrate(F&& f, const BigReal& a, const BigReal& b, const BigReal& rel_tol) const {
  const BigReal half = (b - a) / 2L;
  const BigReal mid = (a + b) / 2L;
  BigReal sum = center_weight_ * f(mid, half, half);
  auto accumulate = [&](const std::vector<Node>& nodes) {
    for (const Node& node : nodes) {
      BigReal near = half * node.complement;
      BigReal far = half * (2L - node.complement);
      // u = 1 - c: x = b - near and x = a + near.
      sum += node.weight * (f(b - near, far, near) + f(a + near, near, far));
    }
  };

  QuadratureResult result;
  accumulate(levels_[0]);
  BigReal previous = sum * half;
  for (std::size_t level = 1; level < levels_.size(); ++level) {
    accumulate(levels_[level]);
    BigReal estimate = ldexp(sum, -static_cast<long>(level)) * half;
    BigReal diff = abs(estimate - previous);
    result.value = estimate;
    result.error_estimate = diff;
    result.levels = static_cast<int>(level);
    if (level >= 3 && diff <= rel_tol * abs(estimate)) {
      result.converged = true;
      break;
    }
    if (level >= 3 && estimate.is_zero() && diff.is_zero()) {
      result.converged = true;
      break;
    }
    previous = std::move(estimate);
  }
  if (levels_.size() == 1) result.value = sum * half;
  return result;
}

template <typename F>
QuadratureResult TanhSinh::integrate_to_infinity(F&& f, const BigReal& a, const BigReal& rel_tol) const {
  const BigReal zero(bits_);
  const BigReal one(1L, bits_);
  auto mapped = [&](const BigReal& u, const BigReal& /*u - 0*/, const BigReal& one_minus_u) {
    BigReal x = a + u / one_minus_u;
    return f(x) / (one_minus_u * one_minus_u);
  };
  return integrate(mapped, zero, one, rel_tol);
}

}  // namespace magagm
