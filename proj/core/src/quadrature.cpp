#include "magagm/quadrature.hpp"

namespace magagm {

TanhSinh::TanhSinh(const PrecisionContext& ctx, int max_level) : bits_(ctx.bits()) {
  const BigReal& pi = ctx.pi();
  const BigReal half_pi = pi / 2L;
  // Nodes whose complement falls below eps^2 contribute nothing even for
  // inverse-square-root endpoint behaviour.
  const BigReal cutoff = pow10(-2L * ctx.working_digits(), bits_);

  center_weight_ = half_pi;
  levels_.resize(static_cast<std::size_t>(max_level) + 1);
  for (int level = 0; level <= max_level; ++level) {
    const long denominator = 1L << level;
    for (long k = 1;; k += (level == 0 ? 1 : 2)) {
      BigReal t = BigReal(k, bits_) / denominator;
      BigReal s = half_pi * sinh(t);
      BigReal e2s = exp(2L * s);
      BigReal complement = 2L / (e2s + 1L);
      if (complement < cutoff) break;
      BigReal ch = cosh(s);
      BigReal weight = half_pi * cosh(t) / (ch * ch);
      levels_[static_cast<std::size_t>(level)].push_back({std::move(complement), std::move(weight)});
    }
  }
}

}  // namespace magagm
