// rr.hpp -- Riemann-Roch spaces L(D) on the supported curves and
// m-torsion certification of degree-zero divisor classes.
#ifndef ADELIC_RR_HPP
#define ADELIC_RR_HPP

#include <optional>
#include <vector>

#include "adelic/curve.hpp"

namespace adelic {

struct RiemannRochResult {
  std::vector<CurveFunction> basis;  // basis of L(D) = {f : div(f) + D >= 0}
  std::int64_t h0 = 0;
  std::int64_t h1 = 0;
};

/// Basis and dimensions of L(D).  Satisfies h0 - h1 = deg D + 1 - g.
RiemannRochResult riemann_roch(const Divisor& D, const CurveModel& curve);

/// If the class of the degree-zero divisor D is m-torsion, the function f
/// with div(f) = m*D, normalized so its leading expansion coefficient at
/// the canonical base place is 1; otherwise nothing.
std::optional<CurveFunction> certify_m_torsion(const Divisor& D, std::int64_t m,
                                               const CurveModel& curve);

}  // namespace adelic

#endif
