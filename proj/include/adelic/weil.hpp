// weil.hpp -- the Weil pairing on m-torsion divisor classes: the adelic
// product formula, its disjoint-support shortcut, and an independent
// Miller-algorithm implementation used as an oracle.
#ifndef ADELIC_WEIL_HPP
#define ADELIC_WEIL_HPP

#include "adelic/ec.hpp"
#include "adelic/idele.hpp"
#include "adelic/rr.hpp"

namespace adelic {

/// Everything the adelic formula needs about one m-torsion class:
/// alpha = uniformizer idele of D, f with div(f) = m D, and the unit idele
/// u = alpha^m / f.
struct TorsionClassData {
  Divisor D;
  Idele alpha;
  CurveFunction f;
  Idele u;
};

/// Builds the data above; throws DomainError when the class of D is not
/// m-torsion or m is not coprime to the characteristic.
TorsionClassData prepare_torsion_class(const Divisor& D, std::int64_t m, const CurveModel& curve);

/// prod_x Nm[(f, alpha'_x)_x * (alpha_x, u'_x)^(-1)_x] for prepared classes;
/// the result is an m-th root of unity.
FieldElement weil_pairing_from_data(const TorsionClassData& L, const TorsionClassData& M,
                                    std::int64_t m);

/// The adelic Weil pairing of the classes of D and Dp.
FieldElement weil_pairing_adelic(const Divisor& D, const Divisor& Dp, std::int64_t m,
                                 const CurveModel& curve);

/// Disjoint-support form: f(Dp) * f'(D)^(-1) with f, f' the certified
/// functions.  Requires supp(D) and supp(Dp) disjoint.
FieldElement weil_pairing_disjoint(const Divisor& D, const Divisor& Dp, std::int64_t m,
                                   const CurveModel& curve);

/// Classical Weil pairing e_m(P,Q) via double-and-add Miller loops on
/// shifted divisor representatives, with retries until every line
/// evaluation is defined.
FieldElement weil_pairing_miller(const EcPoint& P, const EcPoint& Q, std::int64_t m,
                                 const CurveModel& curve, std::uint64_t seed = 7);

/// prod over places of Nm(f(x))^(E(x)); every place of E must be outside
/// the zeros and poles of f.
FieldElement evaluate_on_divisor(const CurveFunction& f, const Divisor& E);

/// Exact multiplicative order of a nonzero field element.
std::int64_t multiplicative_order(const FieldElement& v);

}  // namespace adelic

#endif
