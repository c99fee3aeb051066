// ec.hpp -- rational point arithmetic on the elliptic model: group law,
// scalar multiples, point sampling and m-torsion enumeration.
#ifndef ADELIC_EC_HPP
#define ADELIC_EC_HPP

#include <random>
#include <vector>

#include "adelic/curve.hpp"

namespace adelic {

/// A rational point, affine or the origin.
class EcPoint {
 public:
  static EcPoint origin() { return EcPoint(); }
  static EcPoint affine(const CurveModel& curve, FieldElement x, FieldElement y);

  bool is_origin() const { return at_infinity_; }
  const FieldElement& x() const { return x_; }
  const FieldElement& y() const { return y_; }

  bool operator==(const EcPoint& o) const;
  bool operator!=(const EcPoint& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  EcPoint() : at_infinity_(true) {}
  bool at_infinity_;
  FieldElement x_, y_;
};

EcPoint ec_add(const CurveModel& curve, const EcPoint& p, const EcPoint& q);
EcPoint ec_neg(const CurveModel& curve, const EcPoint& p);
EcPoint ec_mul(const CurveModel& curve, std::int64_t k, const EcPoint& p);

/// The place corresponding to a rational point.
Place place_of(const CurveModel& curve, const EcPoint& p);
EcPoint point_of(const CurveModel& curve, const Place& x);

/// (P) - (O) as a divisor.
Divisor point_class_divisor(const CurveModel& curve, const EcPoint& p);

/// Uniform random rational point (possibly the origin).
EcPoint random_point(const CurveModel& curve, std::mt19937_64& rng);

/// All points of E[m] over the base field, origin included, in a
/// deterministic order.  Throws StructureError if the field is too large to
/// enumerate.
std::vector<EcPoint> torsion_points(const CurveModel& curve, std::int64_t m);

/// x - x_P, with divisor (P) + (-P) - 2(O); the constant 1 when P is the
/// origin.
CurveFunction vertical_line(const CurveModel& curve, const EcPoint& p);

/// The line through P and Q: the tangent when P == Q, the vertical when
/// x_P == x_Q, a vertical through the affine one when either is the origin,
/// and 1 when both are.  Divisor (P) + (Q) + (-(P+Q)) - 3(O) in the generic
/// case.
CurveFunction chord_line(const CurveModel& curve, const EcPoint& p, const EcPoint& q);

}  // namespace adelic

#endif
