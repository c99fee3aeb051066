#include "adelic/ec.hpp"

#include <algorithm>

namespace adelic {

EcPoint EcPoint::affine(const CurveModel& curve, FieldElement x, FieldElement y) {
  if (!curve.is_elliptic()) throw StructureError("points require an elliptic curve");
  if (y * y != curve.rhs_poly().evaluate(x))
    throw StructureError("point (" + x.to_string() + "," + y.to_string() + ") is not on the curve");
  EcPoint p;
  p.at_infinity_ = false;
  p.x_ = std::move(x);
  p.y_ = std::move(y);
  return p;
}

bool EcPoint::operator==(const EcPoint& o) const {
  if (at_infinity_ || o.at_infinity_) return at_infinity_ == o.at_infinity_;
  return x_ == o.x_ && y_ == o.y_;
}

std::string EcPoint::to_string() const {
  if (at_infinity_) return "O";
  return "(" + x_.to_string() + "," + y_.to_string() + ")";
}

EcPoint ec_neg(const CurveModel& curve, const EcPoint& p) {
  if (p.is_origin()) return p;
  return EcPoint::affine(curve, p.x(), -p.y());
}

EcPoint ec_add(const CurveModel& curve, const EcPoint& p, const EcPoint& q) {
  if (p.is_origin()) return q;
  if (q.is_origin()) return p;
  const auto& base = curve.base();
  if (p.x() == q.x()) {
    if (p.y() != q.y() || p.y().is_zero()) return EcPoint::origin();
    // tangent slope (3x^2 + a4) / 2y
    FieldElement three = FieldElement::from_int(base, 3);
    FieldElement lambda = (three * p.x() * p.x() + curve.a4()) / (p.y() + p.y());
    FieldElement xr = lambda * lambda - p.x() - q.x();
    FieldElement yr = lambda * (p.x() - xr) - p.y();
    return EcPoint::affine(curve, xr, yr);
  }
  FieldElement lambda = (q.y() - p.y()) / (q.x() - p.x());
  FieldElement xr = lambda * lambda - p.x() - q.x();
  FieldElement yr = lambda * (p.x() - xr) - p.y();
  return EcPoint::affine(curve, xr, yr);
}

EcPoint ec_mul(const CurveModel& curve, std::int64_t k, const EcPoint& p) {
  if (k < 0) return ec_mul(curve, -k, ec_neg(curve, p));
  EcPoint acc = EcPoint::origin();
  EcPoint base = p;
  auto e = static_cast<std::uint64_t>(k);
  while (e) {
    if (e & 1) acc = ec_add(curve, acc, base);
    base = ec_add(curve, base, base);
    e >>= 1;
  }
  return acc;
}

Place place_of(const CurveModel& curve, const EcPoint& p) {
  if (p.is_origin()) return Place::ec_origin(curve.base());
  return Place::ec_affine(curve, p.x(), p.y());
}

EcPoint point_of(const CurveModel& curve, const Place& x) {
  if (x.kind() == Place::Kind::EcOrigin) return EcPoint::origin();
  if (x.kind() != Place::Kind::EcAffine) throw StructureError("not an elliptic place");
  return EcPoint::affine(curve, x.x0(), x.y0());
}

Divisor point_class_divisor(const CurveModel& curve, const EcPoint& p) {
  Divisor d;
  d.add(place_of(curve, p), 1);
  d.add(Place::ec_origin(curve.base()), -1);
  return d;
}

EcPoint random_point(const CurveModel& curve, std::mt19937_64& rng) {
  const auto& base = curve.base();
  std::uniform_int_distribution<std::uint64_t> dist(0, base->order() - 1);
  for (int attempt = 0; attempt < 4096; ++attempt) {
    if (dist(rng) == 0) return EcPoint::origin();  // small chance of the origin
    FieldElement x = FieldElement::from_value(base, dist(rng));
    FieldElement rhs = curve.rhs_poly().evaluate(x);
    auto y = sqrt(rhs);
    if (!y) continue;
    if (!y->is_zero() && (dist(rng) & 1)) return EcPoint::affine(curve, x, -*y);
    return EcPoint::affine(curve, x, *y);
  }
  throw InternalError("failed to sample a rational point");
}

CurveFunction vertical_line(const CurveModel& curve, const EcPoint& p) {
  const auto& base = curve.base();
  if (p.is_origin()) return CurveFunction::one(curve);
  Polynomial lin(base, {-p.x(), FieldElement::one(base)});
  return CurveFunction::elliptic(curve, lin, Polynomial(base),
                                 Polynomial::constant(FieldElement::one(base)));
}

CurveFunction chord_line(const CurveModel& curve, const EcPoint& p, const EcPoint& q) {
  const auto& base = curve.base();
  if (p.is_origin()) return vertical_line(curve, q);
  if (q.is_origin()) return vertical_line(curve, p);
  FieldElement lambda = FieldElement::zero(base);
  if (p.x() == q.x()) {
    if (p.y() != q.y() || p.y().is_zero()) return vertical_line(curve, p);
    lambda = (FieldElement::from_int(base, 3) * p.x() * p.x() + curve.a4()) / (p.y() + p.y());
  } else {
    lambda = (q.y() - p.y()) / (q.x() - p.x());
  }
  // y - lambda*(x - x_p) - y_p
  Polynomial a(base, {lambda * p.x() - p.y(), -lambda});
  return CurveFunction::elliptic(curve, a, Polynomial::constant(FieldElement::one(base)),
                                 Polynomial::constant(FieldElement::one(base)));
}

std::vector<EcPoint> torsion_points(const CurveModel& curve, std::int64_t m) {
  if (!curve.is_elliptic()) throw StructureError("torsion enumeration requires an elliptic curve");
  const auto& base = curve.base();
  if (base->order() > 2'000'000) throw StructureError("base field too large for torsion enumeration");
  std::vector<EcPoint> out;
  out.push_back(EcPoint::origin());
  for (std::uint64_t v = 0; v < base->order(); ++v) {
    FieldElement x = FieldElement::from_value(base, v);
    FieldElement rhs = curve.rhs_poly().evaluate(x);
    auto y = sqrt(rhs);
    if (!y) continue;
    std::vector<FieldElement> ys = {*y};
    if (!y->is_zero()) ys.push_back(-*y);
    std::sort(ys.begin(), ys.end(),
              [](const FieldElement& a, const FieldElement& b) { return a.value() < b.value(); });
    for (const auto& yy : ys) {
      EcPoint p = EcPoint::affine(curve, x, yy);
      if (ec_mul(curve, m, p).is_origin()) out.push_back(p);
    }
  }
  return out;
}

}  // namespace adelic
