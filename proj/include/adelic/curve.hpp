// curve.hpp -- the two supported curve models (projective line, short
// Weierstrass elliptic), their closed points, rational functions, discrete
// valuations, evaluation into residue fields and principal divisors.
#ifndef ADELIC_CURVE_HPP
#define ADELIC_CURVE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adelic/factor.hpp"
#include "adelic/ff.hpp"

namespace adelic {

enum class CurveKind { ProjectiveLine, EllipticWeierstrass };

/// P^1 over a finite field, or y^2 = x^3 + a4 x + a6 with char not in {2,3}
/// and nonzero discriminant.
class CurveModel {
 public:
  CurveModel() = default;  // placeholder; use the named constructors
  static CurveModel projective_line(FieldSpecPtr base);
  static CurveModel elliptic(FieldSpecPtr base, FieldElement a4, FieldElement a6);

  CurveKind kind() const { return kind_; }
  const FieldSpecPtr& base() const { return base_; }
  const FieldElement& a4() const { return a4_; }
  const FieldElement& a6() const { return a6_; }
  int genus() const { return kind_ == CurveKind::ProjectiveLine ? 0 : 1; }
  bool is_elliptic() const { return kind_ == CurveKind::EllipticWeierstrass; }

  /// x^3 + a4 x + a6 as a polynomial over the base field.
  Polynomial rhs_poly() const;

  /// The same curve over GF(p^(n*k)), coefficients mapped through the
  /// canonical embedding.
  CurveModel base_change(std::uint32_t k) const;

  bool operator==(const CurveModel& o) const;
  bool operator!=(const CurveModel& o) const { return !(*this == o); }
  std::string to_string() const;

 private:
  CurveKind kind_ = CurveKind::ProjectiveLine;
  FieldSpecPtr base_;
  FieldElement a4_, a6_;
};

/// A closed point.  On the line: a monic irreducible polynomial or the
/// point at infinity.  On an elliptic curve: a rational affine point or the
/// origin (the point at infinity).
class Place {
 public:
  enum class Kind { LineFinite, LineInfinity, EcAffine, EcOrigin };

  static Place line_finite(Polynomial pi);  // monic irreducible required
  static Place line_infinity(FieldSpecPtr base);
  static Place ec_affine(const CurveModel& curve, FieldElement x0, FieldElement y0);
  static Place ec_origin(FieldSpecPtr base);

  Kind kind() const { return kind_; }
  const FieldSpecPtr& base() const { return base_; }
  const Polynomial& pi() const { return pi_; }
  const FieldElement& x0() const { return x0_; }
  const FieldElement& y0() const { return y0_; }

  std::int64_t degree() const;
  /// The residue field k(x) as a field spec.  For places of degree d > 1
  /// over GF(p^n) this is GF(p^(n*d)); when n > 1 the canonical modulus is
  /// used, otherwise the place's own polynomial.
  FieldSpecPtr residue_spec() const;

  std::string to_string() const;
  /// Deterministic ordering by canonical serialization.
  bool operator<(const Place& o) const { return to_string() < o.to_string(); }
  bool operator==(const Place& o) const;
  bool operator!=(const Place& o) const { return !(*this == o); }

 private:
  Place() = default;
  Kind kind_ = Kind::LineInfinity;
  FieldSpecPtr base_;
  Polynomial pi_;        // LineFinite
  FieldElement x0_, y0_; // EcAffine
};

/// Finite formal sum of places with nonzero integer coefficients.
class Divisor {
 public:
  Divisor() = default;
  static Divisor single(const Place& x, std::int64_t c);

  void add(const Place& x, std::int64_t c);  // accumulates; drops zeros
  std::int64_t coeff(const Place& x) const;
  const std::map<Place, std::int64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Weighted degree: sum of deg(x) * coefficient.
  std::int64_t degree() const;
  std::vector<Place> support() const;
  bool is_effective() const;  // all coefficients >= 0

  Divisor operator+(const Divisor& o) const;
  Divisor operator-(const Divisor& o) const;
  Divisor operator*(std::int64_t k) const;
  Divisor operator-() const { return *this * -1; }
  bool operator==(const Divisor& o) const { return terms_ == o.terms_; }
  bool operator!=(const Divisor& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::map<Place, std::int64_t> terms_;
};

/// A nonzero rational function on a curve, kept in canonical reduced form.
/// Line: num/den with gcd(num,den)=1 and den monic.  Elliptic:
/// (a(x) + b(x) y)/c(x) with gcd(a,b,c)=1 and c monic.
class CurveFunction {
 public:
  CurveFunction() = default;  // placeholder; use the named constructors
  static CurveFunction line(const CurveModel& curve, Polynomial num, Polynomial den);
  static CurveFunction elliptic(const CurveModel& curve, Polynomial a, Polynomial b, Polynomial c);
  static CurveFunction constant(const CurveModel& curve, const FieldElement& value);
  static CurveFunction one(const CurveModel& curve);

  const CurveModel& curve() const { return curve_; }
  // line accessors
  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  // elliptic accessors: (a + b y)/c
  const Polynomial& ec_a() const { return num_; }
  const Polynomial& ec_b() const { return b_; }
  const Polynomial& ec_c() const { return den_; }

  bool is_one() const;
  std::optional<FieldElement> as_constant() const;

  CurveFunction operator*(const CurveFunction& o) const;
  CurveFunction operator*(const FieldElement& c) const;
  CurveFunction inverse() const;
  CurveFunction operator/(const CurveFunction& o) const { return *this * o.inverse(); }
  CurveFunction pow(std::int64_t k) const;
  bool operator==(const CurveFunction& o) const;
  bool operator!=(const CurveFunction& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  CurveModel curve_;
  Polynomial num_, den_;  // line: num/den; elliptic: num = a, den = c
  Polynomial b_;          // elliptic only
  void canonicalize();
};

/// Discrete valuation ord_x(f); f nonzero.
std::int64_t order_at(const CurveFunction& f, const Place& x);

/// Image of f in the residue field k(x)^*; requires order_at(f, x) == 0.
FieldElement evaluate_at(const CurveFunction& f, const Place& x);

/// Principal divisor div(f) = sum ord_x(f) * x; always of degree zero.
/// Throws DomainError when the divisor involves unsupported places
/// (non-rational points of an elliptic curve).
Divisor divisor_of(const CurveFunction& f);

/// The canonical uniformizer at a place: pi / (1/t) on the line,
/// (x - x0) / y / (x/y) at affine points / the origin of an elliptic curve.
CurveFunction uniformizer_at(const Place& x, const CurveModel& curve);

/// The canonical base place: Infinity on the line, the origin on an
/// elliptic curve.
Place base_place(const CurveModel& curve);

/// Leading coefficient of the expansion of f at the canonical base place
/// (with respect to the canonical uniformizer there).
FieldElement leading_coeff_at_base(const CurveFunction& f);

}  // namespace adelic

#endif
