// ff.hpp -- exact arithmetic in GF(p) and GF(p^n), and univariate
// polynomials over such fields.  Everything is immutable and canonically
// reduced, so structural equality is semantic equality.
#ifndef ADELIC_FF_HPP
#define ADELIC_FF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adelic/errors.hpp"

namespace adelic {

using coeff_t = std::uint64_t;

/// Description of a finite field GF(p^n).  For n > 1 the field is realized
/// as GF(p)[var]/(modulus) with a monic irreducible modulus of degree n.
/// Instances are shared through FieldSpecPtr and never mutated.
class FieldSpec;
using FieldSpecPtr = std::shared_ptr<const FieldSpec>;

class FieldSpec {
 public:
  coeff_t p = 0;
  std::uint32_t n = 1;
  std::vector<coeff_t> modulus;  // degree n, monic, coefficients c0..cn; empty when n == 1
  std::string var = "u";         // display name of the field generator

  /// Prime field GF(p).
  static FieldSpecPtr prime_field(coeff_t p);
  /// Extension GF(p^n) with an explicit modulus (validated for monicity,
  /// degree and irreducibility).
  static FieldSpecPtr extension(coeff_t p, std::uint32_t n, std::vector<coeff_t> modulus,
                                std::string var = "u");
  /// Extension GF(p^n) with the canonical modulus: the lexicographically
  /// smallest monic irreducible of degree n over GF(p).
  static FieldSpecPtr extension(coeff_t p, std::uint32_t n);

  std::uint64_t order() const;  // p^n, must fit in 64 bits
  bool same_field(const FieldSpec& other) const;
};

bool same_spec(const FieldSpecPtr& a, const FieldSpecPtr& b);

/// "GF(5)" or "GF(9;u^2+1)".
std::string field_spec_to_string(const FieldSpecPtr& spec);

/// An element of GF(p^n): a residue polynomial of degree < n with
/// coefficients in [0, p), trailing zeros stripped.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldSpecPtr spec, std::vector<coeff_t> rep);
  static FieldElement from_int(const FieldSpecPtr& spec, std::int64_t value);
  /// Inverse of value(): the element whose representative has the given
  /// base-p digits.
  static FieldElement from_value(const FieldSpecPtr& spec, std::uint64_t value);
  static FieldElement zero(const FieldSpecPtr& spec) { return from_int(spec, 0); }
  static FieldElement one(const FieldSpecPtr& spec) { return from_int(spec, 1); }

  const FieldSpecPtr& spec() const { return spec_; }
  const std::vector<coeff_t>& rep() const { return rep_; }
  bool is_zero() const { return rep_.empty(); }
  bool is_one() const { return rep_.size() == 1 && rep_[0] == 1; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;  // throws DomainError on zero divisor
  FieldElement operator-() const;
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement inverse() const;
  /// a^k with k possibly negative (then a must be nonzero).
  FieldElement pow(std::int64_t k) const;

  /// Total order used for deterministic tie-breaking: the base-p value of
  /// the representative.
  std::uint64_t value() const;

  std::string to_string() const;

 private:
  void check_same(const FieldElement& o) const;
  FieldSpecPtr spec_;
  std::vector<coeff_t> rep_;
};

/// Dense univariate polynomial over a fixed field, trailing zeros stripped.
/// The indeterminate is anonymous; printing names it externally.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(FieldSpecPtr spec) : spec_(std::move(spec)) {}
  Polynomial(FieldSpecPtr spec, std::vector<FieldElement> coeffs);
  static Polynomial zero(const FieldSpecPtr& spec) { return Polynomial(spec); }
  static Polynomial constant(const FieldElement& c);
  static Polynomial from_ints(const FieldSpecPtr& spec, const std::vector<std::int64_t>& cs);
  /// The monomial c * t^k.
  static Polynomial monomial(const FieldElement& c, std::size_t k);

  const FieldSpecPtr& spec() const { return spec_; }
  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// deg(0) is represented as -1.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  FieldElement coeff(std::size_t i) const;
  FieldElement leading() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const FieldElement& c) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Quotient and remainder; divisor must be nonzero.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const;
  Polynomial operator/(const Polynomial& d) const { return divmod(d).first; }
  Polynomial operator%(const Polynomial& d) const { return divmod(d).second; }

  Polynomial monic() const;  // nonzero input
  Polynomial derivative() const;
  Polynomial pow(std::uint64_t k) const;
  FieldElement evaluate(const FieldElement& x) const;
  /// Substitute t -> t + a.
  Polynomial shift(const FieldElement& a) const;

  /// Deterministic total order (degree, then coefficient values from the
  /// top); used for sorting places and factors.
  static bool less(const Polynomial& a, const Polynomial& b);

  std::string to_string(const std::string& var) const;

 private:
  void normalize();
  FieldSpecPtr spec_;
  std::vector<FieldElement> coeffs_;
};

Polynomial gcd(const Polynomial& a, const Polynomial& b);  // monic gcd
/// g = gcd(a,b) together with s,t such that s*a + t*b = g.
struct ExtGcd {
  Polynomial g, s, t;
};
ExtGcd ext_gcd(const Polynomial& a, const Polynomial& b);

/// t^e modulo m, with e up to 2^63; m nonzero of degree >= 1.
Polynomial pow_mod(const Polynomial& base, std::uint64_t e, const Polynomial& m);

/// Resultant Res(f, g) over the coefficient field.
FieldElement resultant(const Polynomial& f, const Polynomial& g);

}  // namespace adelic

#endif
