// idele.hpp -- finite-support ideles: a global tail function plus finitely
// many exceptional components, their divisor/degree maps, and the signed
// commutator pairing given by the product of tame-symbol norms.
#ifndef ADELIC_IDELE_HPP
#define ADELIC_IDELE_HPP

#include <map>
#include <string>
#include <vector>

#include "adelic/curve.hpp"
#include "adelic/tame.hpp"

namespace adelic {

/// The component at a place x is exceptions[x] when listed, else the tail.
/// The tail lets unit ideles whose components differ from 1 at infinitely
/// many places be represented with finite data.
class Idele {
 public:
  static Idele principal(const CurveModel& curve, const CurveFunction& f);
  static Idele identity(const CurveModel& curve);
  static Idele make(const CurveModel& curve, CurveFunction tail,
                    std::map<Place, CurveFunction> exceptions);

  const CurveModel& curve() const { return curve_; }
  const CurveFunction& tail() const { return tail_; }
  const std::map<Place, CurveFunction>& exceptions() const { return exceptions_; }
  const CurveFunction& component(const Place& x) const;

  Idele operator*(const Idele& o) const;
  Idele inverse() const;
  Idele pow(std::int64_t k) const;
  bool operator==(const Idele& o) const;
  bool operator!=(const Idele& o) const { return !(*this == o); }

  /// div(idele): the order of the component at every place; its support is
  /// contained in the exception keys plus the support of div(tail).
  Divisor divisor() const;
  /// Weighted degree of the divisor.
  std::int64_t degree() const;
  /// Exception keys together with the support of div(tail).
  std::vector<Place> support() const;

  std::string to_string() const;

  Idele() = default;  // placeholder; use the named constructors

 private:
  void normalize();
  CurveModel curve_;
  CurveFunction tail_;
  std::map<Place, CurveFunction> exceptions_;
};

/// The standard representative with div = D: tail 1 and the canonical
/// uniformizer power at each place of the support.
Idele uniformizer_idele(const Divisor& D, const CurveModel& curve);

/// Unsigned pairing of section-3 type: prod over places of
/// Nm_{k(x)/k}[(a_x, b_x)_x].
FieldElement norm_symbol_product(const Idele& a, const Idele& b);

/// Signed commutator pairing: (-1)^(deg a * deg b) times the unsigned
/// product.  Bilinear and skew-symmetric.
FieldElement commutator_pairing(const Idele& a, const Idele& b);

/// Sampled verification of the four quotient-biextension conditions for
/// A = A' = degree-zero ideles, B = B' = principal ideles, C = C' = unit
/// ideles, with the unsigned pairing.
struct ConditionReport {
  struct Item {
    std::string condition;
    bool pass;
    std::string witness;  // empty when passing
  };
  std::vector<Item> items;
  bool all_pass() const;
  std::string to_string() const;
};

ConditionReport check_section3_conditions(const CurveModel& curve, int samples, std::uint64_t seed);

}  // namespace adelic

#endif
