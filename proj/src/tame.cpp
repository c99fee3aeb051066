#include "adelic/tame.hpp"

#include <set>

namespace adelic {

namespace {

// the order-0 unit f^b * g^(-a) whose value at x is the unsigned symbol
CurveFunction symbol_unit(const CurveFunction& f, const CurveFunction& g, const Place& x,
                          std::int64_t a, std::int64_t b) {
  CurveFunction unit = f.pow(b) * g.pow(-a);
  if (order_at(unit, x) != 0)
    throw InternalError("tame symbol unit has nonzero order at " + x.to_string());
  return unit;
}

}  // namespace

FieldElement tame_symbol(const CurveFunction& f, const CurveFunction& g, const Place& x) {
  std::int64_t a = order_at(f, x);
  std::int64_t b = order_at(g, x);
  FieldElement v = evaluate_at(symbol_unit(f, g, x, a, b), x);
  if ((a & 1) && (b & 1)) v = -v;
  return v;
}

FieldElement tame_symbol_norm(const CurveFunction& f, const CurveFunction& g, const Place& x) {
  if (x.degree() == 1) return tame_symbol(f, g, x);
  // line place of degree > 1: norm through resultants, staying in the base
  std::int64_t a = order_at(f, x);
  std::int64_t b = order_at(g, x);
  CurveFunction unit = symbol_unit(f, g, x, a, b);
  FieldElement nm =
      norm_via_resultant(unit.num(), x.pi()) / norm_via_resultant(unit.den(), x.pi());
  if ((a & 1) && (b & 1) && (x.degree() & 1)) nm = -nm;  // Nm(-1) = (-1)^deg
  return nm;
}

FieldElement weil_reciprocity(const CurveFunction& f, const CurveFunction& g) {
  std::set<Place> support;
  Divisor df = divisor_of(f);
  Divisor dg = divisor_of(g);
  for (const auto& [x, c] : df.terms()) support.insert(x);
  for (const auto& [x, c] : dg.terms()) support.insert(x);
  FieldElement prod = FieldElement::one(f.curve().base());
  for (const auto& x : support) prod = prod * tame_symbol_norm(f, g, x);
  return prod;
}

}  // namespace adelic
