// tame.hpp -- tame symbols at a place, their norms to the base field, and
// the reciprocity product over all places.
#ifndef ADELIC_TAME_HPP
#define ADELIC_TAME_HPP

#include "adelic/curve.hpp"

namespace adelic {

/// (f,g)_x = (-1)^(ord_x f * ord_x g) * (f^(ord_x g) * g^(-ord_x f))(x),
/// a nonzero element of the residue field k(x).
FieldElement tame_symbol(const CurveFunction& f, const CurveFunction& g, const Place& x);

/// Nm_{k(x)/k} of the tame symbol; equals the raw symbol at degree-1 places.
FieldElement tame_symbol_norm(const CurveFunction& f, const CurveFunction& g, const Place& x);

/// Product of the norms of the tame symbols over the union of the supports
/// of div(f) and div(g); the symbol is trivial elsewhere.  The reciprocity
/// law says this is always 1.
FieldElement weil_reciprocity(const CurveFunction& f, const CurveFunction& g);

}  // namespace adelic

#endif
