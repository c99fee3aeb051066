// textio.hpp -- the object grammar: parsing of fields, curves, functions,
// places, divisors, ideles and biextension setup files.  Printing lives on
// the types themselves; print-then-parse is the identity.
#ifndef ADELIC_TEXTIO_HPP
#define ADELIC_TEXTIO_HPP

#include <string>

#include "adelic/biext.hpp"
#include "adelic/curve.hpp"
#include "adelic/idele.hpp"

namespace adelic {

/// "GF(5)" or "GF(9;u^2+1)".
FieldSpecPtr parse_field_spec(const std::string& text);

/// "P1/GF(5)" or "E/GF(5):a4=4,a6=0".
CurveModel parse_curve(const std::string& text);

/// A field element as a polynomial expression in the field generator,
/// e.g. "2" or "u+1".
FieldElement parse_element(const std::string& text, const FieldSpecPtr& spec);

/// A univariate polynomial in `var` over the field, e.g. "t^2+1",
/// "2*t^3+4", "(u+1)*t".
Polynomial parse_polynomial(const std::string& text, const FieldSpecPtr& spec,
                            const std::string& var);

/// "t^2+1", "(t^2+1)/(t-3)" on the line; "(x^2+y)/(x-1)" on a curve.
CurveFunction parse_function(const std::string& text, const CurveModel& curve);

/// "(t^2+1)", "inf", "(2,1)", "O".
Place parse_place(const std::string& text, const CurveModel& curve);

/// "1*(t)-1*(inf)", "2*(0,0)-2*O", "0".
Divisor parse_divisor(const std::string& text, const CurveModel& curve);

/// "tail=<func>; <place>=><func>; ...".
Idele parse_idele(const std::string& text, const CurveModel& curve);

/// Setup files for the biextension lab: "A:", optional "Ap:", "N:",
/// "pairing:" followed by matrix rows, and subgroup generator lines "B:",
/// "C:", optional "Bp:", "Cp:".  '#' starts a comment.
biext::PairingSetup parse_biext_setup(const std::string& text);

/// "(1,0)" as an element tuple of a finite abelian group.
biext::Elem parse_group_element(const std::string& text, const biext::FinAbGroup& group);

}  // namespace adelic

#endif
