// shadow.hpp -- finite quotient model of the idele commutator pairing,
// built from the 2-torsion of an elliptic curve.  Bridges the idele
// machinery and the finite-group biextension lab.
#ifndef ADELIC_SHADOW_HPP
#define ADELIC_SHADOW_HPP

#include "adelic/biext.hpp"
#include "adelic/ec.hpp"
#include "adelic/weil.hpp"

namespace adelic {

/// Discrete logarithm in the cyclic group generated by `generator`.
std::int64_t discrete_log(const FieldElement& value, const FieldElement& generator);

/// Smallest generator of the multiplicative group of the field.
FieldElement primitive_element(const FieldSpecPtr& spec);

/// Finite quotient of the degree-zero ideles generated by the uniformizer
/// ideles of (P_i) - (O) for the three nonzero rational 2-torsion points
/// and by the certified principal ideles f_i.  Quotienting by the
/// (q-1)-th powers of the f_i and of the unit parts u_i = alpha_i^2/f_i
/// leaves A = (Z/2(q-1))^3 x (Z/(q-1))^3 with the pairing matrix given by
/// discrete logs of the idele commutator pairing; B is generated by the
/// classes of the f_i, C by the classes of the u_i.
struct CurveShadow {
  biext::PairingSetup setup;
  std::vector<biext::Elem> alpha_classes;  // classes of the three uniformizer ideles
  std::vector<EcPoint> points;             // the three nonzero 2-torsion points
  FieldElement n_generator;                // generator of k* used by the dlogs
};

CurveShadow curve_shadow_setup(const CurveModel& curve);

}  // namespace adelic

#endif
