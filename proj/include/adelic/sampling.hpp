// sampling.hpp -- seeded random generators for fields, functions, places,
// divisors and ideles.  Used by property tests and by the selftest command;
// everything is deterministic given the engine state.
#ifndef ADELIC_SAMPLING_HPP
#define ADELIC_SAMPLING_HPP

#include <random>

#include "adelic/curve.hpp"
#include "adelic/idele.hpp"

namespace adelic::sampling {

FieldElement random_element(const FieldSpecPtr& spec, std::mt19937_64& rng);
FieldElement random_nonzero_element(const FieldSpecPtr& spec, std::mt19937_64& rng);
Polynomial random_poly(const FieldSpecPtr& spec, int maxdeg, std::mt19937_64& rng);
Polynomial random_nonzero_poly(const FieldSpecPtr& spec, int maxdeg, std::mt19937_64& rng);
Polynomial random_monic_irreducible(const FieldSpecPtr& spec, int deg, std::mt19937_64& rng);

/// Random place: on the line a finite place of degree <= 2 or infinity; on
/// an elliptic curve a rational point or the origin.
Place random_place(const CurveModel& curve, std::mt19937_64& rng);

/// Random nonzero function.  On an elliptic curve this is a product of
/// chord and vertical lines through rational points, so its divisor is
/// supported on rational places.
CurveFunction random_function(const CurveModel& curve, std::mt19937_64& rng);

/// Random function with order 0 at the given place.
CurveFunction random_unit_at(const CurveModel& curve, const Place& x, std::mt19937_64& rng);

Divisor random_divisor(const CurveModel& curve, std::mt19937_64& rng, int max_terms = 3,
                       int max_coeff = 2);
Divisor random_degree0_divisor(const CurveModel& curve, std::mt19937_64& rng);

/// Unit idele with a non-trivial tail: all components have order zero.
Idele random_unit_idele(const CurveModel& curve, std::mt19937_64& rng);
/// Random degree-zero idele mixing uniformizer, principal and unit parts.
Idele random_degree0_idele(const CurveModel& curve, std::mt19937_64& rng);

}  // namespace adelic::sampling

#endif
