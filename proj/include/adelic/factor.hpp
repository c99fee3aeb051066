// factor.hpp -- univariate factorization over finite fields
// (squarefree / distinct-degree / equal-degree stages), irreducibility,
// resultant norms and field embeddings.
#ifndef ADELIC_FACTOR_HPP
#define ADELIC_FACTOR_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "adelic/ff.hpp"

namespace adelic {

struct FactorTerm {
  Polynomial factor;  // monic irreducible
  std::uint32_t multiplicity;
};

struct Factorization {
  FieldElement unit;               // leading unit, so unit * prod(factor^mult) == input
  std::vector<FactorTerm> terms;   // sorted by Polynomial::less, pairwise distinct
};

/// Full factorization of a nonzero polynomial.  The equal-degree stage is
/// randomized; `seed` makes it reproducible.
Factorization factor(const Polynomial& f, std::uint64_t seed = 1);

bool is_irreducible(const Polynomial& f);

/// Lexicographically smallest monic irreducible of degree n over GF(p)
/// (coefficients compared from the highest degree downwards).
std::vector<coeff_t> canonical_modulus(coeff_t p, std::uint32_t n);

/// Galois norm of (h mod pi) down to the coefficient field of pi, computed
/// as the resultant Res(pi, h) for monic irreducible pi.  Requires pi
/// irreducible and h not divisible by pi.
FieldElement norm_via_resultant(const Polynomial& h, const Polynomial& pi);

/// Square roots in GF(p^n); empty when the argument is a non-residue.
std::optional<FieldElement> sqrt(const FieldElement& a);

/// Roots of f lying in its coefficient field, sorted by value.
std::vector<FieldElement> roots_in_field(const Polynomial& f, std::uint64_t seed = 1);

/// Coefficient-preserving map between fields.  `from` must be GF(p) or an
/// extension whose modulus has a root in `to`; the embedding is pinned by
/// choosing the smallest such root, so it is deterministic.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldSpecPtr from, FieldSpecPtr to);
  const FieldSpecPtr& from() const { return from_; }
  const FieldSpecPtr& to() const { return to_; }
  FieldElement operator()(const FieldElement& x) const;
  Polynomial map_poly(const Polynomial& f) const;

 private:
  FieldSpecPtr from_, to_;
  FieldElement gen_image_;
};

}  // namespace adelic

#endif
