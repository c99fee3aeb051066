#include "adelic/sampling.hpp"

#include "adelic/ec.hpp"

namespace adelic::sampling {

namespace {
std::int64_t rand_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> d(lo, hi);
  return d(rng);
}
}  // namespace

FieldElement random_element(const FieldSpecPtr& spec, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, spec->order() - 1);
  return FieldElement::from_value(spec, d(rng));
}

FieldElement random_nonzero_element(const FieldSpecPtr& spec, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(1, spec->order() - 1);
  return FieldElement::from_value(spec, d(rng));
}

Polynomial random_poly(const FieldSpecPtr& spec, int maxdeg, std::mt19937_64& rng) {
  int deg = static_cast<int>(rand_int(rng, 0, maxdeg));
  std::vector<FieldElement> cs;
  for (int i = 0; i <= deg; ++i) cs.push_back(random_element(spec, rng));
  return Polynomial(spec, std::move(cs));
}

Polynomial random_nonzero_poly(const FieldSpecPtr& spec, int maxdeg, std::mt19937_64& rng) {
  while (true) {
    Polynomial f = random_poly(spec, maxdeg, rng);
    if (!f.is_zero()) return f;
  }
}

Polynomial random_monic_irreducible(const FieldSpecPtr& spec, int deg, std::mt19937_64& rng) {
  while (true) {
    Polynomial f = random_poly(spec, deg - 1, rng) +
                   Polynomial::monomial(FieldElement::one(spec), static_cast<std::size_t>(deg));
    if (is_irreducible(f)) return f;
  }
}

Place random_place(const CurveModel& curve, std::mt19937_64& rng) {
  const auto& base = curve.base();
  if (curve.kind() == CurveKind::ProjectiveLine) {
    std::int64_t pick = rand_int(rng, 0, 5);
    if (pick == 0) return Place::line_infinity(base);
    if (pick == 1) return Place::line_finite(random_monic_irreducible(base, 2, rng));
    return Place::line_finite(random_monic_irreducible(base, 1, rng));
  }
  if (rand_int(rng, 0, 5) == 0) return Place::ec_origin(base);
  return place_of(curve, random_point(curve, rng));
}

CurveFunction random_function(const CurveModel& curve, std::mt19937_64& rng) {
  const auto& base = curve.base();
  if (curve.kind() == CurveKind::ProjectiveLine) {
    return CurveFunction::line(curve, random_nonzero_poly(base, 4, rng),
                               random_nonzero_poly(base, 4, rng));
  }
  CurveFunction f = CurveFunction::constant(curve, random_nonzero_element(base, rng));
  int pieces = static_cast<int>(rand_int(rng, 1, 3));
  for (int i = 0; i < pieces; ++i) {
    EcPoint p = random_point(curve, rng);
    EcPoint q = random_point(curve, rng);
    CurveFunction piece = rand_int(rng, 0, 1) ? chord_line(curve, p, q) : vertical_line(curve, p);
    if (piece.is_one()) continue;
    f = f * piece.pow(rand_int(rng, 1, 2) * (rand_int(rng, 0, 1) ? 1 : -1));
  }
  return f;
}

CurveFunction random_unit_at(const CurveModel& curve, const Place& x, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 256; ++attempt) {
    CurveFunction f = random_function(curve, rng);
    if (order_at(f, x) == 0 && !f.is_one()) return f;
  }
  throw InternalError("failed to sample a unit at " + x.to_string());
}

Divisor random_divisor(const CurveModel& curve, std::mt19937_64& rng, int max_terms, int max_coeff) {
  Divisor d;
  int terms = static_cast<int>(rand_int(rng, 0, max_terms));
  for (int i = 0; i < terms; ++i) {
    std::int64_t c = rand_int(rng, 1, max_coeff) * (rand_int(rng, 0, 1) ? 1 : -1);
    d.add(random_place(curve, rng), c);
  }
  return d;
}

Divisor random_degree0_divisor(const CurveModel& curve, std::mt19937_64& rng) {
  Divisor d = random_divisor(curve, rng);
  d.add(base_place(curve), -d.degree());
  return d;
}

Idele random_unit_idele(const CurveModel& curve, std::mt19937_64& rng) {
  CurveFunction tail = random_function(curve, rng);
  std::map<Place, CurveFunction> exc;
  Divisor dt = divisor_of(tail);
  for (const auto& [x, c] : dt.terms()) {
    if (rand_int(rng, 0, 2) == 0) {
      exc.emplace(x, CurveFunction::constant(curve, random_nonzero_element(curve.base(), rng)));
    } else {
      exc.emplace(x, random_unit_at(curve, x, rng));
    }
  }
  return Idele::make(curve, std::move(tail), std::move(exc));
}

Idele random_degree0_idele(const CurveModel& curve, std::mt19937_64& rng) {
  Idele a = uniformizer_idele(random_degree0_divisor(curve, rng), curve);
  if (rand_int(rng, 0, 1)) a = a * Idele::principal(curve, random_function(curve, rng));
  if (rand_int(rng, 0, 1)) a = a * random_unit_idele(curve, rng);
  return a;
}

}  // namespace adelic::sampling
