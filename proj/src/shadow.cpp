#include "adelic/shadow.hpp"

namespace adelic {

std::int64_t discrete_log(const FieldElement& value, const FieldElement& generator) {
  if (value.is_zero()) throw DomainError("zero has no discrete log");
  FieldElement w = FieldElement::one(generator.spec());
  for (std::uint64_t k = 0; k < generator.spec()->order(); ++k) {
    if (w == value) return static_cast<std::int64_t>(k);
    w = w * generator;
  }
  throw DomainError("value is not a power of the generator");
}

FieldElement primitive_element(const FieldSpecPtr& spec) {
  const std::uint64_t n = spec->order() - 1;
  for (std::uint64_t v = 2; v <= n; ++v) {
    FieldElement g = FieldElement::from_value(spec, v);
    bool primitive = true;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d != 0) continue;
      if (g.pow(static_cast<std::int64_t>(n / d)).is_one()) primitive = false;
      if (g.pow(static_cast<std::int64_t>(d)).is_one() && n / d != 1) primitive = false;
      if (!primitive) break;
    }
    // the divisor check above covers d and n/d; still verify exact order
    if (primitive && multiplicative_order(g) == static_cast<std::int64_t>(n)) return g;
  }
  throw InternalError("no primitive element found");
}

CurveShadow curve_shadow_setup(const CurveModel& curve) {
  if (!curve.is_elliptic()) throw StructureError("the curve shadow requires an elliptic curve");
  auto all2 = torsion_points(curve, 2);
  if (all2.size() != 4)
    throw StructureError("the curve shadow requires full rational 2-torsion");

  CurveShadow out;
  for (const auto& p : all2)
    if (!p.is_origin()) out.points.push_back(p);
  out.n_generator = primitive_element(curve.base());
  const auto n = static_cast<std::int64_t>(curve.base()->order() - 1);

  std::vector<Idele> gens;
  for (const auto& p : out.points) {
    Divisor d = point_class_divisor(curve, p);
    gens.push_back(uniformizer_idele(d, curve));
  }
  std::vector<CurveFunction> fs;
  for (const auto& p : out.points) {
    auto f = certify_m_torsion(point_class_divisor(curve, p), 2, curve);
    if (!f) throw InternalError("2-torsion point failed certification");
    fs.push_back(*f);
    gens.push_back(Idele::principal(curve, *f));
  }

  std::vector<std::vector<std::int64_t>> matrix(6, std::vector<std::int64_t>(6, 0));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      matrix[i][j] = discrete_log(commutator_pairing(gens[i], gens[j]), out.n_generator);

  biext::FinAbGroup A({2 * n, 2 * n, 2 * n, n, n, n});
  std::vector<biext::Elem> b_gens, c_gens;
  for (int i = 0; i < 3; ++i) {
    biext::Elem f_class = A.zero();
    f_class[static_cast<std::size_t>(3 + i)] = 1;
    b_gens.push_back(f_class);
    biext::Elem u_class = A.zero();  // u_i = alpha_i^2 / f_i
    u_class[static_cast<std::size_t>(i)] = 2;
    u_class[static_cast<std::size_t>(3 + i)] = -1;
    c_gens.push_back(A.reduce(u_class));
    biext::Elem a_class = A.zero();
    a_class[static_cast<std::size_t>(i)] = 1;
    out.alpha_classes.push_back(a_class);
  }
  out.setup = biext::PairingSetup::make(A, A, n, matrix, b_gens, c_gens, b_gens, c_gens);
  return out;
}

}  // namespace adelic
