#include "adelic/weil.hpp"

#include <random>
#include <set>

namespace adelic {

namespace {

void check_m(std::int64_t m, const CurveModel& curve) {
  if (m < 1) throw DomainError("m must be >= 1");
  if (static_cast<std::uint64_t>(m) % curve.base()->p == 0)
    throw DomainError("m = " + std::to_string(m) + " is not coprime to the characteristic " +
                      std::to_string(curve.base()->p));
}

FieldElement norm_of_value(const CurveFunction& f, const Place& x) {
  if (x.degree() == 1) return evaluate_at(f, x);
  if (order_at(f, x) != 0)
    throw DomainError("cannot evaluate at " + x.to_string() + ": nonzero order");
  return norm_via_resultant(f.num(), x.pi()) / norm_via_resultant(f.den(), x.pi());
}

}  // namespace

TorsionClassData prepare_torsion_class(const Divisor& D, std::int64_t m, const CurveModel& curve) {
  check_m(m, curve);
  if (D.degree() != 0) throw DomainError("the Weil pairing takes degree-zero divisors");
  auto f = certify_m_torsion(D, m, curve);
  if (!f)
    throw DomainError("divisor class of " + D.to_string() + " is not " + std::to_string(m) +
                      "-torsion");
  TorsionClassData data;
  data.D = D;
  data.alpha = uniformizer_idele(D, curve);
  data.f = *f;
  data.u = data.alpha.pow(m) * Idele::principal(curve, data.f).inverse();
  if (!data.u.divisor().is_zero()) throw InternalError("unit part of the class data has poles");
  return data;
}

FieldElement weil_pairing_from_data(const TorsionClassData& L, const TorsionClassData& M,
                                    std::int64_t m) {
  const CurveModel& curve = L.alpha.curve();
  Idele f_idele = Idele::principal(curve, L.f);
  FieldElement value =
      norm_symbol_product(f_idele, M.alpha) / norm_symbol_product(L.alpha, M.u);
  if (!value.pow(m).is_one()) throw InternalError("Weil pairing value is not an m-th root of unity");
  return value;
}

FieldElement weil_pairing_adelic(const Divisor& D, const Divisor& Dp, std::int64_t m,
                                 const CurveModel& curve) {
  auto L = prepare_torsion_class(D, m, curve);
  auto M = prepare_torsion_class(Dp, m, curve);
  return weil_pairing_from_data(L, M, m);
}

FieldElement evaluate_on_divisor(const CurveFunction& f, const Divisor& E) {
  FieldElement prod = FieldElement::one(f.curve().base());
  for (const auto& [x, c] : E.terms()) prod = prod * norm_of_value(f, x).pow(c);
  return prod;
}

FieldElement weil_pairing_disjoint(const Divisor& D, const Divisor& Dp, std::int64_t m,
                                   const CurveModel& curve) {
  check_m(m, curve);
  for (const auto& [x, c] : D.terms())
    if (Dp.coeff(x) != 0)
      throw DomainError("supports overlap at " + x.to_string() +
                        "; shift one representative by a principal divisor first");
  auto f = certify_m_torsion(D, m, curve);
  auto fp = certify_m_torsion(Dp, m, curve);
  if (!f || !fp) throw DomainError("divisor class is not m-torsion");
  FieldElement value = evaluate_on_divisor(*f, Dp) / evaluate_on_divisor(*fp, D);
  if (!value.pow(m).is_one()) throw InternalError("Weil pairing value is not an m-th root of unity");
  return value;
}

namespace {

struct RetryShift {};

// value of a chord/vertical line (denominator 1) at an affine point;
// signals a shift retry when the evaluation degenerates
FieldElement eval_line_at(const CurveFunction& line, const EcPoint& pt) {
  FieldElement v = line.ec_a().evaluate(pt.x()) + line.ec_b().evaluate(pt.x()) * pt.y();
  if (v.is_zero()) throw RetryShift{};
  return v;
}

// value at (e1) - (e2) of the function with divisor m(A) - m(B), where
// P = A - B is m-torsion; double-and-add with line/vertical functions
FieldElement miller_loop(const CurveModel& curve, const EcPoint& A, const EcPoint& B,
                         const EcPoint& P, std::int64_t m, const EcPoint& e1, const EcPoint& e2) {
  auto eval_div = [&](const CurveFunction& fn) {
    return eval_line_at(fn, e1) / eval_line_at(fn, e2);
  };
  // f_1 has divisor (A) - (B) - (P) + (O)
  FieldElement f1 = eval_div(vertical_line(curve, A)) / eval_div(chord_line(curve, P, B));
  FieldElement val = f1;
  EcPoint R = P;
  int top = 63;
  while (top > 0 && !((m >> top) & 1)) --top;
  for (int bit = top - 1; bit >= 0; --bit) {
    EcPoint R2 = ec_add(curve, R, R);
    val = val * val * eval_div(chord_line(curve, R, R)) / eval_div(vertical_line(curve, R2));
    R = R2;
    if ((m >> bit) & 1) {
      EcPoint R1 = ec_add(curve, R, P);
      val = val * f1 * eval_div(chord_line(curve, R, P)) / eval_div(vertical_line(curve, R1));
      R = R1;
    }
  }
  if (!R.is_origin()) throw InternalError("Miller loop did not close; point is not m-torsion");
  return val;
}

}  // namespace

FieldElement weil_pairing_miller(const EcPoint& P, const EcPoint& Q, std::int64_t m,
                                 const CurveModel& curve, std::uint64_t seed) {
  if (!curve.is_elliptic()) throw StructureError("the Miller pairing requires an elliptic curve");
  check_m(m, curve);
  if (!ec_mul(curve, m, P).is_origin() || !ec_mul(curve, m, Q).is_origin())
    throw DomainError("both points must be m-torsion");
  FieldElement one = FieldElement::one(curve.base());
  if (P.is_origin() || Q.is_origin()) return one;

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 256; ++attempt) {
    EcPoint S = random_point(curve, rng);
    EcPoint T = random_point(curve, rng);
    if (S.is_origin() || T.is_origin()) continue;
    EcPoint A1 = ec_add(curve, P, S);
    EcPoint A2 = ec_add(curve, Q, T);
    if (A1.is_origin() || A2.is_origin()) continue;
    // the two shifted supports must be disjoint
    std::vector<EcPoint> dp = {A1, S}, dq = {A2, T};
    bool clash = false;
    for (const auto& a : dp)
      for (const auto& b : dq) clash = clash || a == b;
    if (clash) continue;
    try {
      FieldElement num = miller_loop(curve, A1, S, P, m, A2, T);  // f_D(Dp)
      FieldElement den = miller_loop(curve, A2, T, Q, m, A1, S);  // f_Dp(D)
      FieldElement e = num / den;
      if (!e.pow(m).is_one()) throw InternalError("Miller pairing value is not an m-th root of unity");
      return e;
    } catch (const RetryShift&) {
      continue;
    }
  }

  // Over a tiny field every choice of shifts can degenerate.  The pairing
  // is unchanged by base extension and the value of a pairing of rational
  // points is Galois-fixed, so compute over a quadratic extension and map
  // the root of unity back.
  if (curve.base()->n >= 8)
    throw InternalError("no auxiliary shift made every Miller evaluation defined");
  CurveModel big = curve.base_change(2);
  FieldEmbedding emb(curve.base(), big.base());
  auto lift = [&](const EcPoint& p) {
    return p.is_origin() ? EcPoint::origin() : EcPoint::affine(big, emb(p.x()), emb(p.y()));
  };
  FieldElement vbig = weil_pairing_miller(lift(P), lift(Q), m, big, seed + 1);
  for (std::uint64_t v = 0; v < curve.base()->order(); ++v) {
    FieldElement cand = FieldElement::from_value(curve.base(), v);
    if (emb(cand) == vbig) return cand;
  }
  throw InternalError("pairing value did not descend to the base field");
}

std::int64_t multiplicative_order(const FieldElement& v) {
  if (v.is_zero()) throw DomainError("zero has no multiplicative order");
  FieldElement w = v;
  std::int64_t k = 1;
  while (!w.is_one()) {
    w = w * v;
    ++k;
    if (static_cast<std::uint64_t>(k) > v.spec()->order())
      throw InternalError("multiplicative order runaway");
  }
  return k;
}

}  // namespace adelic
