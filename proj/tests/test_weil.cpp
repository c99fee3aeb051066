#include <map>
#include <random>

#include "adelic/sampling.hpp"
#include "adelic/weil.hpp"
#include "doctest.h"

using namespace adelic;

namespace {

CurveModel e5() {  // y^2 = x^3 - x over GF(5); full rational 2-torsion
  auto f5 = FieldSpec::prime_field(5);
  return CurveModel::elliptic(f5, FieldElement::from_int(f5, -1), FieldElement::zero(f5));
}
CurveModel e7() {  // y^2 = x^3 + 2 over GF(7); full rational 3-torsion
  auto f7 = FieldSpec::prime_field(7);
  return CurveModel::elliptic(f7, FieldElement::zero(f7), FieldElement::from_int(f7, 2));
}

Divisor pt_minus_origin(const CurveModel& c, const EcPoint& p) {
  return point_class_divisor(c, p);
}

}  // namespace

TEST_CASE("adelic pairing on the full 2-torsion of y^2 = x^3 - x / GF(5)") {
  auto c = e5();
  auto base = c.base();
  auto pts = torsion_points(c, 2);
  REQUIRE(pts.size() == 4);
  auto one = FieldElement::one(base);
  auto minus_one = FieldElement::from_int(base, 4);
  for (const auto& p : pts) {
    for (const auto& q : pts) {
      auto v = weil_pairing_adelic(pt_minus_origin(c, p), pt_minus_origin(c, q), 2, c);
      if (p == q || p.is_origin() || q.is_origin())
        CHECK(v == one);
      else
        CHECK(v == minus_one);  // distinct nonzero 2-torsion points pair to -1
      CHECK(v == weil_pairing_miller(p, q, 2, c));
    }
  }
}

TEST_CASE("the worked 2-torsion example and the trivial cases") {
  auto c = e5();
  auto base = c.base();
  auto P = EcPoint::affine(c, FieldElement::zero(base), FieldElement::zero(base));
  auto Q = EcPoint::affine(c, FieldElement::one(base), FieldElement::zero(base));
  Divisor D = pt_minus_origin(c, P), Dp = pt_minus_origin(c, Q);
  CHECK(weil_pairing_adelic(D, Dp, 2, c) == FieldElement::from_int(base, 4));
  CHECK(weil_pairing_adelic(D, D, 2, c).is_one());   // alternating
  CHECK(weil_pairing_adelic(D, Divisor(), 2, c).is_one());  // identity class
  CHECK_THROWS_AS(weil_pairing_adelic(D, Dp, 10, c), DomainError);  // 10 = 2*5
  // non-torsion input
  auto R = EcPoint::affine(c, FieldElement::from_int(base, 2), FieldElement::one(base));
  CHECK_THROWS_AS(weil_pairing_adelic(pt_minus_origin(c, R), Dp, 2, c), DomainError);
}

TEST_CASE("brute-force 2-torsion value from the definition") {
  // e_2((0,0),(1,0)) computed from explicit functions and a hand-shifted
  // divisor, independently of the Miller loop
  auto c = e5();
  auto base = c.base();
  auto P = EcPoint::affine(c, FieldElement::zero(base), FieldElement::zero(base));
  auto Q = EcPoint::affine(c, FieldElement::one(base), FieldElement::zero(base));
  auto R = EcPoint::affine(c, FieldElement::from_int(base, 2), FieldElement::one(base));
  Divisor D = pt_minus_origin(c, P);
  Divisor Dq;
  Dq.add(place_of(c, ec_add(c, Q, R)), 1);
  Dq.add(place_of(c, R), -1);
  auto f = certify_m_torsion(D, 2, c);      // div = 2(P) - 2(O): the function x
  auto fq = certify_m_torsion(Dq, 2, c);    // div = 2(Q+R) - 2(R)
  REQUIRE(f.has_value());
  REQUIRE(fq.has_value());
  CHECK(f->to_string() == "x");
  FieldElement e2 = evaluate_on_divisor(*f, Dq) / evaluate_on_divisor(*fq, D);
  CHECK(e2 == FieldElement::from_int(base, 4));
  CHECK(e2 == weil_pairing_miller(P, Q, 2, c));
  // and the disjoint-support operation computes exactly this
  CHECK(weil_pairing_disjoint(D, Dq, 2, c) == e2);
}

TEST_CASE("miller oracle properties") {
  auto c = e7();
  auto pts = torsion_points(c, 3);
  REQUIRE(pts.size() == 9);
  for (const auto& p : pts) {
    CHECK(weil_pairing_miller(p, p, 3, c).is_one());
    CHECK(weil_pairing_miller(p, EcPoint::origin(), 3, c).is_one());
  }
  // bilinearity and alternation through the table
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i].to_string()] = i;
  std::vector<std::vector<FieldElement>> table(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j)
      table[i].push_back(weil_pairing_miller(pts[i], pts[j], 3, c));
  auto one = FieldElement::one(c.base());
  bool nondegenerate = false;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      CHECK((table[i][j] * table[j][i]).is_one());
      CHECK(table[i][j].pow(3).is_one());
      if (table[i][j] != one) nondegenerate = true;
      for (std::size_t k = 0; k < pts.size(); ++k) {
        auto sum = ec_add(c, pts[i], pts[k]);
        CHECK(table[index[sum.to_string()]][j] == table[i][j] * table[k][j]);
      }
    }
  }
  CHECK(nondegenerate);
}

TEST_CASE("adelic equals miller on full 3-torsion") {
  auto c = e7();
  auto pts = torsion_points(c, 3);
  for (const auto& p : pts)
    for (const auto& q : pts) {
      auto va = weil_pairing_adelic(pt_minus_origin(c, p), pt_minus_origin(c, q), 3, c);
      CHECK(va == weil_pairing_miller(p, q, 3, c));
      CHECK(va.pow(3).is_one());
    }
}

TEST_CASE("class, scalar and uniformizer invariance") {
  auto c = e5();
  auto base = c.base();
  std::mt19937_64 rng(2025);
  auto pts = torsion_points(c, 2);
  auto P = pts[1], Q = pts[2];
  Divisor D = pt_minus_origin(c, P), Dp = pt_minus_origin(c, Q);
  auto baseline = weil_pairing_adelic(D, Dp, 2, c);

  for (int i = 0; i < 8; ++i) {
    // class invariance: D -> D + div(h)
    auto h = sampling::random_function(c, rng);
    CHECK(weil_pairing_adelic(D + divisor_of(h), Dp, 2, c) == baseline);
    auto h2 = sampling::random_function(c, rng);
    CHECK(weil_pairing_adelic(D, Dp + divisor_of(h2), 2, c) == baseline);

    // scalar invariance: f -> c*f forces u -> u/c
    auto L = prepare_torsion_class(D, 2, c);
    auto M = prepare_torsion_class(Dp, 2, c);
    auto cst = sampling::random_nonzero_element(base, rng);
    TorsionClassData Ls = L;
    Ls.f = L.f * cst;
    Ls.u = Ls.alpha.pow(2) * Idele::principal(c, Ls.f).inverse();
    CHECK(weil_pairing_from_data(Ls, M, 2) == baseline);
    TorsionClassData Ms = M;
    Ms.f = M.f * cst;
    Ms.u = Ms.alpha.pow(2) * Idele::principal(c, Ms.f).inverse();
    CHECK(weil_pairing_from_data(L, Ms, 2) == baseline);

    // uniformizer invariance: multiply one component of alpha by a unit
    auto support = D.support();
    const Place& x = support[static_cast<std::size_t>(i) % support.size()];
    auto w = sampling::random_unit_at(c, x, rng);
    TorsionClassData Lu = L;
    Lu.alpha = L.alpha * Idele::make(c, CurveFunction::one(c), {{x, w}});
    Lu.u = Lu.alpha.pow(2) * Idele::principal(c, Lu.f).inverse();
    CHECK(weil_pairing_from_data(Lu, M, 2) == baseline);
  }
}

TEST_CASE("disjoint-support operation") {
  auto c = e5();
  std::mt19937_64 rng(77);
  auto pts = torsion_points(c, 2);
  auto P = pts[1], Q = pts[3];
  Divisor D = pt_minus_origin(c, P), Dp = pt_minus_origin(c, Q);

  // empty divisor pairs to 1 against anything disjoint
  CHECK(weil_pairing_disjoint(Divisor(), Dp, 2, c).is_one());

  // overlapping supports are rejected with advice
  CHECK_THROWS_WITH_AS(weil_pairing_disjoint(D, Dp, 2, c), doctest::Contains("shift"), DomainError);

  // randomized shifted representatives agree with the adelic value
  auto baseline = weil_pairing_adelic(D, Dp, 2, c);
  int done = 0;
  while (done < 10) {
    auto h = sampling::random_function(c, rng);
    Divisor Dp_shift = Dp + divisor_of(h);
    bool disjoint = true;
    for (const auto& [x, cc] : D.terms()) disjoint = disjoint && Dp_shift.coeff(x) == 0;
    if (!disjoint) continue;
    CHECK(weil_pairing_disjoint(D, Dp_shift, 2, c) == baseline);
    ++done;
  }
}

TEST_CASE("symbols vanish off the supports of the adelic product") {
  auto c = e5();
  std::mt19937_64 rng(31);
  auto pts = torsion_points(c, 2);
  auto L = prepare_torsion_class(pt_minus_origin(c, pts[1]), 2, c);
  auto M = prepare_torsion_class(pt_minus_origin(c, pts[2]), 2, c);
  auto f_idele = Idele::principal(c, L.f);
  for (int i = 0; i < 20; ++i) {
    auto z = sampling::random_place(c, rng);
    bool in_support = false;
    for (const auto& s : {f_idele.support(), M.alpha.support(), L.alpha.support(), M.u.support()})
      for (const auto& x : s) in_support = in_support || x == z;
    if (in_support) continue;
    auto factor = tame_symbol_norm(L.f, M.alpha.component(z), z) /
                  tame_symbol_norm(L.alpha.component(z), M.u.component(z), z);
    CHECK(factor.is_one());
  }
}

TEST_CASE("multiplicative order") {
  auto f5 = FieldSpec::prime_field(5);
  CHECK(multiplicative_order(FieldElement::from_int(f5, 4)) == 2);
  CHECK(multiplicative_order(FieldElement::from_int(f5, 2)) == 4);
  CHECK(multiplicative_order(FieldElement::one(f5)) == 1);
}
