#include <random>

#include "adelic/curve.hpp"
#include "adelic/sampling.hpp"
#include "doctest.h"

using namespace adelic;

namespace {
CurveModel line5() { return CurveModel::projective_line(FieldSpec::prime_field(5)); }
CurveModel line3() { return CurveModel::projective_line(FieldSpec::prime_field(3)); }
CurveModel line7() { return CurveModel::projective_line(FieldSpec::prime_field(7)); }
CurveModel e5() {
  auto f5 = FieldSpec::prime_field(5);
  return CurveModel::elliptic(f5, FieldElement::from_int(f5, -1), FieldElement::zero(f5));
}
}  // namespace

TEST_CASE("curve model validation") {
  auto f5 = FieldSpec::prime_field(5);
  CHECK(line5().genus() == 0);
  CHECK(e5().genus() == 1);
  // singular: y^2 = x^3 (a4 = a6 = 0)
  CHECK_THROWS_AS(CurveModel::elliptic(f5, FieldElement::zero(f5), FieldElement::zero(f5)),
                  StructureError);
  CHECK_THROWS_AS(
      CurveModel::elliptic(FieldSpec::prime_field(3), FieldElement::zero(FieldSpec::prime_field(3)),
                           FieldElement::one(FieldSpec::prime_field(3))),
      StructureError);
}

TEST_CASE("order_at on the line") {
  auto c = line5();
  auto base = c.base();
  // f = t^2/(t-1)
  auto f = CurveFunction::line(c, Polynomial::from_ints(base, {0, 0, 1}),
                               Polynomial::from_ints(base, {-1, 1}));
  auto at_t = Place::line_finite(Polynomial::from_ints(base, {0, 1}));
  CHECK(order_at(f, at_t) == 2);
  CHECK(order_at(f, Place::line_infinity(base)) == -1);
  auto at_t1 = Place::line_finite(Polynomial::from_ints(base, {-1, 1}));
  CHECK(order_at(f, at_t1) == -1);
}

TEST_CASE("order_at on the elliptic curve") {
  auto c = e5();
  auto base = c.base();
  auto x_fn = CurveFunction::elliptic(c, Polynomial::from_ints(base, {0, 1}), Polynomial(base),
                                      Polynomial::from_ints(base, {1}));
  auto p00 = Place::ec_affine(c, FieldElement::zero(base), FieldElement::zero(base));
  CHECK(order_at(x_fn, p00) == 2);
  CHECK(order_at(x_fn, Place::ec_origin(base)) == -2);
  // y has a simple zero at (0,0) and a triple pole at the origin
  auto y_fn = CurveFunction::elliptic(c, Polynomial(base),
                                      Polynomial::from_ints(base, {1}), Polynomial::from_ints(base, {1}));
  CHECK(order_at(y_fn, p00) == 1);
  CHECK(order_at(y_fn, Place::ec_origin(base)) == -3);
}

TEST_CASE("evaluate_at") {
  auto c7 = line7();
  auto b7 = c7.base();
  auto f = CurveFunction::line(c7, Polynomial::from_ints(b7, {1, -1}), Polynomial::from_ints(b7, {1}));
  auto at_t = Place::line_finite(Polynomial::from_ints(b7, {0, 1}));
  CHECK(evaluate_at(f, at_t) == FieldElement::one(b7));

  auto c3 = line3();
  auto b3 = c3.base();
  auto g = CurveFunction::line(c3, Polynomial::from_ints(b3, {1, 1}), Polynomial::from_ints(b3, {1}));
  auto pl = Place::line_finite(Polynomial::from_ints(b3, {1, 0, 1}));
  auto v = evaluate_at(g, pl);
  CHECK(v.spec()->order() == 9);
  CHECK(v.rep() == std::vector<coeff_t>{1, 1});  // the class t+1 in GF(3)[t]/(t^2+1)

  // y/x has order -1 at (0,0): rejected, and the message names the order
  auto ce = e5();
  auto be = ce.base();
  auto yx = CurveFunction::elliptic(ce, Polynomial(be), Polynomial::from_ints(be, {1}),
                                    Polynomial::from_ints(be, {0, 1}));
  auto p00 = Place::ec_affine(ce, FieldElement::zero(be), FieldElement::zero(be));
  CHECK(order_at(yx, p00) == -1);
  CHECK_THROWS_WITH_AS(evaluate_at(yx, p00), doctest::Contains("-1"), DomainError);
}

TEST_CASE("divisor_of fixed cases") {
  auto c5 = line5();
  auto b5 = c5.base();
  auto t_fn = CurveFunction::line(c5, Polynomial::from_ints(b5, {0, 1}), Polynomial::from_ints(b5, {1}));
  auto d = divisor_of(t_fn);
  CHECK(d.degree() == 0);
  CHECK(d.coeff(Place::line_finite(Polynomial::from_ints(b5, {0, 1}))) == 1);
  CHECK(d.coeff(Place::line_infinity(b5)) == -1);
  CHECK(d.terms().size() == 2);

  auto c3 = line3();
  auto b3 = c3.base();
  auto g = CurveFunction::line(c3, Polynomial::from_ints(b3, {1, 0, 1}), Polynomial::from_ints(b3, {1}));
  auto dg = divisor_of(g);
  CHECK(dg.coeff(Place::line_finite(Polynomial::from_ints(b3, {1, 0, 1}))) == 1);
  CHECK(dg.coeff(Place::line_infinity(b3)) == -2);
  CHECK(dg.degree() == 0);

  auto ce = e5();
  auto be = ce.base();
  auto x_fn = CurveFunction::elliptic(ce, Polynomial::from_ints(be, {0, 1}), Polynomial(be),
                                      Polynomial::from_ints(be, {1}));
  auto dx = divisor_of(x_fn);
  CHECK(dx.coeff(Place::ec_affine(ce, FieldElement::zero(be), FieldElement::zero(be))) == 2);
  CHECK(dx.coeff(Place::ec_origin(be)) == -2);
  CHECK(dx.terms().size() == 2);
}

TEST_CASE("valuation properties on random functions") {
  std::mt19937_64 rng(99);
  for (int kind = 0; kind < 2; ++kind) {
    CurveModel c = kind == 0 ? line7() : e5();
    for (int i = 0; i < 40; ++i) {
      auto f = sampling::random_function(c, rng);
      auto g = sampling::random_function(c, rng);
      auto x = sampling::random_place(c, rng);
      CHECK(order_at(f * g, x) == order_at(f, x) + order_at(g, x));
      // degree-zero principal divisors
      CHECK(divisor_of(f).degree() == 0);
    }
  }
}

TEST_CASE("uniformizers have order one") {
  std::mt19937_64 rng(123);
  for (int kind = 0; kind < 2; ++kind) {
    CurveModel c = kind == 0 ? line5() : e5();
    for (int i = 0; i < 20; ++i) {
      auto x = sampling::random_place(c, rng);
      CHECK(order_at(uniformizer_at(x, c), x) == 1);
    }
  }
}

TEST_CASE("residue fields have order p^(n deg)") {
  auto c3 = line3();
  auto b3 = c3.base();
  auto pl2 = Place::line_finite(Polynomial::from_ints(b3, {1, 0, 1}));
  CHECK(pl2.residue_spec()->order() == 9);
  CHECK(pl2.degree() == 2);
  auto f9 = FieldSpec::extension(3, 2, {1, 0, 1});
  auto c9 = CurveModel::projective_line(f9);
  // t^2 + u over GF(9): check irreducibility first, then the residue order
  auto pi = Polynomial(f9, {FieldElement(f9, {0, 1}), FieldElement::zero(f9), FieldElement::one(f9)});
  if (is_irreducible(pi)) {
    auto pl = Place::line_finite(pi);
    CHECK(pl.residue_spec()->order() == 81);
    auto f = CurveFunction::line(c9, Polynomial::from_ints(f9, {1, 1}), Polynomial::from_ints(f9, {1}));
    auto v = evaluate_at(f, pl);
    CHECK(v.spec()->order() == 81);
  }
}

TEST_CASE("base change keeps the curve equation") {
  auto e = e5();
  auto e25 = e.base_change(2);
  CHECK(e25.base()->order() == 25);
  CHECK(e25.a4() == FieldElement::from_int(e25.base(), -1));
  auto d = divisor_of(CurveFunction::elliptic(e25, Polynomial::from_ints(e25.base(), {0, 1}),
                                              Polynomial(e25.base()),
                                              Polynomial::from_ints(e25.base(), {1})));
  CHECK(d.degree() == 0);
}

TEST_CASE("non-rational elliptic divisors are rejected") {
  auto ce = e5();
  auto be = ce.base();
  // x - 2 vanishes at (2, y) with y^2 = 6 = 1, fine; x - 3 vanishes at
  // (3, y) with y^2 = 3^3-3 = 24 = 4, y = +-2, also fine. Try x^2+2,
  // irreducible over GF(5): zeros at quadratic points.
  auto f = CurveFunction::elliptic(ce, Polynomial::from_ints(be, {2, 0, 1}), Polynomial(be),
                                   Polynomial::from_ints(be, {1}));
  CHECK_THROWS_AS(divisor_of(f), DomainError);
}
