#include <random>

#include "adelic/sampling.hpp"
#include "doctest.h"

using namespace adelic;

namespace {
CurveModel line5() { return CurveModel::projective_line(FieldSpec::prime_field(5)); }
CurveModel e5() {
  auto f5 = FieldSpec::prime_field(5);
  return CurveModel::elliptic(f5, FieldElement::from_int(f5, -1), FieldElement::zero(f5));
}
CurveFunction tpoly(const CurveModel& c, const std::vector<std::int64_t>& cs) {
  return CurveFunction::line(c, Polynomial::from_ints(c.base(), cs),
                             Polynomial::from_ints(c.base(), {1}));
}
}  // namespace

TEST_CASE("idele divisor and degree walk the representation rule") {
  auto c = line5();
  auto base = c.base();
  auto at_t = Place::line_finite(Polynomial::from_ints(base, {0, 1}));
  auto at_t1 = Place::line_finite(Polynomial::from_ints(base, {-1, 1}));
  auto inf = Place::line_infinity(base);

  // principal idele with tail t(t-1)
  auto a = Idele::principal(c, tpoly(c, {0, 1}) * tpoly(c, {-1, 1}));
  auto d = a.divisor();
  CHECK(d.coeff(at_t) == 1);
  CHECK(d.coeff(at_t1) == 1);
  CHECK(d.coeff(inf) == -2);
  CHECK(a.degree() == 0);

  // tail 1, exception (t) -> t^3
  auto b = Idele::make(c, CurveFunction::one(c), {{at_t, tpoly(c, {0, 1}).pow(3)}});
  CHECK(b.divisor() == Divisor::single(at_t, 3));
  CHECK(b.degree() == 3);

  // tail 1/(t-1) with exception (t-1) -> 1: only the tail's pole at
  // infinity survives ... the tail 1/(t-1) has a POLE at (t-1) and a zero
  // at infinity; the exception masks the (t-1) component, so div = 1*(inf)
  auto tail = CurveFunction::line(c, Polynomial::from_ints(base, {1}),
                                  Polynomial::from_ints(base, {-1, 1}));
  auto e = Idele::make(c, tail, {{at_t1, CurveFunction::one(c)}});
  CHECK(e.divisor() == Divisor::single(inf, 1));
  CHECK(e.degree() == 1);
}

TEST_CASE("idele combine") {
  std::mt19937_64 rng(21);
  auto c = line5();
  for (int i = 0; i < 25; ++i) {
    auto a = sampling::random_degree0_idele(c, rng);
    auto b = sampling::random_degree0_idele(c, rng);
    CHECK(a * a.inverse() == Idele::identity(c));
    CHECK((a * b).divisor() == a.divisor() + b.divisor());
    CHECK(a.pow(2) == a * a);
  }
  auto f = sampling::random_function(c, rng);
  auto g = sampling::random_function(c, rng);
  CHECK(Idele::principal(c, f) * Idele::principal(c, g) == Idele::principal(c, f * g));
  auto at_t = Place::line_finite(Polynomial::from_ints(c.base(), {0, 1}));
  auto one_exc = Idele::make(c, CurveFunction::one(c), {{at_t, tpoly(c, {0, 1})}});
  CHECK(one_exc.pow(2) ==
        Idele::make(c, CurveFunction::one(c), {{at_t, tpoly(c, {0, 1}).pow(2)}}));
}

TEST_CASE("uniformizer ideles") {
  auto cl = line5();
  auto bl = cl.base();
  CHECK(uniformizer_idele(Divisor(), cl) == Idele::identity(cl));

  auto at_t = Place::line_finite(Polynomial::from_ints(bl, {0, 1}));
  Divisor d = Divisor::single(at_t, 1) + Divisor::single(Place::line_infinity(bl), -1);
  auto a = uniformizer_idele(d, cl);
  CHECK(a.tail().is_one());
  CHECK(a.component(at_t) == tpoly(cl, {0, 1}));
  CHECK(a.component(Place::line_infinity(bl)) == tpoly(cl, {0, 1}));  // (1/t)^(-1)
  auto [dd, deg] = std::pair(a.divisor(), a.degree());
  CHECK(dd == d);
  CHECK(deg == 0);

  auto ce = e5();
  auto be = ce.base();
  auto p00 = Place::ec_affine(ce, FieldElement::zero(be), FieldElement::zero(be));
  Divisor de = Divisor::single(p00, 1) + Divisor::single(Place::ec_origin(be), -1);
  auto ae = uniformizer_idele(de, ce);
  CHECK(ae.divisor() == de);
  CHECK(order_at(ae.component(p00), p00) == 1);
  CHECK(order_at(ae.component(Place::ec_origin(be)), Place::ec_origin(be)) == -1);
}

TEST_CASE("uniformizer ideles invert divisor computation on random divisors") {
  std::mt19937_64 rng(808);
  for (int kind = 0; kind < 2; ++kind) {
    CurveModel c = kind == 0 ? line5() : e5();
    for (int i = 0; i < 30; ++i) {
      Divisor d = sampling::random_divisor(c, rng);
      auto a = uniformizer_idele(d, c);
      CHECK(a.divisor() == d);
      CHECK(a.degree() == d.degree());
    }
  }
}

TEST_CASE("commutator pairing fixed cases") {
  auto c = line5();
  auto base = c.base();
  auto one = FieldElement::one(base);
  std::mt19937_64 rng(6);

  // principal vs principal is 1 (reciprocity); unit vs unit is 1
  for (int i = 0; i < 30; ++i) {
    auto f = sampling::random_function(c, rng);
    auto g = sampling::random_function(c, rng);
    CHECK(commutator_pairing(Idele::principal(c, f), Idele::principal(c, g)) == one);
    CHECK(commutator_pairing(sampling::random_unit_idele(c, rng),
                             sampling::random_unit_idele(c, rng)) == one);
  }

  // two single-exception ideles with trivial symbols: only the sign is left
  auto at_t = Place::line_finite(Polynomial::from_ints(base, {0, 1}));
  auto at_t1 = Place::line_finite(Polynomial::from_ints(base, {-1, 1}));
  auto a = Idele::make(c, CurveFunction::one(c), {{at_t, tpoly(c, {0, 1})}});
  auto b = Idele::make(c, CurveFunction::one(c), {{at_t1, tpoly(c, {-1, 1})}});
  CHECK(commutator_pairing(a, b) == -one);
  CHECK(norm_symbol_product(a, b) == one);  // unsigned version differs off degree 0
}

TEST_CASE("commutator pairing laws on random ideles") {
  std::mt19937_64 rng(414);
  for (int kind = 0; kind < 2; ++kind) {
    CurveModel c = kind == 0 ? line5() : e5();
    auto one = FieldElement::one(c.base());
    for (int i = 0; i < 25; ++i) {
      auto a1 = sampling::random_degree0_idele(c, rng);
      auto a2 = sampling::random_degree0_idele(c, rng);
      auto b = sampling::random_degree0_idele(c, rng);
      CHECK(commutator_pairing(a1 * a2, b) == commutator_pairing(a1, b) * commutator_pairing(a2, b));
      CHECK(commutator_pairing(b, a1 * a2) == commutator_pairing(b, a1) * commutator_pairing(b, a2));
      CHECK(commutator_pairing(a1, b) * commutator_pairing(b, a1) == one);
      // adding a trivial exception never changes the result
      auto x = sampling::random_place(c, rng);
      auto exc = a1.exceptions();
      if (exc.find(x) == exc.end()) {
        auto padded_exc = exc;
        padded_exc.emplace(x, a1.tail());
        auto padded = Idele::make(c, a1.tail(), padded_exc);
        CHECK(padded == a1);  // normalization prunes it
        // a genuinely listed exception equal to an off-support unit
        if (order_at(a1.tail(), x) == 0) {
          auto forced = a1 * Idele::make(c, CurveFunction::one(c), {{x, CurveFunction::one(c)}});
          CHECK(commutator_pairing(forced, b) == commutator_pairing(a1, b));
        }
      }
      // signed and unsigned pairings agree on degree-0 ideles
      CHECK(commutator_pairing(a1, b) == norm_symbol_product(a1, b));
    }
  }
}

TEST_CASE("section 3 conditions hold on samples") {
  for (int kind = 0; kind < 2; ++kind) {
    CurveModel c = kind == 0 ? line5() : e5();
    auto rep = check_section3_conditions(c, 20, 99);
    CHECK(rep.items.size() == 4);
    CHECK(rep.all_pass());
  }
  CHECK_THROWS_AS(check_section3_conditions(line5(), 0, 1), DomainError);
}
