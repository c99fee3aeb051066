#include <random>

#include "adelic/sampling.hpp"
#include "adelic/tame.hpp"
#include "doctest.h"

using namespace adelic;

namespace {
CurveModel line(coeff_t p) { return CurveModel::projective_line(FieldSpec::prime_field(p)); }
CurveModel e5() {
  auto f5 = FieldSpec::prime_field(5);
  return CurveModel::elliptic(f5, FieldElement::from_int(f5, -1), FieldElement::zero(f5));
}
CurveFunction tpoly(const CurveModel& c, const std::vector<std::int64_t>& cs) {
  return CurveFunction::line(c, Polynomial::from_ints(c.base(), cs),
                             Polynomial::from_ints(c.base(), {1}));
}
}  // namespace

TEST_CASE("tame symbol fixed cases") {
  auto c5 = line(5);
  auto at_t5 = Place::line_finite(Polynomial::from_ints(c5.base(), {0, 1}));
  // (t,t) at (t) = -1
  CHECK(tame_symbol(tpoly(c5, {0, 1}), tpoly(c5, {0, 1}), at_t5) ==
        FieldElement::from_int(c5.base(), 4));

  auto c7 = line(7);
  auto at_t7 = Place::line_finite(Polynomial::from_ints(c7.base(), {0, 1}));
  // Steinberg instance (t, 1-t) at (t) = 1
  CHECK(tame_symbol(tpoly(c7, {0, 1}), tpoly(c7, {1, -1}), at_t7).is_one());

  auto c3 = line(3);
  auto pl = Place::line_finite(Polynomial::from_ints(c3.base(), {1, 0, 1}));
  auto sym = tame_symbol(tpoly(c3, {1, 1}), tpoly(c3, {1, 0, 1}), pl);
  CHECK(sym.spec()->order() == 9);
  CHECK(sym.rep() == std::vector<coeff_t>{1, 1});  // the class t+1 in GF(9)
}

TEST_CASE("tame symbol norms") {
  auto c3 = line(3);
  auto pl = Place::line_finite(Polynomial::from_ints(c3.base(), {1, 0, 1}));
  CHECK(tame_symbol_norm(tpoly(c3, {1, 1}), tpoly(c3, {1, 0, 1}), pl) ==
        FieldElement::from_int(c3.base(), 2));

  auto c5 = line(5);
  auto at_t = Place::line_finite(Polynomial::from_ints(c5.base(), {0, 1}));
  CHECK(tame_symbol_norm(tpoly(c5, {0, 1}), tpoly(c5, {0, 1}), at_t) ==
        FieldElement::from_int(c5.base(), 4));

  // degree-1 place: norm equals the raw symbol
  std::mt19937_64 rng(12);
  for (int i = 0; i < 20; ++i) {
    auto f = sampling::random_function(c5, rng);
    auto g = sampling::random_function(c5, rng);
    auto x = Place::line_finite(sampling::random_monic_irreducible(c5.base(), 1, rng));
    CHECK(tame_symbol_norm(f, g, x) == tame_symbol(f, g, x));
  }
}

TEST_CASE("tame symbol algebraic laws") {
  std::mt19937_64 rng(555);
  for (int kind = 0; kind < 2; ++kind) {
    CurveModel c = kind == 0 ? line(7) : e5();
    auto one = FieldElement::one(c.base());
    for (int i = 0; i < 60; ++i) {
      auto f = sampling::random_function(c, rng);
      auto g = sampling::random_function(c, rng);
      auto h = sampling::random_function(c, rng);
      auto x = sampling::random_place(c, rng);
      // bimultiplicative
      CHECK(tame_symbol_norm(f * g, h, x) == tame_symbol_norm(f, h, x) * tame_symbol_norm(g, h, x));
      CHECK(tame_symbol_norm(f, g * h, x) == tame_symbol_norm(f, g, x) * tame_symbol_norm(f, h, x));
      // skew-symmetry
      CHECK(tame_symbol_norm(f, g, x) * tame_symbol_norm(g, f, x) == one);
      // (f, -f) = 1 and (f, f) = (-1)^ord
      auto minus_f = f * (-one);
      CHECK(tame_symbol(f, minus_f, x).is_one());
      std::int64_t ord = order_at(f, x);
      auto ff = tame_symbol(f, f, x);
      if (ord % 2 == 0)
        CHECK(ff.is_one());
      else
        CHECK(ff == -FieldElement::one(ff.spec()));
      // unit-unit triviality
      if (order_at(f, x) == 0 && order_at(g, x) == 0) CHECK(tame_symbol(f, g, x).is_one());
    }
  }
}

TEST_CASE("Weil reciprocity fixed cases") {
  auto c7 = line(7);
  CHECK(weil_reciprocity(tpoly(c7, {0, 1}), tpoly(c7, {1, -1})).is_one());
  auto c3 = line(3);
  CHECK(weil_reciprocity(tpoly(c3, {1, 1}), tpoly(c3, {1, 0, 1})).is_one());
  auto ce = e5();
  auto be = ce.base();
  auto x_fn = CurveFunction::elliptic(ce, Polynomial::from_ints(be, {0, 1}), Polynomial(be),
                                      Polynomial::from_ints(be, {1}));
  auto xm1 = CurveFunction::elliptic(ce, Polynomial::from_ints(be, {-1, 1}), Polynomial(be),
                                     Polynomial::from_ints(be, {1}));
  CHECK(weil_reciprocity(x_fn, xm1).is_one());
}

TEST_CASE("Weil reciprocity on random pairs, all supported base fields") {
  std::vector<CurveModel> curves = {line(5), line(7),
                                    CurveModel::projective_line(FieldSpec::extension(3, 2, {1, 0, 1})),
                                    e5()};
  for (const auto& c : curves) {
    std::mt19937_64 rng(2718);
    for (int i = 0; i < 50; ++i) {
      auto f = sampling::random_function(c, rng);
      auto g = sampling::random_function(c, rng);
      CHECK(weil_reciprocity(f, g).is_one());
    }
  }
}

TEST_CASE("symbols are trivial off the supports") {
  std::mt19937_64 rng(161);
  auto c = line(5);
  for (int i = 0; i < 25; ++i) {
    auto f = sampling::random_function(c, rng);
    auto g = sampling::random_function(c, rng);
    auto x = sampling::random_place(c, rng);
    if (order_at(f, x) != 0 || order_at(g, x) != 0) continue;
    CHECK(tame_symbol_norm(f, g, x).is_one());
  }
}
