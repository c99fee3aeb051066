#include "adelic/idele.hpp"

#include <set>
#include <sstream>

#include "adelic/sampling.hpp"

namespace adelic {

Idele Idele::principal(const CurveModel& curve, const CurveFunction& f) {
  Idele a;
  a.curve_ = curve;
  a.tail_ = f;
  return a;
}

Idele Idele::identity(const CurveModel& curve) {
  return principal(curve, CurveFunction::one(curve));
}

Idele Idele::make(const CurveModel& curve, CurveFunction tail,
                  std::map<Place, CurveFunction> exceptions) {
  Idele a;
  a.curve_ = curve;
  a.tail_ = std::move(tail);
  a.exceptions_ = std::move(exceptions);
  a.normalize();
  return a;
}

void Idele::normalize() {
  for (auto it = exceptions_.begin(); it != exceptions_.end();) {
    if (it->second == tail_)
      it = exceptions_.erase(it);
    else
      ++it;
  }
}

const CurveFunction& Idele::component(const Place& x) const {
  auto it = exceptions_.find(x);
  return it == exceptions_.end() ? tail_ : it->second;
}

Idele Idele::operator*(const Idele& o) const {
  if (curve_ != o.curve_) throw StructureError("ideles on different curves");
  Idele r;
  r.curve_ = curve_;
  r.tail_ = tail_ * o.tail_;
  std::set<Place> keys;
  for (const auto& [x, g] : exceptions_) keys.insert(x);
  for (const auto& [x, g] : o.exceptions_) keys.insert(x);
  for (const auto& x : keys) r.exceptions_.emplace(x, component(x) * o.component(x));
  r.normalize();
  return r;
}

Idele Idele::inverse() const {
  Idele r;
  r.curve_ = curve_;
  r.tail_ = tail_.inverse();
  for (const auto& [x, g] : exceptions_) r.exceptions_.emplace(x, g.inverse());
  r.normalize();
  return r;
}

Idele Idele::pow(std::int64_t k) const {
  Idele r;
  r.curve_ = curve_;
  r.tail_ = tail_.pow(k);
  for (const auto& [x, g] : exceptions_) r.exceptions_.emplace(x, g.pow(k));
  r.normalize();
  return r;
}

bool Idele::operator==(const Idele& o) const {
  return curve_ == o.curve_ && tail_ == o.tail_ && exceptions_ == o.exceptions_;
}

Divisor Idele::divisor() const {
  Divisor d;
  Divisor dt = divisor_of(tail_);
  for (const auto& [x, c] : dt.terms())
    if (exceptions_.find(x) == exceptions_.end()) d.add(x, c);
  for (const auto& [x, g] : exceptions_) d.add(x, order_at(g, x));
  return d;
}

std::int64_t Idele::degree() const { return divisor().degree(); }

std::vector<Place> Idele::support() const {
  std::set<Place> s;
  for (const auto& [x, g] : exceptions_) s.insert(x);
  Divisor dt = divisor_of(tail_);
  for (const auto& [x, c] : dt.terms()) s.insert(x);
  return {s.begin(), s.end()};
}

std::string Idele::to_string() const {
  std::ostringstream os;
  os << "tail=" << tail_.to_string();
  for (const auto& [x, g] : exceptions_) os << "; " << x.to_string() << "=>" << g.to_string();
  return os.str();
}

Idele uniformizer_idele(const Divisor& D, const CurveModel& curve) {
  std::map<Place, CurveFunction> exc;
  for (const auto& [x, c] : D.terms()) exc.emplace(x, uniformizer_at(x, curve).pow(c));
  return Idele::make(curve, CurveFunction::one(curve), std::move(exc));
}

namespace {

FieldElement symbol_product_over_union(const Idele& a, const Idele& b) {
  std::set<Place> s;
  for (const auto& x : a.support()) s.insert(x);
  for (const auto& x : b.support()) s.insert(x);
  FieldElement prod = FieldElement::one(a.curve().base());
  for (const auto& x : s) prod = prod * tame_symbol_norm(a.component(x), b.component(x), x);
  return prod;
}

}  // namespace

FieldElement norm_symbol_product(const Idele& a, const Idele& b) {
  if (a.curve() != b.curve()) throw StructureError("ideles on different curves");
  return symbol_product_over_union(a, b);
}

FieldElement commutator_pairing(const Idele& a, const Idele& b) {
  FieldElement prod = norm_symbol_product(a, b);
  if ((a.degree() & 1) && (b.degree() & 1)) prod = -prod;
  return prod;
}

bool ConditionReport::all_pass() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

std::string ConditionReport::to_string() const {
  std::ostringstream os;
  for (const auto& it : items) {
    os << (it.pass ? "PASS " : "FAIL ") << it.condition;
    if (!it.witness.empty()) os << " witness: " << it.witness;
    os << "\n";
  }
  return os.str();
}

ConditionReport check_section3_conditions(const CurveModel& curve, int samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("sample count must be >= 1");
  std::mt19937_64 rng(seed);
  ConditionReport rep;
  FieldElement one = FieldElement::one(curve.base());

  auto run = [&](const std::string& name, auto make_pair_of_ideles) {
    ConditionReport::Item item{name, true, ""};
    for (int i = 0; i < samples; ++i) {
      auto [a, b] = make_pair_of_ideles();
      if (norm_symbol_product(a, b) != one) {
        item.pass = false;
        item.witness = "a: " + a.to_string() + " | b: " + b.to_string();
        break;
      }
    }
    rep.items.push_back(std::move(item));
  };

  run("<B,B'> = 1 (principal vs principal)", [&] {
    return std::make_pair(Idele::principal(curve, sampling::random_function(curve, rng)),
                          Idele::principal(curve, sampling::random_function(curve, rng)));
  });
  run("<C,C'> = 1 (unit vs unit)", [&] {
    return std::make_pair(sampling::random_unit_idele(curve, rng),
                          sampling::random_unit_idele(curve, rng));
  });
  run("<B cap C, A'> = 1 (constants vs degree-0)", [&] {
    auto c = sampling::random_nonzero_element(curve.base(), rng);
    return std::make_pair(Idele::principal(curve, CurveFunction::constant(curve, c)),
                          sampling::random_degree0_idele(curve, rng));
  });
  run("<A, B' cap C'> = 1 (degree-0 vs constants)", [&] {
    auto c = sampling::random_nonzero_element(curve.base(), rng);
    return std::make_pair(sampling::random_degree0_idele(curve, rng),
                          Idele::principal(curve, CurveFunction::constant(curve, c)));
  });
  return rep;
}

}  // namespace adelic
