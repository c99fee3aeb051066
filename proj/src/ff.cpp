#include "adelic/ff.hpp"

#include <algorithm>
#include <sstream>

#include "adelic/factor.hpp"

namespace adelic {

namespace {

bool is_prime_u64(coeff_t p) {
  if (p < 2) return false;
  for (coeff_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

coeff_t mod_inverse(coeff_t a, coeff_t p) {
  // extended Euclid in Z
  std::int64_t t = 0, newt = 1, r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a % p);
  while (newr != 0) {
    std::int64_t q = r / newr;
    std::int64_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (r != 1) throw DomainError("division by zero in GF(p)");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<coeff_t>(t);
}

// dense mod-p polynomial helpers on raw coefficient vectors
void strip(std::vector<coeff_t>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<coeff_t> raw_mul(const std::vector<coeff_t>& a, const std::vector<coeff_t>& b, coeff_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<coeff_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  strip(out);
  return out;
}

// remainder of a by monic m
std::vector<coeff_t> raw_rem_monic(std::vector<coeff_t> a, const std::vector<coeff_t>& m, coeff_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    coeff_t lead = a.back();
    std::size_t shiftv = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t i = 0; i < dm; ++i) {
        coeff_t sub = (lead * m[i]) % p;
        coeff_t& c = a[shiftv + i];
        c = (c + p - sub) % p;
      }
    }
    a.pop_back();
    strip(a);
  }
  return a;
}

// extended Euclid for raw vectors modulo p; returns (g, s) with s*a = g mod m-ish usage below
struct RawExt {
  std::vector<coeff_t> g, s;
};

std::vector<coeff_t> raw_sub(std::vector<coeff_t> a, const std::vector<coeff_t>& b, coeff_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  strip(a);
  return a;
}

std::pair<std::vector<coeff_t>, std::vector<coeff_t>> raw_divmod(std::vector<coeff_t> a,
                                                                 const std::vector<coeff_t>& b,
                                                                 coeff_t p) {
  std::vector<coeff_t> q(a.size() > b.size() - 1 ? a.size() - b.size() + 1 : 0, 0);
  coeff_t inv_lb = mod_inverse(b.back(), p);
  while (a.size() >= b.size() && !a.empty()) {
    coeff_t c = (a.back() * inv_lb) % p;
    std::size_t sh = a.size() - b.size();
    if (c != 0) {
      q[sh] = c;
      for (std::size_t i = 0; i < b.size(); ++i) {
        coeff_t sub = (c * b[i]) % p;
        a[sh + i] = (a[sh + i] + p - sub) % p;
      }
    }
    a.pop_back();
    strip(a);
    if (a.size() < b.size()) break;
  }
  strip(q);
  strip(a);
  return {q, a};
}

RawExt raw_ext_gcd(std::vector<coeff_t> a, std::vector<coeff_t> b, coeff_t p) {
  // returns g = gcd(a,b) and s with s*a === g (mod b_original)
  std::vector<coeff_t> r0 = std::move(a), r1 = std::move(b);
  std::vector<coeff_t> s0 = {1}, s1 = {};
  while (!r1.empty()) {
    auto [q, r] = raw_divmod(r0, r1, p);
    auto s2 = raw_sub(s0, raw_mul(q, s1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  return {std::move(r0), std::move(s0)};
}

}  // namespace

FieldSpecPtr FieldSpec::prime_field(coeff_t p) {
  if (!is_prime_u64(p)) throw StructureError("field characteristic must be prime, got " + std::to_string(p));
  if (p >= (coeff_t(1) << 31)) throw StructureError("characteristic too large");
  auto s = std::make_shared<FieldSpec>();
  s->p = p;
  s->n = 1;
  return s;
}

FieldSpecPtr FieldSpec::extension(coeff_t p, std::uint32_t n, std::vector<coeff_t> modulus,
                                  std::string var) {
  if (!is_prime_u64(p)) throw StructureError("field characteristic must be prime, got " + std::to_string(p));
  if (p >= (coeff_t(1) << 31)) throw StructureError("characteristic too large");
  if (n == 0) throw StructureError("extension degree must be >= 1");
  if (n == 1 && modulus.empty()) return prime_field(p);
  for (auto& c : modulus) c %= p;
  strip(modulus);
  if (modulus.size() != n + 1) throw StructureError("modulus degree must equal the extension degree");
  if (modulus.back() != 1) throw StructureError("modulus must be monic");
  auto s = std::make_shared<FieldSpec>();
  s->p = p;
  s->n = n;
  s->modulus = std::move(modulus);
  s->var = std::move(var);
  if (n > 1) {
    // irreducibility check over GF(p)
    auto base = prime_field(p);
    std::vector<FieldElement> cs;
    for (auto c : s->modulus) cs.push_back(FieldElement::from_int(base, static_cast<std::int64_t>(c)));
    if (!is_irreducible(Polynomial(base, cs)))
      throw StructureError("modulus is reducible over GF(" + std::to_string(p) + ")");
  }
  return s;
}

FieldSpecPtr FieldSpec::extension(coeff_t p, std::uint32_t n) {
  if (n <= 1) return prime_field(p);
  return extension(p, n, canonical_modulus(p, n), "u");
}

std::uint64_t FieldSpec::order() const {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) q *= p;
  return q;
}

bool FieldSpec::same_field(const FieldSpec& other) const {
  return p == other.p && n == other.n && modulus == other.modulus;
}

bool same_spec(const FieldSpecPtr& a, const FieldSpecPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_field(*b);
}

std::string field_spec_to_string(const FieldSpecPtr& spec) {
  if (spec->n == 1) return "GF(" + std::to_string(spec->p) + ")";
  std::ostringstream os;
  os << "GF(" << spec->order() << ";";
  bool first = true;
  for (std::size_t i = spec->modulus.size(); i-- > 0;) {
    coeff_t c = spec->modulus[i];
    if (c == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << spec->var;
      if (i > 1) os << "^" << i;
    }
  }
  os << ")";
  return os.str();
}

FieldElement::FieldElement(FieldSpecPtr spec, std::vector<coeff_t> rep)
    : spec_(std::move(spec)), rep_(std::move(rep)) {
  for (auto& c : rep_) c %= spec_->p;
  if (rep_.size() > spec_->n) rep_ = raw_rem_monic(std::move(rep_), spec_->modulus, spec_->p);
  strip(rep_);
}

FieldElement FieldElement::from_int(const FieldSpecPtr& spec, std::int64_t value) {
  std::int64_t p = static_cast<std::int64_t>(spec->p);
  std::int64_t v = value % p;
  if (v < 0) v += p;
  std::vector<coeff_t> rep;
  if (v != 0) rep.push_back(static_cast<coeff_t>(v));
  return FieldElement(spec, std::move(rep));
}

FieldElement FieldElement::from_value(const FieldSpecPtr& spec, std::uint64_t value) {
  std::vector<coeff_t> rep;
  while (value) {
    rep.push_back(value % spec->p);
    value /= spec->p;
  }
  return FieldElement(spec, std::move(rep));
}

void FieldElement::check_same(const FieldElement& o) const {
  if (!same_spec(spec_, o.spec_)) throw StructureError("field elements live in different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same(o);
  std::vector<coeff_t> out = rep_;
  if (out.size() < o.rep_.size()) out.resize(o.rep_.size(), 0);
  for (std::size_t i = 0; i < o.rep_.size(); ++i) out[i] = (out[i] + o.rep_[i]) % spec_->p;
  strip(out);
  FieldElement r;
  r.spec_ = spec_;
  r.rep_ = std::move(out);
  return r;
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same(o);
  FieldElement r;
  r.spec_ = spec_;
  r.rep_ = raw_sub(rep_, o.rep_, spec_->p);
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r;
  r.spec_ = spec_;
  r.rep_ = raw_sub({}, rep_, spec_->p);
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same(o);
  auto prod = raw_mul(rep_, o.rep_, spec_->p);
  if (spec_->n > 1 && prod.size() > spec_->n) prod = raw_rem_monic(std::move(prod), spec_->modulus, spec_->p);
  FieldElement r;
  r.spec_ = spec_;
  r.rep_ = std::move(prod);
  return r;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DomainError("division by zero in " + std::string("GF(") + std::to_string(spec_->p) + (spec_->n > 1 ? "^" + std::to_string(spec_->n) : "") + ")");
  if (spec_->n == 1) {
    FieldElement r;
    r.spec_ = spec_;
    r.rep_ = {mod_inverse(rep_[0], spec_->p)};
    return r;
  }
  auto ext = raw_ext_gcd(rep_, spec_->modulus, spec_->p);
  // g is a nonzero constant; s/g is the inverse mod modulus
  coeff_t ginv = mod_inverse(ext.g.at(0), spec_->p);
  for (auto& c : ext.s) c = (c * ginv) % spec_->p;
  auto rep = raw_rem_monic(std::move(ext.s), spec_->modulus, spec_->p);
  FieldElement r;
  r.spec_ = spec_;
  r.rep_ = std::move(rep);
  return r;
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same(o);
  return *this * o.inverse();
}

FieldElement FieldElement::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  FieldElement acc = FieldElement::one(spec_);
  FieldElement base = *this;
  std::uint64_t e = static_cast<std::uint64_t>(k);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool FieldElement::operator==(const FieldElement& o) const {
  return same_spec(spec_, o.spec_) && rep_ == o.rep_;
}

std::uint64_t FieldElement::value() const {
  std::uint64_t v = 0;
  for (std::size_t i = rep_.size(); i-- > 0;) v = v * spec_->p + rep_[i];
  return v;
}

std::string FieldElement::to_string() const {
  if (rep_.empty()) return "0";
  if (spec_->n == 1 || rep_.size() == 1) return std::to_string(rep_.empty() ? 0 : rep_[0]);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = rep_.size(); i-- > 0;) {
    if (rep_[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << rep_[i];
    } else {
      if (rep_[i] != 1) os << rep_[i] << "*";
      os << spec_->var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(FieldSpecPtr spec, std::vector<FieldElement> coeffs)
    : spec_(std::move(spec)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (!same_spec(c.spec(), spec_)) throw StructureError("polynomial coefficients live in different fields");
  normalize();
}

Polynomial Polynomial::constant(const FieldElement& c) {
  Polynomial f(c.spec());
  if (!c.is_zero()) f.coeffs_ = {c};
  return f;
}

Polynomial Polynomial::from_ints(const FieldSpecPtr& spec, const std::vector<std::int64_t>& cs) {
  std::vector<FieldElement> v;
  v.reserve(cs.size());
  for (auto c : cs) v.push_back(FieldElement::from_int(spec, c));
  return Polynomial(spec, std::move(v));
}

Polynomial Polynomial::monomial(const FieldElement& c, std::size_t k) {
  Polynomial f(c.spec());
  if (c.is_zero()) return f;
  f.coeffs_.assign(k + 1, FieldElement::zero(c.spec()));
  f.coeffs_[k] = c;
  return f;
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool Polynomial::is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

FieldElement Polynomial::coeff(std::size_t i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return FieldElement::zero(spec_);
}

FieldElement Polynomial::leading() const {
  if (coeffs_.empty()) return FieldElement::zero(spec_);
  return coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (!same_spec(spec_, o.spec_)) throw StructureError("polynomials over different fields");
  Polynomial r(spec_);
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), FieldElement::zero(spec_));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeff(i) + o.coeff(i);
  r.normalize();
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial r(spec_);
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (!same_spec(spec_, o.spec_)) throw StructureError("polynomials over different fields");
  if (is_zero() || o.is_zero()) return Polynomial(spec_);
  Polynomial r(spec_);
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, FieldElement::zero(spec_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] = r.coeffs_[i + j] + coeffs_[i] * o.coeffs_[j];
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::operator*(const FieldElement& c) const {
  Polynomial r(spec_);
  if (c.is_zero()) return r;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& a : coeffs_) r.coeffs_.push_back(a * c);
  r.normalize();
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return same_spec(spec_, o.spec_) && coeffs_ == o.coeffs_;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  if (degree() < d.degree()) return {Polynomial(spec_), *this};
  FieldElement inv_lead = d.leading().inverse();
  std::vector<FieldElement> rem = coeffs_;
  const std::size_t dd = d.coeffs_.size() - 1;
  std::vector<FieldElement> quo(coeffs_.size() - dd, FieldElement::zero(spec_));
  for (std::size_t i = rem.size(); i-- > dd;) {
    FieldElement c = rem[i] * inv_lead;
    if (!c.is_zero()) {
      quo[i - dd] = c;
      for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] = rem[i - dd + j] - c * d.coeffs_[j];
    }
  }
  Polynomial q(spec_), r(spec_);
  q.coeffs_ = std::move(quo);
  q.normalize();
  r.coeffs_ = std::move(rem);
  r.normalize();
  return {q, r};
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw DomainError("cannot normalize the zero polynomial");
  return *this * leading().inverse();
}

Polynomial Polynomial::derivative() const {
  Polynomial r(spec_);
  if (coeffs_.size() <= 1) return r;
  r.coeffs_.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    r.coeffs_.push_back(coeffs_[i] * FieldElement::from_int(spec_, static_cast<std::int64_t>(i)));
  r.normalize();
  return r;
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial acc = Polynomial::constant(FieldElement::one(spec_));
  Polynomial base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  return acc;
}

FieldElement Polynomial::evaluate(const FieldElement& x) const {
  FieldElement acc = FieldElement::zero(spec_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Polynomial Polynomial::shift(const FieldElement& a) const {
  // Horner in (t + a)
  Polynomial t_plus_a = Polynomial(spec_, {a, FieldElement::one(spec_)});
  Polynomial acc(spec_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * t_plus_a + Polynomial::constant(coeffs_[i]);
  return acc;
}

bool Polynomial::less(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    std::uint64_t va = a.coeffs_[i].value(), vb = b.coeffs_[i].value();
    if (va != vb) return va < vb;
  }
  return false;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const FieldElement& c = coeffs_[i];
    if (c.is_zero()) continue;
    if (!first) os << "+";
    first = false;
    std::string cs = c.to_string();
    if (i == 0) {
      os << cs;
    } else {
      // multi-term coefficients need parentheses before '*'
      if (!c.is_one()) os << (cs.find('+') != std::string::npos ? "(" + cs + ")" : cs) << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial f = a, g = b;
  while (!g.is_zero()) {
    Polynomial r = f % g;
    f = std::move(g);
    g = std::move(r);
  }
  if (f.is_zero()) return f;
  return f.monic();
}

ExtGcd ext_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(FieldElement::one(a.spec())), s1(a.spec());
  Polynomial t0(a.spec()), t1 = Polynomial::constant(FieldElement::one(a.spec()));
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    Polynomial s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (!r0.is_zero()) {
    FieldElement inv = r0.leading().inverse();
    r0 = r0 * inv;
    s0 = s0 * inv;
    t0 = t0 * inv;
  }
  return {r0, s0, t0};
}

Polynomial pow_mod(const Polynomial& base, std::uint64_t e, const Polynomial& m) {
  Polynomial acc = Polynomial::constant(FieldElement::one(base.spec()));
  Polynomial b = base % m;
  while (e) {
    if (e & 1) acc = (acc * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return acc;
}

FieldElement resultant(const Polynomial& f0, const Polynomial& g0) {
  const FieldSpecPtr& spec = f0.spec();
  if (f0.is_zero() || g0.is_zero()) return FieldElement::zero(spec);
  Polynomial f = f0, g = g0;
  FieldElement acc = FieldElement::one(spec);
  bool negate = false;
  while (g.degree() > 0) {
    Polynomial r = f % g;
    if (r.is_zero()) return FieldElement::zero(spec);
    // Res(f,g) = (-1)^(deg f * deg g) * lc(g)^(deg f - deg r) * Res(g, r)
    if ((f.degree() & 1) && (g.degree() & 1)) negate = !negate;
    acc = acc * g.leading().pow(f.degree() - r.degree());
    f = std::move(g);
    g = std::move(r);
  }
  // g is a nonzero constant now
  acc = acc * g.leading().pow(f.degree());
  if (negate) acc = -acc;
  return acc;
}

}  // namespace adelic
