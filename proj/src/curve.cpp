#include "adelic/curve.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace adelic {

namespace {

// multiplicity of the root x0 in a nonzero polynomial g
std::int64_t root_multiplicity(const Polynomial& g, const FieldElement& x0) {
  Polynomial sh = g.shift(x0);  // g(t + x0); multiplicity = lowest nonzero coefficient index
  for (std::size_t i = 0; i < sh.coeffs().size(); ++i)
    if (!sh.coeffs()[i].is_zero()) return static_cast<std::int64_t>(i);
  throw InternalError("root_multiplicity on zero polynomial");
}

// how many times does (monic) pi divide g; g nonzero
std::int64_t pi_multiplicity(const Polynomial& g, const Polynomial& pi) {
  std::int64_t m = 0;
  Polynomial cur = g;
  while (true) {
    auto [q, r] = cur.divmod(pi);
    if (!r.is_zero()) return m;
    ++m;
    cur = std::move(q);
    if (cur.is_zero()) throw InternalError("pi_multiplicity on zero polynomial");
  }
}

Polynomial divide_out_root(const Polynomial& g, const FieldElement& x0, std::int64_t k) {
  if (k == 0) return g;
  Polynomial lin(g.spec(), {-x0, FieldElement::one(g.spec())});
  Polynomial cur = g;
  for (std::int64_t i = 0; i < k; ++i) cur = cur / lin;
  return cur;
}

// valuation of the numerator pair a + b*y at an affine point
std::int64_t ord_numpair_affine(const Polynomial& a, const Polynomial& b, const CurveModel& curve,
                                const FieldElement& x0, const FieldElement& y0) {
  const std::int64_t INF = std::numeric_limits<std::int64_t>::max();
  std::int64_t ma = a.is_zero() ? INF : root_multiplicity(a, x0);
  std::int64_t mb = b.is_zero() ? INF : root_multiplicity(b, x0);
  if (y0.is_zero()) {
    // ord(x - x0) = 2, ord(y) = 1; the two parts always have distinct parity
    std::int64_t oa = a.is_zero() ? INF : 2 * ma;
    std::int64_t ob = b.is_zero() ? INF : 2 * mb + 1;
    return std::min(oa, ob);
  }
  std::int64_t s = std::min(ma, mb);
  Polynomial ar = divide_out_root(a, x0, a.is_zero() ? 0 : s);
  Polynomial br = divide_out_root(b, x0, b.is_zero() ? 0 : s);
  FieldElement v = ar.evaluate(x0) + br.evaluate(x0) * y0;
  if (!v.is_zero()) return s;
  // conjugate trick: ord(a'+b'y) = mult_x0(a'^2 - b'^2 (x^3+a4x+a6))
  Polynomial n = ar * ar - br * br * curve.rhs_poly();
  return s + root_multiplicity(n, x0);
}

// valuation of a + b*y at the origin; ord(x) = -2, ord(y) = -3
std::int64_t ord_numpair_origin(const Polynomial& a, const Polynomial& b) {
  const std::int64_t INF = std::numeric_limits<std::int64_t>::max();
  std::int64_t oa = a.is_zero() ? INF : -2 * a.degree();
  std::int64_t ob = b.is_zero() ? INF : -(2 * b.degree() + 3);
  return std::min(oa, ob);
}

void check_place_on_curve(const CurveFunction& f, const Place& x) {
  const bool line = f.curve().kind() == CurveKind::ProjectiveLine;
  const bool line_place = x.kind() == Place::Kind::LineFinite || x.kind() == Place::Kind::LineInfinity;
  if (line != line_place) throw StructureError("place does not belong to this curve kind");
  if (!same_spec(f.curve().base(), x.base())) throw StructureError("place and curve have different base fields");
}

}  // namespace

// ---------------------------------------------------------------------------
// CurveModel

CurveModel CurveModel::projective_line(FieldSpecPtr base) {
  CurveModel c;
  c.kind_ = CurveKind::ProjectiveLine;
  c.a4_ = FieldElement::zero(base);
  c.a6_ = FieldElement::zero(base);
  c.base_ = std::move(base);
  return c;
}

CurveModel CurveModel::elliptic(FieldSpecPtr base, FieldElement a4, FieldElement a6) {
  if (base->p == 2 || base->p == 3)
    throw StructureError("elliptic model requires characteristic not in {2,3}");
  if (!same_spec(a4.spec(), base) || !same_spec(a6.spec(), base))
    throw StructureError("curve coefficients must live in the base field");
  // discriminant -16(4 a4^3 + 27 a6^2)
  auto four = FieldElement::from_int(base, 4);
  auto twenty7 = FieldElement::from_int(base, 27);
  FieldElement disc = -(FieldElement::from_int(base, 16) * (four * a4.pow(3) + twenty7 * a6 * a6));
  if (disc.is_zero()) throw StructureError("singular Weierstrass equation (zero discriminant)");
  CurveModel c;
  c.kind_ = CurveKind::EllipticWeierstrass;
  c.base_ = std::move(base);
  c.a4_ = std::move(a4);
  c.a6_ = std::move(a6);
  return c;
}

Polynomial CurveModel::rhs_poly() const {
  return Polynomial(base_, {a6_, a4_, FieldElement::zero(base_), FieldElement::one(base_)});
}

CurveModel CurveModel::base_change(std::uint32_t k) const {
  if (k == 0) throw StructureError("base change degree must be >= 1");
  auto big = FieldSpec::extension(base_->p, base_->n * k);
  FieldEmbedding emb(base_, big);
  if (kind_ == CurveKind::ProjectiveLine) return projective_line(big);
  return elliptic(big, emb(a4_), emb(a6_));
}

bool CurveModel::operator==(const CurveModel& o) const {
  return kind_ == o.kind_ && same_spec(base_, o.base_) && a4_ == o.a4_ && a6_ == o.a6_;
}

std::string CurveModel::to_string() const {
  if (kind_ == CurveKind::ProjectiveLine) return "P1/" + field_spec_to_string(base_);
  return "E/" + field_spec_to_string(base_) + ":a4=" + a4_.to_string() + ",a6=" + a6_.to_string();
}

// ---------------------------------------------------------------------------
// Place

Place Place::line_finite(Polynomial pi) {
  if (pi.degree() < 1 || !pi.leading().is_one() || !is_irreducible(pi))
    throw StructureError("a finite place of the line is a monic irreducible polynomial");
  Place x;
  x.kind_ = Kind::LineFinite;
  x.base_ = pi.spec();
  x.pi_ = std::move(pi);
  x.x0_ = FieldElement::zero(x.base_);
  x.y0_ = x.x0_;
  return x;
}

Place Place::line_infinity(FieldSpecPtr base) {
  Place x;
  x.kind_ = Kind::LineInfinity;
  x.x0_ = FieldElement::zero(base);
  x.y0_ = x.x0_;
  x.base_ = std::move(base);
  return x;
}

Place Place::ec_affine(const CurveModel& curve, FieldElement x0, FieldElement y0) {
  if (!curve.is_elliptic()) throw StructureError("affine point place requires an elliptic curve");
  if (!same_spec(x0.spec(), curve.base()) || !same_spec(y0.spec(), curve.base()))
    throw StructureError("point coordinates must live in the base field");
  if (y0 * y0 != curve.rhs_poly().evaluate(x0))
    throw StructureError("point (" + x0.to_string() + "," + y0.to_string() + ") is not on the curve");
  Place x;
  x.kind_ = Kind::EcAffine;
  x.base_ = curve.base();
  x.x0_ = std::move(x0);
  x.y0_ = std::move(y0);
  return x;
}

Place Place::ec_origin(FieldSpecPtr base) {
  Place x;
  x.kind_ = Kind::EcOrigin;
  x.x0_ = FieldElement::zero(base);
  x.y0_ = x.x0_;
  x.base_ = std::move(base);
  return x;
}

std::int64_t Place::degree() const {
  return kind_ == Kind::LineFinite ? pi_.degree() : 1;
}

FieldSpecPtr Place::residue_spec() const {
  if (kind_ != Kind::LineFinite || pi_.degree() == 1) return base_;
  const auto d = static_cast<std::uint32_t>(pi_.degree());
  if (base_->n == 1) {
    std::vector<coeff_t> mod;
    for (const auto& c : pi_.coeffs()) mod.push_back(c.value());
    return FieldSpec::extension(base_->p, d, std::move(mod), "t");
  }
  return FieldSpec::extension(base_->p, base_->n * d);
}

std::string Place::to_string() const {
  switch (kind_) {
    case Kind::LineFinite:
      return "(" + pi_.to_string("t") + ")";
    case Kind::LineInfinity:
      return "inf";
    case Kind::EcAffine:
      return "(" + x0_.to_string() + "," + y0_.to_string() + ")";
    case Kind::EcOrigin:
      return "O";
  }
  return "";
}

bool Place::operator==(const Place& o) const {
  if (kind_ != o.kind_ || !same_spec(base_, o.base_)) return false;
  switch (kind_) {
    case Kind::LineFinite:
      return pi_ == o.pi_;
    case Kind::EcAffine:
      return x0_ == o.x0_ && y0_ == o.y0_;
    default:
      return true;
  }
}

// ---------------------------------------------------------------------------
// Divisor

Divisor Divisor::single(const Place& x, std::int64_t c) {
  Divisor d;
  d.add(x, c);
  return d;
}

void Divisor::add(const Place& x, std::int64_t c) {
  if (c == 0) return;
  auto it = terms_.find(x);
  if (it == terms_.end()) {
    terms_.emplace(x, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t Divisor::coeff(const Place& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t Divisor::degree() const {
  std::int64_t d = 0;
  for (const auto& [x, c] : terms_) d += x.degree() * c;
  return d;
}

std::vector<Place> Divisor::support() const {
  std::vector<Place> out;
  out.reserve(terms_.size());
  for (const auto& [x, c] : terms_) out.push_back(x);
  return out;
}

bool Divisor::is_effective() const {
  for (const auto& [x, c] : terms_)
    if (c < 0) return false;
  return true;
}

Divisor Divisor::operator+(const Divisor& o) const {
  Divisor d = *this;
  for (const auto& [x, c] : o.terms_) d.add(x, c);
  return d;
}

Divisor Divisor::operator-(const Divisor& o) const { return *this + (o * -1); }

Divisor Divisor::operator*(std::int64_t k) const {
  Divisor d;
  if (k == 0) return d;
  for (const auto& [x, c] : terms_) d.add(x, c * k);
  return d;
}

std::string Divisor::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [x, c] : terms_) {
    if (c < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    first = false;
    // the divisor grammar parenthesizes the infinity place
    std::string xs = x.to_string();
    if (x.kind() == Place::Kind::LineInfinity) xs = "(" + xs + ")";
    os << (c < 0 ? -c : c) << "*" << xs;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// CurveFunction

void CurveFunction::canonicalize() {
  if (curve_.kind() == CurveKind::ProjectiveLine) {
    if (num_.is_zero()) throw StructureError("curve functions must be nonzero");
    if (den_.is_zero()) throw StructureError("zero denominator");
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    FieldElement lc = den_.leading();
    if (!lc.is_one()) {
      FieldElement inv = lc.inverse();
      num_ = num_ * inv;
      den_ = den_ * inv;
    }
  } else {
    if (num_.is_zero() && b_.is_zero()) throw StructureError("curve functions must be nonzero");
    if (den_.is_zero()) throw StructureError("zero denominator");
    Polynomial g = gcd(gcd(num_, b_), den_);
    if (g.degree() > 0) {
      if (!num_.is_zero()) num_ = num_ / g;
      if (!b_.is_zero()) b_ = b_ / g;
      den_ = den_ / g;
    }
    FieldElement lc = den_.leading();
    if (!lc.is_one()) {
      FieldElement inv = lc.inverse();
      num_ = num_ * inv;
      b_ = b_ * inv;
      den_ = den_ * inv;
    }
  }
}

CurveFunction CurveFunction::line(const CurveModel& curve, Polynomial num, Polynomial den) {
  if (curve.kind() != CurveKind::ProjectiveLine) throw StructureError("line function on a non-line curve");
  if (!same_spec(num.spec(), curve.base()) || !same_spec(den.spec(), curve.base()))
    throw StructureError("function coefficients must live in the base field");
  CurveFunction f;
  f.curve_ = curve;
  f.num_ = std::move(num);
  f.den_ = std::move(den);
  f.b_ = Polynomial(curve.base());
  f.canonicalize();
  return f;
}

CurveFunction CurveFunction::elliptic(const CurveModel& curve, Polynomial a, Polynomial b, Polynomial c) {
  if (!curve.is_elliptic()) throw StructureError("elliptic function on a non-elliptic curve");
  for (const Polynomial* g : {&a, &b, &c})
    if (!same_spec(g->spec(), curve.base()))
      throw StructureError("function coefficients must live in the base field");
  CurveFunction f;
  f.curve_ = curve;
  f.num_ = std::move(a);
  f.b_ = std::move(b);
  f.den_ = std::move(c);
  f.canonicalize();
  return f;
}

CurveFunction CurveFunction::constant(const CurveModel& curve, const FieldElement& value) {
  if (value.is_zero()) throw StructureError("curve functions must be nonzero");
  Polynomial num = Polynomial::constant(value);
  Polynomial one = Polynomial::constant(FieldElement::one(curve.base()));
  if (curve.kind() == CurveKind::ProjectiveLine) return line(curve, num, one);
  return elliptic(curve, num, Polynomial(curve.base()), one);
}

CurveFunction CurveFunction::one(const CurveModel& curve) {
  return constant(curve, FieldElement::one(curve.base()));
}

bool CurveFunction::is_one() const {
  return num_.is_one() && den_.is_one() && b_.is_zero();
}

std::optional<FieldElement> CurveFunction::as_constant() const {
  if (num_.degree() <= 0 && den_.is_one() && b_.is_zero()) return num_.coeff(0);
  return std::nullopt;
}

CurveFunction CurveFunction::operator*(const CurveFunction& o) const {
  if (curve_ != o.curve_) throw StructureError("functions on different curves");
  CurveFunction f;
  f.curve_ = curve_;
  if (curve_.kind() == CurveKind::ProjectiveLine) {
    f.num_ = num_ * o.num_;
    f.den_ = den_ * o.den_;
    f.b_ = b_;
  } else {
    f.num_ = num_ * o.num_ + b_ * o.b_ * curve_.rhs_poly();
    f.b_ = num_ * o.b_ + b_ * o.num_;
    f.den_ = den_ * o.den_;
  }
  f.canonicalize();
  return f;
}

CurveFunction CurveFunction::operator*(const FieldElement& c) const {
  if (c.is_zero()) throw StructureError("scaling a curve function by zero");
  CurveFunction f = *this;
  f.num_ = f.num_ * c;
  f.b_ = f.b_ * c;
  f.canonicalize();
  return f;
}

CurveFunction CurveFunction::inverse() const {
  CurveFunction f;
  f.curve_ = curve_;
  if (curve_.kind() == CurveKind::ProjectiveLine) {
    f.num_ = den_;
    f.den_ = num_;
    f.b_ = b_;
  } else {
    // 1/((a+by)/c) = c(a-by)/(a^2-b^2 phi)
    f.num_ = den_ * num_;
    f.b_ = -(den_ * b_);
    f.den_ = num_ * num_ - b_ * b_ * curve_.rhs_poly();
  }
  f.canonicalize();
  return f;
}

CurveFunction CurveFunction::pow(std::int64_t k) const {
  if (k < 0) return inverse().pow(-k);
  CurveFunction acc = one(curve_);
  CurveFunction base = *this;
  auto e = static_cast<std::uint64_t>(k);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool CurveFunction::operator==(const CurveFunction& o) const {
  return curve_ == o.curve_ && num_ == o.num_ && den_ == o.den_ && b_ == o.b_;
}

std::string CurveFunction::to_string() const {
  if (curve_.kind() == CurveKind::ProjectiveLine) {
    if (den_.is_one()) return num_.to_string("t");
    return "(" + num_.to_string("t") + ")/(" + den_.to_string("t") + ")";
  }
  std::string numstr;
  if (b_.is_zero()) {
    numstr = num_.to_string("x");
  } else {
    std::string ystr;
    std::size_t b_terms = 0;
    for (const auto& cc : b_.coeffs())
      if (!cc.is_zero()) ++b_terms;
    if (b_.is_one()) {
      ystr = "y";
    } else if (b_terms == 1) {
      ystr = b_.to_string("x") + "*y";
    } else {
      ystr = "(" + b_.to_string("x") + ")*y";
    }
    numstr = num_.is_zero() ? ystr : num_.to_string("x") + "+" + ystr;
  }
  if (den_.is_one()) return numstr;
  return "(" + numstr + ")/(" + den_.to_string("x") + ")";
}

// ---------------------------------------------------------------------------
// valuations, evaluation, principal divisors

std::int64_t order_at(const CurveFunction& f, const Place& x) {
  check_place_on_curve(f, x);
  switch (x.kind()) {
    case Place::Kind::LineFinite:
      return pi_multiplicity(f.num(), x.pi()) - pi_multiplicity(f.den(), x.pi());
    case Place::Kind::LineInfinity:
      return f.den().degree() - f.num().degree();
    case Place::Kind::EcAffine: {
      std::int64_t e = x.y0().is_zero() ? 2 : 1;
      std::int64_t oc = f.ec_c().degree() == 0 ? 0 : e * root_multiplicity(f.ec_c(), x.x0());
      return ord_numpair_affine(f.ec_a(), f.ec_b(), f.curve(), x.x0(), x.y0()) - oc;
    }
    case Place::Kind::EcOrigin:
      return ord_numpair_origin(f.ec_a(), f.ec_b()) + 2 * f.ec_c().degree();
  }
  throw InternalError("unhandled place kind");
}

FieldElement evaluate_at(const CurveFunction& f, const Place& x) {
  check_place_on_curve(f, x);
  std::int64_t ord = order_at(f, x);
  if (ord != 0)
    throw DomainError("cannot evaluate at " + x.to_string() + ": the function has order " +
                      std::to_string(ord) + " there");
  switch (x.kind()) {
    case Place::Kind::LineFinite: {
      const Polynomial& pi = x.pi();
      if (pi.degree() == 1) {
        FieldElement r = -pi.coeff(0);
        return f.num().evaluate(r) / f.den().evaluate(r);
      }
      // residue class num/den mod pi
      Polynomial dres = f.den() % pi;
      Polynomial h = (f.num() * ext_gcd(dres, pi).s) % pi;
      auto rspec = x.residue_spec();
      if (x.base()->n == 1) {
        std::vector<coeff_t> rep;
        for (const auto& c : h.coeffs()) rep.push_back(c.value());
        return FieldElement(rspec, std::move(rep));
      }
      // relative extension over a non-prime base: map through the canonical
      // absolute field GF(p^(n*d)) using the smallest root of pi there
      FieldEmbedding emb(x.base(), rspec);
      auto rts = roots_in_field(emb.map_poly(pi));
      if (rts.empty()) throw InternalError("place polynomial has no root in its residue field");
      FieldElement s = rts.front();
      FieldElement acc = FieldElement::zero(rspec);
      for (std::size_t i = h.coeffs().size(); i-- > 0;) acc = acc * s + emb(h.coeffs()[i]);
      return acc;
    }
    case Place::Kind::LineInfinity:
      return f.num().leading() / f.den().leading();
    case Place::Kind::EcOrigin: {
      // the dominant part is the one with the more negative order
      std::int64_t oa = f.ec_a().is_zero() ? std::numeric_limits<std::int64_t>::max()
                                           : -2 * f.ec_a().degree();
      std::int64_t ob = f.ec_b().is_zero() ? std::numeric_limits<std::int64_t>::max()
                                           : -(2 * f.ec_b().degree() + 3);
      FieldElement lead = oa < ob ? f.ec_a().leading() : f.ec_b().leading();
      return lead / f.ec_c().leading();
    }
    case Place::Kind::EcAffine: {
      const FieldElement& x0 = x.x0();
      const FieldElement& y0 = x.y0();
      const Polynomial &a = f.ec_a(), &b = f.ec_b(), &c = f.ec_c();
      const std::int64_t INF = std::numeric_limits<std::int64_t>::max();
      std::int64_t mc = root_multiplicity(c, x0);
      if (y0.is_zero()) {
        std::int64_t ma = a.is_zero() ? INF : root_multiplicity(a, x0);
        Polynomial ar = divide_out_root(a, x0, ma == INF ? 0 : ma);
        Polynomial cr = divide_out_root(c, x0, mc);
        // total order 0 forces the a-part to dominate and ma == mc
        return ar.evaluate(x0) / cr.evaluate(x0);
      }
      std::int64_t ma = a.is_zero() ? INF : root_multiplicity(a, x0);
      std::int64_t mb = b.is_zero() ? INF : root_multiplicity(b, x0);
      std::int64_t s = std::min(ma, mb);
      Polynomial ar = divide_out_root(a, x0, a.is_zero() ? 0 : s);
      Polynomial br = divide_out_root(b, x0, b.is_zero() ? 0 : s);
      Polynomial cr = divide_out_root(c, x0, mc);
      FieldElement v = ar.evaluate(x0) + br.evaluate(x0) * y0;
      if (!v.is_zero()) return v / cr.evaluate(x0);
      // multiply by the conjugate to clear the cancellation
      Polynomial n = ar * ar - br * br * f.curve().rhs_poly();
      std::int64_t rho = root_multiplicity(n, x0);
      Polynomial nr = divide_out_root(n, x0, rho);
      FieldElement conj = ar.evaluate(x0) - br.evaluate(x0) * y0;
      return nr.evaluate(x0) / (cr.evaluate(x0) * conj);
    }
  }
  throw InternalError("unhandled place kind");
}

Divisor divisor_of(const CurveFunction& f) {
  const CurveModel& curve = f.curve();
  Divisor d;
  if (curve.kind() == CurveKind::ProjectiveLine) {
    for (const auto& term : factor(f.num()).terms)
      d.add(Place::line_finite(term.factor), term.multiplicity);
    for (const auto& term : factor(f.den()).terms)
      d.add(Place::line_finite(term.factor), -static_cast<std::int64_t>(term.multiplicity));
    d.add(Place::line_infinity(curve.base()), f.den().degree() - f.num().degree());
    return d;
  }
  // elliptic: candidate x-coordinates are the rational roots of the
  // conjugate-product numerator and of the denominator
  Polynomial n = f.ec_a() * f.ec_a() - f.ec_b() * f.ec_b() * curve.rhs_poly();
  std::vector<FieldElement> xs;
  if (!n.is_zero())
    for (const auto& r : roots_in_field(n)) xs.push_back(r);
  if (f.ec_c().degree() > 0)
    for (const auto& r : roots_in_field(f.ec_c())) xs.push_back(r);
  std::sort(xs.begin(), xs.end(), [](const FieldElement& u, const FieldElement& v) {
    return u.value() < v.value();
  });
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (const auto& x0 : xs) {
    FieldElement rhs = curve.rhs_poly().evaluate(x0);
    if (rhs.is_zero()) {
      Place p = Place::ec_affine(curve, x0, FieldElement::zero(curve.base()));
      d.add(p, order_at(f, p));
    } else if (auto y0 = sqrt(rhs)) {
      Place p1 = Place::ec_affine(curve, x0, *y0);
      Place p2 = Place::ec_affine(curve, x0, -*y0);
      d.add(p1, order_at(f, p1));
      d.add(p2, order_at(f, p2));
    }
    // non-square rhs: zeros live at a quadratic point; caught by the
    // degree check below
  }
  d.add(Place::ec_origin(curve.base()), order_at(f, Place::ec_origin(curve.base())));
  if (d.degree() != 0)
    throw DomainError(
        "divisor of the function involves non-rational points of the elliptic curve, "
        "which this model does not support");
  return d;
}

CurveFunction uniformizer_at(const Place& x, const CurveModel& curve) {
  const auto& base = curve.base();
  Polynomial one = Polynomial::constant(FieldElement::one(base));
  Polynomial t = Polynomial::monomial(FieldElement::one(base), 1);
  switch (x.kind()) {
    case Place::Kind::LineFinite:
      return CurveFunction::line(curve, x.pi(), one);
    case Place::Kind::LineInfinity:
      return CurveFunction::line(curve, one, t);
    case Place::Kind::EcAffine: {
      if (x.y0().is_zero())
        return CurveFunction::elliptic(curve, Polynomial(base), one, one);  // y
      Polynomial lin(base, {-x.x0(), FieldElement::one(base)});
      return CurveFunction::elliptic(curve, lin, Polynomial(base), one);  // x - x0
    }
    case Place::Kind::EcOrigin:
      // x/y = x*y / (x^3 + a4 x + a6)
      return CurveFunction::elliptic(curve, Polynomial(base), t, curve.rhs_poly());
  }
  throw InternalError("unhandled place kind");
}

Place base_place(const CurveModel& curve) {
  return curve.kind() == CurveKind::ProjectiveLine ? Place::line_infinity(curve.base())
                                                   : Place::ec_origin(curve.base());
}

FieldElement leading_coeff_at_base(const CurveFunction& f) {
  if (f.curve().kind() == CurveKind::ProjectiveLine)
    return f.num().leading() / f.den().leading();
  std::int64_t oa = f.ec_a().is_zero() ? std::numeric_limits<std::int64_t>::max()
                                       : -2 * f.ec_a().degree();
  std::int64_t ob = f.ec_b().is_zero() ? std::numeric_limits<std::int64_t>::max()
                                       : -(2 * f.ec_b().degree() + 3);
  FieldElement lead = oa < ob ? f.ec_a().leading() : f.ec_b().leading();
  return lead / f.ec_c().leading();
}

}  // namespace adelic
