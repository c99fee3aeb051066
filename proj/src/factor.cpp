#include "adelic/factor.hpp"

#include <algorithm>
#include <map>

namespace adelic {

namespace {

// p-th root of a field element: c -> c^(p^(n-1)), the inverse of Frobenius.
FieldElement pth_root(const FieldElement& c) {
  const auto& s = c.spec();
  std::int64_t e = 1;
  for (std::uint32_t i = 0; i + 1 < s->n; ++i) e *= static_cast<std::int64_t>(s->p);
  return c.pow(e);
}

// For f with f' == 0, i.e. f(t) = g(t^p), recover g.
Polynomial pth_root_poly(const Polynomial& f) {
  const auto& spec = f.spec();
  std::vector<FieldElement> out;
  for (std::size_t i = 0; i * spec->p <= static_cast<std::size_t>(f.degree()); ++i)
    out.push_back(pth_root(f.coeff(i * spec->p)));
  return Polynomial(spec, std::move(out));
}

// Squarefree decomposition (Yun's algorithm adapted to characteristic p).
// Returns pairs (squarefree part, multiplicity).
std::vector<std::pair<Polynomial, std::uint32_t>> squarefree_decomposition(const Polynomial& f0) {
  std::vector<std::pair<Polynomial, std::uint32_t>> out;
  const coeff_t p = f0.spec()->p;

  // recursive peel: handles the f' == 0 case by taking p-th roots
  struct Rec {
    coeff_t p;
    std::vector<std::pair<Polynomial, std::uint32_t>>& out;
    void run(const Polynomial& f, std::uint32_t mult) {
      if (f.degree() <= 0) return;
      Polynomial d = f.derivative();
      if (d.is_zero()) {
        run(pth_root_poly(f), mult * static_cast<std::uint32_t>(p));
        return;
      }
      Polynomial c = gcd(f, d);   // contains each factor with multiplicity m-1 (p coprime part)
      Polynomial w = f / c;       // product of squarefree factors with p-coprime multiplicity
      std::uint32_t i = 1;
      while (w.degree() > 0) {
        Polynomial y = gcd(w, c);
        Polynomial piece = w / y;
        if (piece.degree() > 0) out.emplace_back(piece.monic(), mult * i);
        w = std::move(y);
        c = c / w;
        ++i;
      }
      if (c.degree() > 0) run(c, mult);  // leftover: factors with multiplicity divisible by p
    }
  } rec{p, out};
  rec.run(f0.monic(), 1);
  return out;
}

// Distinct-degree decomposition of a squarefree monic polynomial:
// list of (product of irreducible factors of degree d, d).
std::vector<std::pair<Polynomial, std::uint32_t>> distinct_degree(const Polynomial& f) {
  std::vector<std::pair<Polynomial, std::uint32_t>> out;
  const auto& spec = f.spec();
  const std::uint64_t q = spec->order();
  Polynomial rem = f;
  Polynomial t = Polynomial::monomial(FieldElement::one(spec), 1);
  Polynomial h = t;  // h = t^(q^d) mod rem, updated incrementally
  std::uint32_t d = 0;
  while (rem.degree() > 0) {
    ++d;
    if (2 * static_cast<std::int64_t>(d) > rem.degree()) {
      out.emplace_back(rem, static_cast<std::uint32_t>(rem.degree()));
      break;
    }
    h = pow_mod(h, q, rem);
    Polynomial g = gcd(h - t, rem);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rem = rem / g;
      h = h % rem;
    }
  }
  return out;
}

// Cantor-Zassenhaus equal-degree splitting: f squarefree monic, all
// irreducible factors of degree d.
void equal_degree(const Polynomial& f, std::uint32_t d, std::mt19937_64& rng,
                  std::vector<Polynomial>& out) {
  if (f.degree() == static_cast<std::int64_t>(d)) {
    out.push_back(f);
    return;
  }
  const auto& spec = f.spec();
  const std::uint64_t q = spec->order();
  std::uniform_int_distribution<std::uint64_t> dist(0, spec->p - 1);
  while (true) {
    // random polynomial of degree < deg f
    std::vector<FieldElement> cs;
    for (std::int64_t i = 0; i < f.degree(); ++i) {
      std::vector<coeff_t> rep;
      for (std::uint32_t j = 0; j < spec->n; ++j) rep.push_back(dist(rng));
      cs.emplace_back(spec, std::move(rep));
    }
    Polynomial r(spec, std::move(cs));
    if (r.degree() < 1) continue;
    Polynomial g = gcd(r, f);
    if (g.degree() == 0) {
      if (spec->p == 2) {
        // absolute trace to GF(2): r + r^2 + r^4 + ...
        Polynomial acc = r % f, term = r % f;
        for (std::uint32_t i = 1; i < d * spec->n; ++i) {
          term = (term * term) % f;
          acc = (acc + term) % f;
        }
        g = gcd(acc, f);
      } else {
        // r^((q^d-1)/2) = (r^(1+q+...+q^(d-1)))^((q-1)/2); every partial
        // exponent fits in 64 bits regardless of d
        Polynomial v = r % f, prod = r % f;
        for (std::uint32_t i = 1; i < d; ++i) {
          v = pow_mod(v, q, f);
          prod = (prod * v) % f;
        }
        Polynomial s = pow_mod(prod, (q - 1) / 2, f);
        g = gcd(s - Polynomial::constant(FieldElement::one(spec)), f);
      }
    }
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g.monic(), d, rng, out);
      equal_degree((f / g).monic(), d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization factor(const Polynomial& f, std::uint64_t seed) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  Factorization result;
  result.unit = f.leading();
  if (f.degree() == 0) return result;
  std::mt19937_64 rng(seed);
  std::map<std::vector<std::uint64_t>, std::pair<Polynomial, std::uint32_t>> collected;
  for (const auto& [sqfree, mult] : squarefree_decomposition(f)) {
    for (const auto& [prod, d] : distinct_degree(sqfree)) {
      std::vector<Polynomial> irreducibles;
      equal_degree(prod, d, rng, irreducibles);
      for (auto& irr : irreducibles) {
        // key: degree then coefficient values from the top, for sorted output
        std::vector<std::uint64_t> key{static_cast<std::uint64_t>(irr.degree())};
        for (std::size_t i = irr.coeffs().size(); i-- > 0;) key.push_back(irr.coeffs()[i].value());
        auto it = collected.find(key);
        if (it == collected.end())
          collected.emplace(std::move(key), std::make_pair(irr, mult));
        else
          it->second.second += mult;
      }
    }
  }
  for (auto& [key, term] : collected)
    result.terms.push_back({term.first, term.second});
  return result;
}

bool is_irreducible(const Polynomial& f) {
  if (f.degree() <= 0) return false;
  if (f.degree() == 1) return true;
  const auto& spec = f.spec();
  const std::uint64_t q = spec->order();
  const auto d = static_cast<std::uint32_t>(f.degree());
  Polynomial t = Polynomial::monomial(FieldElement::one(spec), 1);
  // t^(q^d) == t mod f, and t^(q^(d/r)) - t coprime to f for prime r | d
  Polynomial h = t;
  std::vector<Polynomial> powers;  // h_i = t^(q^i) mod f, i = 1..d
  for (std::uint32_t i = 1; i <= d; ++i) {
    h = pow_mod(h, q, f);
    powers.push_back(h);
  }
  if (!(powers.back() % f == t % f)) return false;
  for (std::uint32_t r = 2; r <= d; ++r) {
    if (d % r != 0) continue;
    bool r_prime = true;
    for (std::uint32_t k = 2; k * k <= r; ++k)
      if (r % k == 0) r_prime = false;
    if (!r_prime) continue;
    if (gcd(powers[d / r - 1] - t, f).degree() != 0) return false;
  }
  return true;
}

std::vector<coeff_t> canonical_modulus(coeff_t p, std::uint32_t n) {
  auto base = FieldSpec::prime_field(p);
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) count *= p;
  for (std::uint64_t v = 0; v < count; ++v) {
    std::vector<coeff_t> cs(n + 1, 0);
    cs[n] = 1;
    std::uint64_t w = v;
    for (std::uint32_t i = 0; i < n; ++i) {  // v's low digit is the low coefficient
      cs[i] = w % p;
      w /= p;
    }
    std::vector<FieldElement> fe;
    for (auto c : cs) fe.push_back(FieldElement::from_int(base, static_cast<std::int64_t>(c)));
    if (is_irreducible(Polynomial(base, fe))) return cs;
  }
  throw InternalError("no irreducible polynomial found");  // unreachable
}

FieldElement norm_via_resultant(const Polynomial& h, const Polynomial& pi) {
  if (pi.degree() < 1 || !pi.leading().is_one()) throw StructureError("norm requires a monic modulus");
  if ((h % pi).is_zero()) throw DomainError("norm of zero: argument divisible by the modulus");
  return resultant(pi, h);
}

std::optional<FieldElement> sqrt(const FieldElement& a) {
  const auto& spec = a.spec();
  if (a.is_zero()) return a;
  if (spec->p == 2) {
    // squaring is bijective; sqrt = a^(q/2) = a^(2^(n-1))
    return a.pow(static_cast<std::int64_t>(spec->order() / 2));
  }
  const std::uint64_t q = spec->order();
  if (!a.pow(static_cast<std::int64_t>((q - 1) / 2)).is_one()) return std::nullopt;
  // factor t^2 - a; fine at this scale
  Polynomial f(spec, {-a, FieldElement::zero(spec), FieldElement::one(spec)});
  auto roots = roots_in_field(f);
  if (roots.empty()) return std::nullopt;
  return roots.front();
}

std::vector<FieldElement> roots_in_field(const Polynomial& f, std::uint64_t seed) {
  std::vector<FieldElement> out;
  for (const auto& term : factor(f, seed).terms)
    if (term.factor.degree() == 1) out.push_back(-term.factor.coeff(0));
  std::sort(out.begin(), out.end(),
            [](const FieldElement& x, const FieldElement& y) { return x.value() < y.value(); });
  return out;
}

FieldEmbedding::FieldEmbedding(FieldSpecPtr from, FieldSpecPtr to)
    : from_(std::move(from)), to_(std::move(to)), gen_image_(FieldElement::zero(to_)) {
  if (from_->p != to_->p) throw StructureError("embedding requires equal characteristic");
  if (to_->n % from_->n != 0) throw StructureError("no embedding: target degree not a multiple");
  if (from_->n == 1) return;  // prime subfield embeds by constants
  // deterministic image: smallest root of the source modulus in the target
  std::vector<FieldElement> cs;
  for (auto c : from_->modulus) cs.push_back(FieldElement::from_int(to_, static_cast<std::int64_t>(c)));
  auto rs = roots_in_field(Polynomial(to_, cs));
  if (rs.empty()) throw InternalError("source modulus has no root in target field");
  gen_image_ = rs.front();
}

FieldElement FieldEmbedding::operator()(const FieldElement& x) const {
  if (!same_spec(x.spec(), from_)) throw StructureError("embedding applied to element of a different field");
  FieldElement acc = FieldElement::zero(to_);
  for (std::size_t i = x.rep().size(); i-- > 0;)
    acc = acc * gen_image_ + FieldElement::from_int(to_, static_cast<std::int64_t>(x.rep()[i]));
  return acc;
}

Polynomial FieldEmbedding::map_poly(const Polynomial& f) const {
  std::vector<FieldElement> cs;
  cs.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) cs.push_back((*this)(c));
  return Polynomial(to_, std::move(cs));
}

}  // namespace adelic
