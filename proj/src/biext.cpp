#include "adelic/biext.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace adelic::biext {

namespace {
std::int64_t mod(std::int64_t a, std::int64_t n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}
}  // namespace

FinAbGroup::FinAbGroup(std::vector<std::int64_t> orders) : orders_(std::move(orders)) {
  for (auto o : orders_)
    if (o < 1) throw StructureError("cyclic orders must be >= 1");
}

std::uint64_t FinAbGroup::size() const {
  std::uint64_t s = 1;
  for (auto o : orders_) s *= static_cast<std::uint64_t>(o);
  return s;
}

Elem FinAbGroup::reduce(Elem e) const {
  if (e.size() != orders_.size()) throw StructureError("element rank mismatch");
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = mod(e[i], orders_[i]);
  return e;
}

Elem FinAbGroup::add(const Elem& a, const Elem& b) const {
  Elem r = reduce(a);
  Elem rb = reduce(b);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(r[i] + rb[i], orders_[i]);
  return r;
}

Elem FinAbGroup::neg(const Elem& a) const {
  Elem r = reduce(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(-r[i], orders_[i]);
  return r;
}

Elem FinAbGroup::scale(std::int64_t k, const Elem& a) const {
  Elem r = reduce(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mod(k * r[i], orders_[i]);
  return r;
}

bool FinAbGroup::is_zero(const Elem& a) const {
  for (auto v : reduce(a))
    if (v != 0) return false;
  return true;
}

std::vector<Elem> FinAbGroup::elements() const {
  std::vector<Elem> out;
  Elem cur = zero();
  out.push_back(cur);
  while (true) {
    std::size_t i = 0;
    while (i < cur.size()) {
      if (++cur[i] < orders_[i]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == cur.size()) break;
    out.push_back(cur);
  }
  return out;
}

std::string FinAbGroup::elem_to_string(const Elem& e) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < e.size(); ++i) os << (i ? "," : "") << e[i];
  os << ")";
  return os.str();
}

Subgroup Subgroup::generated(const FinAbGroup& g, const std::vector<Elem>& gens) {
  std::set<Elem> seen;
  seen.insert(g.zero());
  std::vector<Elem> frontier = {g.zero()};
  while (!frontier.empty()) {
    std::vector<Elem> next;
    for (const auto& e : frontier) {
      for (const auto& gen : gens) {
        Elem f = g.add(e, gen);
        if (seen.insert(f).second) next.push_back(f);
      }
    }
    frontier = std::move(next);
  }
  Subgroup s;
  s.elements_.assign(seen.begin(), seen.end());
  return s;
}

bool Subgroup::contains(const Elem& e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

PairingSetup PairingSetup::make(FinAbGroup A, FinAbGroup Ap, std::int64_t n_order,
                                std::vector<std::vector<std::int64_t>> matrix,
                                std::vector<Elem> b_gens, std::vector<Elem> c_gens,
                                std::vector<Elem> bp_gens, std::vector<Elem> cp_gens) {
  if (n_order < 1) throw StructureError("N must be a cyclic group of order >= 1");
  if (matrix.size() != A.rank()) throw StructureError("pairing matrix has wrong row count");
  for (auto& row : matrix) {
    if (row.size() != Ap.rank()) throw StructureError("pairing matrix has wrong column count");
    for (auto& v : row) v = mod(v, n_order);
  }
  // bilinearity on Z/order generators needs order(e_i) * M[i][j] == 0 mod n
  for (std::size_t i = 0; i < A.rank(); ++i)
    for (std::size_t j = 0; j < Ap.rank(); ++j) {
      if (mod(A.orders()[i] * matrix[i][j], n_order) != 0 ||
          mod(Ap.orders()[j] * matrix[i][j], n_order) != 0)
        throw StructureError("pairing matrix is incompatible with the cyclic orders");
    }
  PairingSetup s;
  s.A = std::move(A);
  s.Ap = std::move(Ap);
  s.n_order = n_order;
  s.matrix = std::move(matrix);
  auto check_members = [](const FinAbGroup& g, std::vector<Elem>& gens) {
    for (auto& e : gens) e = g.reduce(e);
  };
  check_members(s.A, b_gens);
  check_members(s.A, c_gens);
  check_members(s.Ap, bp_gens);
  check_members(s.Ap, cp_gens);
  s.b_gens = std::move(b_gens);
  s.c_gens = std::move(c_gens);
  s.bp_gens = std::move(bp_gens);
  s.cp_gens = std::move(cp_gens);
  return s;
}

std::int64_t PairingSetup::pair(const Elem& a, const Elem& ap) const {
  Elem ra = A.reduce(a), rap = Ap.reduce(ap);
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    if (ra[i] == 0) continue;
    for (std::size_t j = 0; j < rap.size(); ++j)
      acc = mod(acc + mod(ra[i] * rap[j], n_order) * matrix[i][j], n_order);
  }
  return acc;
}

bool SetupReport::all_pass() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

std::string SetupReport::to_string() const {
  std::ostringstream os;
  for (const auto& it : items) {
    os << (it.pass ? "PASS " : "FAIL ") << it.condition;
    if (!it.witness.empty()) os << " witness: " << it.witness;
    os << "\n";
  }
  return os.str();
}

SetupReport validate_setup(const PairingSetup& s) {
  SetupReport rep;
  Subgroup B = s.B(), C = s.C(), Bp = s.Bp(), Cp = s.Cp();

  auto pair_check = [&](const std::string& name, const std::vector<Elem>& left,
                        const std::vector<Elem>& right) {
    SetupReport::Item item{name, true, ""};
    for (const auto& a : left) {
      for (const auto& ap : right) {
        if (s.pair(a, ap) != 0) {
          item.pass = false;
          item.witness = FinAbGroup::elem_to_string(a) + " x " + FinAbGroup::elem_to_string(ap);
          break;
        }
      }
      if (!item.pass) break;
    }
    rep.items.push_back(std::move(item));
  };

  pair_check("<B,B'> = 1", B.elements(), Bp.elements());
  pair_check("<C,C'> = 1", C.elements(), Cp.elements());

  std::vector<Elem> b_cap_c;
  for (const auto& e : B.elements())
    if (C.contains(e)) b_cap_c.push_back(e);
  pair_check("<B cap C, A'> = 1", b_cap_c, s.Ap.elements());

  std::vector<Elem> bp_cap_cp;
  for (const auto& e : Bp.elements())
    if (Cp.contains(e)) bp_cap_cp.push_back(e);
  pair_check("<A, B' cap C'> = 1", s.A.elements(), bp_cap_cp);
  return rep;
}

TorsorPoint transport(const TorsorPoint& t, const Elem& b, const Elem& c, const Elem& bp,
                      const Elem& cp, const PairingSetup& s) {
  if (!s.B().contains(s.A.reduce(b))) throw DomainError("b is not in B");
  if (!s.C().contains(s.A.reduce(c))) throw DomainError("c is not in C");
  if (!s.Bp().contains(s.Ap.reduce(bp))) throw DomainError("b' is not in B'");
  if (!s.Cp().contains(s.Ap.reduce(cp))) throw DomainError("c' is not in C'");
  TorsorPoint out;
  out.a = s.A.add(t.a, s.A.add(b, c));
  out.ap = s.Ap.add(t.ap, s.Ap.add(bp, cp));
  // <a',c> + <b',a> + <b',c>, with <x',y> read as pair(y, x')
  std::int64_t shift = s.pair(c, t.ap) + s.pair(t.a, bp) + s.pair(c, bp);
  out.value = mod(t.value + shift, s.n_order);
  return out;
}

std::int64_t quotient_weil_pairing(const Elem& a, const Elem& ap, std::int64_t m,
                                   const PairingSetup& s) {
  if (m < 1) throw DomainError("m must be >= 1");
  Elem target = s.A.scale(m, a);
  Elem targetp = s.Ap.scale(m, ap);
  std::vector<std::pair<Elem, Elem>> decomp, decompp;
  Subgroup B = s.B(), C = s.C(), Bp = s.Bp(), Cp = s.Cp();
  for (const auto& b : B.elements())
    for (const auto& c : C.elements())
      if (s.A.add(b, c) == target) decomp.emplace_back(b, c);
  for (const auto& bp : Bp.elements())
    for (const auto& cp : Cp.elements())
      if (s.Ap.add(bp, cp) == targetp) decompp.emplace_back(bp, cp);
  if (decomp.empty() || decompp.empty())
    throw DomainError("class is not m-torsion in the quotient: no decomposition of the m-th power");
  bool first = true;
  std::int64_t value = 0;
  for (const auto& [b, c] : decomp) {
    for (const auto& [bp, cp] : decompp) {
      // <b',a> - <a',c> with <x',y> read as pair(y, x')
      std::int64_t v = mod(s.pair(a, bp) - s.pair(c, ap), s.n_order);
      if (first) {
        value = v;
        first = false;
      } else if (v != value) {
        throw DomainError("decomposition-dependent value; the setup violates the quotient conditions");
      }
    }
  }
  if (mod(value * m, s.n_order) != 0)
    throw InternalError("quotient Weil pairing value is not m-torsion in N");
  return value;
}

Cocycle::Cocycle(FinAbGroup g, std::int64_t n_order, std::vector<std::vector<std::int64_t>> table)
    : g_(std::move(g)), n_(n_order), table_(std::move(table)) {
  if (n_ < 1) throw StructureError("N must have order >= 1");
  auto elems = g_.elements();
  if (table_.size() != elems.size()) throw StructureError("cocycle table has wrong row count");
  for (auto& row : table_) {
    if (row.size() != elems.size()) throw StructureError("cocycle table has wrong column count");
    for (auto& v : row) v = mod(v, n_);
  }
  // sigma(a,b) + sigma(a+b,c) == sigma(b,c) + sigma(a,b+c) for all triples
  for (const auto& a : elems)
    for (const auto& b : elems)
      for (const auto& c : elems) {
        std::int64_t lhs = mod(sigma(a, b) + sigma(g_.add(a, b), c), n_);
        std::int64_t rhs = mod(sigma(b, c) + sigma(a, g_.add(b, c)), n_);
        if (lhs != rhs)
          throw StructureError("table violates the 2-cocycle identity at " +
                               FinAbGroup::elem_to_string(a) + "," + FinAbGroup::elem_to_string(b) +
                               "," + FinAbGroup::elem_to_string(c));
      }
}

std::size_t Cocycle::index(const Elem& e) const {
  Elem r = g_.reduce(e);
  std::size_t idx = 0;
  for (std::size_t i = r.size(); i-- > 0;)
    idx = idx * static_cast<std::size_t>(g_.orders()[i]) + static_cast<std::size_t>(r[i]);
  return idx;
}

std::int64_t Cocycle::sigma(const Elem& a, const Elem& b) const {
  return table_[index(a)][index(b)];
}

std::int64_t Cocycle::commutator(const Elem& a, const Elem& b) const {
  return mod(sigma(a, b) - sigma(b, a), n_);
}

std::int64_t twisted_extension_commutator(const Cocycle& sigma, const Elem& a, const Elem& b) {
  const FinAbGroup& g = sigma.group();
  const std::int64_t n = sigma.n_order();
  using Ext = std::pair<std::int64_t, Elem>;
  auto mul = [&](const Ext& x, const Ext& y) {
    return Ext{mod(x.first + y.first + sigma.sigma(x.second, y.second), n),
               g.add(x.second, y.second)};
  };
  // identity is (-sigma(0,0), 0); invert by solving x * inv = identity
  Ext identity{mod(-sigma.sigma(g.zero(), g.zero()), n), g.zero()};
  auto inv = [&](const Ext& x) {
    Elem h = g.neg(x.second);
    std::int64_t w = mod(identity.first - x.first - sigma.sigma(x.second, h), n);
    return Ext{w, h};
  };
  Ext ga{0, g.reduce(a)}, gb{0, g.reduce(b)};
  Ext comm = mul(mul(ga, gb), mul(inv(ga), inv(gb)));
  if (!g.is_zero(comm.second)) throw InternalError("commutator left the central fiber");
  // value through the canonical embedding n -> (n - sigma(0,0), 0)
  return mod(comm.first - identity.first, n);
}

}  // namespace adelic::biext
