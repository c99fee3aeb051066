// biext.hpp -- executable quotient-biextension model over finite abelian
// groups: transport on the trivial biextension, the quotient Weil pairing,
// and commutators of 2-cocycles.  Everything is exhaustive at desk scale.
#ifndef ADELIC_BIEXT_HPP
#define ADELIC_BIEXT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "adelic/errors.hpp"

namespace adelic::biext {

/// Element of a product of cyclic groups, written additively: a tuple of
/// residues modulo the cyclic orders.
using Elem = std::vector<std::int64_t>;

class FinAbGroup {
 public:
  FinAbGroup() = default;
  explicit FinAbGroup(std::vector<std::int64_t> orders);

  const std::vector<std::int64_t>& orders() const { return orders_; }
  std::size_t rank() const { return orders_.size(); }
  std::uint64_t size() const;

  Elem zero() const { return Elem(orders_.size(), 0); }
  Elem reduce(Elem e) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem scale(std::int64_t k, const Elem& a) const;
  bool is_zero(const Elem& a) const;

  /// All elements, in lexicographic order.
  std::vector<Elem> elements() const;

  bool operator==(const FinAbGroup& o) const { return orders_ == o.orders_; }
  static std::string elem_to_string(const Elem& e);

 private:
  std::vector<std::int64_t> orders_;
};

/// Subgroup given by generators, realized as the enumerated closure.
class Subgroup {
 public:
  static Subgroup generated(const FinAbGroup& g, const std::vector<Elem>& gens);
  const std::vector<Elem>& elements() const { return elements_; }
  bool contains(const Elem& e) const;

 private:
  std::vector<Elem> elements_;  // sorted
};

/// Groups A, A' with subgroups B, C and B', C', and a bilinear pairing
/// A x A' -> Z/N given by a matrix on the cyclic generators.  In the
/// transport and quotient-pairing formulas below, expressions of the shape
/// <x', y> with x' in A' and y in A denote pairing(y, x').
struct PairingSetup {
  FinAbGroup A, Ap;
  std::int64_t n_order = 1;  // N = Z/n_order
  std::vector<Elem> b_gens, c_gens, bp_gens, cp_gens;
  std::vector<std::vector<std::int64_t>> matrix;  // rank(A) x rank(Ap)

  /// Validates shapes and the compatibility conditions that make the
  /// matrix a well-defined bilinear pairing on the given groups.
  static PairingSetup make(FinAbGroup A, FinAbGroup Ap, std::int64_t n_order,
                           std::vector<std::vector<std::int64_t>> matrix, std::vector<Elem> b_gens,
                           std::vector<Elem> c_gens, std::vector<Elem> bp_gens,
                           std::vector<Elem> cp_gens);

  std::int64_t pair(const Elem& a, const Elem& ap) const;

  Subgroup B() const { return Subgroup::generated(A, b_gens); }
  Subgroup C() const { return Subgroup::generated(A, c_gens); }
  Subgroup Bp() const { return Subgroup::generated(Ap, bp_gens); }
  Subgroup Cp() const { return Subgroup::generated(Ap, cp_gens); }
};

/// Exhaustive check of the four conditions <B,B'> = <C,C'> = 1,
/// <B cap C, A'> = 1, <A, B' cap C'> = 1.
struct SetupReport {
  struct Item {
    std::string condition;
    bool pass;
    std::string witness;
  };
  std::vector<Item> items;
  bool all_pass() const;
  std::string to_string() const;
};
SetupReport validate_setup(const PairingSetup& s);

/// A point of the trivial biextension: a base point (a, a') and a value in
/// N = Z/n.
struct TorsorPoint {
  Elem a, ap;
  std::int64_t value = 0;
};

/// The isomorphism T|(a,a') -> T|(abc, a'b'c'), multiplication by
/// <a',c> <b',a> <b',c>.  Requires b in B, c in C, b' in B', c' in C'.
TorsorPoint transport(const TorsorPoint& t, const Elem& b, const Elem& c, const Elem& bp,
                      const Elem& cp, const PairingSetup& s);

/// phi_m(a-bar, a'-bar) = <b',a> - <a',c> for any decompositions
/// m*a = b + c, m*a' = b' + c'; all decompositions are exhausted and must
/// agree.  Throws DomainError when no decomposition exists.
std::int64_t quotient_weil_pairing(const Elem& a, const Elem& ap, std::int64_t m,
                                   const PairingSetup& s);

/// A 2-cocycle sigma: G x G -> Z/n as a full table; the cocycle identity is
/// validated at construction.
class Cocycle {
 public:
  Cocycle(FinAbGroup g, std::int64_t n_order, std::vector<std::vector<std::int64_t>> table);
  const FinAbGroup& group() const { return g_; }
  std::int64_t n_order() const { return n_; }
  std::int64_t sigma(const Elem& a, const Elem& b) const;

  /// <a,b> = sigma(a,b) - sigma(b,a).
  std::int64_t commutator(const Elem& a, const Elem& b) const;

 private:
  std::size_t index(const Elem& e) const;
  FinAbGroup g_;
  std::int64_t n_;
  std::vector<std::vector<std::int64_t>> table_;
};

/// Literal commutator of the lifts (0,a), (0,b) inside the sigma-twisted
/// extension group N x G, returned as an element of N.  Independent route
/// used to cross-check Cocycle::commutator.
std::int64_t twisted_extension_commutator(const Cocycle& sigma, const Elem& a, const Elem& b);

}  // namespace adelic::biext

#endif
