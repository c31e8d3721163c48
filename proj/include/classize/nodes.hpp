#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "classize/errors.hpp"
#include "classize/periodic_set.hpp"
#include "classize/size.hpp"

namespace classize {

/// Address in the factorial tree: a sequence <n_1, ..., n_k> with
/// n_i < i.  A node of depth k names one congruence class modulo k!,
/// and its value in the factorial number system is the least member of
/// that class.
struct Node {
  std::vector<Nat> entries;

  explicit Node(std::vector<Nat> e) : entries(std::move(e)) {
    if (entries.empty()) throw domain_error("node must be nonempty");
    for (size_t i = 0; i < entries.size(); ++i)
      if (entries[i] < 0 || entries[i] >= (Nat)(i + 1))
        throw domain_error("node entry " + std::to_string(entries[i]) +
                           " too large at position " + std::to_string(i + 1));
  }

  Nat depth() const { return (Nat)entries.size(); }

  Node child(Nat m) const {
    std::vector<Nat> e = entries;
    e.push_back(m);
    return Node(std::move(e));
  }

  friend bool operator==(const Node& a, const Node& b) {
    return a.entries == b.entries;
  }

  std::string str() const {
    std::string out = "<";
    for (size_t i = 0; i < entries.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(entries[i]);
    }
    return out + ">";
  }
};

inline Nat factorial(Nat k) {
  Nat f = 1;
  for (Nat i = 2; i <= k; ++i) f *= i;
  return f;
}

/// Sum of n_i * (i-1)!; also the least member of the node's class.
inline Nat node_value(const Node& p) {
  Nat value = 0, fact = 1;
  for (size_t i = 0; i < p.entries.size(); ++i) {
    value += p.entries[i] * fact;
    fact *= (Nat)(i + 1);
  }
  return value;
}

/// The class modulo k! addressed by a depth-k node.
inline PeriodicSet node_set(const Node& p) {
  return PeriodicSet::congruence_class(factorial(p.depth()), node_value(p));
}

/// Shortest node with the given value, by factorial-base digits
/// d_i = (n / (i-1)!) mod i.
inline Node node_for(Nat n) {
  if (n < 0) throw domain_error("node value must be a natural");
  Nat k = 1;
  while (factorial(k) <= n) ++k;
  std::vector<Nat> digits;
  Nat fact = 1;  // (i-1)!
  for (Nat i = 1; i <= k; ++i) {
    digits.push_back((n / fact) % i);
    fact *= i;
  }
  return Node(std::move(digits));
}

/// One entry of a depth partition.
struct NodePiece {
  Node node;
  PeriodicSet set;
  Size size;
  bool charmed;  // strictly larger than the smallest piece at this depth
};

/// All d! nodes of depth d with their classes and sizes.  The classes
/// are pairwise disjoint and union to the naturals; the charmed ones
/// are exactly those whose residue falls below the remainder at d!.
inline std::vector<NodePiece> depth_partition(const SizedUniverse& u, Nat d) {
  if (d < 1) throw domain_error("depth must be positive");
  std::vector<Node> level = {Node({0})};
  for (Nat i = 2; i <= d; ++i) {
    std::vector<Node> next;
    for (const Node& p : level)
      for (Nat m = 0; m < i; ++m) next.push_back(p.child(m));
    level = std::move(next);
  }
  std::vector<NodePiece> out;
  Size least{Rational(2), Rational(0)};  // above anything theta yields
  for (const Node& p : level) {
    PeriodicSet s = node_set(p);
    Size sz = u.theta(s);
    if (sz < least) least = sz;
    out.push_back({p, std::move(s), sz, false});
  }
  for (auto& piece : out) piece.charmed = least < piece.size;
  return out;
}

/// Splits a pure union of congruence classes into m pieces of roughly
/// equal size by refining each class and dealing the refined classes
/// round-robin, charmed residues first.  The first pieces end up one
/// atom larger whenever the remainders at the two moduli differ.
inline std::vector<PeriodicSet> nm_partition(const SizedUniverse& u,
                                             const PeriodicSet& x, Nat m) {
  if (m < 1) throw domain_error("piece count must be positive");
  if (x.is_finite() || !x.added().empty() || !x.removed().empty())
    throw domain_error("set must be a pure union of congruence classes");
  Nat n = u.resolve_modulus(x.modulus());
  Nat nm = n * m;
  const RemainderFn& f = u.remainder_fn();
  if (!f.defined_at(nm))
    throw domain_error("remainder function undefined at " +
                       std::to_string(nm));
  Nat fn = f.at(n), fnm = f.at(nm);
  if ((fnm - fn) % n != 0)
    throw domain_error("incongruous remainders between " + std::to_string(n) +
                       " and " + std::to_string(nm));

  // refined residues of x at modulus n*m, ascending: charm is a prefix
  std::vector<Nat> refined;
  for (Nat r = 0; r < nm; ++r)
    if (std::binary_search(x.residues().begin(), x.residues().end(),
                           r % x.modulus()))
      refined.push_back(r);

  std::vector<std::vector<Nat>> piece_residues(m);
  for (size_t i = 0; i < refined.size(); ++i)
    piece_residues[i % m].push_back(refined[i]);

  std::vector<PeriodicSet> pieces;
  for (auto& res : piece_residues)
    pieces.push_back(PeriodicSet::normalized(nm, std::move(res), {}, {}));
  return pieces;
}

}  // namespace classize
