#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "mcgcheck/perm.hpp"

namespace mcgcheck::perm {

// Group orders up to |Sp(10,2)| and beyond; 128 bits keeps every product of
// basic orbit lengths exact at the degrees this project touches.
using Order = unsigned __int128;

std::string order_string(Order n);

// Finitely generated permutation group with a base and strong generating set
// built by a deterministic Schreier-Sims run (base points are the smallest
// non-fixed points, orbits are BFS in generator order).  The chain is built
// on first use and is immutable afterwards; sharing a PermGroup between
// threads is safe.
class PermGroup {
public:
  PermGroup(unsigned degree, std::vector<Perm> generators);

  unsigned degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  Order order() const;
  bool contains(const Perm& p) const;
  std::vector<uint32_t> base() const;
  std::vector<uint32_t> basic_orbit_lengths() const;

  // Every element, in the deterministic transversal-product order.  Throws
  // if the order exceeds `limit`.
  std::vector<Perm> elements(size_t limit = 1u << 20) const;

  bool is_trivial() const { return order() == 1; }

private:
  struct Level {
    uint32_t base = 0;
    std::vector<Perm> gens;
    std::vector<uint32_t> orbit;       // discovery order, orbit[0] == base
    std::vector<int32_t> pos;          // degree+1 entries, -1 if outside
    std::vector<Perm> trans;           // trans[k](base) == orbit[k]
    std::vector<Perm> trans_inv;
  };
  struct Chain {
    unsigned degree = 0;
    std::vector<Level> levels;
    std::pair<Perm, size_t> strip(Perm g, size_t from) const;
  };
  struct ChainBox {
    std::once_flag once;
    std::shared_ptr<const Chain> chain;
  };

  const Chain& chain() const;
  static void build_chain(Chain& c, const std::vector<Perm>& gens);

  unsigned degree_;
  std::vector<Perm> gens_;
  std::shared_ptr<ChainBox> box_;
};

// Smallest subgroup of G containing `elems` and closed under conjugation by
// G's generators.  Throws if some element of `elems` lies outside G.
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& elems);

// Centralizer of the set `xs` inside the full symmetric group on {1,...,m}.
// Backtracks over labeled G-set automorphisms: per orbit of <xs> a candidate
// image of the root, extended uniquely along the Schreier tree; orbits are
// matched by size and verified edge by edge.
PermGroup centralizer_in_sym(unsigned m, const std::vector<Perm>& xs);

}  // namespace mcgcheck::perm
