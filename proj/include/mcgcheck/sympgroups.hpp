#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcgcheck/gf2.hpp"
#include "mcgcheck/perm_group.hpp"
#include "mcgcheck/representation.hpp"

namespace mcgcheck::sympgroups {

// m_g^- = 2^{g-1}(2^g - 1), m_g^+ = 2^{g-1}(2^g + 1)
std::pair<uint64_t, uint64_t> m_indices(unsigned g);

// |Sp(2g,2)| = 2^{g^2} * prod_{i=1..g} (4^i - 1)
uint64_t sp_order(unsigned g);

// Bridges between GF(2) matrices and permutations of the nonzero vectors,
// numbered 1..2^n-1 by their bit patterns.
perm::Perm vector_perm(const gf2forms::BitMatrix& m);
gf2forms::BitMatrix matrix_of_vector_perm(const perm::Perm& p, unsigned n);

// Concrete model of Sp(2g,2): the reduced crosscap form together with the
// reduced twist images as generators (named T0..T{2g} and T{2g+2}), their
// permutation action on nonzero vectors, a symplectic basis for Arf
// evaluation, and the lex-ordered quadratic refinements split by Arf class.
struct SpModel {
  unsigned g;
  gf2forms::BilinearForm form;
  std::vector<std::string> names;
  std::vector<gf2forms::BitMatrix> mats;
  std::vector<perm::Perm> vec_perms;
  perm::PermGroup vector_image;
  std::vector<gf2forms::BitVector> symp_basis;
  std::vector<uint64_t> class_masks[2];  // [arf] -> sorted basis-value masks

  const gf2forms::BitMatrix& mat(std::string_view name) const;
  gf2forms::QuadraticForm canonical_form(int arf_class) const;
};

// 1 <= g <= 5.  For g >= 2 the generators are the reduced images of the
// twist generators; g = 1 uses the two chain transvections alone.
SpModel build_sp(unsigned g);

// Transitive action of the model generators on the refinements with the
// given Arf invariant; degree m_g^- for Arf 1 and m_g^+ for Arf 0, points
// numbered by the lex order of the basis-value masks.
perm::Representation form_orbit_action(const SpModel& model, int arf_class);

// Action of an arbitrary matrix on the same numbered refinement set.
perm::Perm form_orbit_perm(const SpModel& model, int arf_class,
                           const gf2forms::BitMatrix& m);

// Stabilizer of q inside the permutation image on nonzero vectors, via
// Schreier generators of the orbit of q.
perm::PermGroup orthogonal_stabilizer(const SpModel& model,
                                      const gf2forms::QuadraticForm& q);

// Full lookup table for an automorphism of the symmetric group on 6 points.
class AutomorphismTable {
public:
  explicit AutomorphismTable(std::vector<perm::Perm> images);  // by rank

  const perm::Perm& apply(const perm::Perm& p) const;
  bool is_bijective() const;
  // multiplicative on every (element, adjacent transposition) pair
  bool is_multiplicative() const;

  static size_t rank(const perm::Perm& p);      // lexicographic rank in S6
  static perm::Perm unrank(size_t r);

private:
  std::vector<perm::Perm> images_;
};

// The exceptional automorphism, extended multiplicatively from its values on
// the five adjacent transpositions by factoring each element.
const AutomorphismTable& alpha_table();

AutomorphismTable conjugation_table(const perm::Perm& c);
AutomorphismTable compose_tables(const AutomorphismTable& outer,
                                 const AutomorphismTable& inner);

// Conjugating witness if the table is an inner automorphism; exhaustive over
// all 720 candidates.
std::optional<perm::Perm> is_inner(const AutomorphismTable& t);

// The pinned identification of the g=2 model with the symmetric group on 6
// points: the form-orbit action on the 6 Arf-1 refinements, relabelled so
// the chain generators become the adjacent transpositions (1 2),...,(5 6)
// in chain order with T0 |-> (5 6).
struct S6Embedding {
  const SpModel* model;
  perm::Perm relabel;  // y with table = y * orbit-action * y^-1

  perm::Perm to_s6(const perm::Perm& vector_perm) const;
  perm::PermGroup map_group(const perm::PermGroup& sub) const;
};

S6Embedding sp4_s6_embedding(const SpModel& g2_model);

// alpha(O^-): the image under alpha_table of the Arf-1 stabilizer, inside
// the pinned degree-6 labelling.  Order 120, index 6 in the image of Sp.
perm::PermGroup alpha_twisted_subgroup(const SpModel& g2_model);

// Subgroup conjugacy inside the symmetric group of the common degree,
// by exhaustive search over conjugators (degree <= 8).
std::optional<perm::Perm> subgroup_conjugator(const perm::PermGroup& a,
                                              const perm::PermGroup& b);

}  // namespace mcgcheck::sympgroups
