#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mcgcheck/mcgmodel.hpp"
#include "mcgcheck/perm_group.hpp"
#include "mcgcheck/representation.hpp"
#include "mcgcheck/sympgroups.hpp"

namespace mcgcheck::verify {

// The three embedded degree-6/6/10 generator tables, in their published
// order T1, T2, T3, T4, T0.
struct PhiTables {
  perm::Representation minus;  // transpositions, degree 6
  perm::Representation alpha;  // triple transpositions, degree 6
  perm::Representation plus;   // triple transpositions, degree 10
};
const PhiTables& builtin_tables();

// The transitive representation on the quadratic refinements of the chosen
// Arf class: sign -1 -> Arf 1 (degree m_g^-), sign +1 -> Arf 0 (degree
// m_g^+).  Generator names T0..T{2g} plus T{2g+2} for g >= 3.
perm::Representation build_phi(const sympgroups::SpModel& model, int sign);

// Orbit sizes of the restriction to the subsurface generators T0..T{2g-2},
// as a sorted multiset.
std::vector<unsigned> restriction_orbits(const perm::Representation& rep,
                                         unsigned g);

// Resolves the generator name for the twist about alpha_idx inside a
// representation, following the g = 2 alias T{2g+2} = T0.
const perm::Perm& twist_image(const perm::Representation& rep, unsigned idx,
                              unsigned g);

// Centralizer computations for the chain subsets.  Each case carries the
// computed group and whether it equals the expected two-element (or
// trivial) set.
struct CentralizerCase {
  std::string label;
  perm::PermGroup computed;
  bool matches;
};
struct CentralizerResults {
  std::optional<CentralizerCase> g2_triple;  // C{w1,w2,w4} = {1, w4}, g = 2
  CentralizerCase chain;                     // C{w0..w{2g-1}} = {1, w{2g+2}}
  std::optional<CentralizerCase> gapped;     // C{w0..w{2g-2}, w{2g}} = {1, w{2g}}, g >= 3
  CentralizerCase whole;                     // C{w0..w{2g}} = {1}
  bool all_match;
};
CentralizerResults centralizer_cases(const perm::Representation& rep, unsigned g);

// Constraint-driven exhaustive search over permutations ------------------

struct Constraint {
  enum class Kind {
    commutes_with,
    braids_with,
    braids_with_inverse_of,
    support_within,
    fixes_pointwise,
    restricts_to,
  };
  Kind kind;
  perm::Perm p;                   // for the first three and restricts_to
  std::vector<uint32_t> points;   // for the point-set kinds

  static Constraint commutes_with(perm::Perm x);
  static Constraint braids_with(perm::Perm x);
  static Constraint braids_with_inverse_of(perm::Perm x);
  static Constraint support_within(std::vector<uint32_t> pts);
  static Constraint fixes_pointwise(std::vector<uint32_t> pts);
  static Constraint restricts_to(perm::Perm tau);  // equals tau on S(tau)

  bool satisfied_by(const perm::Perm& candidate) const;
};

// All permutations of degree m satisfying every constraint, in lexicographic
// order of image tuples.  The moved-point set is cut down by support_within
// and fixes_pointwise constraints; the remaining factorial search space must
// stay within 10^7.
std::vector<perm::Perm> constraint_search(unsigned m,
                                          const std::vector<Constraint>& constraints);

// Extension solver --------------------------------------------------------

// Extends a degree-m_g^-/m_g^+ chain representation to the full generator
// system of the rank-h surface (h = 2g + r), by enumerating the centralizer
// candidates for the undetermined images and filtering with the relation
// catalogue and the commutator-closure test.  Asserts a unique survivor per
// unknown and returns the extension together with the search certificate.
struct ExtensionStage {
  std::string unknown;
  unsigned candidates;
  unsigned survivors;
  perm::Perm value;
};
struct ExtensionResult {
  perm::Representation extended;
  perm::Perm conjugator;  // the element carrying phi to phi^U on the chain
  std::vector<ExtensionStage> stages;
};

ExtensionResult extension_solve(unsigned g, unsigned r, mcgmodel::Flavor flavor,
                                const perm::Representation& base);

}  // namespace mcgcheck::verify
