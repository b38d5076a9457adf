#pragma once

#include <string>
#include <vector>

#include "mcgcheck/gf2.hpp"
#include "mcgcheck/representation.hpp"

namespace mcgcheck::mcgmodel {

// Crosscap parameters: h = 2g + r with r in {1,2}.  The boundary count n is
// carried as metadata only; for n <= 1 every image-level computation below
// is independent of it.
struct SurfaceModel {
  unsigned h;
  unsigned n;
  unsigned g;
  unsigned r;
  explicit SurfaceModel(unsigned h, unsigned n = 1);
};

// The curve through crosscaps i..j of the rank-h crosscap module; its mod-2
// class is e_i + ... + e_j, and it is two-sided exactly when j - i is odd.
struct Curve {
  unsigned h;
  unsigned i;
  unsigned j;
  gf2forms::BitVector cls;
  bool two_sided;
};

Curve curve_class(unsigned h, unsigned i, unsigned j);

// The chain curves alpha_i = gamma_{i,i+1} (1 <= i <= h-1) together with
// alpha_0 = gamma_{1,4} and the extra curve alpha_{2g+2} = gamma_{1,2g}.
// For g = 2 the names alpha_0 and alpha_6 refer to the same curve.
struct HumphriesSystem {
  unsigned h;
  unsigned g;
  std::vector<Curve> curves;        // indexed: [0]=alpha_0, [i]=alpha_i, back()=alpha_{2g+2}
  const Curve& alpha(unsigned idx) const;  // idx in {0,...,h-1, 2g+2}
};

HumphriesSystem humphries_system(unsigned h);

// Interval-interleaving rule: 1 when the crosscap intervals strictly
// interleave, 0 when they are disjoint or nested.  Valid on the curve system
// above, where it agrees mod 2 with the intersection pairing of the classes.
unsigned geometric_intersection(const Curve& c1, const Curve& c2);

// Canonical generator name for the twist about alpha_idx; resolves the
// g = 2 alias T_{2g+2} = T_0.
std::string twist_name(unsigned idx, unsigned g);

// Ordered association from generator names to GF(2) matrices.
class MatrixRep {
public:
  explicit MatrixRep(unsigned dim) : dim_(dim) {}
  void add(std::string name, gf2forms::BitMatrix m);
  unsigned dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<gf2forms::BitMatrix>& images() const { return mats_; }
  bool has(std::string_view name) const;
  const gf2forms::BitMatrix& image(std::string_view name) const;

private:
  unsigned dim_;
  std::vector<std::string> names_;
  std::vector<gf2forms::BitMatrix> mats_;
};

// Mod-2 homology action on the rank-h crosscap module: each twist maps to
// the transvection by its curve class and U to the swap of the two
// rightmost basis vectors.  Names: T0..T{h-1}, T{2g+2}, U.
MatrixRep homology_rep(unsigned h);

// The same images pushed through the all-ones reduction, landing in the
// symplectic group of rank 2g.
struct EpsilonRep {
  MatrixRep rep;
  gf2forms::Reduction reduction;
};
EpsilonRep epsilon(unsigned h);

// Relation catalogue ----------------------------------------------------

enum class RelKind { commute, braid, braid_with_inverse, twist_inversion };
enum class Flavor { M, T };

// The named generator system of the rank-h surface: the chain twists plus
// either U (flavor M) or the twist-subgroup generators U^2 and UT{h-2}U^-1,
// with UT0U^-1 appearing only at h = 5 (flavor T).
struct GeneratorSystem {
  unsigned h;
  unsigned g;
  Flavor flavor;
  std::vector<std::string> names() const;
};
GeneratorSystem generator_system(unsigned h, Flavor flavor);

struct Atom {
  std::string name;
  bool inv = false;
};
using Word = std::vector<Atom>;

struct Relation {
  RelKind kind;
  Word lhs;
  Word rhs;
  std::string display() const;

  static Relation commute(const std::string& a, const std::string& b);
  static Relation braid(const std::string& a, const std::string& b);
  // a together with b^-1 satisfies the braid relation
  static Relation braid_with_inverse(const std::string& a, const std::string& b);
  // u a u^-1 = a^-1
  static Relation twist_inversion(const std::string& u, const std::string& a);
};

// The catalogue of relations that hold among the generator images: pairwise
// twist relations decided by geometric_intersection, plus the U-relations
// (flavor M) or their rewriting over the twist-subgroup generator names
// U^2 and UT{h-2}U^-1 (flavor T; UT0U^-1 appears only at h = 5).
std::vector<Relation> expected_relations(unsigned h, Flavor flavor);

// Pairwise twist relations only (no U); over T0..T{h-1} and T{2g+2}.
std::vector<Relation> twist_relations(unsigned h);

perm::Perm evaluate_word(const perm::Representation& rep, const Word& w);
gf2forms::BitMatrix evaluate_word(const MatrixRep& rep, const Word& w);

struct RelationReport {
  struct Item {
    std::string display;
    bool pass;
  };
  std::vector<Item> items;
  bool all_pass;
  bool abelian_image;
};

RelationReport check_relations(const perm::Representation& rep,
                               const std::vector<Relation>& rels);
RelationReport check_relations(const MatrixRep& rep,
                               const std::vector<Relation>& rels);

}  // namespace mcgcheck::mcgmodel
