#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mcgcheck::gf2forms {

// Vectors and matrices over GF(2), packed into 64-bit words.  Dimensions are
// capped at 64, far above the rank-12 modules this project touches.
class BitVector {
public:
  BitVector() = default;
  BitVector(unsigned dim, uint64_t bits);
  static BitVector zero(unsigned dim) { return BitVector(dim, 0); }
  static BitVector unit(unsigned dim, unsigned i);      // e_i, 0-based
  static BitVector ones(unsigned dim);                  // all-ones
  static BitVector from_string(std::string_view s);     // e.g. "11110"

  unsigned dim() const { return dim_; }
  uint64_t bits() const { return bits_; }
  bool get(unsigned i) const { return (bits_ >> i) & 1u; }
  unsigned weight() const;
  bool is_zero() const { return bits_ == 0; }

  BitVector operator^(const BitVector& o) const;
  std::string to_string() const;  // leftmost character is coordinate 0

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend auto operator<=>(const BitVector&, const BitVector&) = default;

private:
  unsigned dim_ = 0;
  uint64_t bits_ = 0;
};

bool dot(const BitVector& a, const BitVector& b);

// Square matrix acting on column vectors: (M*x)_i = sum_j M_ij x_j.
class BitMatrix {
public:
  BitMatrix() = default;
  explicit BitMatrix(unsigned n) : n_(n), rows_(n, 0) {}
  static BitMatrix identity(unsigned n);

  unsigned dim() const { return n_; }
  bool get(unsigned i, unsigned j) const { return (rows_[i] >> j) & 1u; }
  void set(unsigned i, unsigned j, bool v);
  uint64_t row_bits(unsigned i) const { return rows_[i]; }

  BitVector apply(const BitVector& x) const;  // M*x
  BitVector column(unsigned j) const;
  BitMatrix operator*(const BitMatrix& o) const;
  BitMatrix transposed() const;
  unsigned rank() const;
  bool invertible() const { return rank() == n_; }
  BitMatrix inverse() const;  // throws on singular input
  bool is_identity() const;

  // One line per basis vector: line i holds the coordinates of M*e_i
  // (i.e. column i), matching the CLI matrix format.
  std::string to_text() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

private:
  unsigned n_ = 0;
  std::vector<uint64_t> rows_;
};

struct RankKernel {
  unsigned rank;
  std::vector<BitVector> kernel;  // basis of {x : M*x = 0}
};
RankKernel rank_kernel(const BitMatrix& m);

// Symmetric bilinear form given by its Gram matrix.
class BilinearForm {
public:
  BilinearForm() = default;
  explicit BilinearForm(BitMatrix gram);  // must be symmetric
  static BilinearForm identity_form(unsigned n);
  static BilinearForm standard_symplectic(unsigned g);  // dim 2g, pairs (a_i,b_i)

  unsigned dim() const { return gram_.dim(); }
  const BitMatrix& gram() const { return gram_; }
  bool eval(const BitVector& x, const BitVector& y) const;
  bool alternating() const { return alternating_; }
  bool nondegenerate() const;
  bool preserved_by(const BitMatrix& m) const;  // M^T G M == G

  friend bool operator==(const BilinearForm&, const BilinearForm&) = default;

private:
  BitMatrix gram_;
  bool alternating_ = false;
};

// Quadratic refinement of an alternating nondegenerate form:
// q(x+y) = q(x) + q(y) + B(x,y), stored by its values on the basis.
class QuadraticForm {
public:
  QuadraticForm(BilinearForm b, uint64_t basis_values);

  const BilinearForm& form() const { return b_; }
  unsigned dim() const { return b_.dim(); }
  uint64_t basis_values() const { return vals_; }
  bool eval(const BitVector& x) const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

private:
  BilinearForm b_;
  uint64_t vals_;
};

// x |-> x + B(x,a)a.  Requires a != 0 and B(a,a) = 0; the result preserves B
// and squares to the identity.
BitMatrix transvection(const BilinearForm& b, const BitVector& a);

// Ordered basis (a_1,b_1,...,a_g,b_g) with B(a_i,b_i) = 1 and all other
// basis pairings 0.  Throws if B is degenerate or not alternating.
std::vector<BitVector> symplectic_basis(const BilinearForm& b);

int arf(const QuadraticForm& q);
int arf(const QuadraticForm& q, const std::vector<BitVector>& symp_basis);

// (M.q)(x) = q(M^-1 x); requires M to preserve the underlying form.
QuadraticForm act_on_form(const BitMatrix& m, const QuadraticForm& q);

// Reduction of the rank-h identity pairing along w = all-ones: restriction
// to the perp of w for odd h, the quotient of the perp by <w> for even h.
// Either way the result is alternating nondegenerate of dimension 2g where
// g = floor((h-1)/2), with basis the images of f_i = e_i + e_{i+1}.
struct Reduction {
  unsigned h;
  unsigned g;
  BilinearForm reduced;  // dimension 2g

  BitVector project(const BitVector& x) const;  // defined on the perp of w
  BitVector lift(const BitVector& y) const;     // section: f-basis lift
  BitMatrix push(const BitMatrix& m) const;     // induced map on the reduction
};

Reduction perp_quotient(const BilinearForm& b, const BitVector& w);

}  // namespace mcgcheck::gf2forms
