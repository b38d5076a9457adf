#include "mcgcheck/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace mcgcheck::gf2forms {

namespace {
constexpr unsigned kMaxDim = 64;
uint64_t mask(unsigned dim) {
  return dim == 64 ? ~uint64_t{0} : (uint64_t{1} << dim) - 1;
}
}  // namespace

BitVector::BitVector(unsigned dim, uint64_t bits) : dim_(dim), bits_(bits) {
  if (dim > kMaxDim) throw std::invalid_argument("BitVector: dimension cap is 64");
  if (bits & ~mask(dim)) throw std::invalid_argument("BitVector: bits out of range");
}

BitVector BitVector::unit(unsigned dim, unsigned i) {
  if (i >= dim) throw std::invalid_argument("BitVector::unit: index out of range");
  return BitVector(dim, uint64_t{1} << i);
}

BitVector BitVector::ones(unsigned dim) { return BitVector(dim, mask(dim)); }

BitVector BitVector::from_string(std::string_view s) {
  uint64_t bits = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1')
      bits |= uint64_t{1} << i;
    else if (s[i] != '0')
      throw std::invalid_argument("BitVector: expected 0/1 string");
  }
  return BitVector(static_cast<unsigned>(s.size()), bits);
}

unsigned BitVector::weight() const {
  return static_cast<unsigned>(std::popcount(bits_));
}

BitVector BitVector::operator^(const BitVector& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("BitVector: dimension mismatch");
  return BitVector(dim_, bits_ ^ o.bits_);
}

std::string BitVector::to_string() const {
  std::string s(dim_, '0');
  for (unsigned i = 0; i < dim_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

bool dot(const BitVector& a, const BitVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dot: dimension mismatch");
  return std::popcount(a.bits() & b.bits()) & 1;
}

BitMatrix BitMatrix::identity(unsigned n) {
  BitMatrix m(n);
  for (unsigned i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

void BitMatrix::set(unsigned i, unsigned j, bool v) {
  if (v)
    rows_[i] |= uint64_t{1} << j;
  else
    rows_[i] &= ~(uint64_t{1} << j);
}

BitVector BitMatrix::apply(const BitVector& x) const {
  if (x.dim() != n_) throw std::invalid_argument("BitMatrix::apply: dimension mismatch");
  uint64_t out = 0;
  for (unsigned i = 0; i < n_; ++i)
    out |= static_cast<uint64_t>(std::popcount(rows_[i] & x.bits()) & 1) << i;
  return BitVector(n_, out);
}

BitVector BitMatrix::column(unsigned j) const {
  uint64_t out = 0;
  for (unsigned i = 0; i < n_; ++i)
    if (get(i, j)) out |= uint64_t{1} << i;
  return BitVector(n_, out);
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("BitMatrix: dimension mismatch");
  BitMatrix out(n_);
  for (unsigned i = 0; i < n_; ++i) {
    uint64_t acc = 0;
    uint64_t r = rows_[i];
    while (r) {
      unsigned k = static_cast<unsigned>(std::countr_zero(r));
      acc ^= o.rows_[k];
      r &= r - 1;
    }
    out.rows_[i] = acc;
  }
  return out;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix out(n_);
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j = 0; j < n_; ++j)
      if (get(i, j)) out.set(j, i, true);
  return out;
}

unsigned BitMatrix::rank() const {
  std::vector<uint64_t> rows = rows_;
  unsigned rank = 0;
  for (unsigned col = 0; col < n_ && rank < n_; ++col) {
    unsigned pivot = rank;
    while (pivot < n_ && !((rows[pivot] >> col) & 1u)) ++pivot;
    if (pivot == n_) continue;
    std::swap(rows[rank], rows[pivot]);
    for (unsigned i = 0; i < n_; ++i)
      if (i != rank && ((rows[i] >> col) & 1u)) rows[i] ^= rows[rank];
    ++rank;
  }
  return rank;
}

BitMatrix BitMatrix::inverse() const {
  std::vector<uint64_t> a = rows_;
  BitMatrix inv = identity(n_);
  unsigned r = 0;
  for (unsigned col = 0; col < n_; ++col) {
    unsigned pivot = r;
    while (pivot < n_ && !((a[pivot] >> col) & 1u)) ++pivot;
    if (pivot == n_) throw std::invalid_argument("BitMatrix::inverse: singular");
    std::swap(a[r], a[pivot]);
    std::swap(inv.rows_[r], inv.rows_[pivot]);
    for (unsigned i = 0; i < n_; ++i) {
      if (i != r && ((a[i] >> col) & 1u)) {
        a[i] ^= a[r];
        inv.rows_[i] ^= inv.rows_[r];
      }
    }
    ++r;
  }
  return inv;
}

bool BitMatrix::is_identity() const { return *this == identity(n_); }

std::string BitMatrix::to_text() const {
  std::string out;
  for (unsigned i = 0; i < n_; ++i) {
    out += column(i).to_string();
    out += '\n';
  }
  return out;
}

RankKernel rank_kernel(const BitMatrix& m) {
  const unsigned n = m.dim();
  // Column-reduce the transpose so kernel vectors fall out of the identity
  // bookkeeping block.
  const BitMatrix mt = m.transposed();
  std::vector<uint64_t> rows(n), id(n);
  for (unsigned i = 0; i < n; ++i) {
    rows[i] = mt.row_bits(i);
    id[i] = uint64_t{1} << i;
  }
  unsigned rank = 0;
  for (unsigned col = 0; col < n; ++col) {
    unsigned pivot = rank;
    while (pivot < n && !((rows[pivot] >> col) & 1u)) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[rank], rows[pivot]);
    std::swap(id[rank], id[pivot]);
    for (unsigned i = 0; i < n; ++i)
      if (i != rank && ((rows[i] >> col) & 1u)) {
        rows[i] ^= rows[rank];
        id[i] ^= id[rank];
      }
    ++rank;
  }
  RankKernel out{rank, {}};
  for (unsigned i = rank; i < n; ++i) out.kernel.emplace_back(n, id[i]);
  return out;
}

BilinearForm::BilinearForm(BitMatrix gram) : gram_(std::move(gram)) {
  if (gram_ != gram_.transposed())
    throw std::invalid_argument("BilinearForm: Gram matrix must be symmetric");
  alternating_ = true;
  for (unsigned i = 0; i < gram_.dim(); ++i)
    if (gram_.get(i, i)) alternating_ = false;
}

BilinearForm BilinearForm::identity_form(unsigned n) {
  return BilinearForm(BitMatrix::identity(n));
}

BilinearForm BilinearForm::standard_symplectic(unsigned g) {
  BitMatrix m(2 * g);
  for (unsigned i = 0; i < g; ++i) {
    m.set(2 * i, 2 * i + 1, true);
    m.set(2 * i + 1, 2 * i, true);
  }
  return BilinearForm(std::move(m));
}

bool BilinearForm::eval(const BitVector& x, const BitVector& y) const {
  return dot(x, gram_.apply(y));
}

bool BilinearForm::nondegenerate() const { return gram_.rank() == gram_.dim(); }

bool BilinearForm::preserved_by(const BitMatrix& m) const {
  return m.transposed() * gram_ * m == gram_;
}

QuadraticForm::QuadraticForm(BilinearForm b, uint64_t basis_values)
    : b_(std::move(b)), vals_(basis_values) {
  if (!b_.alternating() || !b_.nondegenerate())
    throw std::invalid_argument(
        "QuadraticForm: form must be alternating and nondegenerate");
  if (basis_values & ~mask(b_.dim()))
    throw std::invalid_argument("QuadraticForm: basis values out of range");
}

bool QuadraticForm::eval(const BitVector& x) const {
  // polarization: q(u + e_i) = q(u) + q(e_i) + B(u, e_i)
  bool acc = false;
  uint64_t u = 0;
  uint64_t rest = x.bits();
  while (rest) {
    unsigned i = static_cast<unsigned>(std::countr_zero(rest));
    rest &= rest - 1;
    acc ^= ((vals_ >> i) & 1u) != 0;
    acc ^= (std::popcount(u & b_.gram().row_bits(i)) & 1) != 0;
    u |= uint64_t{1} << i;
  }
  return acc;
}

BitMatrix transvection(const BilinearForm& b, const BitVector& a) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("transvection: dimension mismatch");
  if (a.is_zero()) throw std::invalid_argument("transvection: zero vector");
  if (b.eval(a, a))
    throw std::invalid_argument("transvection: vector pairs with itself");
  BitVector ga = b.gram().apply(a);  // B(x, a) = <x, G a>
  BitMatrix m = BitMatrix::identity(b.dim());
  for (unsigned i = 0; i < b.dim(); ++i)
    if (a.get(i))
      for (unsigned j = 0; j < b.dim(); ++j)
        if (ga.get(j)) m.set(i, j, m.get(i, j) ^ 1);
  return m;
}

std::vector<BitVector> symplectic_basis(const BilinearForm& b) {
  if (!b.alternating())
    throw std::invalid_argument("symplectic_basis: form is not alternating");
  const unsigned n = b.dim();
  if (n % 2 != 0)
    throw std::invalid_argument("symplectic_basis: odd dimension is degenerate");
  std::vector<BitVector> pool;
  for (unsigned i = 0; i < n; ++i) pool.push_back(BitVector::unit(n, i));
  std::vector<BitVector> out;
  while (!pool.empty()) {
    BitVector a = pool.front();
    size_t partner = pool.size();
    for (size_t k = 1; k < pool.size(); ++k)
      if (b.eval(a, pool[k])) {
        partner = k;
        break;
      }
    if (partner == pool.size())
      throw std::invalid_argument("symplectic_basis: degenerate form");
    BitVector bb = pool[partner];
    out.push_back(a);
    out.push_back(bb);
    std::vector<BitVector> next;
    for (size_t k = 1; k < pool.size(); ++k) {
      if (k == partner) continue;
      BitVector u = pool[k];
      if (b.eval(u, bb)) u = u ^ a;
      if (b.eval(u, a)) u = u ^ bb;
      next.push_back(u);
    }
    pool = std::move(next);
  }
  return out;
}

int arf(const QuadraticForm& q) { return arf(q, symplectic_basis(q.form())); }

int arf(const QuadraticForm& q, const std::vector<BitVector>& symp_basis) {
  bool acc = false;
  for (size_t i = 0; i + 1 < symp_basis.size(); i += 2)
    acc ^= q.eval(symp_basis[i]) && q.eval(symp_basis[i + 1]);
  return acc ? 1 : 0;
}

QuadraticForm act_on_form(const BitMatrix& m, const QuadraticForm& q) {
  if (!q.form().preserved_by(m))
    throw std::invalid_argument("act_on_form: matrix does not preserve the form");
  BitMatrix minv = m.inverse();
  uint64_t vals = 0;
  for (unsigned i = 0; i < q.dim(); ++i)
    if (q.eval(minv.column(i))) vals |= uint64_t{1} << i;
  return QuadraticForm(q.form(), vals);
}

BitVector Reduction::project(const BitVector& x) const {
  if (x.dim() != h) throw std::invalid_argument("Reduction::project: dimension mismatch");
  if (x.weight() % 2 != 0)
    throw std::invalid_argument("Reduction::project: vector outside the perp of w");
  // solve x = sum c_i f_i with f_i = e_i + e_{i+1}: c_i is a prefix xor
  uint64_t c = 0;
  bool carry = false;
  for (unsigned i = 0; i < h - 1; ++i) {
    carry ^= x.get(i);
    if (carry) c |= uint64_t{1} << i;
  }
  if (h % 2 == 0 && ((c >> (h - 2)) & 1u)) {
    // reduce modulo w = f_1 + f_3 + ... + f_{h-1}
    for (unsigned i = 0; i < h - 1; i += 2) c ^= uint64_t{1} << i;
  }
  return BitVector(2 * g, c & mask(2 * g));
}

BitVector Reduction::lift(const BitVector& y) const {
  if (y.dim() != 2 * g) throw std::invalid_argument("Reduction::lift: dimension mismatch");
  uint64_t x = 0;
  for (unsigned i = 0; i < 2 * g; ++i)
    if (y.get(i)) x ^= (uint64_t{3} << i);  // e_i + e_{i+1}
  return BitVector(h, x & mask(h));
}

BitMatrix Reduction::push(const BitMatrix& m) const {
  if (m.dim() != h) throw std::invalid_argument("Reduction::push: dimension mismatch");
  BitMatrix out(2 * g);
  for (unsigned j = 0; j < 2 * g; ++j) {
    BitVector img = project(m.apply(lift(BitVector::unit(2 * g, j))));
    for (unsigned i = 0; i < 2 * g; ++i)
      if (img.get(i)) out.set(i, j, true);
  }
  return out;
}

Reduction perp_quotient(const BilinearForm& b, const BitVector& w) {
  const unsigned h = b.dim();
  if (b.gram() != BitMatrix::identity(h))
    throw std::invalid_argument("perp_quotient: form must be the identity pairing");
  if (w != BitVector::ones(h))
    throw std::invalid_argument("perp_quotient: w must be the all-ones vector");
  if (h < 3) throw std::invalid_argument("perp_quotient: rank too small");
  const unsigned g = (h - 1) / 2;
  // Gram of the images of f_1,...,f_2g: tridiagonal with zero diagonal.
  BitMatrix gram(2 * g);
  for (unsigned i = 0; i + 1 < 2 * g; ++i) {
    gram.set(i, i + 1, true);
    gram.set(i + 1, i, true);
  }
  return Reduction{h, g, BilinearForm(std::move(gram))};
}

}  // namespace mcgcheck::gf2forms
