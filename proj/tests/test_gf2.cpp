#include <random>

#include "doctest.h"
#include "mcgcheck/gf2.hpp"

using namespace mcgcheck::gf2forms;

namespace {
BitMatrix random_matrix(unsigned n, std::mt19937& rng) {
  BitMatrix m(n);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) m.set(i, j, rng() & 1);
  return m;
}
}  // namespace

TEST_CASE("bit vector basics") {
  BitVector v = BitVector::from_string("11110");
  CHECK(v.dim() == 5);
  CHECK(v.weight() == 4);
  CHECK(v.to_string() == "11110");
  CHECK((v ^ BitVector::unit(5, 4)).weight() == 5);
  CHECK(BitVector::ones(5).weight() == 5);
  CHECK(dot(v, BitVector::from_string("10001")));
}

TEST_CASE("rank and kernel") {
  CHECK(rank_kernel(BitMatrix::identity(6)).rank == 6);
  CHECK(rank_kernel(BitMatrix::identity(6)).kernel.empty());
  BitMatrix zero(4);
  auto rk = rank_kernel(zero);
  CHECK(rk.rank == 0);
  CHECK(rk.kernel.size() == 4);
  // the rank-5 identity pairing Gram is invertible
  CHECK(rank_kernel(BilinearForm::identity_form(5).gram()).rank == 5);

  std::mt19937 rng(5);
  for (int t = 0; t < 40; ++t) {
    BitMatrix m = random_matrix(7, rng);
    auto [rank, kernel] = rank_kernel(m);
    CHECK(rank + kernel.size() == 7);
    for (const auto& k : kernel) CHECK(m.apply(k).is_zero());
  }
}

TEST_CASE("matrix inverse") {
  std::mt19937 rng(9);
  int found = 0;
  while (found < 20) {
    BitMatrix m = random_matrix(6, rng);
    if (!m.invertible()) continue;
    ++found;
    CHECK((m * m.inverse()).is_identity());
    CHECK((m.inverse() * m).is_identity());
  }
}

TEST_CASE("transvections") {
  BilinearForm b2 = BilinearForm::standard_symplectic(1);
  BitVector a = BitVector::unit(2, 0);
  BitMatrix t = transvection(b2, a);
  CHECK(t.apply(a) == a);
  CHECK(t.apply(BitVector::unit(2, 1)) == (a ^ BitVector::unit(2, 1)));

  CHECK_THROWS(transvection(b2, BitVector::zero(2)));
  // a one-sided class pairs with itself under the identity pairing
  CHECK_THROWS(transvection(BilinearForm::identity_form(5),
                            BitVector::from_string("11100")));

  // exhaustive form preservation and involutivity, dimensions 2..6
  for (unsigned n : {2u, 4u, 6u}) {
    BilinearForm b = BilinearForm::standard_symplectic(n / 2);
    for (uint64_t bits = 1; bits < (uint64_t{1} << n); ++bits) {
      BitVector v(n, bits);
      BitMatrix m = transvection(b, v);
      CHECK((m * m).is_identity());
      CHECK(b.preserved_by(m));
      for (uint64_t xb = 0; xb < (uint64_t{1} << n); ++xb)
        for (uint64_t yb = 0; yb < (uint64_t{1} << n); ++yb) {
          BitVector x(n, xb), y(n, yb);
          CHECK(b.eval(m.apply(x), m.apply(y)) == b.eval(x, y));
        }
    }
  }
  // even-weight classes under the identity pairing work the same way
  BilinearForm id6 = BilinearForm::identity_form(6);
  for (uint64_t bits = 1; bits < 64; ++bits) {
    BitVector v(6, bits);
    if (v.weight() % 2) continue;
    BitMatrix m = transvection(id6, v);
    CHECK((m * m).is_identity());
    CHECK(id6.preserved_by(m));
  }
}

TEST_CASE("symplectic basis") {
  SUBCASE("standard form returns the standard basis") {
    BilinearForm b = BilinearForm::standard_symplectic(2);
    auto basis = symplectic_basis(b);
    REQUIRE(basis.size() == 4);
    for (unsigned i = 0; i < 4; ++i) CHECK(basis[i] == BitVector::unit(4, i));
  }
  SUBCASE("reduced crosscap form at rank 5 yields a standard Gram") {
    auto red = perp_quotient(BilinearForm::identity_form(5), BitVector::ones(5));
    auto basis = symplectic_basis(red.reduced);
    REQUIRE(basis.size() == 4);
    for (unsigned i = 0; i < 4; ++i)
      for (unsigned j = 0; j < 4; ++j) {
        bool expect = (i / 2 == j / 2) && (i != j);
        CHECK(red.reduced.eval(basis[i], basis[j]) == expect);
      }
  }
  SUBCASE("odd dimension is rejected") {
    BitMatrix g(3);
    g.set(0, 1, true);
    g.set(1, 0, true);
    CHECK_THROWS(symplectic_basis(BilinearForm(std::move(g))));
  }
}

TEST_CASE("arf invariant") {
  BilinearForm b = BilinearForm::standard_symplectic(2);
  CHECK(arf(QuadraticForm(b, 0b0000)) == 0);
  CHECK(arf(QuadraticForm(b, 0b0011)) == 1);  // q(a1)=q(b1)=1

  SUBCASE("refinement counts per class") {
    // dimension 4: 10 forms of Arf 0 and 6 of Arf 1
    int counts[2] = {0, 0};
    for (uint64_t vals = 0; vals < 16; ++vals)
      counts[arf(QuadraticForm(b, vals))]++;
    CHECK(counts[0] == 10);
    CHECK(counts[1] == 6);
    // general count: 2^{g-1}(2^g +- 1) refinements, g <= 5
    for (unsigned g = 1; g <= 5; ++g) {
      BilinearForm bg = BilinearForm::standard_symplectic(g);
      auto basis = symplectic_basis(bg);
      uint64_t plus = 0, minus = 0;
      for (uint64_t vals = 0; vals < (uint64_t{1} << (2 * g)); ++vals)
        (arf(QuadraticForm(bg, vals), basis) ? minus : plus)++;
      CHECK(plus == (uint64_t{1} << (g - 1)) * ((uint64_t{1} << g) + 1));
      CHECK(minus == (uint64_t{1} << (g - 1)) * ((uint64_t{1} << g) - 1));
    }
  }
  SUBCASE("arf is independent of the basis used") {
    auto red = perp_quotient(BilinearForm::identity_form(5), BitVector::ones(5));
    auto basis = symplectic_basis(red.reduced);
    for (uint64_t vals = 0; vals < 16; ++vals) {
      QuadraticForm q(red.reduced, vals);
      CHECK(arf(q) == arf(q, basis));
    }
  }
}

TEST_CASE("action on quadratic forms") {
  BilinearForm b = BilinearForm::standard_symplectic(2);
  QuadraticForm q(b, 0b0110);
  SUBCASE("identity acts trivially") {
    CHECK(act_on_form(BitMatrix::identity(4), q) == q);
  }
  SUBCASE("non-preserving matrices are rejected") {
    BitMatrix bad(4);  // the zero map certainly does not preserve b
    CHECK_THROWS(act_on_form(bad, q));
  }
  SUBCASE("arf preserved and action axiom holds") {
    std::mt19937 rng(17);
    std::vector<BitMatrix> sp;
    for (uint64_t bits = 1; bits < 16; ++bits)
      sp.push_back(transvection(b, BitVector(4, bits)));
    for (int t = 0; t < 100; ++t) {
      BitMatrix m = sp[rng() % sp.size()] * sp[rng() % sp.size()];
      uint64_t vals = rng() & 15;
      QuadraticForm qq(b, vals);
      CHECK(arf(act_on_form(m, qq)) == arf(qq));
      BitMatrix n = sp[rng() % sp.size()];
      CHECK(act_on_form(m, act_on_form(n, qq)) == act_on_form(m * n, qq));
    }
  }
}

TEST_CASE("perp quotient of the crosscap pairing") {
  SUBCASE("odd rank restricts, even rank quotients") {
    for (unsigned h = 5; h <= 12; ++h) {
      auto red = perp_quotient(BilinearForm::identity_form(h), BitVector::ones(h));
      CHECK(red.g == (h - 1) / 2);
      CHECK(red.reduced.dim() == 2 * red.g);
      CHECK(red.reduced.alternating());
      CHECK(red.reduced.nondegenerate());
      // projection/lift are mutually inverse on the reduced side
      for (unsigned i = 0; i < 2 * red.g; ++i) {
        BitVector e = BitVector::unit(2 * red.g, i);
        CHECK(red.project(red.lift(e)) == e);
      }
      // the reduced form computes the pairing of lifts
      for (unsigned i = 0; i < 2 * red.g; ++i)
        for (unsigned j = 0; j < 2 * red.g; ++j) {
          BitVector ei = BitVector::unit(2 * red.g, i), ej = BitVector::unit(2 * red.g, j);
          CHECK(red.reduced.eval(ei, ej) ==
                BilinearForm::identity_form(h).eval(red.lift(ei), red.lift(ej)));
        }
    }
  }
  SUBCASE("even rank: w lies in its own perp and spans the radical") {
    BilinearForm b = BilinearForm::identity_form(6);
    BitVector w = BitVector::ones(6);
    CHECK_FALSE(b.eval(w, w));
    auto red = perp_quotient(b, w);
    CHECK(red.reduced.dim() == 4);
    CHECK(red.project(w).is_zero());
  }
  SUBCASE("only the all-ones reduction of the identity pairing is supported") {
    CHECK_THROWS(perp_quotient(BilinearForm::identity_form(6),
                               BitVector::from_string("111100")));
    CHECK_THROWS(perp_quotient(BilinearForm::standard_symplectic(3),
                               BitVector::ones(6)));
  }
  SUBCASE("induced maps preserve the reduced form") {
    for (unsigned h : {5u, 6u}) {
      BilinearForm b = BilinearForm::identity_form(h);
      auto red = perp_quotient(b, BitVector::ones(h));
      std::vector<BitMatrix> images;
      for (unsigned i = 1; i + 1 <= h; ++i) {
        uint64_t bits = uint64_t{3} << (i - 1);  // e_i + e_{i+1}
        images.push_back(transvection(b, BitVector(h, bits)));
      }
      images.push_back(transvection(b, BitVector::from_string(h == 5 ? "11110" : "111100")));
      BitMatrix swap = BitMatrix::identity(h);  // e_{h-1} <-> e_h
      swap.set(h - 2, h - 2, false);
      swap.set(h - 1, h - 1, false);
      swap.set(h - 2, h - 1, true);
      swap.set(h - 1, h - 2, true);
      images.push_back(swap);
      for (const BitMatrix& m : images) {
        REQUIRE(b.preserved_by(m));
        CHECK(red.reduced.preserved_by(red.push(m)));
      }
      // pushing is multiplicative
      CHECK(red.push(images[0] * images[1]) == red.push(images[0]) * red.push(images[1]));
    }
  }
}
