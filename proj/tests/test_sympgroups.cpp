#include <set>

#include "doctest.h"
#include "mcgcheck/mcgmodel.hpp"
#include "mcgcheck/sympgroups.hpp"
#include "oracles.hpp"

using namespace mcgcheck;
using namespace mcgcheck::sympgroups;
using gf2forms::BitMatrix;
using gf2forms::BitVector;
using gf2forms::QuadraticForm;
using perm::Perm;
using perm::PermGroup;

TEST_CASE("index formulas and symplectic orders") {
  CHECK(m_indices(1) == std::pair<uint64_t, uint64_t>{1, 3});
  CHECK(m_indices(2) == std::pair<uint64_t, uint64_t>{6, 10});
  CHECK(m_indices(3) == std::pair<uint64_t, uint64_t>{28, 36});
  CHECK(m_indices(4) == std::pair<uint64_t, uint64_t>{120, 136});
  CHECK(sp_order(1) == 6);
  CHECK(sp_order(2) == 720);
  CHECK(sp_order(3) == 1451520);
  CHECK_THROWS(m_indices(0));
}

TEST_CASE("vector perm bridge") {
  BitMatrix m = gf2forms::transvection(gf2forms::BilinearForm::standard_symplectic(2),
                                       BitVector::from_string("1100"));
  Perm p = vector_perm(m);
  CHECK(matrix_of_vector_perm(p, 4) == m);
  // a non-linear permutation is rejected
  CHECK_THROWS(matrix_of_vector_perm(Perm::parse_cycles(15, "(1 2)"), 4));
}

TEST_CASE("sp models") {
  SUBCASE("g=1 has order 6 on 3 points") {
    SpModel m = build_sp(1);
    CHECK(m.vector_image.degree() == 3);
    CHECK(m.vector_image.order() == 6);
  }
  SUBCASE("g=2 has order 720 on 15 points") {
    SpModel m = build_sp(2);
    CHECK(m.vector_image.degree() == 15);
    CHECK(m.vector_image.order() == 720);
    for (const BitMatrix& g : m.mats) CHECK(m.form.preserved_by(g));
  }
  SUBCASE("g=3 matches the order oracle") {
    SpModel m = build_sp(3);
    CHECK(m.vector_image.order() == sp_order(3));
  }
  CHECK_THROWS(build_sp(0));
  CHECK_THROWS(build_sp(6));
}

TEST_CASE("form orbit actions at g=2") {
  SpModel m = build_sp(2);
  REQUIRE(m.class_masks[0].size() == 10);
  REQUIRE(m.class_masks[1].size() == 6);

  perm::Representation minus = form_orbit_action(m, 1);
  CHECK(minus.degree() == 6);
  CHECK(minus.transitive());
  for (const Perm& p : minus.images()) CHECK(p.support().size() == 2);

  perm::Representation plus = form_orbit_action(m, 0);
  CHECK(plus.degree() == 10);
  CHECK(plus.transitive());
  for (const Perm& p : plus.images()) CHECK(p.support().size() == 6);
}

TEST_CASE("orthogonal stabilizers") {
  SpModel m2 = build_sp(2);
  PermGroup minus_stab = orthogonal_stabilizer(m2, m2.canonical_form(1));
  CHECK(minus_stab.order() == 120);
  PermGroup plus_stab = orthogonal_stabilizer(m2, m2.canonical_form(0));
  CHECK(plus_stab.order() == 72);

  SpModel m3 = build_sp(3);
  CHECK(orthogonal_stabilizer(m3, m3.canonical_form(1)).order() == 51840);
  CHECK(orthogonal_stabilizer(m3, m3.canonical_form(0)).order() ==
        sp_order(3) / 36);

  SpModel m4 = build_sp(4);
  CHECK(orthogonal_stabilizer(m4, m4.canonical_form(1)).order() == sp_order(4) / 120);
  CHECK(orthogonal_stabilizer(m4, m4.canonical_form(0)).order() == sp_order(4) / 136);

  // index times orbit recovers the group order
  CHECK(m2.vector_image.order() == 120 * 6);
  CHECK(m2.vector_image.order() == 72 * 10);
}

TEST_CASE("coset action on an orthogonal stabilizer has the orbit degree") {
  SpModel m = build_sp(2);
  QuadraticForm q0 = m.canonical_form(1);
  perm::Representation named(15);
  for (size_t k = 0; k < m.names.size(); ++k) named.add(m.names[k], m.vec_perms[k]);
  auto member = [&](const Perm& p) {
    BitMatrix mat = matrix_of_vector_perm(p, 4);
    return gf2forms::act_on_form(mat, q0) == q0;
  };
  perm::Representation cosets = perm::coset_action(named, member, 10);
  CHECK(cosets.degree() == 6);
  CHECK(cosets.transitive());
  // same representation as the direct orbit action, up to conjugacy
  auto y = perm::conjugating_element(form_orbit_action(m, 1), cosets);
  CHECK(y.has_value());
}

TEST_CASE("coset action at g=3 recovers the index-36 degree") {
  SpModel m = build_sp(3);
  QuadraticForm q0 = m.canonical_form(0);
  perm::Representation named(63);
  for (size_t k = 0; k < m.names.size(); ++k) named.add(m.names[k], m.vec_perms[k]);
  auto member = [&](const Perm& p) {
    return gf2forms::act_on_form(matrix_of_vector_perm(p, 6), q0) == q0;
  };
  auto cosets = perm::coset_action(named, member, 40);
  CHECK(cosets.degree() == 36);
  CHECK(cosets.transitive());
}

TEST_CASE("rank and unrank are mutually inverse") {
  for (size_t r = 0; r < 720; ++r)
    CHECK(AutomorphismTable::rank(AutomorphismTable::unrank(r)) == r);
}

TEST_CASE("the exceptional automorphism") {
  const AutomorphismTable& alpha = alpha_table();
  auto pc = [](const char* s) { return Perm::parse_cycles(6, s); };

  SUBCASE("generator assignments match the defining table") {
    CHECK(alpha.apply(pc("(1 2)")) == pc("(1 2)(3 5)(4 6)"));
    CHECK(alpha.apply(pc("(2 3)")) == pc("(1 3)(2 4)(5 6)"));
    CHECK(alpha.apply(pc("(3 4)")) == pc("(1 2)(3 6)(4 5)"));
    CHECK(alpha.apply(pc("(4 5)")) == pc("(1 3)(2 5)(4 6)"));
    CHECK(alpha.apply(pc("(5 6)")) == pc("(1 2)(3 4)(5 6)"));
    CHECK(alpha.apply(Perm(6)) == Perm(6));
  }
  SUBCASE("well defined: bijective and multiplicative") {
    CHECK(alpha.is_bijective());
    CHECK(alpha.is_multiplicative());
  }
  SUBCASE("images satisfy the Coxeter relations of the transpositions") {
    std::vector<Perm> s, img;
    for (unsigned i = 1; i <= 5; ++i) {
      s.push_back(pc(("(" + std::to_string(i) + " " + std::to_string(i + 1) + ")").c_str()));
      img.push_back(alpha.apply(s.back()));
    }
    for (unsigned i = 0; i < 5; ++i) {
      CHECK((img[i] * img[i]).is_identity());
      for (unsigned j = i + 1; j < 5; ++j) {
        if (j == i + 1)
          CHECK(img[i] * img[j] * img[i] == img[j] * img[i] * img[j]);
        else
          CHECK(img[i] * img[j] == img[j] * img[i]);
      }
    }
  }
  SUBCASE("not inner, but conjugation tables are recognized") {
    CHECK_FALSE(is_inner(alpha).has_value());
    auto w = is_inner(conjugation_table(pc("(1 2)")));
    REQUIRE(w.has_value());
    CHECK(perm::conjugate(*w, pc("(3 4)")) ==
          perm::conjugate(pc("(1 2)"), pc("(3 4)")));
    CHECK(is_inner(compose_tables(alpha, alpha)).has_value());
  }
}

TEST_CASE("alpha twist of the orthogonal subgroups") {
  SpModel m = build_sp(2);
  S6Embedding emb = sp4_s6_embedding(m);

  PermGroup ominus = emb.map_group(orthogonal_stabilizer(m, m.canonical_form(1)));
  PermGroup oplus = emb.map_group(orthogonal_stabilizer(m, m.canonical_form(0)));
  REQUIRE(ominus.order() == 120);
  REQUIRE(oplus.order() == 72);

  PermGroup twisted = alpha_twisted_subgroup(m);
  CHECK(twisted.order() == 120);
  CHECK(720 / twisted.order() == 6);

  SUBCASE("the twisted copy is not conjugate to the stabilizer") {
    CHECK_FALSE(subgroup_conjugator(twisted, ominus).has_value());
    // transitivity separates them directly as well
    CHECK(perm::is_transitive(6, twisted.generators()));
    CHECK_FALSE(perm::is_transitive(6, ominus.generators()));
  }
  SUBCASE("the Arf-0 stabilizer is conjugate to its twist") {
    const AutomorphismTable& alpha = alpha_table();
    std::vector<Perm> gens;
    for (const Perm& g : oplus.generators()) gens.push_back(alpha.apply(g));
    PermGroup twisted_plus(6, gens);
    REQUIRE(twisted_plus.order() == 72);
    auto u = subgroup_conjugator(twisted_plus, oplus);
    REQUIRE(u.has_value());
    for (const Perm& g : twisted_plus.generators())
      CHECK(oplus.contains(perm::conjugate(*u, g)));
  }
  SUBCASE("the twisted conjugacy class is stable under re-pinning the labels") {
    // compose the embedding with an inner relabelling and rebuild
    PermGroup stab = orthogonal_stabilizer(m, m.canonical_form(1));
    for (const char* c : {"(1 3 5)", "(2 6)"}) {
      Perm inner = Perm::parse_cycles(6, c);
      const AutomorphismTable& alpha = alpha_table();
      std::vector<Perm> gens;
      for (const Perm& g : stab.generators())
        gens.push_back(alpha.apply(perm::conjugate(inner, emb.to_s6(g))));
      PermGroup re_twisted(6, gens);
      CHECK(re_twisted.order() == 120);
      CHECK(subgroup_conjugator(re_twisted, twisted).has_value());
      CHECK_FALSE(subgroup_conjugator(re_twisted, ominus).has_value());
    }
  }
}
