#include <algorithm>
#include <set>

#include "doctest.h"
#include "mcgcheck/mcgmodel.hpp"
#include "mcgcheck/perm_group.hpp"

using namespace mcgcheck;
using namespace mcgcheck::mcgmodel;
using gf2forms::BilinearForm;
using gf2forms::BitMatrix;
using gf2forms::BitVector;

namespace {

// permutation of the nonzero vectors (numbered by their bit patterns)
perm::Perm vector_perm(const BitMatrix& m) {
  const unsigned n = m.dim();
  const uint32_t count = (1u << n) - 1;
  std::vector<uint32_t> img(count);
  for (uint32_t v = 1; v <= count; ++v)
    img[v - 1] = static_cast<uint32_t>(m.apply(BitVector(n, v)).bits());
  return perm::Perm(std::move(img));
}

perm::PermGroup twist_image_group(const MatrixRep& rep) {
  std::vector<perm::Perm> gens;
  for (size_t k = 0; k < rep.names().size(); ++k)
    if (rep.names()[k] != "U") gens.push_back(vector_perm(rep.images()[k]));
  return perm::PermGroup((1u << rep.dim()) - 1, gens);
}

perm::Order aut_order(unsigned h) {
  const unsigned g = (h - 1) / 2;
  perm::Order sp = 1;
  for (unsigned i = 0; i < g * g; ++i) sp *= 2;
  for (unsigned i = 1; i <= g; ++i) sp *= ((uint64_t{1} << (2 * i)) - 1);
  if (h % 2 == 0)
    for (unsigned i = 0; i < 2 * g + 1; ++i) sp *= 2;
  return sp;
}

}  // namespace

TEST_CASE("surface parameters") {
  SurfaceModel s5(5);
  CHECK(s5.g == 2);
  CHECK(s5.r == 1);
  SurfaceModel s8(8, 0);
  CHECK(s8.g == 3);
  CHECK(s8.r == 2);
  CHECK_THROWS(SurfaceModel(3));
}

TEST_CASE("curve classes") {
  Curve c = curve_class(5, 1, 4);
  CHECK(c.cls.to_string() == "11110");
  CHECK(c.two_sided);
  Curve one_sided = curve_class(5, 1, 1);
  CHECK(one_sided.cls.weight() == 1);
  CHECK_FALSE(one_sided.two_sided);
  CHECK_THROWS(curve_class(5, 3, 6));
  // alpha_{2g+2} = gamma_{1,2g}
  for (unsigned h = 5; h <= 9; ++h) {
    unsigned g = (h - 1) / 2;
    CHECK(humphries_system(h).alpha(2 * g + 2).cls == curve_class(h, 1, 2 * g).cls);
  }
}

TEST_CASE("humphries system") {
  SUBCASE("h=5 aliases the extra curve to alpha_0") {
    auto sys = humphries_system(5);
    CHECK(sys.alpha(0).cls == sys.alpha(6).cls);
  }
  SUBCASE("h=7 keeps them distinct") {
    auto sys = humphries_system(7);
    CHECK(sys.alpha(8).cls == curve_class(7, 1, 6).cls);
    CHECK(sys.alpha(8).cls != sys.alpha(0).cls);
  }
  SUBCASE("all named curves are two-sided") {
    for (unsigned h = 5; h <= 12; ++h) {
      auto sys = humphries_system(h);
      for (const Curve& c : sys.curves) CHECK(c.two_sided);
    }
  }
  CHECK_THROWS(humphries_system(4));
}

TEST_CASE("geometric intersection via interval interleaving") {
  auto sys = humphries_system(7);
  CHECK(geometric_intersection(sys.alpha(1), sys.alpha(2)) == 1);
  CHECK(geometric_intersection(sys.alpha(0), sys.alpha(4)) == 1);
  CHECK(geometric_intersection(sys.alpha(0), sys.alpha(3)) == 0);
  CHECK(geometric_intersection(curve_class(7, 2, 3), curve_class(7, 5, 6)) == 0);
  // parity coherence with the intersection pairing across the whole system
  for (unsigned h = 5; h <= 12; ++h) {
    auto s = humphries_system(h);
    BilinearForm iota = BilinearForm::identity_form(h);
    for (size_t a = 0; a < s.curves.size(); ++a)
      for (size_t b = a + 1; b < s.curves.size(); ++b) {
        if (s.curves[a].cls == s.curves[b].cls) continue;  // g=2 alias
        unsigned geo = geometric_intersection(s.curves[a], s.curves[b]);
        CHECK(geo % 2 == (iota.eval(s.curves[a].cls, s.curves[b].cls) ? 1u : 0u));
      }
  }
}

TEST_CASE("homology representation") {
  MatrixRep rep = homology_rep(5);
  SUBCASE("U swaps the two rightmost basis vectors") {
    const BitMatrix& u = rep.image("U");
    CHECK(u.apply(BitVector::unit(5, 3)) == BitVector::unit(5, 4));
    CHECK(u.apply(BitVector::unit(5, 4)) == BitVector::unit(5, 3));
    for (unsigned i = 0; i < 3; ++i)
      CHECK(u.apply(BitVector::unit(5, i)) == BitVector::unit(5, i));
  }
  SUBCASE("twist images are involutions preserving the pairing") {
    for (unsigned h = 5; h <= 8; ++h) {
      MatrixRep r = homology_rep(h);
      BilinearForm iota = BilinearForm::identity_form(h);
      for (const BitMatrix& m : r.images()) {
        CHECK((m * m).is_identity());
        CHECK(iota.preserved_by(m));
      }
    }
  }
  SUBCASE("twist images generate the full automorphism group of the pairing") {
    for (unsigned h = 5; h <= 7; ++h)
      CHECK(twist_image_group(homology_rep(h)).order() == aut_order(h));
  }
  SUBCASE("the swap image is itself a product of twist images") {
    // recorded as a regression value: containment holds for both parities
    for (unsigned h : {5u, 6u, 7u}) {
      MatrixRep r = homology_rep(h);
      CHECK(twist_image_group(r).contains(vector_perm(r.image("U"))));
    }
  }
  CHECK_THROWS(homology_rep(4));
  CHECK_THROWS(homology_rep(13));
}

TEST_CASE("epsilon reduction") {
  SUBCASE("image order is the full symplectic order for h=5") {
    EpsilonRep eps = epsilon(5);
    CHECK(twist_image_group(eps.rep).order() == 720);
  }
  SUBCASE("image order is the full symplectic order for h=6 and h=7") {
    CHECK(twist_image_group(epsilon(6).rep).order() == 720);
    CHECK(twist_image_group(epsilon(7).rep).order() == 1451520);
  }
  SUBCASE("reduced twist images are the transvections by reduced classes") {
    for (unsigned h : {5u, 6u, 7u}) {
      EpsilonRep eps = epsilon(h);
      auto sys = humphries_system(h);
      for (unsigned i = 0; i <= h - 1; ++i) {
        BitVector cls = eps.reduction.project(sys.alpha(i).cls);
        CHECK(eps.rep.image("T" + std::to_string(i)) ==
              gf2forms::transvection(eps.reduction.reduced, cls));
      }
    }
  }
  SUBCASE("relation catalogue holds for the homology and reduced images") {
    for (unsigned h : {5u, 6u, 7u}) {
      for (Flavor f : {Flavor::M, Flavor::T}) {
        for (bool reduced : {false, true}) {
          MatrixRep full = reduced ? epsilon(h).rep : homology_rep(h);
          MatrixRep rep = full;
          const std::string t_prev = "T" + std::to_string(h - 2);
          const BitMatrix& u = full.image("U");
          rep.add("U^2", u * u);
          rep.add("U" + t_prev + "U^-1", u * full.image(t_prev) * u.inverse());
          if (h == 5) rep.add("UT0U^-1", u * full.image("T0") * u.inverse());
          auto report = check_relations(rep, expected_relations(h, f));
          CHECK(report.all_pass);
          CHECK_FALSE(report.abelian_image);
        }
      }
    }
  }
}

TEST_CASE("generator systems name the expected sets") {
  auto m5 = generator_system(5, Flavor::M).names();
  CHECK(m5 == std::vector<std::string>{"T0", "T1", "T2", "T3", "T4", "U"});
  auto t5 = generator_system(5, Flavor::T).names();
  CHECK(t5 == std::vector<std::string>{"T0", "T1", "T2", "T3", "T4", "U^2",
                                       "UT3U^-1", "UT0U^-1"});
  auto t7 = generator_system(7, Flavor::T).names();
  CHECK(std::find(t7.begin(), t7.end(), "UT0U^-1") == t7.end());
  CHECK(std::find(t7.begin(), t7.end(), "UT5U^-1") != t7.end());
  CHECK_THROWS(generator_system(4, Flavor::M));
}

TEST_CASE("relation catalogue contents") {
  auto has = [](const std::vector<Relation>& rels, const std::string& text) {
    for (const Relation& r : rels)
      if (r.display() == text) return true;
    return false;
  };
  SUBCASE("twist inversion appears for flavor M") {
    auto rels = expected_relations(7, Flavor::M);
    CHECK(has(rels, "U T6 U^-1 = T6^-1"));
    CHECK(has(rels, "U T0 = T0 U"));
  }
  SUBCASE("flavor T rewrites the U-relations") {
    auto rels = expected_relations(7, Flavor::T);
    CHECK(has(rels, "U^2 T6 = T6 U^2"));
    CHECK(has(rels, "UT5U^-1 T5^-1 UT5U^-1 = T5^-1 UT5U^-1 T5^-1"));
  }
  SUBCASE("h=6 includes commutation of U with T0") {
    CHECK(has(expected_relations(6, Flavor::M), "U T0 = T0 U"));
    CHECK_FALSE(has(expected_relations(5, Flavor::M), "U T0 = T0 U"));
  }
  SUBCASE("h=5 includes the extra conjugated braid") {
    auto rels = expected_relations(5, Flavor::T);
    CHECK(has(rels, "UT0U^-1 T0^-1 UT0U^-1 = T0^-1 UT0U^-1 T0^-1"));
  }
}

TEST_CASE("check_relations on permutation representations") {
  auto pc = [](const char* s) { return perm::Perm::parse_cycles(6, s); };
  SUBCASE("the degree-6 transposition table satisfies the h=5 twist catalogue") {
    perm::Representation rep(6);
    rep.add("T0", pc("(5 6)"));
    rep.add("T1", pc("(1 2)"));
    rep.add("T2", pc("(2 3)"));
    rep.add("T3", pc("(3 4)"));
    rep.add("T4", pc("(4 5)"));
    auto report = check_relations(rep, twist_relations(5));
    CHECK(report.all_pass);
    CHECK_FALSE(report.abelian_image);
  }
  SUBCASE("a broken braid fails") {
    perm::Representation rep(6);
    rep.add("T1", pc("(1 2)"));
    rep.add("T2", pc("(4 5)"));
    auto report = check_relations(rep, {Relation::braid("T1", "T2")});
    CHECK_FALSE(report.all_pass);
  }
  SUBCASE("an all-identity representation passes and is flagged abelian") {
    perm::Representation rep(6);
    for (const char* n : {"T0", "T1", "T2", "T3", "T4"}) rep.add(n, perm::Perm(6));
    auto report = check_relations(rep, twist_relations(5));
    CHECK(report.all_pass);
    CHECK(report.abelian_image);
  }
  SUBCASE("missing generator names are an error") {
    perm::Representation rep(6);
    rep.add("T1", pc("(1 2)"));
    CHECK_THROWS(check_relations(rep, {Relation::braid("T1", "T9")}));
  }
}
