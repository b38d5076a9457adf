#include "mcgcheck/mcgmodel.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcgcheck::mcgmodel {

using gf2forms::BilinearForm;
using gf2forms::BitMatrix;
using gf2forms::BitVector;

SurfaceModel::SurfaceModel(unsigned h_, unsigned n_) : h(h_), n(n_) {
  if (h < 4) throw std::invalid_argument("SurfaceModel: genus must be at least 4");
  if (n > 1) throw std::invalid_argument("SurfaceModel: boundary count must be 0 or 1");
  g = (h - 1) / 2;
  r = h - 2 * g;
}

Curve curve_class(unsigned h, unsigned i, unsigned j) {
  if (i < 1 || i > j || j > h)
    throw std::invalid_argument("curve_class: need 1 <= i <= j <= h");
  uint64_t bits = 0;
  for (unsigned k = i; k <= j; ++k) bits |= uint64_t{1} << (k - 1);
  return Curve{h, i, j, BitVector(h, bits), (j - i) % 2 == 1};
}

HumphriesSystem humphries_system(unsigned h) {
  if (h < 5) throw std::invalid_argument("humphries_system: requires h >= 5");
  const unsigned g = (h - 1) / 2;
  HumphriesSystem sys{h, g, {}};
  sys.curves.push_back(curve_class(h, 1, 4));  // alpha_0
  for (unsigned i = 1; i <= h - 1; ++i) sys.curves.push_back(curve_class(h, i, i + 1));
  sys.curves.push_back(curve_class(h, 1, 2 * g));  // alpha_{2g+2}
  return sys;
}

const Curve& HumphriesSystem::alpha(unsigned idx) const {
  if (idx <= h - 1) return curves[idx];
  if (idx == 2 * g + 2) return curves.back();
  throw std::invalid_argument("HumphriesSystem: no such curve name");
}

unsigned geometric_intersection(const Curve& c1, const Curve& c2) {
  if (c1.h != c2.h)
    throw std::invalid_argument("geometric_intersection: different surfaces");
  const Curve& a = (c1.i <= c2.i) ? c1 : c2;
  const Curve& b = (c1.i <= c2.i) ? c2 : c1;
  if (a.i < b.i && b.i <= a.j && a.j < b.j) return 1;  // strict interleave
  return 0;  // disjoint or nested
}

std::string twist_name(unsigned idx, unsigned g) {
  if (g == 2 && idx == 2 * g + 2) return "T0";
  return "T" + std::to_string(idx);
}

std::vector<std::string> GeneratorSystem::names() const {
  std::vector<std::string> out;
  for (unsigned i = 0; i <= h - 1; ++i) out.push_back("T" + std::to_string(i));
  if (flavor == Flavor::M) {
    out.push_back("U");
  } else {
    out.push_back("U^2");
    out.push_back("UT" + std::to_string(h - 2) + "U^-1");
    if (h == 5) out.push_back("UT0U^-1");
  }
  return out;
}

GeneratorSystem generator_system(unsigned h, Flavor flavor) {
  if (h < 5) throw std::invalid_argument("generator_system: requires h >= 5");
  return GeneratorSystem{h, (h - 1) / 2, flavor};
}

void MatrixRep::add(std::string name, BitMatrix m) {
  if (m.dim() != dim_) throw std::invalid_argument("MatrixRep: dimension mismatch");
  if (has(name)) throw std::invalid_argument("MatrixRep: duplicate name " + name);
  names_.push_back(std::move(name));
  mats_.push_back(std::move(m));
}

bool MatrixRep::has(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

const BitMatrix& MatrixRep::image(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    throw std::invalid_argument("MatrixRep: unknown generator " + std::string(name));
  return mats_[static_cast<size_t>(it - names_.begin())];
}

MatrixRep homology_rep(unsigned h) {
  if (h < 5 || h > 12)
    throw std::invalid_argument("homology_rep: supported range is 5 <= h <= 12");
  const unsigned g = (h - 1) / 2;
  const BilinearForm iota = BilinearForm::identity_form(h);
  const HumphriesSystem sys = humphries_system(h);

  MatrixRep rep(h);
  for (unsigned i = 0; i <= h - 1; ++i)
    rep.add("T" + std::to_string(i), gf2forms::transvection(iota, sys.alpha(i).cls));
  if (twist_name(2 * g + 2, g) != "T0")
    rep.add("T" + std::to_string(2 * g + 2),
            gf2forms::transvection(iota, sys.alpha(2 * g + 2).cls));

  BitMatrix u = BitMatrix::identity(h);  // swap e_{h-1} <-> e_h
  u.set(h - 2, h - 2, false);
  u.set(h - 1, h - 1, false);
  u.set(h - 2, h - 1, true);
  u.set(h - 1, h - 2, true);
  rep.add("U", std::move(u));
  return rep;
}

EpsilonRep epsilon(unsigned h) {
  MatrixRep full = homology_rep(h);
  auto red = gf2forms::perp_quotient(BilinearForm::identity_form(h),
                                     BitVector::ones(h));
  MatrixRep reduced(2 * red.g);
  for (size_t k = 0; k < full.names().size(); ++k)
    reduced.add(full.names()[k], red.push(full.images()[k]));
  return EpsilonRep{std::move(reduced), std::move(red)};
}

namespace {

Word concat(std::initializer_list<Atom> atoms) { return Word(atoms); }

std::string word_text(const Word& w) {
  std::string out;
  for (const Atom& a : w) {
    if (!out.empty()) out += ' ';
    out += a.name;
    if (a.inv) out += "^-1";
  }
  return out;
}

}  // namespace

std::string Relation::display() const { return word_text(lhs) + " = " + word_text(rhs); }

Relation Relation::commute(const std::string& a, const std::string& b) {
  return Relation{RelKind::commute, concat({{a}, {b}}), concat({{b}, {a}})};
}

Relation Relation::braid(const std::string& a, const std::string& b) {
  return Relation{RelKind::braid, concat({{a}, {b}, {a}}), concat({{b}, {a}, {b}})};
}

Relation Relation::braid_with_inverse(const std::string& a, const std::string& b) {
  return Relation{RelKind::braid_with_inverse,
                  concat({{a}, {b, true}, {a}}),
                  concat({{b, true}, {a}, {b, true}})};
}

Relation Relation::twist_inversion(const std::string& u, const std::string& a) {
  return Relation{RelKind::twist_inversion,
                  concat({{u}, {a}, {u, true}}),
                  concat({{a, true}})};
}

std::vector<Relation> twist_relations(unsigned h) {
  const unsigned g = (h - 1) / 2;
  const HumphriesSystem sys = humphries_system(h);
  std::vector<unsigned> idxs;
  for (unsigned i = 0; i <= h - 1; ++i) idxs.push_back(i);
  if (twist_name(2 * g + 2, g) != "T0") idxs.push_back(2 * g + 2);

  std::vector<Relation> rels;
  for (size_t a = 0; a < idxs.size(); ++a)
    for (size_t b = a + 1; b < idxs.size(); ++b) {
      const std::string na = twist_name(idxs[a], g);
      const std::string nb = twist_name(idxs[b], g);
      if (geometric_intersection(sys.alpha(idxs[a]), sys.alpha(idxs[b])) == 1)
        rels.push_back(Relation::braid(na, nb));
      else
        rels.push_back(Relation::commute(na, nb));
    }
  return rels;
}

std::vector<Relation> expected_relations(unsigned h, Flavor flavor) {
  if (h < 5) throw std::invalid_argument("expected_relations: requires h >= 5");
  std::vector<Relation> rels = twist_relations(h);
  const std::string t_last = "T" + std::to_string(h - 1);
  const std::string t_prev = "T" + std::to_string(h - 2);

  if (flavor == Flavor::M) {
    for (unsigned i = 1; i <= h - 3; ++i)
      rels.push_back(Relation::commute("U", "T" + std::to_string(i)));
    if (h >= 6) rels.push_back(Relation::commute("U", "T0"));
    rels.push_back(Relation::twist_inversion("U", t_last));
    // U T_{h-2} U^-1 braids with the inverse of T_{h-2}
    rels.push_back(Relation{RelKind::braid_with_inverse,
                            {{"U"}, {t_prev}, {"U", true}, {t_prev, true},
                             {"U"}, {t_prev}, {"U", true}},
                            {{t_prev, true}, {"U"}, {t_prev}, {"U", true},
                             {t_prev, true}}});
    if (h == 5)
      rels.push_back(Relation{RelKind::braid_with_inverse,
                              {{"U"}, {"T0"}, {"U", true}, {"T0", true},
                               {"U"}, {"T0"}, {"U", true}},
                              {{"T0", true}, {"U"}, {"T0"}, {"U", true},
                               {"T0", true}}});
  } else {
    const std::string w = "U" + t_prev + "U^-1";
    for (unsigned i = 1; i <= h - 3; ++i)
      rels.push_back(Relation::commute("U^2", "T" + std::to_string(i)));
    if (h >= 6) rels.push_back(Relation::commute("U^2", "T0"));
    // the twist inversion conjugated twice: U^2 commutes with T_{h-1}
    rels.push_back(Relation::commute("U^2", t_last));
    rels.push_back(Relation::braid_with_inverse(w, t_prev));
    if (h == 5) rels.push_back(Relation::braid_with_inverse("UT0U^-1", "T0"));
  }
  return rels;
}

perm::Perm evaluate_word(const perm::Representation& rep, const Word& w) {
  perm::Perm out(rep.degree());
  for (const Atom& a : w) {
    const perm::Perm& img = rep.image(a.name);
    out = out * (a.inv ? img.inverse() : img);
  }
  return out;
}

BitMatrix evaluate_word(const MatrixRep& rep, const Word& w) {
  BitMatrix out = BitMatrix::identity(rep.dim());
  for (const Atom& a : w) {
    const BitMatrix& img = rep.image(a.name);
    out = out * (a.inv ? img.inverse() : img);
  }
  return out;
}

namespace {

template <typename Rep>
RelationReport check_relations_impl(const Rep& rep, const std::vector<Relation>& rels) {
  RelationReport report{{}, true, true};
  for (const Relation& r : rels) {
    bool ok = evaluate_word(rep, r.lhs) == evaluate_word(rep, r.rhs);
    report.items.push_back({r.display(), ok});
    report.all_pass = report.all_pass && ok;
  }
  const auto& images = rep.images();
  for (size_t a = 0; a < images.size() && report.abelian_image; ++a)
    for (size_t b = a + 1; b < images.size(); ++b)
      if (images[a] * images[b] != images[b] * images[a]) {
        report.abelian_image = false;
        break;
      }
  return report;
}

}  // namespace

RelationReport check_relations(const perm::Representation& rep,
                               const std::vector<Relation>& rels) {
  return check_relations_impl(rep, rels);
}

RelationReport check_relations(const MatrixRep& rep,
                               const std::vector<Relation>& rels) {
  return check_relations_impl(rep, rels);
}

}  // namespace mcgcheck::mcgmodel
