#include "mcgcheck/sympgroups.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mcgcheck/mcgmodel.hpp"

namespace mcgcheck::sympgroups {

using gf2forms::BilinearForm;
using gf2forms::BitMatrix;
using gf2forms::BitVector;
using gf2forms::QuadraticForm;
using perm::Perm;
using perm::PermGroup;
using perm::Representation;

std::pair<uint64_t, uint64_t> m_indices(unsigned g) {
  if (g < 1) throw std::invalid_argument("m_indices: g must be at least 1");
  uint64_t half = uint64_t{1} << (g - 1);
  uint64_t pow = uint64_t{1} << g;
  return {half * (pow - 1), half * (pow + 1)};
}

uint64_t sp_order(unsigned g) {
  if (g < 1) throw std::invalid_argument("sp_order: g must be at least 1");
  uint64_t n = uint64_t{1} << (g * g);
  for (unsigned i = 1; i <= g; ++i) n *= (uint64_t{1} << (2 * i)) - 1;
  return n;
}

Perm vector_perm(const BitMatrix& m) {
  const unsigned n = m.dim();
  const uint32_t count = (1u << n) - 1;
  std::vector<uint32_t> img(count);
  for (uint32_t v = 1; v <= count; ++v)
    img[v - 1] = static_cast<uint32_t>(m.apply(BitVector(n, v)).bits());
  return Perm(std::move(img));
}

BitMatrix matrix_of_vector_perm(const Perm& p, unsigned n) {
  if (p.degree() != (1u << n) - 1)
    throw std::invalid_argument("matrix_of_vector_perm: degree mismatch");
  BitMatrix m(n);
  for (unsigned j = 0; j < n; ++j) {
    uint32_t img = p(1u << j);
    for (unsigned i = 0; i < n; ++i)
      if ((img >> i) & 1u) m.set(i, j, true);
  }
  // linearity check: a permutation of nonzero vectors need not be linear
  for (uint32_t v = 1; v < (1u << n); ++v)
    if (m.apply(BitVector(n, v)).bits() != p(v))
      throw std::invalid_argument("matrix_of_vector_perm: permutation is not linear");
  return m;
}

const BitMatrix& SpModel::mat(std::string_view name) const {
  std::string resolved(name);
  if (g == 2 && resolved == "T" + std::to_string(2 * g + 2)) resolved = "T0";
  auto it = std::find(names.begin(), names.end(), resolved);
  if (it == names.end())
    throw std::invalid_argument("SpModel: unknown generator " + resolved);
  return mats[static_cast<size_t>(it - names.begin())];
}

QuadraticForm SpModel::canonical_form(int arf_class) const {
  return QuadraticForm(form, class_masks[arf_class][0]);
}

SpModel build_sp(unsigned g) {
  if (g < 1 || g > 5) throw std::invalid_argument("build_sp: supported range is 1 <= g <= 5");

  std::vector<std::string> names;
  std::vector<BitMatrix> mats;
  BilinearForm form;
  if (g == 1) {
    form = BilinearForm::standard_symplectic(1);
    names = {"T1", "T2"};
    mats = {gf2forms::transvection(form, BitVector::unit(2, 0)),
            gf2forms::transvection(form, BitVector::unit(2, 1))};
  } else {
    mcgmodel::EpsilonRep eps = mcgmodel::epsilon(2 * g + 1);
    form = eps.reduction.reduced;
    for (size_t k = 0; k < eps.rep.names().size(); ++k) {
      if (eps.rep.names()[k] == "U") continue;
      names.push_back(eps.rep.names()[k]);
      mats.push_back(eps.rep.images()[k]);
    }
  }

  std::vector<Perm> vec_perms;
  for (const BitMatrix& m : mats) vec_perms.push_back(vector_perm(m));
  PermGroup image((1u << (2 * g)) - 1, vec_perms);

  auto basis = gf2forms::symplectic_basis(form);
  SpModel model{g,       std::move(form), std::move(names), std::move(mats),
                std::move(vec_perms), std::move(image), std::move(basis),
                {}};
  for (uint64_t mask = 0; mask < (uint64_t{1} << (2 * g)); ++mask) {
    QuadraticForm q(model.form, mask);
    model.class_masks[gf2forms::arf(q, model.symp_basis)].push_back(mask);
  }
  return model;
}

namespace {

Perm form_perm_of(const SpModel& model, const std::vector<uint64_t>& masks,
                  const BitMatrix& m) {
  std::vector<uint32_t> img(masks.size());
  for (size_t i = 0; i < masks.size(); ++i) {
    QuadraticForm moved = gf2forms::act_on_form(m, QuadraticForm(model.form, masks[i]));
    auto it = std::lower_bound(masks.begin(), masks.end(), moved.basis_values());
    if (it == masks.end() || *it != moved.basis_values())
      throw std::logic_error("form orbit: image left the Arf class");
    img[i] = static_cast<uint32_t>(it - masks.begin()) + 1;
  }
  return Perm(std::move(img));
}

}  // namespace

Perm form_orbit_perm(const SpModel& model, int arf_class, const BitMatrix& m) {
  return form_perm_of(model, model.class_masks[arf_class], m);
}

Representation form_orbit_action(const SpModel& model, int arf_class) {
  const auto& masks = model.class_masks[arf_class];
  Representation rep(static_cast<unsigned>(masks.size()));
  for (size_t k = 0; k < model.names.size(); ++k)
    rep.add(model.names[k], form_perm_of(model, masks, model.mats[k]));
  return rep;
}

PermGroup orthogonal_stabilizer(const SpModel& model, const QuadraticForm& q) {
  if (q.form() != model.form)
    throw std::invalid_argument("orthogonal_stabilizer: form does not refine the model");
  const unsigned degree = (1u << (2 * model.g)) - 1;

  std::vector<uint64_t> orbit{q.basis_values()};
  std::vector<Perm> trans_perm{Perm(degree)};
  std::vector<Perm> kept;
  PermGroup stab(degree, {});

  for (size_t k = 0; k < orbit.size(); ++k) {
    for (size_t j = 0; j < model.mats.size(); ++j) {
      QuadraticForm moved =
          gf2forms::act_on_form(model.mats[j], QuadraticForm(model.form, orbit[k]));
      auto it = std::find(orbit.begin(), orbit.end(), moved.basis_values());
      if (it == orbit.end()) {
        orbit.push_back(moved.basis_values());
        trans_perm.push_back(model.vec_perms[j] * trans_perm[k]);
      } else {
        size_t at = static_cast<size_t>(it - orbit.begin());
        Perm s = trans_perm[at].inverse() * (model.vec_perms[j] * trans_perm[k]);
        // keep only Schreier generators that grow the group so the chain
        // stays small
        if (!s.is_identity() && !stab.contains(s)) {
          kept.push_back(std::move(s));
          stab = PermGroup(degree, kept);
        }
      }
    }
  }
  return stab;
}

// --- symmetric group on 6 points: ranking and automorphism tables --------

AutomorphismTable::AutomorphismTable(std::vector<Perm> images)
    : images_(std::move(images)) {
  if (images_.size() != 720)
    throw std::invalid_argument("AutomorphismTable: expected 720 images");
}

size_t AutomorphismTable::rank(const Perm& p) {
  if (p.degree() != 6) throw std::invalid_argument("AutomorphismTable: degree 6 only");
  size_t r = 0;
  for (unsigned i = 1; i <= 6; ++i) {
    unsigned smaller = 0;
    for (unsigned j = i + 1; j <= 6; ++j)
      if (p(j) < p(i)) ++smaller;
    r = r * (7 - i) + smaller;
  }
  return r;
}

Perm AutomorphismTable::unrank(size_t r) {
  std::vector<uint32_t> pool{1, 2, 3, 4, 5, 6};
  std::vector<uint32_t> img;
  size_t fact = 120;  // 5!
  for (unsigned i = 0; i < 6; ++i) {
    size_t d = r / fact;
    r %= fact;
    img.push_back(pool[d]);
    pool.erase(pool.begin() + static_cast<long>(d));
    if (i < 5) fact /= (5 - i);
  }
  return Perm(std::move(img));
}

const Perm& AutomorphismTable::apply(const Perm& p) const {
  return images_[rank(p)];
}

bool AutomorphismTable::is_bijective() const {
  std::vector<bool> seen(720, false);
  for (const Perm& p : images_) {
    size_t r = rank(p);
    if (seen[r]) return false;
    seen[r] = true;
  }
  return true;
}

bool AutomorphismTable::is_multiplicative() const {
  for (size_t r = 0; r < 720; ++r) {
    Perm x = unrank(r);
    for (unsigned i = 1; i <= 5; ++i) {
      Perm s = Perm::parse_cycles(6, "(" + std::to_string(i) + " " + std::to_string(i + 1) + ")");
      if (apply(x * s) != apply(x) * apply(s)) return false;
    }
  }
  return true;
}

namespace {

std::vector<unsigned> adjacent_factorization(const Perm& p) {
  // bubble sort the one-line notation; right-multiplying by s_i swaps the
  // entries at positions i, i+1
  std::vector<uint32_t> line(p.images());
  std::vector<unsigned> swaps;
  bool moved = true;
  while (moved) {
    moved = false;
    for (unsigned i = 0; i + 1 < line.size(); ++i) {
      if (line[i] > line[i + 1]) {
        std::swap(line[i], line[i + 1]);
        swaps.push_back(i + 1);
        moved = true;
      }
    }
  }
  return swaps;  // p * s_{i1} * ... * s_{ik} = id
}

AutomorphismTable build_alpha() {
  const char* images[5] = {"(1 2)(3 5)(4 6)", "(1 3)(2 4)(5 6)", "(1 2)(3 6)(4 5)",
                           "(1 3)(2 5)(4 6)", "(1 2)(3 4)(5 6)"};
  std::vector<Perm> gen_img;
  for (int i = 0; i < 5; ++i) gen_img.push_back(Perm::parse_cycles(6, images[i]));

  std::vector<Perm> table;
  table.reserve(720);
  for (size_t r = 0; r < 720; ++r) {
    Perm x = AutomorphismTable::unrank(r);
    auto swaps = adjacent_factorization(x);
    // x = s_{ik} * ... * s_{i1}, so alpha(x) multiplies the images in the
    // same order
    Perm img(6);
    for (auto it = swaps.rbegin(); it != swaps.rend(); ++it)
      img = img * gen_img[*it - 1];
    table.push_back(std::move(img));
  }
  return AutomorphismTable(std::move(table));
}

}  // namespace

const AutomorphismTable& alpha_table() {
  static const AutomorphismTable table = build_alpha();
  return table;
}

AutomorphismTable conjugation_table(const Perm& c) {
  std::vector<Perm> images;
  images.reserve(720);
  for (size_t r = 0; r < 720; ++r)
    images.push_back(perm::conjugate(c, AutomorphismTable::unrank(r)));
  return AutomorphismTable(std::move(images));
}

AutomorphismTable compose_tables(const AutomorphismTable& outer,
                                 const AutomorphismTable& inner) {
  std::vector<Perm> images;
  images.reserve(720);
  for (size_t r = 0; r < 720; ++r)
    images.push_back(outer.apply(inner.apply(AutomorphismTable::unrank(r))));
  return AutomorphismTable(std::move(images));
}

std::optional<Perm> is_inner(const AutomorphismTable& t) {
  std::vector<Perm> gens;
  for (unsigned i = 1; i <= 5; ++i)
    gens.push_back(Perm::parse_cycles(
        6, "(" + std::to_string(i) + " " + std::to_string(i + 1) + ")"));
  for (size_t r = 0; r < 720; ++r) {
    Perm c = AutomorphismTable::unrank(r);
    bool ok = true;
    for (const Perm& s : gens)
      if (t.apply(s) != perm::conjugate(c, s)) {
        ok = false;
        break;
      }
    if (ok) return c;
  }
  return std::nullopt;
}

Perm S6Embedding::to_s6(const Perm& vp) const {
  BitMatrix m = matrix_of_vector_perm(vp, 4);
  Perm on_forms = form_orbit_perm(*model, 1, m);
  return perm::conjugate(relabel, on_forms);
}

PermGroup S6Embedding::map_group(const PermGroup& sub) const {
  std::vector<Perm> gens;
  for (const Perm& g : sub.generators()) gens.push_back(to_s6(g));
  return PermGroup(6, std::move(gens));
}

S6Embedding sp4_s6_embedding(const SpModel& g2_model) {
  if (g2_model.g != 2)
    throw std::invalid_argument("sp4_s6_embedding: the model must have g = 2");
  Representation orbit = form_orbit_action(g2_model, 1);

  Representation target(6);
  target.add("T1", Perm::parse_cycles(6, "(1 2)"));
  target.add("T2", Perm::parse_cycles(6, "(2 3)"));
  target.add("T3", Perm::parse_cycles(6, "(3 4)"));
  target.add("T4", Perm::parse_cycles(6, "(4 5)"));
  target.add("T0", Perm::parse_cycles(6, "(5 6)"));

  auto y = perm::conjugating_element(target, orbit.restricted(target.names()));
  if (!y)
    throw std::logic_error("sp4_s6_embedding: chain generators not conjugate to the "
                           "adjacent transpositions");
  return S6Embedding{&g2_model, *y};
}

PermGroup alpha_twisted_subgroup(const SpModel& g2_model) {
  if (g2_model.g != 2)
    throw std::invalid_argument("alpha_twisted_subgroup: the model must have g = 2");
  S6Embedding emb = sp4_s6_embedding(g2_model);
  PermGroup stab = orthogonal_stabilizer(g2_model, g2_model.canonical_form(1));
  const AutomorphismTable& alpha = alpha_table();
  std::vector<Perm> gens;
  for (const Perm& g : stab.generators()) gens.push_back(alpha.apply(emb.to_s6(g)));
  return PermGroup(6, std::move(gens));
}

std::optional<Perm> subgroup_conjugator(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("subgroup_conjugator: degree mismatch");
  if (a.degree() > 8)
    throw std::invalid_argument("subgroup_conjugator: exhaustive regime is degree <= 8");
  if (a.order() != b.order()) return std::nullopt;
  std::vector<uint32_t> line(a.degree());
  std::iota(line.begin(), line.end(), 1);
  do {
    Perm u(line);
    bool ok = true;
    for (const Perm& g : a.generators())
      if (!b.contains(perm::conjugate(u, g))) {
        ok = false;
        break;
      }
    if (ok) return u;
  } while (std::next_permutation(line.begin(), line.end()));
  return std::nullopt;
}

}  // namespace mcgcheck::sympgroups
