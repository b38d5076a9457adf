#include "mcgcheck/verify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mcgcheck::verify {

using mcgmodel::Flavor;
using perm::Perm;
using perm::PermGroup;
using perm::Representation;

namespace {

Representation make_table(unsigned degree, const char* const (&cycles)[5]) {
  // published order: T1, T2, T3, T4, T0
  static const char* const names[5] = {"T1", "T2", "T3", "T4", "T0"};
  Representation rep(degree);
  for (int i = 0; i < 5; ++i) rep.add(names[i], Perm::parse_cycles(degree, cycles[i]));
  return rep;
}

PhiTables make_tables() {
  const char* minus[5] = {"(1 2)", "(2 3)", "(3 4)", "(4 5)", "(5 6)"};
  const char* alpha[5] = {"(1 2)(3 5)(4 6)", "(1 3)(2 4)(5 6)", "(1 2)(3 6)(4 5)",
                          "(1 3)(2 5)(4 6)", "(1 2)(3 4)(5 6)"};
  const char* plus[5] = {"(3 5)(6 8)(9 10)", "(2 3)(4 6)(7 9)", "(1 2)(6 10)(8 9)",
                         "(2 4)(3 6)(5 8)", "(4 7)(6 9)(8 10)"};
  return PhiTables{make_table(6, minus), make_table(6, alpha), make_table(10, plus)};
}

}  // namespace

const PhiTables& builtin_tables() {
  static const PhiTables tables = make_tables();
  return tables;
}

Representation build_phi(const sympgroups::SpModel& model, int sign) {
  if (sign != -1 && sign != 1)
    throw std::invalid_argument("build_phi: sign must be -1 or +1");
  return sympgroups::form_orbit_action(model, sign == -1 ? 1 : 0);
}

const Perm& twist_image(const Representation& rep, unsigned idx, unsigned g) {
  return rep.image(mcgmodel::twist_name(idx, g));
}

std::vector<unsigned> restriction_orbits(const Representation& rep, unsigned g) {
  if (g < 3)
    throw std::invalid_argument("restriction_orbits: no subsurface system below g = 3");
  std::vector<std::string> names;
  for (unsigned i = 0; i <= 2 * g - 2; ++i) names.push_back("T" + std::to_string(i));
  std::vector<unsigned> sizes;
  for (const auto& orb : rep.restricted(names).orbit_partition())
    sizes.push_back(static_cast<unsigned>(orb.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

namespace {

CentralizerCase two_element_case(std::string label, unsigned m,
                                 const std::vector<Perm>& gens, const Perm& expect) {
  PermGroup c = perm::centralizer_in_sym(m, gens);
  bool match = c.order() == 2 && c.contains(expect);
  return CentralizerCase{std::move(label), std::move(c), match};
}

}  // namespace

CentralizerResults centralizer_cases(const Representation& rep, unsigned g) {
  if (g < 2) throw std::invalid_argument("centralizer_cases: g must be at least 2");
  const unsigned m = rep.degree();
  auto w = [&](unsigned i) -> const Perm& { return twist_image(rep, i, g); };

  std::optional<CentralizerCase> g2_triple;
  if (g == 2)
    g2_triple = two_element_case("C{w1,w2,w4}", m, {w(1), w(2), w(4)}, w(4));

  std::vector<Perm> chain_gens;
  for (unsigned i = 0; i <= 2 * g - 1; ++i) chain_gens.push_back(w(i));
  CentralizerCase chain = two_element_case(
      "C{w0..w" + std::to_string(2 * g - 1) + "}", m, chain_gens, w(2 * g + 2));

  std::optional<CentralizerCase> gapped;
  if (g >= 3) {
    std::vector<Perm> gens;
    for (unsigned i = 0; i <= 2 * g - 2; ++i) gens.push_back(w(i));
    gens.push_back(w(2 * g));
    gapped = two_element_case("C{w0..w" + std::to_string(2 * g - 2) + ",w" +
                                  std::to_string(2 * g) + "}",
                              m, gens, w(2 * g));
  }

  std::vector<Perm> all;
  for (unsigned i = 0; i <= 2 * g; ++i) all.push_back(w(i));
  PermGroup whole_c = perm::centralizer_in_sym(m, all);
  CentralizerCase whole{"C{w0..w" + std::to_string(2 * g) + "}", whole_c,
                        whole_c.order() == 1};

  bool all_match = chain.matches && whole.matches &&
                   (!g2_triple || g2_triple->matches) && (!gapped || gapped->matches);
  return CentralizerResults{std::move(g2_triple), std::move(chain), std::move(gapped),
                            std::move(whole), all_match};
}

// --- constraints ----------------------------------------------------------

Constraint Constraint::commutes_with(Perm x) {
  return Constraint{Kind::commutes_with, std::move(x), {}};
}
Constraint Constraint::braids_with(Perm x) {
  return Constraint{Kind::braids_with, std::move(x), {}};
}
Constraint Constraint::braids_with_inverse_of(Perm x) {
  return Constraint{Kind::braids_with_inverse_of, std::move(x), {}};
}
Constraint Constraint::support_within(std::vector<uint32_t> pts) {
  return Constraint{Kind::support_within, Perm(), std::move(pts)};
}
Constraint Constraint::fixes_pointwise(std::vector<uint32_t> pts) {
  return Constraint{Kind::fixes_pointwise, Perm(), std::move(pts)};
}
Constraint Constraint::restricts_to(Perm tau) {
  return Constraint{Kind::restricts_to, std::move(tau), {}};
}

bool Constraint::satisfied_by(const Perm& u) const {
  switch (kind) {
    case Kind::commutes_with:
      return u * p == p * u;
    case Kind::braids_with:
      return u * p * u == p * u * p;
    case Kind::braids_with_inverse_of: {
      Perm pinv = p.inverse();
      return u * pinv * u == pinv * u * pinv;
    }
    case Kind::support_within: {
      for (uint32_t x : u.support())
        if (std::find(points.begin(), points.end(), x) == points.end()) return false;
      return true;
    }
    case Kind::fixes_pointwise: {
      for (uint32_t x : points)
        if (u(x) != x) return false;
      return true;
    }
    case Kind::restricts_to: {
      for (uint32_t x : p.support())
        if (u(x) != p(x)) return false;
      return true;
    }
  }
  return false;
}

std::vector<Perm> constraint_search(unsigned m,
                                    const std::vector<Constraint>& constraints) {
  std::vector<bool> movable(m + 1, true);
  for (const Constraint& c : constraints) {
    if (c.kind == Constraint::Kind::support_within) {
      std::vector<bool> keep(m + 1, false);
      for (uint32_t x : c.points) {
        if (x < 1 || x > m)
          throw std::invalid_argument("constraint_search: point out of range");
        keep[x] = true;
      }
      for (uint32_t x = 1; x <= m; ++x) movable[x] = movable[x] && keep[x];
    } else if (c.kind == Constraint::Kind::fixes_pointwise) {
      for (uint32_t x : c.points) {
        if (x < 1 || x > m)
          throw std::invalid_argument("constraint_search: point out of range");
        movable[x] = false;
      }
    }
  }
  std::vector<uint32_t> pts;
  for (uint32_t x = 1; x <= m; ++x)
    if (movable[x]) pts.push_back(x);

  double space = 1;
  for (size_t i = 2; i <= pts.size(); ++i) space *= static_cast<double>(i);
  if (space > 1e7)
    throw std::invalid_argument("constraint_search: search space exceeds the bound");

  std::vector<Perm> out;
  std::vector<uint32_t> assign = pts;
  do {
    std::vector<uint32_t> img(m);
    std::iota(img.begin(), img.end(), 1);
    for (size_t i = 0; i < pts.size(); ++i) img[pts[i] - 1] = assign[i];
    Perm u(std::move(img));
    bool ok = true;
    for (const Constraint& c : constraints)
      if (!c.satisfied_by(u)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(std::move(u));
  } while (std::next_permutation(assign.begin(), assign.end()));
  return out;
}

// --- extension solver ------------------------------------------------------

namespace {

// Image-level shadow of the commutator-closure argument: a homomorphic
// extension forces the quotient of the image by the normal closure of the
// forced commutator to be abelian.
bool quotient_abelian(const PermGroup& image, const Perm& c) {
  PermGroup k = perm::normal_closure(image, {c});
  const auto& gens = image.generators();
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = a + 1; b < gens.size(); ++b)
      if (!k.contains(perm::commutator(gens[a], gens[b]))) return false;
  return true;
}

struct Tuple {
  Perm a;
  Perm t;
  Perm v;
};

}  // namespace

ExtensionResult extension_solve(unsigned g, unsigned r, Flavor flavor,
                                const Representation& base) {
  if (g < 2 || (r != 1 && r != 2))
    throw std::invalid_argument("extension_solve: need g >= 2 and r in {1,2}");
  const unsigned h = 2 * g + r;
  const unsigned m = base.degree();
  auto w = [&](unsigned i) -> const Perm& { return twist_image(base, i, g); };

  // candidate set: the centralizer of the images U is known to fix under
  // conjugation (inversion collapses on involutions)
  std::vector<Perm> cset;
  if (r == 1 && g == 2) {
    cset = {w(1), w(2), w(4)};
  } else if (r == 1) {
    for (unsigned i = 0; i <= 2 * g - 2; ++i) cset.push_back(w(i));
    cset.push_back(w(2 * g));
  } else {
    for (unsigned i = 0; i <= 2 * g - 1; ++i) cset.push_back(w(i));
  }
  PermGroup a_group = perm::centralizer_in_sym(m, cset);
  std::vector<Perm> candidates = a_group.elements(4096);
  std::sort(candidates.begin(), candidates.end());
  if (candidates.size() > 16)
    throw std::runtime_error("extension_solve: candidate centralizer is unexpectedly large");

  const Perm& w_prev = w(h - 2);
  const bool want_t = (r == 2);
  const bool want_v = (flavor == Flavor::T);
  const auto rels = mcgmodel::expected_relations(h, flavor);
  const Perm id(m);

  auto build_extended = [&](const Perm& a, const Perm& t) {
    Representation ext(m);
    for (unsigned i = 0; i + 1 <= h; ++i) {
      if (want_t && i == h - 1)
        ext.add("T" + std::to_string(i), t);
      else
        ext.add("T" + std::to_string(i), w(i));
    }
    if (g >= 3) ext.add("T" + std::to_string(2 * g + 2), w(2 * g + 2));
    if (flavor == Flavor::M) {
      ext.add("U", a);
    } else {
      ext.add("UT" + std::to_string(h - 2) + "U^-1", a * w_prev * a.inverse());
      if (h == 5) ext.add("UT0U^-1", a * w(0) * a.inverse());
    }
    return ext;
  };

  std::vector<std::pair<Tuple, Representation>> survivors;
  for (const Perm& a : candidates) {
    for (const Perm& t : want_t ? candidates : std::vector<Perm>{id}) {
      for (const Perm& v : want_v ? candidates : std::vector<Perm>{id}) {
        Representation ext = build_extended(a, t);
        if (want_v) ext.add("U^2", v);
        if (!mcgmodel::check_relations(ext, rels).all_pass) continue;
        PermGroup image = ext.group();
        Perm x = a * w_prev * a.inverse();
        if (!quotient_abelian(image, perm::commutator(x, w_prev))) continue;
        if (want_v &&
            !quotient_abelian(image, perm::commutator(v * w_prev * v.inverse(), x)))
          continue;
        survivors.push_back({Tuple{a, t, v}, std::move(ext)});
      }
    }
  }

  if (survivors.size() != 1)
    throw std::runtime_error("extension_solve: expected a unique survivor, found " +
                             std::to_string(survivors.size()));
  const Tuple& sol = survivors.front().first;
  for (const std::string& name : mcgmodel::generator_system(h, flavor).names())
    if (!survivors.front().second.has(name))
      throw std::logic_error("extension_solve: generator " + name + " left undefined");

  ExtensionResult result{std::move(survivors.front().second), sol.a, {}};
  const auto n_cand = static_cast<unsigned>(candidates.size());
  result.stages.push_back(
      {flavor == Flavor::M ? "U" : "conjugator", n_cand, 1, sol.a});
  if (want_t)
    result.stages.push_back({"T" + std::to_string(2 * g + 1), n_cand, 1, sol.t});
  if (want_v) result.stages.push_back({"U^2", n_cand, 1, sol.v});
  return result;
}

}  // namespace mcgcheck::verify
