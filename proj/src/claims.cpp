#include "mcgcheck/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>

#include "mcgcheck/verify.hpp"

namespace mcgcheck::claims {

using mcgmodel::Flavor;
using perm::Perm;
using perm::PermGroup;
using perm::Representation;
using sympgroups::SpModel;

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

void expect(bool cond, const std::string& msg) {
  if (!cond) fail(msg);
}

std::string order_str(const PermGroup& g) { return perm::order_string(g.order()); }

}  // namespace

Context::Context() = default;

std::shared_ptr<const SpModel> Context::sp(unsigned g) {
  std::lock_guard lk(mu_);
  auto& slot = sp_[g];
  if (!slot) slot = std::make_shared<const SpModel>(sympgroups::build_sp(g));
  return slot;
}

std::shared_ptr<const Representation> Context::phi(unsigned g, int sign) {
  auto model = sp(g);
  std::lock_guard lk(mu_);
  auto& slot = phi_[{g, sign}];
  if (!slot)
    slot = std::make_shared<const Representation>(verify::build_phi(*model, sign));
  return slot;
}

std::shared_ptr<const mcgmodel::EpsilonRep> Context::eps(unsigned h) {
  std::lock_guard lk(mu_);
  auto& slot = eps_[h];
  if (!slot)
    slot = std::make_shared<const mcgmodel::EpsilonRep>(mcgmodel::epsilon(h));
  return slot;
}

const Representation& Context::table_minus() const {
  return minus_override_ ? *minus_override_ : verify::builtin_tables().minus;
}
const Representation& Context::table_alpha() const {
  return verify::builtin_tables().alpha;
}
const Representation& Context::table_plus() const {
  return verify::builtin_tables().plus;
}

void Context::corrupt_tables_for_testing() {
  Representation broken(6);
  for (const auto& name : verify::builtin_tables().minus.names()) {
    if (name == "T1")
      broken.add(name, Perm::parse_cycles(6, "(1 3)"));  // breaks the braid with T2
    else
      broken.add(name, verify::builtin_tables().minus.image(name));
  }
  minus_override_ = std::make_shared<const Representation>(std::move(broken));
}

namespace {

// ---- small helpers shared by the claim bodies ----------------------------

Perm extend_perm(const Perm& p, unsigned m) {
  std::vector<uint32_t> img(m);
  std::iota(img.begin(), img.end(), 1);
  for (uint32_t x = 1; x <= p.degree(); ++x) img[x - 1] = p(x);
  return Perm(std::move(img));
}

PermGroup reduced_vector_group(const mcgmodel::MatrixRep& rep, bool include_u) {
  std::vector<Perm> gens;
  for (size_t k = 0; k < rep.names().size(); ++k)
    if (include_u || rep.names()[k] != "U")
      gens.push_back(sympgroups::vector_perm(rep.images()[k]));
  return PermGroup((1u << rep.dim()) - 1, gens);
}

std::string indices_claim(Context& ctx, unsigned g) {
  auto [m_minus, m_plus] = sympgroups::m_indices(g);
  auto model = ctx.sp(g);
  auto minus = ctx.phi(g, -1);
  auto plus = ctx.phi(g, +1);
  expect(minus->degree() == m_minus && plus->degree() == m_plus,
         "orbit degrees diverge from the index formulas");
  expect(minus->transitive() && plus->transitive(), "orbit actions are not transitive");
  expect(model->vector_image.order() == sympgroups::sp_order(g),
         "model order diverges from the order formula");
  return "(" + std::to_string(m_minus) + ", " + std::to_string(m_plus) + ")";
}

// the three embedded tables: catalogue, transitivity, degrees
std::string tables_valid_claim(Context& ctx) {
  auto rels = mcgmodel::twist_relations(5);
  for (const Representation* rep :
       {&ctx.table_minus(), &ctx.table_alpha(), &ctx.table_plus()}) {
    auto report = mcgmodel::check_relations(*rep, rels);
    expect(report.all_pass, "a table violates the twist relation catalogue");
    expect(!report.abelian_image, "a table has abelian image");
    expect(rep->transitive(), "a table is not transitive");
  }
  expect(ctx.table_minus().degree() == 6 && ctx.table_alpha().degree() == 6 &&
             ctx.table_plus().degree() == 10,
         "table degrees are wrong");
  return "degrees (6, 6, 10); catalogue of " + std::to_string(rels.size()) +
         " relations holds";
}

std::string table_match_claim(Context& ctx, int sign) {
  const Representation& table = (sign == -1) ? ctx.table_minus() : ctx.table_plus();
  auto built = ctx.phi(2, sign);
  auto y = perm::conjugating_element(table, *built);
  expect(y.has_value(), "no conjugator between the table and the orbit action");
  return "conjugator " + y->cycle_string();
}

std::string alpha_rep_not_minus_claim(Context& ctx) {
  expect(ctx.table_alpha().transitive(), "twisted table is not transitive");
  expect(!perm::conjugating_element(ctx.table_minus(), ctx.table_alpha()).has_value(),
         "twisted table is unexpectedly conjugate to the transposition table");
  return "transitive; exhaustive search finds no conjugator";
}

std::string alpha_wellformed_claim(Context&) {
  const auto& a = sympgroups::alpha_table();
  expect(a.is_bijective(), "table is not a bijection");
  expect(a.is_multiplicative(), "table is not multiplicative");
  // images of the adjacent transpositions satisfy their defining relations
  std::vector<Perm> img;
  for (unsigned i = 1; i <= 5; ++i)
    img.push_back(a.apply(Perm::parse_cycles(
        6, "(" + std::to_string(i) + " " + std::to_string(i + 1) + ")")));
  for (unsigned i = 0; i < 5; ++i) {
    expect((img[i] * img[i]).is_identity(), "an image is not an involution");
    for (unsigned j = i + 1; j < 5; ++j) {
      if (j == i + 1)
        expect(img[i] * img[j] * img[i] == img[j] * img[i] * img[j],
               "a braid relation image fails");
      else
        expect(img[i] * img[j] == img[j] * img[i], "a commutation image fails");
    }
  }
  return "bijective on 720 elements; multiplicative on 3600 pairs; relations verified";
}

std::string alpha_noninner_claim(Context&) {
  expect(!sympgroups::is_inner(sympgroups::alpha_table()).has_value(),
         "a conjugating witness exists");
  return "no witness among all 720 candidates";
}

std::string alpha_square_inner_claim(Context&) {
  const auto& a = sympgroups::alpha_table();
  auto w = sympgroups::is_inner(sympgroups::compose_tables(a, a));
  expect(w.has_value(), "the square has no conjugating witness");
  return "witness " + w->cycle_string();
}

std::string alpha_ominus_claim(Context& ctx) {
  auto model = ctx.sp(2);
  sympgroups::S6Embedding emb = sympgroups::sp4_s6_embedding(*model);
  PermGroup ominus =
      emb.map_group(sympgroups::orthogonal_stabilizer(*model, model->canonical_form(1)));
  PermGroup twisted = sympgroups::alpha_twisted_subgroup(*model);
  expect(twisted.order() == 120, "twisted subgroup order is not 120");
  expect(ominus.order() == 120, "stabilizer order is not 120");
  expect(!sympgroups::subgroup_conjugator(twisted, ominus).has_value(),
         "twisted subgroup is unexpectedly conjugate to the stabilizer");
  return "order 120, index 6; no conjugator among 720";
}

std::string alpha_oplus_claim(Context& ctx) {
  auto model = ctx.sp(2);
  sympgroups::S6Embedding emb = sympgroups::sp4_s6_embedding(*model);
  PermGroup oplus =
      emb.map_group(sympgroups::orthogonal_stabilizer(*model, model->canonical_form(0)));
  const auto& alpha = sympgroups::alpha_table();
  std::vector<Perm> gens;
  for (const Perm& g : oplus.generators()) gens.push_back(alpha.apply(g));
  PermGroup twisted(6, gens);
  expect(twisted.order() == 72, "twisted Arf-0 stabilizer order is not 72");
  auto u = sympgroups::subgroup_conjugator(twisted, oplus);
  expect(u.has_value(), "twist of the Arf-0 stabilizer left its conjugacy class");
  return "conjugator " + u->cycle_string();
}

std::string centralizer_witness(const verify::CentralizerResults& res) {
  auto describe = [](const verify::CentralizerCase& c) {
    std::string elems;
    for (const Perm& e : c.computed.elements(16)) {
      if (!elems.empty()) elems += ",";
      elems += e.cycle_string();
    }
    return c.label + "={" + elems + "}";
  };
  std::string out;
  if (res.g2_triple) out += describe(*res.g2_triple) + "; ";
  out += describe(res.chain);
  if (res.gapped) out += "; " + describe(*res.gapped);
  out += "; " + describe(res.whole);
  return out;
}

// sign -1/+1 checks the built orbit action (plus the embedded table at g=2);
// sign 0 checks the twisted degree-6 table.
std::string centralizers_claim(Context& ctx, unsigned g, int sign) {
  if (sign == 0) {
    auto res = verify::centralizer_cases(ctx.table_alpha(), 2);
    expect(res.all_match, "a centralizer differs from the expected set: " +
                              centralizer_witness(res));
    return centralizer_witness(res);
  }
  auto built = ctx.phi(g, sign);
  auto res = verify::centralizer_cases(*built, g);
  expect(res.all_match, "a centralizer differs from the expected set: " +
                            centralizer_witness(res));
  std::string witness = centralizer_witness(res);
  if (g == 2) {
    auto tres = verify::centralizer_cases(
        sign == -1 ? ctx.table_minus() : ctx.table_plus(), 2);
    expect(tres.all_match, "the embedded table disagrees: " + centralizer_witness(tres));
    witness += " | table: " + centralizer_witness(tres);
  }
  return witness;
}

std::string restriction_claim(Context& ctx, unsigned g) {
  auto [km, kp] = sympgroups::m_indices(g - 1);
  auto minus = ctx.phi(g, -1);
  auto plus = ctx.phi(g, +1);
  std::vector<unsigned> expect_minus{static_cast<unsigned>(km), static_cast<unsigned>(km),
                                     static_cast<unsigned>(km), static_cast<unsigned>(kp)};
  std::sort(expect_minus.begin(), expect_minus.end());
  std::vector<unsigned> expect_plus{static_cast<unsigned>(kp), static_cast<unsigned>(kp),
                                    static_cast<unsigned>(kp), static_cast<unsigned>(km)};
  std::sort(expect_plus.begin(), expect_plus.end());
  auto got_minus = verify::restriction_orbits(*minus, g);
  auto got_plus = verify::restriction_orbits(*plus, g);
  expect(got_minus == expect_minus, "Arf-1 restriction orbit sizes are wrong");
  expect(got_plus == expect_plus, "Arf-0 restriction orbit sizes are wrong");
  auto fmt = [](const std::vector<unsigned>& v) {
    std::string s = "{";
    for (size_t i = 0; i < v.size(); ++i)
      s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
  };
  return fmt(got_minus) + " / " + fmt(got_plus);
}

std::string involutions_claim(Context& ctx, unsigned g) {
  for (int sign : {-1, +1}) {
    auto rep = ctx.phi(g, sign);
    for (const Perm& p : rep->images())
      expect((p * p).is_identity(), "a generator image is not an involution");
  }
  return std::to_string(ctx.phi(g, -1)->size() + ctx.phi(g, +1)->size()) +
         " generator images square to the identity";
}

std::string epsilon_claim(Context& ctx, unsigned h) {
  const unsigned g = (h - 1) / 2;
  auto eps = ctx.eps(h);
  PermGroup reduced = reduced_vector_group(eps->rep, false);
  expect(reduced.order() == sympgroups::sp_order(g),
         "reduced twist image is not the full symplectic group");

  mcgmodel::MatrixRep full = mcgmodel::homology_rep(h);
  std::vector<Perm> gens;
  for (size_t k = 0; k < full.names().size(); ++k)
    if (full.names()[k] != "U") gens.push_back(sympgroups::vector_perm(full.images()[k]));
  PermGroup twist_image((1u << h) - 1, gens);
  perm::Order want = sympgroups::sp_order(g);
  if (h % 2 == 0)
    for (unsigned i = 0; i < 2 * g + 1; ++i) want *= 2;
  expect(twist_image.order() == want, "full twist-image order is wrong");
  return "reduced order " + order_str(reduced) + "; full order " +
         perm::order_string(twist_image.order());
}

std::string extension_claim(Context& ctx, unsigned g, unsigned r, Flavor flavor,
                            int base_sign /* -1, +1, 0 = twisted table */) {
  const unsigned h = 2 * g + r;
  std::shared_ptr<const Representation> built;
  const Representation* base;
  if (base_sign == 0) {
    base = &ctx.table_alpha();
  } else {
    built = ctx.phi(g, base_sign);
    base = built.get();
  }

  verify::ExtensionResult res = verify::extension_solve(g, r, flavor, *base);
  const Perm& expected_a =
      (r == 1) ? verify::twist_image(*base, 2 * g, g)
               : verify::twist_image(*base, 2 * g + 2, g);
  expect(res.conjugator == expected_a, "conjugator is not the expected twist image");
  for (const auto& st : res.stages)
    expect(st.survivors == 1, "stage " + st.unknown + " is not unique");
  if (flavor == Flavor::M)
    expect(res.extended.image("U") == expected_a, "U image is wrong");
  if (flavor == Flavor::T) {
    expect(res.extended.image("U^2").is_identity(), "U^2 image is not the identity");
    const Perm& wp = verify::twist_image(*base, h - 2, g);
    expect(res.extended.image("UT" + std::to_string(h - 2) + "U^-1") ==
               expected_a * wp * expected_a.inverse(),
           "conjugated twist image is wrong");
    if (h == 5) {
      const Perm& w0 = verify::twist_image(*base, 0, g);
      const Perm& w4 = verify::twist_image(*base, 4, g);
      expect(res.extended.image("UT0U^-1") == w4 * w0 * w4,
             "conjugated T0 image is wrong");
    }
  }
  if (r == 2)
    expect(res.extended.image("T" + std::to_string(2 * g + 1)) ==
               verify::twist_image(*base, 2 * g + 2, g),
           "extra twist image is not the expected alias");

  std::string witness;
  for (const auto& st : res.stages) {
    if (!witness.empty()) witness += "; ";
    witness += st.unknown + " = " + st.value.cycle_string() + " [" +
               std::to_string(st.candidates) + " candidates]";
  }

  // the full-generator extension agrees with the reduced-model construction
  if (flavor == Flavor::M && base_sign != 0) {
    auto model = ctx.sp(g);
    auto eps = ctx.eps(h);
    int arf_class = (base_sign == -1) ? 1 : 0;
    Representation psi(base->degree());
    for (const std::string& name : res.extended.names())
      psi.add(name, sympgroups::form_orbit_perm(*model, arf_class,
                                                eps->rep.image(name)));
    auto y = perm::conjugating_element(res.extended, psi);
    expect(y.has_value(), "extension is not conjugate to the reduced-model action");
    witness += "; reduced-model conjugator " + y->cycle_string();
  }
  return witness;
}

// ---- forced-image searches ------------------------------------------------

std::vector<Perm> taus_for(unsigned m) {
  std::vector<Perm> taus{Perm(m)};
  if (m >= 8) taus.push_back(extend_perm(Perm::parse_cycles(8, "(7 8)"), m));
  if (m >= 10) taus.push_back(extend_perm(Perm::parse_cycles(10, "(7 8)(9 10)"), m));
  return taus;
}

std::vector<Perm> table_with_tau(const Representation& table, unsigned m,
                                 const Perm& tau) {
  // w_i = table image extended to degree m, times tau; indexed 0..4
  std::vector<Perm> w(5, Perm(m));
  for (unsigned i = 0; i <= 4; ++i)
    w[i] = extend_perm(table.image("T" + std::to_string(i)), m) * tau;
  return w;
}

std::string search_ut3u_minus_claim(Context& ctx) {
  const auto& table = ctx.table_minus();
  unsigned cases = 0;
  for (unsigned m = 6; m <= 10; ++m) {
    for (const Perm& tau : taus_for(m)) {
      auto w = table_with_tau(table, m, tau);
      std::vector<verify::Constraint> cons{
          verify::Constraint::commutes_with(w[1]),
          verify::Constraint::commutes_with(w[4] * w[3] * w[4]),
          verify::Constraint::braids_with(w[3]),
          verify::Constraint::braids_with(w[2]),
          verify::Constraint::restricts_to(tau),
      };
      auto sols = verify::constraint_search(m, cons);
      Perm want = extend_perm(Perm::parse_cycles(6, "(3 5)"), m) * tau;
      expect(sols.size() == 1 && sols[0] == want,
             "solution set at m=" + std::to_string(m) + " is not {(3 5)tau}");
      ++cases;
    }
  }
  return std::to_string(cases) + " (m, tau) cases, each uniquely (3 5)tau";
}

std::string search_ut0u_minus_claim(Context& ctx) {
  const auto& table = ctx.table_minus();
  unsigned cases = 0;
  for (unsigned m = 6; m <= 10; ++m) {
    for (const Perm& tau : taus_for(m)) {
      auto w = table_with_tau(table, m, tau);
      Perm w3p = extend_perm(Perm::parse_cycles(6, "(3 5)"), m) * tau;
      std::vector<verify::Constraint> cons{
          verify::Constraint::commutes_with(w[1]),
          verify::Constraint::commutes_with(w[2]),
          verify::Constraint::commutes_with(w3p),
          verify::Constraint::braids_with(w[0]),
          verify::Constraint::braids_with(w[4]),
          verify::Constraint::restricts_to(tau),
      };
      auto sols = verify::constraint_search(m, cons);
      Perm want = extend_perm(Perm::parse_cycles(6, "(4 6)"), m) * tau;
      expect(sols.size() == 1 && sols[0] == want,
             "solution set at m=" + std::to_string(m) + " is not {(4 6)tau}");
      ++cases;
    }
  }
  return std::to_string(cases) + " (m, tau) cases, each uniquely (4 6)tau";
}

std::string search_t5_minus_claim(Context& ctx) {
  const auto& table = ctx.table_minus();
  unsigned cases = 0;
  for (unsigned m = 6; m <= 10; ++m) {
    for (const Perm& tau : taus_for(m)) {
      auto w = table_with_tau(table, m, tau);
      std::vector<verify::Constraint> cons{
          verify::Constraint::commutes_with(w[0]),
          verify::Constraint::commutes_with(w[1]),
          verify::Constraint::commutes_with(w[2]),
          verify::Constraint::commutes_with(w[3]),
          verify::Constraint::braids_with(w[4]),
          verify::Constraint::restricts_to(tau),
      };
      auto sols = verify::constraint_search(m, cons);
      Perm want = extend_perm(Perm::parse_cycles(6, "(5 6)"), m) * tau;
      expect(sols.size() == 1 && sols[0] == want,
             "solution set at m=" + std::to_string(m) + " is not {(5 6)tau}");
      ++cases;
    }
  }
  return std::to_string(cases) + " (m, tau) cases, each uniquely (5 6)tau";
}

std::string search_ut3u_alpha_claim(Context& ctx) {
  const auto& table = ctx.table_alpha();
  unsigned cases = 0;
  size_t total_solutions = 0;
  for (unsigned m = 6; m <= 10; ++m) {
    for (const Perm& tau : taus_for(m)) {
      auto w = table_with_tau(table, m, tau);
      std::vector<verify::Constraint> cons{
          verify::Constraint::commutes_with(w[1]),
          verify::Constraint::commutes_with(w[4] * w[3] * w[4]),
          verify::Constraint::braids_with(w[3]),
          verify::Constraint::braids_with(w[2]),
          verify::Constraint::restricts_to(tau),
      };
      auto sols = verify::constraint_search(m, cons);
      expect(!sols.empty(), "empty solution set at m=" + std::to_string(m));
      // the true extension value is among the solutions
      Perm truth = w[4] * w[3] * w[4].inverse();
      expect(std::find(sols.begin(), sols.end(), truth) != sols.end(),
             "expected solution missing at m=" + std::to_string(m));
      // every member preserves the 6-point block
      for (const Perm& s : sols)
        for (uint32_t x = 1; x <= 6; ++x)
          expect(s(x) <= 6, "a solution moves the 6-point block at m=" +
                                std::to_string(m));
      total_solutions += sols.size();
      ++cases;
    }
  }
  return std::to_string(cases) + " (m, tau) cases; " +
         std::to_string(total_solutions) + " solutions, all preserving the block";
}

std::string commutator_closure_claim(Context& ctx, unsigned g) {
  const unsigned h = 2 * g + 1;
  auto eps = ctx.eps(h);
  PermGroup image = reduced_vector_group(eps->rep, false);
  Perm w1 = sympgroups::vector_perm(eps->rep.image("T1"));
  Perm w2 = sympgroups::vector_perm(eps->rep.image("T2"));
  PermGroup closure = perm::normal_closure(image, {perm::commutator(w1, w2)});

  // derived subgroup: closure of all pairwise generator commutators
  std::vector<Perm> comms;
  const auto& gens = image.generators();
  for (size_t a = 0; a < gens.size(); ++a)
    for (size_t b = a + 1; b < gens.size(); ++b)
      comms.push_back(perm::commutator(gens[a], gens[b]));
  PermGroup derived = perm::normal_closure(image, comms);

  expect(closure.order() == derived.order(),
         "closure differs from the derived subgroup");
  perm::Order expected = (g == 2) ? image.order() / 2 : image.order();
  expect(closure.order() == expected, "closure order is wrong");
  return "order " + order_str(closure) + " (index " +
         perm::order_string(image.order() / closure.order()) + ")";
}

std::string index_growth_claim(Context&) {
  for (unsigned g = 4; g <= 8; ++g) {
    auto prev = sympgroups::m_indices(g - 1);
    auto cur = sympgroups::m_indices(g);
    expect(5 * prev.first > cur.second, "bound fails at g=" + std::to_string(g));
  }
  return "5*m^-_{g-1} > m^+_g for g = 4..8";
}

// ---- oracle claims: production paths vs plain enumeration -----------------

std::vector<Perm> all_perms(unsigned m) {
  std::vector<uint32_t> v(m);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::set<Perm> brute_elements(unsigned m, const std::vector<Perm>& gens) {
  std::set<Perm> elems{Perm(m)};
  std::vector<Perm> frontier{Perm(m)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& e : frontier)
      for (const Perm& g : gens) {
        Perm p = g * e;
        if (elems.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return elems;
}

std::string oracle_centralizer_claim(Context&) {
  auto pc = [](unsigned m, const char* s) { return Perm::parse_cycles(m, s); };
  std::vector<std::pair<unsigned, std::vector<Perm>>> cases = {
      {6, {pc(6, "(1 2)"), pc(6, "(2 3)"), pc(6, "(4 5)")}},
      {5, {pc(5, "(1 2 3 4 5)")}},
      {6, {pc(6, "(1 2)(3 5)(4 6)"), pc(6, "(1 3)(2 4)(5 6)")}},
      {8, {pc(8, "(1 2)(3 4)"), pc(8, "(5 6 7)")}},
      {7, {pc(7, "(1 2 3)(4 5 6)")}},
      {6, {}},
  };
  size_t verified = 0;
  for (const auto& [m, xs] : cases) {
    std::set<Perm> brute;
    for (const Perm& u : all_perms(m)) {
      bool ok = true;
      for (const Perm& x : xs)
        if (u * x != x * u) {
          ok = false;
          break;
        }
      if (ok) brute.insert(u);
    }
    PermGroup got = perm::centralizer_in_sym(m, xs);
    expect(got.order() == brute.size(), "centralizer order mismatch");
    for (const Perm& e : got.elements(1u << 19))
      expect(brute.count(e) == 1, "centralizer element outside brute-force set");
    ++verified;
  }
  return std::to_string(verified) + " instances agree with enumeration";
}

std::string oracle_conjugacy_claim(Context& ctx) {
  const Representation& minus = ctx.table_minus();
  const Representation& alpha = ctx.table_alpha();
  // no witness either way
  expect(!perm::conjugating_element(minus, alpha).has_value(),
         "unexpected conjugator");
  bool found_brute = false;
  for (const Perm& y : all_perms(6)) {
    bool ok = true;
    for (const auto& n : minus.names())
      if (perm::conjugate(y, alpha.image(n)) != minus.image(n)) {
        ok = false;
        break;
      }
    if (ok) {
      found_brute = true;
      break;
    }
  }
  expect(!found_brute, "brute force found a conjugator the search missed");

  // a relabelled copy is recovered by both
  Perm y0 = Perm::parse_cycles(6, "(1 5)(2 3 6)");
  Representation moved(6);
  for (const auto& n : minus.names())
    moved.add(n, perm::conjugate(y0, minus.image(n)));
  auto y = perm::conjugating_element(moved, minus);
  expect(y.has_value(), "search missed an existing conjugator");
  for (const auto& n : minus.names())
    expect(perm::conjugate(*y, minus.image(n)) == moved.image(n),
           "returned witness does not verify");
  return "agreement on the table pair and a relabelled copy";
}

std::string oracle_group_order_claim(Context&) {
  auto pc = [](unsigned m, const char* s) { return Perm::parse_cycles(m, s); };
  std::vector<std::pair<unsigned, std::vector<Perm>>> cases = {
      {7, {pc(7, "(1 2 3 4 5 6 7)"), pc(7, "(1 2)")}},
      {6, {pc(6, "(1 2)"), pc(6, "(2 3)"), pc(6, "(3 4)"), pc(6, "(4 5)"), pc(6, "(5 6)")}},
      {4, {pc(4, "(1 2 3)"), pc(4, "(2 3 4)")}},
      {8, {pc(8, "(1 2 3 4 5 6 7 8)"), pc(8, "(1 4)(2 3)(5 8)(6 7)")}},
      {5, {pc(5, "(1 2 3 4 5)")}},
  };
  for (const auto& [m, gens] : cases) {
    auto brute = brute_elements(m, gens);
    PermGroup grp(m, gens);
    expect(grp.order() == brute.size(), "group order mismatch");
    for (const Perm& e : brute)
      expect(grp.contains(e), "membership test rejects an element");
  }
  return std::to_string(cases.size()) + " groups up to order 5040 agree";
}

std::string oracle_transvection_claim(Context&) {
  using namespace gf2forms;
  size_t checked = 0;
  for (unsigned n : {2u, 4u, 6u}) {
    BilinearForm b = BilinearForm::standard_symplectic(n / 2);
    for (uint64_t bits = 1; bits < (uint64_t{1} << n); ++bits) {
      BitMatrix m = transvection(b, BitVector(n, bits));
      expect((m * m).is_identity(), "transvection is not an involution");
      for (uint64_t xb = 0; xb < (uint64_t{1} << n); ++xb)
        for (uint64_t yb = 0; yb < (uint64_t{1} << n); ++yb) {
          BitVector x(n, xb), y(n, yb);
          expect(b.eval(m.apply(x), m.apply(y)) == b.eval(x, y),
                 "transvection does not preserve the form");
        }
      ++checked;
    }
  }
  BilinearForm id6 = BilinearForm::identity_form(6);
  for (uint64_t bits = 1; bits < 64; ++bits) {
    BitVector v(6, bits);
    if (v.weight() % 2) continue;
    BitMatrix m = transvection(id6, v);
    expect(id6.preserved_by(m) && (m * m).is_identity(),
           "crosscap transvection misbehaves");
    ++checked;
  }
  return std::to_string(checked) + " transvections checked exhaustively";
}

std::vector<ClaimInfo> make_registry() {
  std::vector<ClaimInfo> reg;
  auto add = [&](std::string id, std::string ref, unsigned min_g,
                 std::function<std::string(Context&)> fn) {
    reg.push_back({std::move(id), std::move(ref), min_g, std::move(fn)});
  };

  for (unsigned g = 2; g <= 5; ++g)
    add("indices_g" + std::to_string(g),
        "orthogonal stabilizer indices (m-, m+) at g=" + std::to_string(g), g,
        [g](Context& c) { return indices_claim(c, g); });

  add("tables_valid", "embedded degree-6/6/10 generator tables", 2, tables_valid_claim);
  add("phi2_minus_match", "transposition table realizes the Arf-1 orbit action", 2,
      [](Context& c) { return table_match_claim(c, -1); });
  add("phi2_plus_match", "degree-10 table realizes the Arf-0 orbit action", 2,
      [](Context& c) { return table_match_claim(c, +1); });
  add("alpha_rep_not_minus",
      "twisted degree-6 table is transitive and not conjugate to the transpositions", 2,
      alpha_rep_not_minus_claim);

  add("alpha_wellformed", "exceptional automorphism table is well defined", 2,
      alpha_wellformed_claim);
  add("alpha_noninner", "exceptional automorphism is not inner", 2, alpha_noninner_claim);
  add("alpha_square_inner", "square of the exceptional automorphism is inner", 2,
      alpha_square_inner_claim);
  add("alpha_ominus_twist", "twisted Arf-1 stabilizer: order 120, index 6, new class", 2,
      alpha_ominus_claim);
  add("alpha_oplus_twist", "twisted Arf-0 stabilizer keeps its conjugacy class", 2,
      alpha_oplus_claim);

  for (unsigned g = 2; g <= 4; ++g) {
    add("centralizers_g" + std::to_string(g) + "_minus",
        "chain centralizers on the Arf-1 action at g=" + std::to_string(g), g,
        [g](Context& c) { return centralizers_claim(c, g, -1); });
    add("centralizers_g" + std::to_string(g) + "_plus",
        "chain centralizers on the Arf-0 action at g=" + std::to_string(g), g,
        [g](Context& c) { return centralizers_claim(c, g, +1); });
  }
  add("centralizers_g2_alpha", "chain centralizers on the twisted degree-6 table", 2,
      [](Context& c) { return centralizers_claim(c, 2, 0); });

  for (unsigned g : {3u, 4u})
    add("restriction_g" + std::to_string(g),
        "subsurface restriction splits 3x small + 1x large", g,
        [g](Context& c) { return restriction_claim(c, g); });

  for (unsigned g : {2u, 3u, 4u})
    add("involutions_g" + std::to_string(g), "generator images are involutions", g,
        [g](Context& c) { return involutions_claim(c, g); });

  for (unsigned h = 5; h <= 10; ++h)
    add("epsilon_h" + std::to_string(h),
        "reduction surjectivity and twist-image order at h=" + std::to_string(h),
        (h - 1) / 2, [h](Context& c) { return epsilon_claim(c, h); });

  for (unsigned g : {2u, 3u})
    for (unsigned r : {1u, 2u})
      for (Flavor f : {Flavor::M, Flavor::T}) {
        const char* fname = (f == Flavor::M) ? "M" : "T";
        std::vector<std::pair<int, const char*>> bases = {{-1, "minus"}, {+1, "plus"}};
        if (g == 2) bases.push_back({0, "alpha"});
        for (auto [sign, bname] : bases)
          add("extension_g" + std::to_string(g) + "_r" + std::to_string(r) + "_" +
                  fname + "_" + bname,
              "unique extension of the degree-" +
                  std::to_string(sign == +1 ? sympgroups::m_indices(g).second
                                            : sympgroups::m_indices(g).first) +
                  " chain representation (r=" + std::to_string(r) + ")",
              g, [g, r, f, sign = sign](Context& c) {
                return extension_claim(c, g, r, f, sign);
              });
      }

  add("search_ut3u_minus", "forced image (3 5)tau of the conjugated twist", 2,
      search_ut3u_minus_claim);
  add("search_ut0u_minus", "forced image (4 6)tau of the conjugated twist", 2,
      search_ut0u_minus_claim);
  add("search_t5_minus", "forced image (5 6)tau of the extra twist", 2,
      search_t5_minus_claim);
  add("search_ut3u_alpha", "twisted-table searches stay inside the 6-point block", 2,
      search_ut3u_alpha_claim);

  for (unsigned g : {2u, 3u})
    add("commutator_closure_g" + std::to_string(g),
        "normal closure of one braid commutator is the derived subgroup", g,
        [g](Context& c) { return commutator_closure_claim(c, g); });

  add("index_growth", "5*m^-_{g-1} exceeds m^+_g for 4 <= g <= 8", 2,
      index_growth_claim);

  add("oracle_centralizer", "centralizer search agrees with enumeration", 2,
      oracle_centralizer_claim);
  add("oracle_conjugacy", "conjugacy search agrees with enumeration", 2,
      oracle_conjugacy_claim);
  add("oracle_group_order", "chain orders agree with enumeration", 2,
      oracle_group_order_claim);
  add("oracle_transvection", "transvections preserve forms, exhaustively", 2,
      oracle_transvection_claim);

  return reg;
}

}  // namespace

const std::vector<ClaimInfo>& registry() {
  static const std::vector<ClaimInfo> reg = make_registry();
  return reg;
}

const ClaimInfo* find_claim(std::string_view id) {
  for (const ClaimInfo& c : registry())
    if (c.id == id) return &c;
  return nullptr;
}

const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

namespace {

ClaimReport execute(Context& ctx, const ClaimInfo& info) {
  auto t0 = std::chrono::steady_clock::now();
  ClaimReport rep{info.id, info.paper_ref, Status::pass, "", 0};
  try {
    rep.witness = info.run(ctx);
  } catch (const std::exception& e) {
    rep.status = Status::fail;
    rep.witness = e.what();
  }
  rep.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
               .count();
  return rep;
}

}  // namespace

ClaimReport run_claim(Context& ctx, const std::string& id) {
  const ClaimInfo* info = find_claim(id);
  if (!info) throw std::invalid_argument("unknown claim id: " + id);
  return execute(ctx, *info);
}

std::vector<ClaimReport> run_all(Context& ctx, unsigned max_genus, unsigned jobs) {
  const auto& reg = registry();
  std::vector<ClaimReport> reports(reg.size());
  std::vector<size_t> todo;
  for (size_t i = 0; i < reg.size(); ++i) {
    if (reg[i].min_genus > max_genus) {
      reports[i] = ClaimReport{reg[i].id, reg[i].paper_ref, Status::skipped,
                               "requires --max-genus >= " +
                                   std::to_string(reg[i].min_genus),
                               0};
    } else {
      todo.push_back(i);
    }
  }

  if (jobs == 0)
    jobs = std::min(4u, std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(todo.size() ? todo.size() : 1));

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t k = next.fetch_add(1);
      if (k >= todo.size()) break;
      reports[todo[k]] = execute(ctx, reg[todo[k]]);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 0; j + 1 < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::sort(reports.begin(), reports.end(),
            [](const ClaimReport& a, const ClaimReport& b) { return a.id < b.id; });
  return reports;
}

}  // namespace mcgcheck::claims
