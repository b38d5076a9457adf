// Command-line front end: claim execution and object inspection for the
// crosscap-surface verification library.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mcgcheck/claims.hpp"
#include "mcgcheck/mcgmodel.hpp"
#include "mcgcheck/sympgroups.hpp"
#include "mcgcheck/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace mcgcheck;

int emit_reports(const std::vector<claims::ClaimReport>& reports,
                 const std::string& format, bool with_ms) {
  bool any_fail = false;
  if (format == "json") {
    for (const auto& r : reports) {
      json j;
      j["claim"] = r.id;
      j["paper_ref"] = r.paper_ref;
      j["status"] = claims::status_name(r.status);
      j["witness"] = r.witness;
      j["ms"] = with_ms ? r.ms : 0;
      std::cout << j.dump() << "\n";
      any_fail = any_fail || r.status == claims::Status::fail;
    }
  } else {
    size_t idw = 0, refw = 0;
    for (const auto& r : reports) {
      idw = std::max(idw, r.id.size());
      refw = std::max(refw, r.paper_ref.size());
    }
    for (const auto& r : reports) {
      std::string line = r.id;
      line.resize(idw, ' ');
      line += "  ";
      line += r.paper_ref;
      line.resize(idw + 2 + refw, ' ');
      line += "  ";
      line += claims::status_name(r.status);
      line.resize(idw + refw + 13, ' ');
      line += r.witness;
      line += "  [" + std::to_string(with_ms ? r.ms : 0) + " ms]";
      std::cout << line << "\n";
      any_fail = any_fail || r.status == claims::Status::fail;
    }
  }
  return any_fail ? 1 : 0;
}

int show_tables(const std::string& name) {
  const auto& t = verify::builtin_tables();
  const perm::Representation* rep = nullptr;
  if (name == "phi2-minus") rep = &t.minus;
  else if (name == "phi1-alpha") rep = &t.alpha;
  else if (name == "phi2-plus") rep = &t.plus;
  if (!rep) {
    std::cerr << "unknown table '" << name
              << "' (expected phi2-minus, phi1-alpha or phi2-plus)\n";
    return 2;
  }
  for (size_t k = 0; k < rep->size(); ++k)
    std::cout << rep->names()[k] << " " << rep->images()[k].cycle_string() << "\n";
  return 0;
}

// breadth-first renumbering of the nonzero-vector action, generators in
// declared order, so the printed cycles do not depend on the bit encoding
perm::Representation bfs_numbered(const mcgmodel::MatrixRep& rep) {
  const unsigned degree = (1u << rep.dim()) - 1;
  std::vector<perm::Perm> perms;
  for (const auto& m : rep.images()) perms.push_back(sympgroups::vector_perm(m));

  std::vector<uint32_t> number(degree + 1, 0);
  std::vector<uint32_t> order;
  order.push_back(1);
  number[1] = 1;
  for (size_t k = 0; k < order.size(); ++k)
    for (const auto& p : perms) {
      uint32_t y = p(order[k]);
      if (!number[y]) {
        number[y] = static_cast<uint32_t>(order.size()) + 1;
        order.push_back(y);
      }
    }
  for (uint32_t v = 1; v <= degree; ++v)
    if (!number[v]) {
      number[v] = static_cast<uint32_t>(order.size()) + 1;
      order.push_back(v);
    }

  perm::Representation out(degree);
  for (size_t k = 0; k < perms.size(); ++k) {
    std::vector<uint32_t> img(degree);
    for (uint32_t v = 1; v <= degree; ++v) img[number[v] - 1] = number[perms[k](v)];
    out.add(rep.names()[k], perm::Perm(std::move(img)));
  }
  return out;
}

int show_rep(const std::string& which, unsigned g, unsigned h,
             const std::string& format) {
  try {
    if (which == "epsilon") {
      if (h == 0) {
        std::cerr << "--h is required for epsilon\n";
        return 2;
      }
      auto eps = mcgmodel::epsilon(h);
      if (format == "matrix") {
        for (size_t k = 0; k < eps.rep.names().size(); ++k) {
          std::cout << eps.rep.names()[k] << "\n"
                    << eps.rep.images()[k].to_text() << "\n";
        }
      } else {
        auto rep = bfs_numbered(eps.rep);
        for (size_t k = 0; k < rep.size(); ++k)
          std::cout << rep.names()[k] << " " << rep.images()[k].cycle_string() << "\n";
      }
      return 0;
    }
    if (which == "phi-minus" || which == "phi-plus") {
      if (g == 0) {
        std::cerr << "--g is required for " << which << "\n";
        return 2;
      }
      auto model = sympgroups::build_sp(g);
      auto rep = verify::build_phi(model, which == "phi-minus" ? -1 : +1);
      if (format == "matrix") {
        std::cerr << "matrix format applies to epsilon only\n";
        return 2;
      }
      for (size_t k = 0; k < rep.size(); ++k)
        std::cout << rep.names()[k] << " " << rep.images()[k].cycle_string() << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  std::cerr << "unknown rep '" << which << "'\n";
  return 2;
}

int show_relations(unsigned h, const std::string& flavor) {
  try {
    auto rels = mcgmodel::expected_relations(
        h, flavor == "T" ? mcgmodel::Flavor::T : mcgmodel::Flavor::M);
    for (const auto& r : rels) std::cout << r.display() << "\n";
    return 0;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}

int show_group(const std::string& name, unsigned g) {
  try {
    if (name == "sp") {
      auto model = sympgroups::build_sp(g);
      std::cout << "order " << perm::order_string(model.vector_image.order())
                << " index 1\n";
      return 0;
    }
    if (name == "o-minus" || name == "o-plus") {
      auto model = sympgroups::build_sp(g);
      int arf = (name == "o-minus") ? 1 : 0;
      auto stab = sympgroups::orthogonal_stabilizer(model, model.canonical_form(arf));
      auto idx = model.vector_image.order() / stab.order();
      std::cout << "order " << perm::order_string(stab.order()) << " index "
                << perm::order_string(idx) << "\n";
      return 0;
    }
    if (name == "o-alpha") {
      if (g != 2) {
        std::cerr << "o-alpha exists only at g = 2\n";
        return 2;
      }
      auto model = sympgroups::build_sp(2);
      auto twisted = sympgroups::alpha_twisted_subgroup(model);
      std::cout << "order " << perm::order_string(twisted.order()) << " index "
                << perm::order_string(720 / twisted.order()) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  std::cerr << "unknown group '" << name << "'\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"construct and machine-check the finite group theory of the "
               "mod-2 action on crosscap surfaces"};
  app.require_subcommand(1);

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run verification claims");
  verify_cmd->require_subcommand(1);
  unsigned max_genus = 4;
  std::string output = "text";
  bool with_ms = false;
  bool inject_fault = false;
  std::string claim_id;

  auto* all_cmd = verify_cmd->add_subcommand("all", "run the whole registry");
  all_cmd->add_option("--max-genus", max_genus, "genus ceiling (default 4)")
      ->check(CLI::Range(2u, 5u));
  all_cmd->add_option("--output", output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  all_cmd->add_flag("--ms", with_ms, "include wall-clock runtimes");
  all_cmd->add_flag("--inject-fault", inject_fault)->group("");  // test hook

  auto* claim_cmd = verify_cmd->add_subcommand("claim", "run a single claim");
  claim_cmd->add_option("id", claim_id, "claim identifier")->required();
  claim_cmd->add_option("--output", output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  claim_cmd->add_flag("--ms", with_ms, "include wall-clock runtimes");
  claim_cmd->add_flag("--inject-fault", inject_fault)->group("");  // test hook

  // show
  auto* show_cmd = app.add_subcommand("show", "inspect objects");
  show_cmd->require_subcommand(1);

  std::string table_name;
  auto* tables_cmd = show_cmd->add_subcommand("tables", "print an embedded table");
  tables_cmd->add_option("name", table_name, "phi2-minus | phi1-alpha | phi2-plus")
      ->required();

  std::string rep_which = "epsilon", rep_format = "cycles";
  unsigned rep_g = 0, rep_h = 0;
  auto* rep_cmd = show_cmd->add_subcommand("rep", "print a representation");
  rep_cmd->set_help_flag("--help", "print help");
  rep_cmd->add_option("--which", rep_which, "epsilon | phi-minus | phi-plus")
      ->required()
      ->check(CLI::IsMember({"epsilon", "phi-minus", "phi-plus"}));
  rep_cmd->add_option("--g", rep_g, "genus parameter for phi-minus/phi-plus");
  rep_cmd->add_option("--h", rep_h, "crosscap rank for epsilon");
  rep_cmd->add_option("--format", rep_format, "cycles | matrix")
      ->check(CLI::IsMember({"cycles", "matrix"}));

  unsigned rel_h = 0;
  std::string rel_flavor = "M";
  auto* rel_cmd = show_cmd->add_subcommand("relations", "print the relation catalogue");
  rel_cmd->set_help_flag("--help", "print help");
  rel_cmd->add_option("--h", rel_h, "crosscap rank")->required();
  rel_cmd->add_option("--flavor", rel_flavor, "M | T")
      ->check(CLI::IsMember({"M", "T"}));

  std::string group_name;
  unsigned group_g = 2;
  auto* group_cmd = show_cmd->add_subcommand("group", "print order and index");
  group_cmd->add_option("--name", group_name, "sp | o-minus | o-plus | o-alpha")
      ->required()
      ->check(CLI::IsMember({"sp", "o-minus", "o-plus", "o-alpha"}));
  group_cmd->add_option("--g", group_g, "genus parameter")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (all_cmd->parsed()) {
      claims::Context ctx;
      if (inject_fault) ctx.corrupt_tables_for_testing();
      return emit_reports(claims::run_all(ctx, max_genus), output, with_ms);
    }
    if (claim_cmd->parsed()) {
      if (!claims::find_claim(claim_id)) {
        std::cerr << "unknown claim '" << claim_id << "'; see README for the id list\n";
        return 2;
      }
      claims::Context ctx;
      if (inject_fault) ctx.corrupt_tables_for_testing();
      return emit_reports({claims::run_claim(ctx, claim_id)}, output, with_ms);
    }
    if (tables_cmd->parsed()) return show_tables(table_name);
    if (rep_cmd->parsed()) return show_rep(rep_which, rep_g, rep_h, rep_format);
    if (rel_cmd->parsed()) return show_relations(rel_h, rel_flavor);
    if (group_cmd->parsed()) return show_group(group_name, group_g);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
