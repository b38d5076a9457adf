#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "mcgcheck/mcgmodel.hpp"
#include "mcgcheck/representation.hpp"
#include "mcgcheck/sympgroups.hpp"

namespace mcgcheck::claims {

enum class Status { pass, fail, skipped };

struct ClaimReport {
  std::string id;
  std::string paper_ref;
  Status status;
  std::string witness;
  int64_t ms;
};

struct PhiTablesRef;

// Shared immutable models, built once on first use.  Thread-safe: claims may
// run concurrently against one Context.
class Context {
public:
  Context();

  std::shared_ptr<const sympgroups::SpModel> sp(unsigned g);
  std::shared_ptr<const perm::Representation> phi(unsigned g, int sign);
  std::shared_ptr<const mcgmodel::EpsilonRep> eps(unsigned h);

  // the embedded tables all claims read; normally the builtin ones
  const perm::Representation& table_minus() const;
  const perm::Representation& table_alpha() const;
  const perm::Representation& table_plus() const;

  // fault-injection hook: swaps one entry of the transposition table so
  // that table-driven claims must report failure
  void corrupt_tables_for_testing();

private:
  std::mutex mu_;
  std::map<unsigned, std::shared_ptr<const sympgroups::SpModel>> sp_;
  std::map<std::pair<unsigned, int>, std::shared_ptr<const perm::Representation>> phi_;
  std::map<unsigned, std::shared_ptr<const mcgmodel::EpsilonRep>> eps_;
  std::shared_ptr<const perm::Representation> minus_override_;
};

struct ClaimInfo {
  std::string id;
  std::string paper_ref;
  unsigned min_genus;  // claims above the genus ceiling are skipped
  std::function<std::string(Context&)> run;  // returns the witness; throws on failure
};

const std::vector<ClaimInfo>& registry();
const ClaimInfo* find_claim(std::string_view id);

// Runs one claim (throws std::invalid_argument for an unknown id).
ClaimReport run_claim(Context& ctx, const std::string& id);

// Runs every registered claim with min_genus <= max_genus (the others are
// reported as skipped), fanning out over `jobs` worker threads, and returns
// the reports sorted by claim id.
std::vector<ClaimReport> run_all(Context& ctx, unsigned max_genus,
                                 unsigned jobs = 0);

const char* status_name(Status s);

}  // namespace mcgcheck::claims
