#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mcgcheck/perm.hpp"
#include "mcgcheck/perm_group.hpp"

namespace mcgcheck::perm {

// An ordered association from abstract generator names to permutations of a
// common degree.  The name order is part of the value: searches that iterate
// over generators do so in this order, which keeps reports reproducible.
class Representation {
public:
  explicit Representation(unsigned degree) : degree_(degree) {}

  void add(std::string name, Perm image);

  unsigned degree() const { return degree_; }
  size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Perm>& images() const { return images_; }

  bool has(std::string_view name) const;
  const Perm& image(std::string_view name) const;

  Representation restricted(const std::vector<std::string>& names) const;
  PermGroup group() const { return PermGroup(degree_, images_); }

  std::vector<std::vector<uint32_t>> orbit_partition() const {
    return orbits(degree_, images_);
  }
  bool transitive() const { return is_transitive(degree_, images_); }

  friend bool operator==(const Representation&, const Representation&) = default;

private:
  unsigned degree_;
  std::vector<std::string> names_;
  std::vector<Perm> images_;
};

// Searches for y with phi(x) = y * psi(x) * y^-1 for every generator name.
// Exhaustive backtrack over labeled G-set isomorphisms from the psi action
// to the phi action; returns the first witness in the deterministic search
// order, or nullopt when none exists.
std::optional<Perm> conjugating_element(const Representation& phi,
                                        const Representation& psi);

// Action of the group generated by `gens` on the right cosets of the
// subgroup recognized by `member_h`.  Cosets are numbered by breadth-first
// discovery from the subgroup itself (point 1), generators applied in
// declared order.  Throws when more than `index_bound` cosets appear.
Representation coset_action(const Representation& gens,
                            const std::function<bool(const Perm&)>& member_h,
                            unsigned index_bound);

}  // namespace mcgcheck::perm
