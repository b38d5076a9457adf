#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mcgcheck::perm {

// A permutation of {1,...,m} for a fixed degree m.  Points are 1-based
// throughout so that cycle notation in tests and reports can be compared
// verbatim.  Composition is (p*q)(x) = p(q(x)): the right factor acts first.
class Perm {
public:
  Perm() = default;
  explicit Perm(unsigned degree);               // identity
  explicit Perm(std::vector<uint32_t> images);  // images[i-1] = image of i

  // Parses cycle notation, e.g. "(1 2)(3 5)(4 6)".  Whitespace-insensitive;
  // "id" or "()" denote the identity; fixed points are omitted.
  static Perm parse_cycles(unsigned degree, std::string_view text);

  unsigned degree() const { return static_cast<unsigned>(img_.size()); }
  uint32_t operator()(uint32_t x) const { return img_[x - 1]; }
  bool is_identity() const;

  Perm operator*(const Perm& rhs) const;  // rhs acts first
  Perm inverse() const;

  std::vector<uint32_t> support() const;
  std::vector<uint32_t> fixed() const;

  // Canonical cycle notation: cycles ordered by least element, each cycle
  // starting at its least element; "id" for the identity.
  std::string cycle_string() const;

  const std::vector<uint32_t>& images() const { return img_; }

  friend auto operator<=>(const Perm&, const Perm&) = default;

private:
  std::vector<uint32_t> img_;
};

Perm conjugate(const Perm& g, const Perm& x);   // g * x * g^-1
Perm commutator(const Perm& x, const Perm& y);  // x * y * x^-1 * y^-1

// Orbit machinery over an explicit generator list.  The degree is passed
// separately so that an empty generator list still has a well-defined
// ambient set.
std::vector<uint32_t> orbit_of(unsigned degree, const std::vector<Perm>& gens,
                               uint32_t point);
std::vector<std::vector<uint32_t>> orbits(unsigned degree,
                                          const std::vector<Perm>& gens);
bool is_transitive(unsigned degree, const std::vector<Perm>& gens);

}  // namespace mcgcheck::perm
