#include "mcgcheck/perm.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace mcgcheck::perm {

Perm::Perm(unsigned degree) : img_(degree) {
  for (unsigned i = 0; i < degree; ++i) img_[i] = i + 1;
}

Perm::Perm(std::vector<uint32_t> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t v : img_) {
    if (v < 1 || v > img_.size() || seen[v - 1])
      throw std::invalid_argument("Perm: images are not a bijection of {1,...,m}");
    seen[v - 1] = true;
  }
}

Perm Perm::parse_cycles(unsigned degree, std::string_view text) {
  Perm p(degree);
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (text.substr(i, 2) == "id") {
    i += 2;
    skip_ws();
    if (i != text.size()) throw std::invalid_argument("Perm: trailing text after 'id'");
    return p;
  }
  bool any = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(') throw std::invalid_argument("Perm: expected '('");
    ++i;
    std::vector<uint32_t> cycle;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw std::invalid_argument("Perm: unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("Perm: expected point number");
      uint32_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree) throw std::invalid_argument("Perm: point out of range");
      cycle.push_back(v);
    }
    for (size_t k = 0; k < cycle.size(); ++k) {
      uint32_t from = cycle[k];
      uint32_t to = cycle[(k + 1) % cycle.size()];
      if (!cycle.empty() && cycle.size() > 1) {
        if (p.img_[from - 1] != from)
          throw std::invalid_argument("Perm: point repeated across cycles");
        p.img_[from - 1] = to;
      }
    }
    any = true;
    skip_ws();
  }
  if (!any) throw std::invalid_argument("Perm: empty cycle text");
  // validate bijectivity (duplicate points within a cycle slip past the loop)
  return Perm(std::move(p.img_));
}

bool Perm::is_identity() const {
  for (uint32_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

Perm Perm::operator*(const Perm& rhs) const {
  if (degree() != rhs.degree())
    throw std::invalid_argument("Perm: degree mismatch in composition");
  Perm out;
  out.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) out.img_[i] = img_[rhs.img_[i] - 1];
  return out;
}

Perm Perm::inverse() const {
  Perm out;
  out.img_.resize(img_.size());
  for (uint32_t i = 0; i < img_.size(); ++i) out.img_[img_[i] - 1] = i + 1;
  return out;
}

std::vector<uint32_t> Perm::support() const {
  std::vector<uint32_t> s;
  for (uint32_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i + 1) s.push_back(i + 1);
  return s;
}

std::vector<uint32_t> Perm::fixed() const {
  std::vector<uint32_t> f;
  for (uint32_t i = 0; i < img_.size(); ++i)
    if (img_[i] == i + 1) f.push_back(i + 1);
  return f;
}

std::string Perm::cycle_string() const {
  std::string out;
  std::vector<bool> seen(img_.size(), false);
  for (uint32_t start = 1; start <= img_.size(); ++start) {
    if (seen[start - 1] || img_[start - 1] == start) continue;
    out += '(';
    uint32_t x = start;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(x);
      seen[x - 1] = true;
      x = img_[x - 1];
      first = false;
    } while (x != start);
    out += ')';
  }
  if (out.empty()) return "id";
  return out;
}

Perm conjugate(const Perm& g, const Perm& x) { return g * x * g.inverse(); }

Perm commutator(const Perm& x, const Perm& y) {
  return x * y * x.inverse() * y.inverse();
}

std::vector<uint32_t> orbit_of(unsigned degree, const std::vector<Perm>& gens,
                               uint32_t point) {
  if (point < 1 || point > degree)
    throw std::invalid_argument("orbit_of: point out of range");
  for (const Perm& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("orbit_of: generator degree mismatch");
  std::vector<uint32_t> orb{point};
  std::vector<bool> in(degree + 1, false);
  in[point] = true;
  for (size_t k = 0; k < orb.size(); ++k) {
    for (const Perm& g : gens) {
      uint32_t y = g(orb[k]);
      if (!in[y]) {
        in[y] = true;
        orb.push_back(y);
      }
    }
  }
  std::sort(orb.begin(), orb.end());
  return orb;
}

std::vector<std::vector<uint32_t>> orbits(unsigned degree,
                                          const std::vector<Perm>& gens) {
  std::vector<bool> done(degree + 1, false);
  std::vector<std::vector<uint32_t>> out;
  for (uint32_t p = 1; p <= degree; ++p) {
    if (done[p]) continue;
    auto orb = orbit_of(degree, gens, p);
    for (uint32_t x : orb) done[x] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

bool is_transitive(unsigned degree, const std::vector<Perm>& gens) {
  if (degree == 0) return true;
  return orbit_of(degree, gens, 1).size() == degree;
}

}  // namespace mcgcheck::perm
