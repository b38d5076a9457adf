#include "mcgcheck/representation.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcgcheck::perm {

void Representation::add(std::string name, Perm image) {
  if (image.degree() != degree_)
    throw std::invalid_argument("Representation: image degree mismatch");
  if (has(name))
    throw std::invalid_argument("Representation: duplicate generator name " + name);
  names_.push_back(std::move(name));
  images_.push_back(std::move(image));
}

bool Representation::has(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

const Perm& Representation::image(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    throw std::invalid_argument("Representation: unknown generator " +
                                std::string(name));
  return images_[static_cast<size_t>(it - names_.begin())];
}

Representation Representation::restricted(
    const std::vector<std::string>& names) const {
  Representation out(degree_);
  for (const auto& n : names) out.add(n, image(n));
  return out;
}

namespace {

struct IsoSearch {
  unsigned m;
  const std::vector<Perm>& src;  // psi images
  const std::vector<Perm>& dst;  // phi images
  std::vector<std::vector<uint32_t>> src_orbits;
  std::vector<uint32_t> img;
  std::vector<bool> used;
  std::vector<uint32_t> trail;

  bool extend(uint32_t root, uint32_t cand) {
    if (used[cand]) return false;
    img[root] = cand;
    used[cand] = true;
    trail.push_back(root);
    std::vector<uint32_t> queue{root};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      uint32_t p = queue[qi];
      for (size_t k = 0; k < src.size(); ++k) {
        uint32_t q = src[k](p);
        uint32_t val = dst[k](img[p]);
        if (img[q] == 0) {
          if (used[val]) return false;
          img[q] = val;
          used[val] = true;
          trail.push_back(q);
          queue.push_back(q);
        } else if (img[q] != val) {
          return false;
        }
      }
    }
    return true;
  }

  void undo(size_t mark) {
    while (trail.size() > mark) {
      uint32_t p = trail.back();
      trail.pop_back();
      used[img[p]] = false;
      img[p] = 0;
    }
  }

  bool solve(size_t idx) {
    if (idx == src_orbits.size()) {
      // place remaining points (fixed by every psi image) on the unused
      // points, in increasing order; they must be fixed by every phi image
      std::vector<uint32_t> free_dst;
      for (uint32_t p = 1; p <= m; ++p)
        if (!used[p]) free_dst.push_back(p);
      size_t at = 0;
      size_t mark = trail.size();
      for (uint32_t p = 1; p <= m; ++p) {
        if (img[p] != 0) continue;
        uint32_t c = free_dst[at++];
        for (const Perm& d : dst)
          if (d(c) != c) {
            undo(mark);
            return false;
          }
        img[p] = c;
        used[c] = true;
        trail.push_back(p);
      }
      return true;
    }
    const auto& orb = src_orbits[idx];
    for (uint32_t cand = 1; cand <= m; ++cand) {
      size_t mark = trail.size();
      if (extend(orb[0], cand) && solve(idx + 1)) return true;
      undo(mark);
    }
    return false;
  }
};

}  // namespace

std::optional<Perm> conjugating_element(const Representation& phi,
                                        const Representation& psi) {
  if (phi.degree() != psi.degree())
    throw std::invalid_argument("conjugating_element: degree mismatch");
  auto sorted_names = [](const Representation& r) {
    auto v = r.names();
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted_names(phi) != sorted_names(psi))
    throw std::invalid_argument("conjugating_element: generator name sets differ");

  const unsigned m = phi.degree();
  std::vector<Perm> src, dst;
  for (const auto& n : phi.names()) {
    dst.push_back(phi.image(n));
    src.push_back(psi.image(n));
  }

  IsoSearch s{m, src, dst, {}, std::vector<uint32_t>(m + 1, 0),
              std::vector<bool>(m + 1, false), {}};
  for (const auto& orb : orbits(m, src))
    if (orb.size() > 1) s.src_orbits.push_back(orb);
  if (!s.solve(0)) return std::nullopt;

  std::vector<uint32_t> v(m);
  for (uint32_t p = 1; p <= m; ++p) v[p - 1] = s.img[p];
  Perm y{std::move(v)};
  for (size_t k = 0; k < src.size(); ++k)
    if (conjugate(y, src[k]) != dst[k])
      throw std::logic_error("conjugating_element: witness verification failed");
  return y;
}

Representation coset_action(const Representation& gens,
                            const std::function<bool(const Perm&)>& member_h,
                            unsigned index_bound) {
  const unsigned m = gens.degree();
  std::vector<Perm> reps{Perm(m)};  // reps[i] represents the coset H*reps[i]
  std::vector<Perm> rep_invs{Perm(m)};
  std::vector<std::vector<uint32_t>> action;  // action[i][k] = coset index
  std::vector<Perm> gen_invs;
  for (const Perm& g : gens.images()) gen_invs.push_back(g.inverse());

  // Right cosets, acted on by g: H*x |-> H*(x*g^-1).  With the right-factor-
  // first composition this is the homomorphic action with Stab(1) = H.
  for (size_t i = 0; i < reps.size(); ++i) {
    action.emplace_back(gens.size(), 0);
    for (size_t k = 0; k < gens.size(); ++k) {
      Perm w = reps[i] * gen_invs[k];
      size_t j = 0;
      for (; j < reps.size(); ++j)
        if (member_h(w * rep_invs[j])) break;
      if (j == reps.size()) {
        if (reps.size() >= index_bound)
          throw std::runtime_error("coset_action: index bound exceeded");
        rep_invs.push_back(w.inverse());
        reps.push_back(std::move(w));
      }
      action[i][k] = static_cast<uint32_t>(j + 1);
    }
  }

  const unsigned n = static_cast<unsigned>(reps.size());
  Representation out(n);
  for (size_t k = 0; k < gens.size(); ++k) {
    std::vector<uint32_t> v(n);
    for (unsigned i = 0; i < n; ++i) v[i] = action[i][k];
    out.add(gens.names()[k], Perm(std::move(v)));
  }
  return out;
}

}  // namespace mcgcheck::perm
