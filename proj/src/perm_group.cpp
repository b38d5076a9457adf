#include "mcgcheck/perm_group.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mcgcheck::perm {

std::string order_string(Order n) {
  if (n == 0) return "0";
  std::string s;
  while (n > 0) {
    s += static_cast<char>('0' + static_cast<unsigned>(n % 10));
    n /= 10;
  }
  std::reverse(s.begin(), s.end());
  return s;
}

PermGroup::PermGroup(unsigned degree, std::vector<Perm> generators)
    : degree_(degree), box_(std::make_shared<ChainBox>()) {
  std::set<Perm> seen;
  for (Perm& g : generators) {
    if (g.degree() != degree)
      throw std::invalid_argument("PermGroup: generator degree mismatch");
    if (g.is_identity()) continue;
    if (seen.insert(g).second) gens_.push_back(std::move(g));
  }
}

std::pair<Perm, size_t> PermGroup::Chain::strip(Perm g, size_t from) const {
  for (size_t i = from; i < levels.size(); ++i) {
    const Level& lv = levels[i];
    uint32_t x = g(lv.base);
    int32_t k = lv.pos[x];
    if (k < 0) return {std::move(g), i};
    g = lv.trans_inv[k] * g;
  }
  return {std::move(g), levels.size()};
}

namespace {

uint32_t min_moved_point(const Perm& p) {
  for (uint32_t x = 1; x <= p.degree(); ++x)
    if (p(x) != x) return x;
  return 0;
}

}  // namespace

void PermGroup::build_chain(Chain& c, const std::vector<Perm>& gens) {
  const unsigned degree = c.degree;

  auto rebuild = [degree](Level& lv) {
    lv.orbit.assign(1, lv.base);
    lv.pos.assign(degree + 1, -1);
    lv.pos[lv.base] = 0;
    lv.trans.assign(1, Perm(degree));
    lv.trans_inv.assign(1, Perm(degree));
    for (size_t k = 0; k < lv.orbit.size(); ++k) {
      for (const Perm& g : lv.gens) {
        uint32_t y = g(lv.orbit[k]);
        if (lv.pos[y] < 0) {
          lv.pos[y] = static_cast<int32_t>(lv.orbit.size());
          lv.orbit.push_back(y);
          lv.trans.push_back(g * lv.trans[k]);
          lv.trans_inv.push_back(lv.trans.back().inverse());
        }
      }
    }
  };

  std::vector<bool> dirty;

  // Adds g to levels from `from` up to the first level whose base it moves,
  // appending a new level (base = smallest moved point) when it fixes all
  // existing bases.  Returns the index of the last level touched.
  auto add_gen = [&](const Perm& g, size_t from) -> size_t {
    size_t i = from;
    for (;;) {
      if (i == c.levels.size()) {
        Level lv;
        lv.base = min_moved_point(g);
        c.levels.push_back(std::move(lv));
        dirty.push_back(true);
      }
      c.levels[i].gens.push_back(g);
      dirty[i] = true;
      if (g(c.levels[i].base) != c.levels[i].base) return i;
      ++i;
    }
  };

  for (const Perm& g : gens) add_gen(g, 0);

  // Verify Schreier generators bottom-up; a failed strip deposits the
  // residue further down and re-verification resumes there.
  size_t n = c.levels.size();
  if (n == 0) return;
  ptrdiff_t i = static_cast<ptrdiff_t>(n) - 1;
  while (i >= 0) {
    Level& lv = c.levels[i];
    if (dirty[i]) {
      rebuild(lv);
      dirty[i] = false;
    }
    bool descended = false;
    for (size_t k = 0; k < lv.orbit.size() && !descended; ++k) {
      for (const Perm& g : lv.gens) {
        uint32_t y = g(lv.orbit[k]);
        Perm schreier = lv.trans_inv[lv.pos[y]] * (g * lv.trans[k]);
        if (schreier.is_identity()) continue;
        auto [res, j] = c.strip(std::move(schreier), i + 1);
        if (res.is_identity()) continue;
        size_t last = add_gen(res, i + 1);
        i = static_cast<ptrdiff_t>(last);
        descended = true;
        break;
      }
    }
    if (!descended) --i;
  }
}

const PermGroup::Chain& PermGroup::chain() const {
  std::call_once(box_->once, [this] {
    auto c = std::make_shared<Chain>();
    c->degree = degree_;
    build_chain(*c, gens_);
    box_->chain = std::move(c);
  });
  return *box_->chain;
}

Order PermGroup::order() const {
  Order n = 1;
  for (const Level& lv : chain().levels) n *= lv.orbit.size();
  return n;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_)
    throw std::invalid_argument("PermGroup::contains: degree mismatch");
  auto [res, lvl] = chain().strip(p, 0);
  (void)lvl;
  return res.is_identity();
}

std::vector<uint32_t> PermGroup::base() const {
  std::vector<uint32_t> b;
  for (const Level& lv : chain().levels) b.push_back(lv.base);
  return b;
}

std::vector<uint32_t> PermGroup::basic_orbit_lengths() const {
  std::vector<uint32_t> lens;
  for (const Level& lv : chain().levels)
    lens.push_back(static_cast<uint32_t>(lv.orbit.size()));
  return lens;
}

std::vector<Perm> PermGroup::elements(size_t limit) const {
  if (order() > limit)
    throw std::runtime_error("PermGroup::elements: order exceeds limit");
  const Chain& c = chain();
  std::vector<Perm> out{Perm(degree_)};
  for (auto it = c.levels.rbegin(); it != c.levels.rend(); ++it) {
    std::vector<Perm> next;
    next.reserve(out.size() * it->trans.size());
    for (const Perm& t : it->trans)
      for (const Perm& tail : out) next.push_back(t * tail);
    out = std::move(next);
  }
  return out;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& elems) {
  for (const Perm& e : elems)
    if (!g.contains(e))
      throw std::invalid_argument("normal_closure: element outside the group");
  std::vector<Perm> gens;
  for (const Perm& e : elems)
    if (!e.is_identity()) gens.push_back(e);
  PermGroup k(g.degree(), gens);
  size_t head = 0;
  while (head < gens.size()) {
    const Perm s = gens[head++];
    for (const Perm& c : g.generators()) {
      Perm t = conjugate(c, s);
      if (!k.contains(t)) {
        gens.push_back(std::move(t));
        k = PermGroup(g.degree(), gens);
      }
    }
  }
  return k;
}

namespace {

// Extends root |-> cand along the action graph of gens; fills img/used and
// records the assignments made so they can be undone.  Verifies every edge
// incident to the component, so success means the partial map intertwines
// the two labeled actions on the whole orbit.
bool extend_orbit_map(const std::vector<Perm>& src_gens,
                      const std::vector<Perm>& dst_gens, uint32_t root,
                      uint32_t cand, std::vector<uint32_t>& img,
                      std::vector<bool>& used, std::vector<uint32_t>& trail) {
  if (used[cand]) return false;
  img[root] = cand;
  used[cand] = true;
  trail.push_back(root);
  std::vector<uint32_t> queue{root};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    uint32_t p = queue[qi];
    for (size_t k = 0; k < src_gens.size(); ++k) {
      uint32_t q = src_gens[k](p);
      uint32_t val = dst_gens[k](img[p]);
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

void undo_trail(std::vector<uint32_t>& img, std::vector<bool>& used,
                std::vector<uint32_t>& trail, size_t mark) {
  while (trail.size() > mark) {
    uint32_t p = trail.back();
    trail.pop_back();
    used[img[p]] = false;
    img[p] = 0;
  }
}

}  // namespace

PermGroup centralizer_in_sym(unsigned m, const std::vector<Perm>& xs) {
  for (const Perm& x : xs)
    if (x.degree() != m)
      throw std::invalid_argument("centralizer_in_sym: degree mismatch");

  auto orbs = orbits(m, xs);
  std::vector<uint32_t> img(m + 1, 0);
  std::vector<bool> used(m + 1, false);
  std::vector<uint32_t> trail;

  // All centralizing self-maps of one orbit: candidate images of the root,
  // unique extension along the action graph.
  auto orbit_self_maps = [&](const std::vector<uint32_t>& orb) {
    std::vector<Perm> maps;
    for (uint32_t cand : orb) {
      size_t mark = trail.size();
      if (extend_orbit_map(xs, xs, orb[0], cand, img, used, trail)) {
        std::vector<uint32_t> v(m);
        for (uint32_t p = 1; p <= m; ++p) v[p - 1] = img[p] ? img[p] : p;
        maps.emplace_back(std::move(v));
      }
      undo_trail(img, used, trail, mark);
    }
    return maps;
  };

  // Isomorphism of labeled actions from orbit a onto orbit b, if any.
  auto cross_map = [&](const std::vector<uint32_t>& a,
                       const std::vector<uint32_t>& b) -> std::vector<uint32_t> {
    for (uint32_t cand : b) {
      size_t mark = trail.size();
      if (extend_orbit_map(xs, xs, a[0], cand, img, used, trail)) {
        std::vector<uint32_t> v(img.begin(), img.end());
        undo_trail(img, used, trail, mark);
        return v;
      }
      undo_trail(img, used, trail, mark);
    }
    return {};
  };

  std::vector<Perm> out_gens;
  std::vector<bool> classed(orbs.size(), false);
  for (size_t a = 0; a < orbs.size(); ++a) {
    if (classed[a]) continue;
    classed[a] = true;
    for (const Perm& p : orbit_self_maps(orbs[a]))
      if (!p.is_identity()) out_gens.push_back(p);
    for (size_t b = a + 1; b < orbs.size(); ++b) {
      if (classed[b] || orbs[b].size() != orbs[a].size()) continue;
      auto f = cross_map(orbs[a], orbs[b]);
      if (f.empty()) continue;
      classed[b] = true;
      // swap generator: f on orbit a, f^-1 on orbit b, identity elsewhere
      std::vector<uint32_t> v(m);
      for (uint32_t p = 1; p <= m; ++p) v[p - 1] = p;
      for (uint32_t p : orbs[a]) {
        v[p - 1] = f[p];
        v[f[p] - 1] = p;
      }
      out_gens.emplace_back(std::move(v));
    }
  }
  return PermGroup(m, std::move(out_gens));
}

}  // namespace mcgcheck::perm
