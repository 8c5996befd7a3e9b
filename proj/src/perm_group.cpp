#include "og4/perm_group.hpp"

#include <algorithm>
#include <unordered_set>

namespace og4 {

namespace {

Point smallest_moved_point(const Permutation &p) {
  for (Point x = 0; x < p.degree(); ++x)
    if (p[x] != x)
      return x;
  throw Error(ErrorKind::AssertionFailed, "smallest_moved_point: identity");
}

} // namespace

Bsgs::Bsgs(Point degree, const std::vector<Permutation> &generators,
           std::vector<Point> prescribed_base, Order order_hint)
    : degree_(degree) {
  for (const auto &g : generators) {
    if (g.degree() != degree_)
      throw Error(ErrorKind::DegreeMismatch, "Bsgs: generator degree mismatch");
    if (g.is_identity())
      continue;
    if (std::find(gens_.begin(), gens_.end(), g) != gens_.end())
      continue;
    gens_.push_back(g);
    gen_invs_.push_back(g.inverse());
  }
  for (Point b : prescribed_base) {
    if (b >= degree_)
      throw Error(ErrorKind::BadParameters, "Bsgs: base point out of range");
    append_level(b);
  }

  // place every generator on the chain prefix it fixes
  for (std::size_t gi = 0; gi < gens_.size(); ++gi) {
    std::size_t l = 0;
    for (;;) {
      if (l == levels_.size())
        append_level(smallest_moved_point(gens_[gi]));
      levels_[l].gen_idx.push_back(static_cast<int>(gi));
      if (gens_[gi][levels_[l].base] != levels_[l].base)
        break;
      ++l;
    }
  }
  for (std::size_t l = 0; l < levels_.size(); ++l)
    rebuild_orbit(l);
  if (levels_.empty())
    return;
  if (order_hint != 0 && order() == order_hint)
    return;

  // deterministic Schreier-Sims with sifting-based pruning
  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(levels_.size()) - 1;
  while (i >= 0) {
    bool clean = true;
    Level &lvl = levels_[static_cast<std::size_t>(i)];
    for (std::size_t oi = 0; clean && oi < lvl.orbit.size(); ++oi) {
      Point gamma = lvl.orbit[oi];
      for (int gidx : lvl.gen_idx) {
        Point delta = gens_[static_cast<std::size_t>(gidx)][gamma];
        if (lvl.tree_gen[delta] == gidx && lvl.tree_parent[delta] == gamma)
          continue; // tree edge, Schreier generator is trivial
        Permutation w = transversal(static_cast<std::size_t>(i), gamma);
        w = compose(w, gens_[static_cast<std::size_t>(gidx)]);
        mul_transversal_inverse(w, static_cast<std::size_t>(i), delta);
        auto [residue, j] = sift_from(std::move(w), static_cast<std::size_t>(i) + 1);
        if (residue.is_identity())
          continue;
        if (j == levels_.size())
          append_level(smallest_moved_point(residue));
        gens_.push_back(residue);
        gen_invs_.push_back(residue.inverse());
        int new_idx = static_cast<int>(gens_.size()) - 1;
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels_[l].gen_idx.push_back(new_idx);
          rebuild_orbit(l);
        }
        if (order_hint != 0 && order() == order_hint)
          return;
        i = static_cast<std::ptrdiff_t>(j);
        clean = false;
        break;
      }
    }
    if (clean)
      --i;
  }
}

void Bsgs::append_level(Point base_point) {
  Level lvl;
  lvl.base = base_point;
  lvl.tree_gen.assign(degree_, -2);
  lvl.tree_parent.assign(degree_, 0);
  lvl.orbit = {base_point};
  lvl.tree_gen[base_point] = -1;
  levels_.push_back(std::move(lvl));
}

void Bsgs::rebuild_orbit(std::size_t level) {
  Level &lvl = levels_[level];
  lvl.tree_gen.assign(degree_, -2);
  lvl.orbit.clear();
  lvl.orbit.push_back(lvl.base);
  lvl.tree_gen[lvl.base] = -1;
  for (std::size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
    Point pt = lvl.orbit[qi];
    for (int gidx : lvl.gen_idx) {
      Point img = gens_[static_cast<std::size_t>(gidx)][pt];
      if (lvl.tree_gen[img] == -2) {
        lvl.tree_gen[img] = gidx;
        lvl.tree_parent[img] = pt;
        lvl.orbit.push_back(img);
      }
    }
  }
}

Permutation Bsgs::transversal(std::size_t level, Point point) const {
  const Level &lvl = levels_[level];
  std::vector<int> path;
  Point cur = point;
  while (lvl.tree_gen[cur] != -1) {
    path.push_back(lvl.tree_gen[cur]);
    cur = lvl.tree_parent[cur];
  }
  Permutation u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    u = compose(u, gens_[static_cast<std::size_t>(*it)]);
  return u;
}

void Bsgs::mul_transversal_inverse(Permutation &x, std::size_t level,
                                   Point point) const {
  const Level &lvl = levels_[level];
  Point cur = point;
  while (lvl.tree_gen[cur] != -1) {
    x = compose(x, gen_invs_[static_cast<std::size_t>(lvl.tree_gen[cur])]);
    cur = lvl.tree_parent[cur];
  }
}

std::pair<Permutation, std::size_t> Bsgs::sift_from(Permutation x,
                                                    std::size_t level) const {
  for (std::size_t l = level; l < levels_.size(); ++l) {
    Point gamma = x[levels_[l].base];
    if (levels_[l].tree_gen[gamma] == -2)
      return {std::move(x), l};
    mul_transversal_inverse(x, l, gamma);
  }
  return {std::move(x), levels_.size()};
}

Permutation Bsgs::sift(const Permutation &x) const {
  if (x.degree() != degree_)
    throw Error(ErrorKind::DegreeMismatch, "sift: degree mismatch");
  return sift_from(x, 0).first;
}

bool Bsgs::contains(const Permutation &x) const {
  if (x.degree() != degree_)
    throw Error(ErrorKind::DegreeMismatch, "contains: degree mismatch");
  auto [residue, level] = sift_from(x, 0);
  return level == levels_.size() && residue.is_identity();
}

Order Bsgs::order() const { return suffix_order(0); }

Order Bsgs::suffix_order(std::size_t from_level) const {
  Order o = 1;
  for (std::size_t l = from_level; l < levels_.size(); ++l) {
    Order next = o * static_cast<Order>(levels_[l].orbit.size());
    if (next / static_cast<Order>(levels_[l].orbit.size()) != o)
      throw std::overflow_error("Bsgs::order: 128-bit overflow");
    o = next;
  }
  return o;
}

std::vector<Point> Bsgs::base() const {
  std::vector<Point> b;
  b.reserve(levels_.size());
  for (const auto &lvl : levels_)
    b.push_back(lvl.base);
  return b;
}

std::vector<Permutation> Bsgs::level_generators(std::size_t level) const {
  std::vector<Permutation> out;
  if (level >= levels_.size())
    return out;
  for (int gidx : levels_[level].gen_idx)
    out.push_back(gens_[static_cast<std::size_t>(gidx)]);
  return out;
}

std::vector<Point> Bsgs::base_images(const Permutation &x) const {
  std::vector<Point> key;
  key.reserve(levels_.size());
  for (const auto &lvl : levels_)
    key.push_back(x[lvl.base]);
  return key;
}

Permutation Bsgs::element_from_base_images(const std::vector<Point> &key) const {
  if (key.size() != levels_.size())
    throw Error(ErrorKind::BadParameters, "element_from_base_images: bad key size");
  std::vector<Point> imgs = key;
  std::vector<Permutation> parts;
  parts.reserve(levels_.size());
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    Point gamma = imgs[l];
    if (gamma >= degree_ || levels_[l].tree_gen[gamma] == -2)
      throw Error(ErrorKind::BadParameters,
                  "element_from_base_images: image outside basic orbit");
    Permutation u = transversal(l, gamma);
    Permutation uinv = u.inverse();
    for (std::size_t j = l + 1; j < levels_.size(); ++j)
      imgs[j] = uinv[imgs[j]];
    parts.push_back(std::move(u));
  }
  Permutation g(degree_);
  for (auto it = parts.rbegin(); it != parts.rend(); ++it)
    g = compose(g, *it);
  return g;
}

void Bsgs::for_each_element(const std::function<void(const Permutation &)> &fn,
                            Order limit) const {
  if (order() > limit)
    throw Error(ErrorKind::BudgetExceeded, "for_each_element: order exceeds limit");
  // children lists of each Schreier tree
  std::vector<std::vector<std::vector<std::pair<Point, int>>>> kids(levels_.size());
  for (std::size_t l = 0; l < levels_.size(); ++l) {
    kids[l].assign(degree_, {});
    for (Point pt : levels_[l].orbit)
      if (levels_[l].tree_gen[pt] >= 0)
        kids[l][levels_[l].tree_parent[pt]].push_back({pt, levels_[l].tree_gen[pt]});
  }
  // element = u^(m-1) * ... * u^(0); recurse over levels accumulating on the right
  std::function<void(std::size_t, const Permutation &)> rec_level;
  std::function<void(std::size_t, Point, const Permutation &, const Permutation &)>
      dfs;
  dfs = [&](std::size_t level, Point node, const Permutation &u,
            const Permutation &right) {
    rec_level(level + 1, compose(u, right));
    for (auto [child, gidx] : kids[level][node])
      dfs(level, child, compose(u, gens_[static_cast<std::size_t>(gidx)]), right);
  };
  rec_level = [&](std::size_t level, const Permutation &right) {
    if (level == levels_.size()) {
      fn(right);
      return;
    }
    dfs(level, levels_[level].base, Permutation(degree_), right);
  };
  rec_level(0, Permutation(degree_));
}

PermGroup::PermGroup(Point degree, std::vector<Permutation> generators)
    : degree_(degree) {
  if (degree == 0)
    throw Error(ErrorKind::BadParameters, "PermGroup: degree must be positive");
  for (auto &g : generators) {
    if (g.degree() != degree_)
      throw Error(ErrorKind::DegreeMismatch, "PermGroup: generator degree mismatch");
    if (g.is_identity())
      continue;
    if (std::find(gens_.begin(), gens_.end(), g) != gens_.end())
      continue;
    gens_.push_back(std::move(g));
  }
}

const Bsgs &PermGroup::bsgs(Order order_hint) const {
  if (!bsgs_)
    bsgs_ = std::make_shared<const Bsgs>(degree_, gens_, std::vector<Point>{},
                                         order_hint);
  return *bsgs_;
}

bool PermGroup::contains(const Permutation &x) const { return bsgs().contains(x); }

bool PermGroup::is_trivial() const { return gens_.empty(); }

std::vector<Point> PermGroup::orbit(Point point) const {
  if (point >= degree_)
    throw Error(ErrorKind::BadParameters, "orbit: point out of range");
  std::vector<bool> seen(degree_, false);
  std::vector<Point> orb{point};
  seen[point] = true;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (const auto &g : gens_) {
      Point img = g[orb[i]];
      if (!seen[img]) {
        seen[img] = true;
        orb.push_back(img);
      }
    }
  return orb;
}

std::pair<std::vector<Point>, std::vector<Permutation>>
PermGroup::orbit_with_transversal(Point point) const {
  if (point >= degree_)
    throw Error(ErrorKind::BadParameters, "orbit: point out of range");
  std::vector<int> seen(degree_, -1);
  std::vector<Point> orb{point};
  std::vector<Permutation> wit{Permutation(degree_)};
  seen[point] = 0;
  for (std::size_t i = 0; i < orb.size(); ++i)
    for (const auto &g : gens_) {
      Point img = g[orb[i]];
      if (seen[img] < 0) {
        seen[img] = static_cast<int>(orb.size());
        orb.push_back(img);
        wit.push_back(compose(wit[i], g));
      }
    }
  return {std::move(orb), std::move(wit)};
}

std::vector<std::vector<Point>> PermGroup::orbits() const {
  std::vector<bool> seen(degree_, false);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < degree_; ++x) {
    if (seen[x])
      continue;
    auto orb = orbit(x);
    for (Point y : orb)
      seen[y] = true;
    out.push_back(std::move(orb));
  }
  return out;
}

std::vector<Permutation> PermGroup::elements(Order max_order) const {
  if (order() > max_order)
    throw Error(ErrorKind::AssertionFailed, "elements: group too large");
  std::vector<Permutation> out;
  bsgs().for_each_element([&](const Permutation &p) { out.push_back(p); },
                          max_order);
  return out;
}

PermGroup PermGroup::stabilizer(Point point) const {
  if (point >= degree_)
    throw Error(ErrorKind::BadParameters, "stabilizer: point out of range");
  Bsgs chain(degree_, gens_, {point});
  return PermGroup(degree_, chain.level_generators(1));
}

PermGroup conjugate_group(const PermGroup &g, const Permutation &x) {
  if (g.degree() != x.degree())
    throw Error(ErrorKind::DegreeMismatch, "conjugate_group: degree mismatch");
  std::vector<Permutation> gens;
  gens.reserve(g.generators().size());
  for (const auto &p : g.generators())
    gens.push_back(conjugated(p, x));
  return PermGroup(g.degree(), std::move(gens));
}

PermGroup normal_closure(const PermGroup &g, const std::vector<Permutation> &seeds) {
  std::vector<Permutation> gens;
  for (const auto &s : seeds) {
    if (s.degree() != g.degree())
      throw Error(ErrorKind::DegreeMismatch, "normal_closure: degree mismatch");
    if (!s.is_identity())
      gens.push_back(s);
  }
  PermGroup closure(g.degree(), gens);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Permutation> current = closure.generators();
    for (std::size_t i = 0; i < current.size(); ++i)
      for (const auto &s : g.generators()) {
        Permutation t = conjugated(current[i], s);
        if (!closure.contains(t)) {
          current.push_back(std::move(t));
          closure = PermGroup(g.degree(), current);
          changed = true;
        }
      }
  }
  return closure;
}

bool is_subgroup_of(const PermGroup &sub, const PermGroup &g) {
  for (const auto &p : sub.generators())
    if (!g.contains(p))
      return false;
  return true;
}

bool is_core_free(const PermGroup &g, const PermGroup &sub) {
  if (!is_subgroup_of(sub, g))
    throw Error(ErrorKind::NotSubgroup, "is_core_free: sub is not a subgroup");
  auto elems = sub.elements(64);
  std::unordered_set<Permutation, PermHash> in_sub(elems.begin(), elems.end());
  for (const auto &v : elems) {
    if (v.is_identity())
      continue;
    // does the normal closure of v stay inside sub?
    std::vector<Permutation> work{v};
    std::unordered_set<Permutation, PermHash> seen{v};
    bool inside = true;
    for (std::size_t i = 0; inside && i < work.size(); ++i)
      for (const auto &s : g.generators()) {
        Permutation t = conjugated(work[i], s);
        if (!in_sub.count(t)) {
          inside = false;
          break;
        }
        if (seen.insert(t).second)
          work.push_back(t);
      }
    if (inside)
      return false;
  }
  return true;
}

Permutation block_top(Point block_degree, unsigned k, const Permutation &top) {
  if (top.degree() != k)
    throw Error(ErrorKind::BadParameters, "block_top: malformed top");
  std::vector<Point> im(static_cast<std::size_t>(block_degree) * k);
  for (unsigned b = 0; b < k; ++b)
    for (Point x = 0; x < block_degree; ++x)
      im[static_cast<std::size_t>(b) * block_degree + x] =
          static_cast<Point>(top[b]) * block_degree + x;
  return Permutation(std::move(im));
}

Permutation wreath_element(Point block_degree, unsigned k,
                           const std::vector<Permutation> &tuple,
                           const Permutation &top) {
  if (tuple.size() != k || top.degree() != k)
    throw Error(ErrorKind::BadParameters, "wreath_element: malformed data");
  std::vector<Point> im(static_cast<std::size_t>(block_degree) * k);
  for (unsigned b = 0; b < k; ++b) {
    if (tuple[b].degree() != block_degree)
      throw Error(ErrorKind::DegreeMismatch, "wreath_element: tuple degree mismatch");
    for (Point x = 0; x < block_degree; ++x)
      im[static_cast<std::size_t>(b) * block_degree + x] =
          static_cast<Point>(top[b]) * block_degree + tuple[b][x];
  }
  return Permutation(std::move(im));
}

PermGroup direct_power_with_top(const PermGroup &t, unsigned k,
                                const std::vector<Permutation> &top) {
  if (k == 0)
    throw Error(ErrorKind::BadParameters, "direct_power_with_top: k must be >= 1");
  Point d = t.degree();
  std::vector<Permutation> gens;
  Permutation id(d);
  for (unsigned b = 0; b < k; ++b)
    for (const auto &g : t.generators()) {
      std::vector<Permutation> tuple(k, id);
      tuple[b] = g;
      gens.push_back(wreath_element(d, k, tuple, Permutation(k)));
    }
  for (const auto &s : top)
    gens.push_back(block_top(d, k, s));
  return PermGroup(d * k, std::move(gens));
}

PermGroup restrict_to_blocks(const PermGroup &g, Point block_degree,
                             const std::vector<unsigned> &blocks) {
  Point n = g.degree();
  if (n % block_degree != 0)
    throw Error(ErrorKind::BadParameters, "restrict_to_blocks: inconsistent blocks");
  Point nd = static_cast<Point>(blocks.size()) * block_degree;
  std::vector<Permutation> gens;
  for (const auto &p : g.generators()) {
    std::vector<Point> im(nd);
    for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
      Point lo = blocks[bi] * block_degree;
      for (Point x = 0; x < block_degree; ++x) {
        Point img = p[lo + x];
        if (img / block_degree != blocks[bi])
          throw Error(ErrorKind::BadParameters,
                      "restrict_to_blocks: generator does not preserve block");
        im[bi * block_degree + x] =
            static_cast<Point>(bi) * block_degree + (img % block_degree);
      }
    }
    gens.push_back(Permutation(std::move(im)));
  }
  return PermGroup(nd, std::move(gens));
}

} // namespace og4
