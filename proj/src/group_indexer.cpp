#include "og4/group_indexer.hpp"

#include <algorithm>
#include <numeric>

namespace og4 {

GroupIndexer::GroupIndexer(const PermGroup &g, std::uint64_t max_order)
    : group_(g) {
  if (g.order() > static_cast<Order>(max_order))
    throw Error(ErrorKind::BudgetExceeded, "GroupIndexer: order exceeds bound");
  const Bsgs &chain = g.bsgs();
  auto n = static_cast<std::uint64_t>(static_cast<Order>(g.order()));
  const auto &gens = g.generators();
  std::vector<Permutation> gen_invs;
  gen_invs.reserve(gens.size());
  for (const auto &s : gens)
    gen_invs.push_back(s.inverse());

  std::vector<std::vector<Point>> keys;
  std::vector<std::uint32_t> orders;
  // neighbor keys per element: gens.size() * 4 blocks (xs, xs^-1, sx, s^-1x)
  std::vector<std::vector<Point>> nbr;
  keys.reserve(n);
  orders.reserve(n);
  nbr.reserve(n * gens.size() * 4);

  std::vector<Point> base = chain.base();
  chain.for_each_element(
      [&](const Permutation &p) {
        std::vector<Point> key = chain.base_images(p);
        orders.push_back(
            static_cast<std::uint32_t>(static_cast<Order>(p.element_order())));
        for (std::size_t si = 0; si < gens.size(); ++si) {
          const Permutation &s = gens[si];
          const Permutation &sinv = gen_invs[si];
          std::vector<Point> k_xs(key.size()), k_xsi(key.size()), k_sx(key.size()),
              k_six(key.size());
          for (std::size_t i = 0; i < key.size(); ++i) {
            k_xs[i] = s[key[i]];
            k_xsi[i] = sinv[key[i]];
            k_sx[i] = p[s[base[i]]];
            k_six[i] = p[sinv[base[i]]];
          }
          nbr.push_back(std::move(k_xs));
          nbr.push_back(std::move(k_xsi));
          nbr.push_back(std::move(k_sx));
          nbr.push_back(std::move(k_six));
        }
        keys.push_back(std::move(key));
      },
      static_cast<Order>(max_order));

  // canonical indexing: sort by key
  std::vector<std::uint32_t> perm(keys.size());
  std::iota(perm.begin(), perm.end(), 0u);
  std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    return keys[a] < keys[b];
  });
  keys_.resize(keys.size());
  orders_.resize(keys.size());
  for (std::uint32_t newi = 0; newi < perm.size(); ++newi) {
    keys_[newi] = std::move(keys[perm[newi]]);
    orders_[newi] = orders[perm[newi]];
    key_to_idx_.emplace(keys_[newi], newi);
  }

  std::size_t g_count = gens.size();
  right_.assign(g_count, std::vector<std::uint32_t>(keys_.size()));
  right_inv_.assign(g_count, std::vector<std::uint32_t>(keys_.size()));
  left_.assign(g_count, std::vector<std::uint32_t>(keys_.size()));
  left_inv_.assign(g_count, std::vector<std::uint32_t>(keys_.size()));
  for (std::uint32_t newi = 0; newi < perm.size(); ++newi) {
    std::size_t row = static_cast<std::size_t>(perm[newi]) * g_count * 4;
    for (std::size_t si = 0; si < g_count; ++si) {
      right_[si][newi] = lookup(nbr[row + si * 4 + 0]);
      right_inv_[si][newi] = lookup(nbr[row + si * 4 + 1]);
      left_[si][newi] = lookup(nbr[row + si * 4 + 2]);
      left_inv_[si][newi] = lookup(nbr[row + si * 4 + 3]);
    }
  }

  identity_ = lookup(base);
  for (const auto &s : gens)
    gen_indices_.push_back(index_of(s));
}

std::uint32_t GroupIndexer::lookup(const std::vector<Point> &key) const {
  auto it = key_to_idx_.find(key);
  if (it == key_to_idx_.end())
    throw Error(ErrorKind::AssertionFailed, "GroupIndexer: unknown element key");
  return it->second;
}

std::uint32_t GroupIndexer::index_of(const Permutation &p) const {
  std::uint32_t idx = lookup(group_.bsgs().base_images(p));
  if (element(idx) != p)
    throw Error(ErrorKind::AssertionFailed, "GroupIndexer: element not in group");
  return idx;
}

Permutation GroupIndexer::element(std::uint32_t idx) const {
  return group_.bsgs().element_from_base_images(keys_[idx]);
}

std::uint32_t GroupIndexer::mul_gen(std::uint32_t idx, std::uint32_t gen,
                                    bool inverse) const {
  return inverse ? right_inv_[gen][idx] : right_[gen][idx];
}

std::uint32_t GroupIndexer::conj_gen(std::uint32_t idx, std::uint32_t gen) const {
  return right_[gen][left_inv_[gen][idx]];
}

std::vector<std::uint32_t> GroupIndexer::right_table(std::uint32_t idx) const {
  Permutation v = element(idx);
  std::vector<std::uint32_t> table(keys_.size());
  std::vector<Point> key;
  for (std::uint32_t x = 0; x < keys_.size(); ++x) {
    key = keys_[x];
    for (auto &pt : key)
      pt = v[pt];
    table[x] = lookup(key);
  }
  return table;
}

std::vector<std::uint32_t> GroupIndexer::left_table(std::uint32_t idx) const {
  // key(v*x)_i = x[v[base_i]]; requires materializing each x
  Permutation v = element(idx);
  std::vector<Point> q = group_.bsgs().base();
  for (auto &pt : q)
    pt = v[pt];
  std::vector<std::uint32_t> table(keys_.size());
  std::vector<Point> key(q.size());
  group_.bsgs().for_each_element(
      [&](const Permutation &x) {
        for (std::size_t i = 0; i < q.size(); ++i)
          key[i] = x[q[i]];
        table[lookup(group_.bsgs().base_images(x))] = lookup(key);
      },
      static_cast<Order>(keys_.size()));
  return table;
}

std::uint32_t GroupIndexer::inverse_index(std::uint32_t idx) const {
  return index_of(element(idx).inverse());
}

std::uint32_t GroupIndexer::conjugate(std::uint32_t x, std::uint32_t by) const {
  Permutation p = element(x);
  Permutation v = element(by);
  return lookup(group_.bsgs().base_images(conjugated(p, v)));
}

std::vector<bool>
GroupIndexer::subgroup_closure(const std::vector<std::uint32_t> &gens) const {
  std::vector<std::vector<std::uint32_t>> tables;
  tables.reserve(gens.size());
  for (auto g : gens)
    tables.push_back(right_table(g));
  std::vector<bool> members(keys_.size(), false);
  std::vector<std::uint32_t> queue{identity_};
  members[identity_] = true;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto &t : tables) {
      std::uint32_t img = t[queue[i]];
      if (!members[img]) {
        members[img] = true;
        queue.push_back(img);
      }
    }
  return members;
}

std::uint64_t GroupIndexer::popcount(const std::vector<bool> &set) {
  std::uint64_t c = 0;
  for (bool b : set)
    c += b ? 1 : 0;
  return c;
}

std::vector<std::uint32_t> GroupIndexer::prime_order_class_reps() const {
  auto is_prime = [](std::uint32_t v) {
    if (v < 2)
      return false;
    for (std::uint32_t d = 2; d * d <= v; ++d)
      if (v % d == 0)
        return false;
    return true;
  };
  std::vector<bool> visited(keys_.size(), false);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < keys_.size(); ++x) {
    if (visited[x] || !is_prime(orders_[x]))
      continue;
    reps.push_back(x);
    std::vector<std::uint32_t> queue{x};
    visited[x] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (std::uint32_t s = 0; s < right_.size(); ++s) {
        std::uint32_t img = conj_gen(queue[i], s);
        if (!visited[img]) {
          visited[img] = true;
          queue.push_back(img);
        }
      }
  }
  return reps;
}

GroupIndexer::Closure
GroupIndexer::normal_closure_of(std::uint32_t seed,
                                const std::vector<std::uint32_t> &conj_gens) const {
  std::vector<std::vector<std::uint32_t>> conj_tables;
  conj_tables.reserve(conj_gens.size());
  for (auto c : conj_gens) {
    auto lt = left_table(inverse_index(c));
    auto rt = right_table(c);
    std::vector<std::uint32_t> table(keys_.size());
    for (std::uint32_t x = 0; x < keys_.size(); ++x)
      table[x] = rt[lt[x]];
    conj_tables.push_back(std::move(table));
  }

  Closure cl;
  cl.generators = {seed};
  cl.members = subgroup_closure(cl.generators);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::uint32_t x = 0; x < keys_.size() && !changed; ++x) {
      if (!cl.members[x])
        continue;
      for (const auto &t : conj_tables) {
        std::uint32_t img = t[x];
        if (!cl.members[img]) {
          cl.generators.push_back(img);
          cl.members = subgroup_closure(cl.generators);
          changed = true;
          break;
        }
      }
    }
  }
  return cl;
}

void GroupIndexer::for_each(
    const std::function<void(std::uint32_t, const Permutation &)> &fn) const {
  group_.bsgs().for_each_element(
      [&](const Permutation &p) { fn(lookup(group_.bsgs().base_images(p)), p); },
      static_cast<Order>(keys_.size()));
}

std::vector<GroupIndexer::Closure> GroupIndexer::minimal_normal_closures(
    const std::vector<bool> &domain,
    const std::vector<std::uint32_t> &conj_gens) const {
  // conjugation tables; group generators reuse the precomputed tables, any
  // other conjugator costs one materialization sweep
  std::vector<std::vector<std::uint32_t>> conj_tables(
      conj_gens.size(), std::vector<std::uint32_t>(keys_.size()));
  std::vector<Permutation> sweep_perms;
  std::vector<std::size_t> sweep_slots;
  for (std::size_t ci = 0; ci < conj_gens.size(); ++ci) {
    auto it = std::find(gen_indices_.begin(), gen_indices_.end(), conj_gens[ci]);
    if (it != gen_indices_.end()) {
      auto s = static_cast<std::uint32_t>(it - gen_indices_.begin());
      for (std::uint32_t x = 0; x < keys_.size(); ++x)
        conj_tables[ci][x] = conj_gen(x, s);
    } else {
      sweep_perms.push_back(element(conj_gens[ci]));
      sweep_slots.push_back(ci);
    }
  }
  if (!sweep_perms.empty())
    group_.bsgs().for_each_element(
        [&](const Permutation &x) {
          std::uint32_t xi = lookup(group_.bsgs().base_images(x));
          for (std::size_t ci = 0; ci < sweep_perms.size(); ++ci)
            conj_tables[sweep_slots[ci]][xi] =
                lookup(group_.bsgs().base_images(conjugated(x, sweep_perms[ci])));
        },
        static_cast<Order>(keys_.size()));

  auto is_prime = [](std::uint32_t v) {
    if (v < 2)
      return false;
    for (std::uint32_t d = 2; d * d <= v; ++d)
      if (v % d == 0)
        return false;
    return true;
  };

  // conjugacy classes of prime-order elements of the domain
  std::vector<bool> visited(keys_.size(), false);
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < keys_.size(); ++x) {
    if (visited[x] || !domain[x] || !is_prime(orders_[x]))
      continue;
    reps.push_back(x);
    std::vector<std::uint32_t> queue{x};
    visited[x] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto &t : conj_tables) {
        std::uint32_t img = t[queue[i]];
        if (!visited[img]) {
          visited[img] = true;
          queue.push_back(img);
        }
      }
  }

  std::vector<Closure> closures;
  for (std::uint32_t rep : reps) {
    Closure cl;
    cl.generators = {rep};
    cl.members = subgroup_closure(cl.generators);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::uint32_t x = 0; x < keys_.size() && !changed; ++x) {
        if (!cl.members[x])
          continue;
        for (const auto &t : conj_tables) {
          std::uint32_t img = t[x];
          if (!cl.members[img]) {
            cl.generators.push_back(img);
            cl.members = subgroup_closure(cl.generators);
            changed = true;
            break;
          }
        }
      }
    }
    bool dup = false;
    for (const auto &other : closures)
      if (other.members == cl.members) {
        dup = true;
        break;
      }
    if (!dup)
      closures.push_back(std::move(cl));
  }

  // keep inclusion-minimal closures
  std::vector<Closure> minimal;
  for (std::size_t i = 0; i < closures.size(); ++i) {
    bool has_smaller = false;
    for (std::size_t j = 0; j < closures.size() && !has_smaller; ++j) {
      if (i == j)
        continue;
      bool subset = true, proper = false;
      for (std::uint32_t x = 0; x < keys_.size(); ++x) {
        if (closures[j].members[x] && !closures[i].members[x]) {
          subset = false;
          break;
        }
        if (closures[i].members[x] && !closures[j].members[x])
          proper = true;
      }
      if (subset && proper)
        has_smaller = true;
    }
    if (!has_smaller)
      minimal.push_back(closures[i]);
  }
  return minimal;
}

std::vector<std::uint32_t>
GroupIndexer::generating_indices(const std::vector<bool> &set) const {
  std::vector<std::uint32_t> gens;
  std::vector<bool> closure(keys_.size(), false);
  closure[identity_] = true;
  std::uint64_t target = popcount(set);
  std::uint64_t have = 1;
  while (have < target) {
    std::uint32_t pick = identity_;
    bool found = false;
    for (std::uint32_t x = 0; x < keys_.size(); ++x)
      if (set[x] && !closure[x]) {
        pick = x;
        found = true;
        break;
      }
    if (!found)
      break;
    gens.push_back(pick);
    closure = subgroup_closure(gens);
    have = popcount(closure);
  }
  return gens;
}

PermGroup GroupIndexer::subgroup_from(
    const std::vector<std::uint32_t> &gen_indices) const {
  std::vector<Permutation> gens;
  gens.reserve(gen_indices.size());
  for (auto idx : gen_indices)
    gens.push_back(element(idx));
  return PermGroup(group_.degree(), std::move(gens));
}

} // namespace og4
