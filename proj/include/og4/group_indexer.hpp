#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "og4/perm_group.hpp"

namespace og4 {

// Indexes every element of a small group (order <= bound) by its BSGS
// base-image tuple so that subgroup and conjugacy computations run on
// 32-bit indices instead of full permutations. Point degree may be large;
// only O(|G| * base length) memory is used.
class GroupIndexer {
public:
  GroupIndexer(const PermGroup &g, std::uint64_t max_order);

  std::uint32_t size() const { return static_cast<std::uint32_t>(keys_.size()); }
  const PermGroup &group() const { return group_; }

  std::uint32_t index_of(const Permutation &p) const;
  Permutation element(std::uint32_t idx) const;
  std::uint32_t element_order(std::uint32_t idx) const { return orders_[idx]; }
  std::uint32_t identity_index() const { return identity_; }

  std::uint32_t num_group_generators() const {
    return static_cast<std::uint32_t>(group_.generators().size());
  }
  // x * s  /  x * s^-1  for group generator s
  std::uint32_t mul_gen(std::uint32_t idx, std::uint32_t gen, bool inverse) const;
  // s^-1 x s for group generator s
  std::uint32_t conj_gen(std::uint32_t idx, std::uint32_t gen) const;

  // right-multiplication table by an arbitrary element (index-to-index)
  std::vector<std::uint32_t> right_table(std::uint32_t idx) const;
  std::vector<std::uint32_t> left_table(std::uint32_t idx) const;
  std::uint32_t inverse_index(std::uint32_t idx) const;
  std::uint32_t conjugate(std::uint32_t x, std::uint32_t by) const;

  // subgroup generated by the given element indices, as a membership bitmap
  std::vector<bool> subgroup_closure(const std::vector<std::uint32_t> &gens) const;
  static std::uint64_t popcount(const std::vector<bool> &set);

  // conjugacy classes (under the full group) of elements of prime order;
  // one representative index per class
  std::vector<std::uint32_t> prime_order_class_reps() const;

  // normal closure of one element under conjugation by `conj_gens`
  // (element indices), restricted to nothing: returns membership bitmap and
  // a small generating list
  struct Closure {
    std::vector<bool> members;
    std::vector<std::uint32_t> generators;
  };
  Closure normal_closure_of(std::uint32_t seed,
                            const std::vector<std::uint32_t> &conj_gens) const;

  // inclusion-minimal distinct normal closures of prime-order elements of
  // `domain` (membership bitmap) under conjugation by `conj_gens`;
  // this is the set of minimal normal subgroups of the subgroup described
  // by (domain, conj_gens)
  std::vector<Closure>
  minimal_normal_closures(const std::vector<bool> &domain,
                          const std::vector<std::uint32_t> &conj_gens) const;

  // a small deterministic generating list for a subgroup given as a bitmap
  std::vector<std::uint32_t> generating_indices(const std::vector<bool> &set) const;

  // one materialization sweep over all elements
  void for_each(const std::function<void(std::uint32_t, const Permutation &)> &fn) const;

  PermGroup subgroup_from(const std::vector<std::uint32_t> &gen_indices) const;

  // indices of the group's own generators
  const std::vector<std::uint32_t> &group_generator_indices() const {
    return gen_indices_;
  }

private:
  struct KeyHash {
    std::size_t operator()(const std::vector<Point> &k) const {
      std::size_t h = 1469598103934665603ull;
      for (Point x : k) {
        h ^= x;
        h *= 1099511628211ull;
      }
      return h;
    }
  };

  std::uint32_t lookup(const std::vector<Point> &key) const;

  PermGroup group_;
  std::vector<std::vector<Point>> keys_;
  std::unordered_map<std::vector<Point>, std::uint32_t, KeyHash> key_to_idx_;
  std::vector<std::uint32_t> orders_;
  // per generator: mul tables for s, s^-1 and left tables for s, s^-1
  std::vector<std::vector<std::uint32_t>> right_, right_inv_, left_, left_inv_;
  std::vector<std::uint32_t> gen_indices_;
  std::uint32_t identity_ = 0;
};

} // namespace og4
