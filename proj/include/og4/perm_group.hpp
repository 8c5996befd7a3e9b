#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "og4/perm.hpp"

namespace og4 {

enum class ErrorKind {
  DegreeMismatch,
  BadParameters,
  BudgetExceeded,
  NotFourValent,
  NotConnected,
  NotNormal,
  NotSubgroup,
  MalformedInput,
  AssertionFailed,
  UnknownFormat,
};

struct Error : std::runtime_error {
  ErrorKind kind;
  Error(ErrorKind k, const std::string &msg) : std::runtime_error(msg), kind(k) {}
};

// Base and strong generating set with Schreier-vector transversals.
// Deterministic: base points are the smallest moved point at each level.
// An order hint (when the caller knows |G|) lets construction stop as soon
// as the product of basic orbit lengths reaches it; the resulting chain is
// complete exactly because that product can never exceed the group order.
class Bsgs {
public:
  Bsgs(Point degree, const std::vector<Permutation> &generators,
       std::vector<Point> prescribed_base = {}, Order order_hint = 0);

  Point degree() const { return degree_; }
  Order order() const;
  Order suffix_order(std::size_t from_level) const;

  std::size_t base_size() const { return levels_.size(); }
  Point base_point(std::size_t i) const { return levels_[i].base; }
  std::vector<Point> base() const;

  const std::vector<Point> &orbit(std::size_t level) const {
    return levels_[level].orbit;
  }

  bool contains(const Permutation &x) const;
  // residue of sifting x through the chain
  Permutation sift(const Permutation &x) const;

  // generators of the stabilizer of base[0..level-1] (level 0: whole group)
  std::vector<Permutation> level_generators(std::size_t level) const;

  std::vector<Point> base_images(const Permutation &x) const;
  Permutation element_from_base_images(const std::vector<Point> &key) const;

  // visit every group element exactly once (throws if order > limit)
  void for_each_element(const std::function<void(const Permutation &)> &fn,
                        Order limit) const;

private:
  struct Level {
    Point base = 0;
    std::vector<int> gen_idx;
    std::vector<Point> orbit;            // BFS discovery order
    std::vector<std::int32_t> tree_gen;  // per point: gen index, -1 root, -2 absent
    std::vector<Point> tree_parent;
  };

  void rebuild_orbit(std::size_t level);
  void append_level(Point base_point);
  void attach_generator(std::size_t level, const Permutation &g);
  // multiply x on the right by the inverse transversal element of `point`
  void mul_transversal_inverse(Permutation &x, std::size_t level, Point point) const;
  Permutation transversal(std::size_t level, Point point) const;
  std::pair<Permutation, std::size_t> sift_from(Permutation x, std::size_t level) const;

  Point degree_ = 0;
  std::vector<Permutation> gens_, gen_invs_;
  std::vector<Level> levels_;
};

class PermGroup {
public:
  PermGroup() = default;
  PermGroup(Point degree, std::vector<Permutation> generators);

  static PermGroup trivial(Point degree) { return PermGroup(degree, {}); }

  Point degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return gens_; }

  // builds (and caches) the BSGS; hint semantics as in Bsgs
  const Bsgs &bsgs(Order order_hint = 0) const;
  bool has_bsgs() const { return bsgs_ != nullptr; }
  void schreier_sims(Order order_hint = 0) const { bsgs(order_hint); }

  Order order(Order order_hint = 0) const { return bsgs(order_hint).order(); }
  bool contains(const Permutation &x) const;
  bool is_trivial() const;

  std::vector<Point> orbit(Point point) const;
  // orbit plus a witness permutation per orbit point
  std::pair<std::vector<Point>, std::vector<Permutation>>
  orbit_with_transversal(Point point) const;
  std::vector<std::vector<Point>> orbits() const;

  // all elements; throws AssertionFailed if the order exceeds max_order
  std::vector<Permutation> elements(Order max_order = 100000) const;

  // point stabilizer via a chain with prescribed first base point
  PermGroup stabilizer(Point point) const;

private:
  Point degree_ = 0;
  std::vector<Permutation> gens_;
  mutable std::shared_ptr<const Bsgs> bsgs_;
};

PermGroup conjugate_group(const PermGroup &g, const Permutation &x);
PermGroup normal_closure(const PermGroup &g, const std::vector<Permutation> &seeds);
// per-element core test; sub must be small (order <= 64, asserted)
bool is_core_free(const PermGroup &g, const PermGroup &sub);
bool is_subgroup_of(const PermGroup &sub, const PermGroup &g);

// imprimitive wreath-style embedding: k blocks of t's degree; a block
// permutation sigma acts by (i, x) -> (sigma(i), x)
Permutation block_top(Point block_degree, unsigned k, const Permutation &top);
// (t_1,...,t_k) sigma acts by (i, x) -> (sigma(i), t_i(x))
Permutation wreath_element(Point block_degree, unsigned k,
                           const std::vector<Permutation> &tuple,
                           const Permutation &top);
// group generated by per-block copies of t's generators and the given top
// permutations of the k blocks
PermGroup direct_power_with_top(const PermGroup &t, unsigned k,
                                const std::vector<Permutation> &top);
// restriction of block-preserving generators to the given blocks
PermGroup restrict_to_blocks(const PermGroup &g, Point block_degree,
                             const std::vector<unsigned> &blocks);

} // namespace og4
