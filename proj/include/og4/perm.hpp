#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace og4 {

using Point = std::uint32_t;
using Order = unsigned __int128;

std::string order_to_string(Order v);
Order order_pow(Order base, unsigned exp);

// Bijection on {0, ..., degree-1}. Products act left-to-right: x^(pq) = (x^p)^q.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(Point degree);
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(Point degree) { return Permutation(degree); }
  static Permutation from_cycles(Point degree,
                                 const std::vector<std::vector<Point>> &cycles);

  Point degree() const { return static_cast<Point>(images_.size()); }
  Point operator[](Point x) const { return images_[x]; }
  const std::vector<Point> &images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;

  // lcm of cycle lengths; throws if it would overflow 128 bits
  Order element_order() const;
  // p if every nontrivial cycle has the same prime length p, else 0
  Point prime_order_or_zero() const;

  std::vector<std::vector<Point>> cycles() const;
  std::string cycle_string() const;

  std::size_t hash() const;

  bool operator==(const Permutation &o) const { return images_ == o.images_; }
  bool operator!=(const Permutation &o) const { return images_ != o.images_; }
  bool operator<(const Permutation &o) const { return images_ < o.images_; }

private:
  std::vector<Point> images_;
};

// x -> q(p(x))
Permutation compose(const Permutation &p, const Permutation &q);
// x^-1 p x
Permutation conjugated(const Permutation &p, const Permutation &x);

struct PermHash {
  std::size_t operator()(const Permutation &p) const { return p.hash(); }
};

} // namespace og4
