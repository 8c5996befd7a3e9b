#include "og4/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace og4 {

std::string order_to_string(Order v) {
  if (v == 0)
    return "0";
  std::string s;
  while (v > 0) {
    s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
    v /= 10;
  }
  return {s.rbegin(), s.rend()};
}

Order order_pow(Order base, unsigned exp) {
  Order r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    Order next = r * base;
    if (base != 0 && next / base != r)
      throw std::overflow_error("order_pow: 128-bit overflow");
    r = next;
  }
  return r;
}

Permutation::Permutation(Point degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::from_cycles(Point degree,
                                     const std::vector<std::vector<Point>> &cycles) {
  Permutation p(degree);
  for (const auto &c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Point from = c[i], to = c[(i + 1) % c.size()];
      if (from >= degree || to >= degree)
        throw std::invalid_argument("from_cycles: point out of range");
      p.images_[from] = to;
    }
  }
  // validate
  return Permutation(std::move(p.images_));
}

bool Permutation::is_identity() const {
  for (Point x = 0; x < degree(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (Point x = 0; x < degree(); ++x)
    inv[images_[x]] = x;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Order Permutation::element_order() const {
  Order ord = 1;
  std::vector<bool> seen(images_.size(), false);
  for (Point x = 0; x < degree(); ++x) {
    if (seen[x])
      continue;
    Order len = 0;
    Point y = x;
    do {
      seen[y] = true;
      y = images_[y];
      ++len;
    } while (y != x);
    // lcm(ord, len)
    Order a = ord, b = len;
    while (b != 0) {
      Order t = a % b;
      a = b;
      b = t;
    }
    Order quot = len / a;
    Order next = ord * quot;
    if (quot != 0 && next / quot != ord)
      throw std::overflow_error("element_order: 128-bit overflow");
    ord = next;
  }
  return ord;
}

Point Permutation::prime_order_or_zero() const {
  Point plen = 0;
  std::vector<bool> seen(images_.size(), false);
  for (Point x = 0; x < degree(); ++x) {
    if (seen[x])
      continue;
    Point len = 0;
    Point y = x;
    do {
      seen[y] = true;
      y = images_[y];
      ++len;
    } while (y != x);
    if (len == 1)
      continue;
    if (plen == 0)
      plen = len;
    else if (plen != len)
      return 0;
  }
  if (plen < 2)
    return 0;
  for (Point d = 2; d * d <= plen; ++d)
    if (plen % d == 0)
      return 0;
  return plen;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (Point x = 0; x < degree(); ++x) {
    if (seen[x] || images_[x] == x) {
      seen[x] = true;
      continue;
    }
    std::vector<Point> c;
    Point y = x;
    do {
      seen[y] = true;
      c.push_back(y);
      y = images_[y];
    } while (y != x);
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty())
    return "()";
  std::string s;
  for (const auto &c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

std::size_t Permutation::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (Point x : images_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

Permutation compose(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<Point> im(p.degree());
  for (Point x = 0; x < p.degree(); ++x)
    im[x] = q[p[x]];
  Permutation r;
  r = Permutation(std::move(im));
  return r;
}

Permutation conjugated(const Permutation &p, const Permutation &x) {
  if (p.degree() != x.degree())
    throw std::invalid_argument("conjugated: degree mismatch");
  std::vector<Point> im(p.degree());
  for (Point a = 0; a < p.degree(); ++a)
    im[x[a]] = x[p[a]];
  return Permutation(std::move(im));
}

} // namespace og4
