#pragma once

// Test-only oracles, kept independent of the BSGS implementation paths
// they are used to check.

#include <cstdint>
#include <queue>
#include <random>
#include <unordered_set>
#include <vector>

#include "og4/perm.hpp"

namespace og4::oracle {

// plain product closure of a generating set
inline std::vector<Permutation>
brute_force_elements(const std::vector<Permutation> &gens, Point degree,
                     std::size_t limit = 200000) {
  std::vector<Permutation> elems{Permutation(degree)};
  std::unordered_set<Permutation, PermHash> seen{Permutation(degree)};
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto &g : gens) {
      Permutation p = compose(elems[i], g);
      if (seen.insert(p).second) {
        elems.push_back(std::move(p));
        if (elems.size() > limit)
          throw std::runtime_error("brute_force_elements: limit exceeded");
      }
    }
  return elems;
}

inline std::uint64_t brute_force_order(const std::vector<Permutation> &gens,
                                       Point degree,
                                       std::size_t limit = 200000) {
  return brute_force_elements(gens, degree, limit).size();
}

// deterministic random words in the generators (and their inverses)
inline std::vector<Permutation>
random_words(const std::vector<Permutation> &gens, Point degree,
             std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Permutation> out;
  if (gens.empty())
    return std::vector<Permutation>(count, Permutation(degree));
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(1, 15), sign(0, 1);
  for (std::size_t i = 0; i < count; ++i) {
    Permutation w(degree);
    int l = len(rng);
    for (int j = 0; j < l; ++j) {
      const Permutation &g = gens[pick(rng)];
      w = sign(rng) ? compose(w, g) : compose(w, g.inverse());
    }
    out.push_back(std::move(w));
  }
  return out;
}

} // namespace og4::oracle
