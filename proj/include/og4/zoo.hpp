#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "og4/perm_group.hpp"

namespace og4 {

// element of PSL(2,p): a determinant-1 matrix over GF(p) up to sign, kept
// with the first nonzero entry (row-major) in {1, ..., (p-1)/2}
struct PSL2Element {
  int p = 0;
  std::array<int, 4> m{1, 0, 0, 1}; // (a, b; c, d)

  static PSL2Element make(int p, std::array<int, 4> entries);
  PSL2Element multiplied_by(const PSL2Element &o) const;
  PSL2Element inverse() const;
  bool operator==(const PSL2Element &o) const { return p == o.p && m == o.m; }
};

std::vector<PSL2Element> enumerate_psl2(int p);

struct GeneratingPair {
  PermGroup group;
  Permutation a, b;
  std::vector<std::string> certified_properties;
};

// degree p+1 action on the projective line (index 0 is the point at
// infinity, index 1+x is x)
GeneratingPair psl2_on_projective_line(int p);
Permutation psl2_permutation(const PSL2Element &e, bool transpose_convention);

enum class AltPairKind { k1_pair, k2_pair };
GeneratingPair alt_with_pair(unsigned n, AltPairKind kind);

// element of Sym(n) inverting both generators by conjugation; used by the
// family that needs a generator-inverting automorphism
Permutation find_inverting_conjugator(unsigned n, const Permutation &a,
                                      const Permutation &b);

// Z_p (k=1) or Z_p^2 (k=2) in its regular action
PermGroup cyclic_and_elementary(int p, int k);

// evaluate a word over {a, b, A=a^-1, B=b^-1} ("" is the identity)
Permutation eval_word(const std::string &word, const Permutation &a,
                      const Permutation &b);

// the three T wr S_k data sets (k = 4, 4, 8) built over T = PSL(2,p)
struct WreathConstructionData {
  std::string construction; // "5.6", "5.7" or "5.8"
  int p = 0;
  unsigned k = 0;
  Point block_degree = 0;
  GeneratingPair t_pair;
  PermGroup H;
  PermGroup V;
  Permutation phi;               // conjugation by this induces the automorphism
  Permutation y;                 // phi^2
  Permutation h1;
  std::optional<Permutation> h2; // absent when V is cyclic
  Permutation y1;
  std::optional<Permutation> y2;
  Order t_order = 1;
  Order h_order = 1;
};

WreathConstructionData construction_data_56(int p);
WreathConstructionData construction_data_57(int p);
WreathConstructionData construction_data_58(int p);

bool is_prime(long long v);

} // namespace og4
