#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "og4/graph.hpp"
#include "og4/perm_group.hpp"
#include "og4/zoo.hpp"

namespace og4 {

// a graph together with a vertex action; every generator must be an
// automorphism (checked on construction)
struct OrientedPair {
  Graph graph;
  PermGroup action;
  std::optional<std::vector<std::pair<Point, Point>>> orientation;

  static OrientedPair make(Graph graph, PermGroup action);
};

struct OrientedCheck {
  bool four_valent = false;
  bool connected = false;
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool two_arc_orbits = false;
  bool arc_orbits_split_edges = false; // each orbit holds one arc per edge
  bool stabilizer_orbits_2_2 = false;
  bool is_in_OG4 = false;
  std::size_t arc_orbit_count = 0;
  Point base_vertex = 0;
  std::vector<std::vector<Point>> stabilizer_neighborhood_orbits;
  std::vector<std::pair<Point, Point>> orientation;
};

// errors with NotFourValent / NotConnected when the preconditions fail
OrientedCheck check_oriented(OrientedPair &pair);

struct SArcReport {
  unsigned s = 0;
  std::vector<std::uint64_t> arc_counts; // oriented s-arc counts, index = length
  bool regular = false;                  // count at maximal s equals |G|
  std::vector<Order> prefix_stabilizer_orders; // |G_{v0..vj}| along a maximal arc
  bool chain_is_two_powers = false;
};

SArcReport s_arc_report(OrientedPair &pair);

struct QuotientResult {
  Graph quotient;
  PermGroup induced;
  std::vector<Point> orbit_of;
  std::size_t orbit_count = 0;
};

QuotientResult normal_quotient(const OrientedPair &pair, const PermGroup &n);

enum class QuotientClass { K1, K2, Cycle, OG4Candidate, Other };
struct QuotientClassification {
  QuotientClass cls = QuotientClass::Other;
  Point cycle_length = 0;
  bool degenerate() const {
    return cls == QuotientClass::K1 || cls == QuotientClass::K2 ||
           cls == QuotientClass::Cycle;
  }
};
QuotientClassification classify_quotient(const Graph &q);
std::string quotient_class_name(const QuotientClassification &c);

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup &g,
                                                std::uint64_t order_bound = 20000);

enum class BasicType { quasiprimitive, biquasiprimitive, cycle, not_basic };
std::string basic_type_name(BasicType t);

struct BasicTypeResult {
  BasicType type = BasicType::not_basic;
  struct Entry {
    Order subgroup_order = 0;
    std::size_t orbit_count = 0;
    QuotientClassification quotient;
  };
  std::vector<Entry> entries; // one per minimal normal subgroup
};

struct SocleCase {
  char which = '?'; // 'a', 'b' or 'c'
  unsigned k = 0;
  std::string t_description;
};

struct PairAnalysis {
  BasicTypeResult basic;
  std::optional<SocleCase> socle; // present iff biquasiprimitive
  std::string failure;            // evidence when socle is absent
};

PairAnalysis analyze_pair(const OrientedPair &pair, std::uint64_t order_bound = 20000);
BasicTypeResult basic_type(const OrientedPair &pair, std::uint64_t order_bound = 20000);
SocleCase classify_socle_case(const OrientedPair &pair,
                              std::uint64_t order_bound = 20000);
SocleCase classify_socle_case_certificate(const WreathConstructionData &data);

struct Condition1Result {
  bool core_free = false;
  bool g_inverse_not_in_SgS = false;
  bool index_two = false;
  bool generates = false;
  bool all() const {
    return core_free && g_inverse_not_in_SgS && index_two && generates;
  }
};
Condition1Result check_condition1(const CosetGraphSpec &spec);

struct Condition2Result {
  bool core_free = false;
  bool y_not_in_VVphi = false;
  bool index_two = false;
  bool generates = false;
  Order intersection_order = 0;
  std::vector<Permutation> intersection_elements; // V and V^phi
  bool all() const { return core_free && y_not_in_VVphi && index_two && generates; }
};
Condition2Result check_condition2(const PermGroup &H, const PermGroup &V,
                                  const Permutation &y, const Permutation &phi,
                                  Order h_order_hint = 0);

// true iff every one-block projection has order t_order and every
// two-block projection has order t_order^2
bool subdirect_full(const PermGroup &sub, Point block_degree, unsigned k,
                    Order t_order);

struct DiagResult {
  PermGroup G;
  PermGroup G_plus;
  PermGroup S;
  Permutation g;
};
// realizes <Diag_phi(H x H), (y,1)swap> on two copies of H's points
DiagResult diag_subgroup(const PermGroup &H, const Permutation &phi,
                         const Permutation &y, const PermGroup &V,
                         Order h_order_hint = 0);

struct NeighbourCheck {
  bool formula_a = false;
  bool formula_b = false;
  bool swapped_when_reversed = false;
  Point u = 0;
  Permutation z;
};
NeighbourCheck verify_neighbour_sets(const PermGroup &H, const PermGroup &V,
                                     const Permutation &y, const Permutation &phi,
                                     const Permutation *z_override = nullptr);

struct ToyTuple {
  PermGroup H;
  PermGroup V;
  Permutation y;
  Permutation phi;
  std::string description;
};
// deterministic search over small dihedral actions (|H| <= 200)
ToyTuple find_neighbour_test_tuple();

struct CheckResult {
  std::string name;
  std::string status; // "pass", "fail" or "skipped-with-certificate"
  std::string evidence;
  std::string paper_ref;
};

std::vector<CheckResult> biquasiprimitive_certificate(const WreathConstructionData &data);

struct VerificationReport {
  std::string family;
  std::string construction;
  std::string tier; // "explicit" or "certificate"
  std::vector<std::pair<std::string, long long>> params;
  std::vector<CheckResult> checks;
  std::string note;
  bool all_passed() const;
};

// index-2 subgroup fixing the two parts of a bipartite pair setwise
PermGroup part_fixing_subgroup(const OrientedPair &pair);
// restriction of a group to an invariant point set
PermGroup restrict_to_points(const PermGroup &g, const std::vector<Point> &points);

// block permutation image of a group preserving k blocks of equal size
PermGroup block_action(const PermGroup &g, Point block_degree, unsigned k);

} // namespace og4
