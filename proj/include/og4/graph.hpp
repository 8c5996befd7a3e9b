#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "og4/perm_group.hpp"

namespace og4 {

enum class VertexLabelKind { none, bicayley, coset };

// simple undirected graph with sorted adjacency lists
struct Graph {
  Point vertex_count = 0;
  std::vector<std::vector<Point>> adj;
  VertexLabelKind label_kind = VertexLabelKind::none;
  std::vector<Point> label_elem; // element or coset index
  std::vector<std::uint8_t> label_side;

  static Graph from_edges(Point n, std::vector<std::pair<Point, Point>> edges);
  std::vector<std::pair<Point, Point>> edges() const;
  std::size_t edge_count() const;
  bool is_regular(Point valency) const;
  bool is_connected() const;
  bool adjacent(Point u, Point v) const;
  // empty if not bipartite, else the side-0 part
  std::optional<std::pair<std::vector<Point>, std::vector<Point>>> bipartition() const;
};

// element table for a small abstract group, with index arithmetic; this is
// the regular-action bridge the bi-Cayley builder works over
class RegularizedGroup {
public:
  explicit RegularizedGroup(const PermGroup &g, std::uint64_t max_order = 1000000);

  std::uint32_t size() const { return static_cast<std::uint32_t>(elems_.size()); }
  const PermGroup &group() const { return group_; }
  const Permutation &element(std::uint32_t i) const { return elems_[i]; }
  std::uint32_t index_of(const Permutation &p) const;
  std::uint32_t multiply(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t inverse(std::uint32_t i) const;
  std::uint32_t identity() const { return identity_; }

  // subgroup generated by a set of element indices
  std::vector<std::uint32_t> closure(const std::vector<std::uint32_t> &gens) const;
  // the right-multiplication action on element indices
  Permutation right_action(std::uint32_t i) const;

private:
  PermGroup group_;
  std::vector<Permutation> elems_;
  std::unordered_map<Permutation, std::uint32_t, PermHash> index_;
  std::uint32_t identity_ = 0;
};

struct BiCayleySpec {
  std::shared_ptr<RegularizedGroup> group;
  std::vector<std::uint32_t> right_set; // R, inverse-closed, no identity
  std::vector<std::uint32_t> left_set;  // L, inverse-closed, no identity
  std::vector<std::uint32_t> spoke_set; // S
};

// vertices: h_0 at index h, h_1 at index |N| + h; right edges {h_0, g_0}
// for g h^-1 in R, left edges {h_1, g_1} for g h^-1 in L, spokes
// {h_0, g_1} for g h^-1 in S
Graph build_bicayley(const BiCayleySpec &spec, std::uint64_t vertex_budget = 1000000);

// vertex permutation of the bi-Cayley graph induced by right multiplication;
// always an automorphism
Permutation bicayley_right_mult(const RegularizedGroup &group, std::uint32_t elem);
// vertex permutation induced by the group automorphism e -> e^c, optionally
// swapping the two sides; an automorphism of the graph whenever the
// connection sets are preserved
Permutation bicayley_automorphism(const RegularizedGroup &group,
                                  const Permutation &c, bool flip_side);

struct CosetGraphSpec {
  PermGroup group;
  PermGroup subgroup;
  Permutation connector;
  std::uint64_t index_bound = 100000;
  Order known_group_order = 0; // optional, enables the cheap index guard
};

struct CosetGraphResult {
  Graph graph;
  // witness x with vertex i = Sx, witness of vertex 0 is the identity
  std::vector<Permutation> witnesses;
  // right-multiplication action of the group generators on coset vertices
  PermGroup action;
};

CosetGraphResult build_coset_graph(const CosetGraphSpec &spec);

struct LocalNeighborhood {
  Point root_degree = 0;
  bool g_inverse_in_SgS = false;
  Graph ball;
};

LocalNeighborhood local_coset_neighborhood(const CosetGraphSpec &spec, unsigned radius);

enum class ExportFormat { edge_list, graph6, dot_oriented };
ExportFormat export_format_from_string(const std::string &s);

std::string export_graph(const Graph &g, ExportFormat format,
                         const std::vector<std::pair<Point, Point>> *orientation = nullptr);
Graph import_graph6(const std::string &text);

} // namespace og4
