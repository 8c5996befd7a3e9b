#include "doctest.h"

#include <memory>

#include "og4/graph.hpp"
#include "og4/zoo.hpp"
#include "oracle.hpp"

using namespace og4;

namespace {

std::shared_ptr<RegularizedGroup> reg(const PermGroup &g) {
  return std::make_shared<RegularizedGroup>(g);
}

PermGroup sym4() {
  return PermGroup(4, {Permutation::from_cycles(4, {{0, 1}}),
                       Permutation::from_cycles(4, {{0, 1, 2, 3}})});
}

} // namespace

TEST_CASE("regularized group arithmetic") {
  auto n = reg(cyclic_and_elementary(5, 1));
  CHECK(n->size() == 5);
  CHECK(n->identity() == 0); // identity sorts first
  // translations index naturally: element i maps 0 to i
  for (std::uint32_t i = 0; i < 5; ++i)
    CHECK(n->element(i)[0] == i);
  CHECK(n->multiply(2, 4) == 1); // 2 + 4 = 1 mod 5
  CHECK(n->inverse(3) == 2);
  CHECK(n->closure({2}).size() == 5);
}

TEST_CASE("bi-Cayley graph over Z_5 with the +-1, +-q connection set") {
  // q = 2, q^2 = -1 mod 5
  auto n = reg(cyclic_and_elementary(5, 1));
  BiCayleySpec spec{n, {}, {}, {1, 4, 2, 3}};
  Graph g = build_bicayley(spec);
  CHECK(g.vertex_count == 10);
  CHECK(g.is_regular(4));
  CHECK(g.is_connected());
  CHECK(g.bipartition().has_value());
}

TEST_CASE("bi-Cayley graph over Z_3^2") {
  auto n = reg(cyclic_and_elementary(3, 2));
  // elements (1,0), (2,0), (0,1), (0,2) have regular-action indices 3, 6, 1, 2
  std::uint32_t e1 = n->index_of(n->group().generators()[0]);
  std::uint32_t e2 = n->index_of(n->group().generators()[1]);
  BiCayleySpec spec{n, {}, {}, {e1, n->inverse(e1), e2, n->inverse(e2)}};
  Graph g = build_bicayley(spec);
  CHECK(g.vertex_count == 18);
  CHECK(g.is_regular(4));
  CHECK(g.is_connected());
  CHECK(g.bipartition().has_value());
}

TEST_CASE("bi-Cayley edge cases") {
  auto n = reg(cyclic_and_elementary(5, 1));
  Graph empty = build_bicayley({n, {}, {}, {}});
  CHECK(empty.vertex_count == 10);
  CHECK(empty.edge_count() == 0);

  // R not inverse-closed
  CHECK_THROWS_AS(build_bicayley({n, {1}, {}, {}}), Error);
  // identity in R
  CHECK_THROWS_AS(build_bicayley({n, {0}, {}, {}}), Error);
  // budget
  CHECK_THROWS_AS(build_bicayley({n, {}, {}, {1, 4}}, 5), Error);

  // spokes by S = {identity} give a perfect matching; connected iff <S^2> = N fails
  Graph matching = build_bicayley({n, {}, {}, {0}});
  CHECK(matching.edge_count() == 5);
  CHECK(!matching.is_connected());
}

TEST_CASE("connectivity matches generated subgroup of S^2 products") {
  auto n = reg(cyclic_and_elementary(7, 1));
  // S = {+-1}: <S^2> = <2> = Z_7, connected
  Graph g1 = build_bicayley({n, {}, {}, {1, 6}});
  CHECK(g1.is_connected());
  std::vector<std::uint32_t> sq;
  for (auto s1 : {1u, 6u})
    for (auto s2 : {1u, 6u})
      sq.push_back(n->multiply(s1, s2));
  CHECK(n->closure(sq).size() == 7);
}

TEST_CASE("coset graph of Sym(4) over a transposition") {
  auto g = sym4();
  PermGroup s(4, {Permutation::from_cycles(4, {{0, 1}})});
  // exhaustive search for a connector satisfying condition (1), as an
  // engine self-test; (0 1 2 3) is one
  Permutation connector = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  CosetGraphSpec spec{g, s, connector, 100000, 0};
  auto result = build_coset_graph(spec);
  CHECK(result.graph.vertex_count == 12);
  CHECK(result.graph.is_regular(4));
  CHECK(result.graph.is_connected());
  // the action is transitive of degree 12
  CHECK(result.action.orbit(0).size() == 12);
  // every generator image preserves adjacency
  for (const auto &perm : result.action.generators())
    for (auto [u, v] : result.graph.edges())
      CHECK(result.graph.adjacent(perm[u], perm[v]));
}

TEST_CASE("coset graph of the whole group is K1") {
  PermGroup c5(5, {Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})});
  auto result = build_coset_graph({c5, c5, Permutation(5), 100, 0});
  CHECK(result.graph.vertex_count == 1);
  CHECK(result.graph.edge_count() == 0);
}

TEST_CASE("coset graph index guard") {
  auto g = sym4();
  PermGroup s(4, {Permutation::from_cycles(4, {{0, 1}})});
  CosetGraphSpec spec{g, s, Permutation::from_cycles(4, {{0, 1, 2, 3}}), 5, 0};
  CHECK_THROWS_AS(build_coset_graph(spec), Error);
  // known-order guard triggers without enumeration
  CosetGraphSpec spec2{g, s, Permutation::from_cycles(4, {{0, 1, 2, 3}}), 5, 24};
  CHECK_THROWS_AS(build_coset_graph(spec2), Error);
}

TEST_CASE("local coset neighborhood") {
  auto g = sym4();
  PermGroup s(4, {Permutation::from_cycles(4, {{0, 1}})});
  Permutation connector = Permutation::from_cycles(4, {{0, 1, 2, 3}});
  CosetGraphSpec spec{g, s, connector, 100000, 0};

  auto ball0 = local_coset_neighborhood(spec, 0);
  CHECK(ball0.ball.vertex_count == 1);

  auto ball1 = local_coset_neighborhood(spec, 1);
  CHECK(ball1.root_degree == 4);
  CHECK(!ball1.g_inverse_in_SgS);

  CHECK_THROWS_AS(local_coset_neighborhood(spec, 5), Error);
}

TEST_CASE("edge list export") {
  Graph k2 = Graph::from_edges(2, {{0, 1}});
  CHECK(export_graph(k2, ExportFormat::edge_list) == "0 1\n");
}

TEST_CASE("graph6 round trips") {
  Graph c4 = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  std::string enc = export_graph(c4, ExportFormat::graph6);
  Graph back = import_graph6(enc);
  CHECK(back.vertex_count == 4);
  CHECK(back.edges() == c4.edges());

  // beyond the 62-vertex short form
  std::vector<std::pair<Point, Point>> path;
  for (Point i = 0; i + 1 < 100; ++i)
    path.push_back({i, i + 1});
  Graph p100 = Graph::from_edges(100, path);
  Graph back2 = import_graph6(export_graph(p100, ExportFormat::graph6));
  CHECK(back2.vertex_count == 100);
  CHECK(back2.edges() == p100.edges());

  CHECK_THROWS_AS(import_graph6(""), Error);
  CHECK_THROWS_AS(import_graph6("zz"), Error);
}

TEST_CASE("dot export needs an orientation") {
  Graph k2 = Graph::from_edges(2, {{0, 1}});
  CHECK_THROWS_AS(export_graph(k2, ExportFormat::dot_oriented), Error);
  std::vector<std::pair<Point, Point>> arcs{{1, 0}};
  std::string dot = export_graph(k2, ExportFormat::dot_oriented, &arcs);
  CHECK(dot == "digraph og4 {\n  1 -> 0;\n}\n");
}

TEST_CASE("format names") {
  CHECK(export_format_from_string("edge_list") == ExportFormat::edge_list);
  CHECK(export_format_from_string("graph6") == ExportFormat::graph6);
  CHECK(export_format_from_string("dot_oriented") == ExportFormat::dot_oriented);
  CHECK_THROWS_AS(export_format_from_string("png"), Error);
}
