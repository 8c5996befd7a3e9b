#include "og4/graph.hpp"

#include <algorithm>
#include <map>
#include <initializer_list>
#include <set>

namespace og4 {

Graph Graph::from_edges(Point n, std::vector<std::pair<Point, Point>> edges) {
  Graph g;
  g.vertex_count = n;
  g.adj.assign(n, {});
  for (auto &[u, v] : edges) {
    if (u == v)
      throw Error(ErrorKind::BadParameters, "Graph: loop edge");
    if (u > v)
      std::swap(u, v);
    if (v >= n)
      throw Error(ErrorKind::BadParameters, "Graph: vertex out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (auto [u, v] : edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto &nbrs : g.adj)
    std::sort(nbrs.begin(), nbrs.end());
  return g;
}

std::vector<std::pair<Point, Point>> Graph::edges() const {
  std::vector<std::pair<Point, Point>> out;
  for (Point u = 0; u < vertex_count; ++u)
    for (Point v : adj[u])
      if (u < v)
        out.push_back({u, v});
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto &nbrs : adj)
    total += nbrs.size();
  return total / 2;
}

bool Graph::is_regular(Point valency) const {
  for (const auto &nbrs : adj)
    if (nbrs.size() != valency)
      return false;
  return true;
}

bool Graph::is_connected() const {
  if (vertex_count == 0)
    return true;
  std::vector<bool> seen(vertex_count, false);
  std::vector<Point> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (Point v : adj[queue[i]])
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        queue.push_back(v);
      }
  return reached == vertex_count;
}

bool Graph::adjacent(Point u, Point v) const {
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::optional<std::pair<std::vector<Point>, std::vector<Point>>>
Graph::bipartition() const {
  std::vector<int> color(vertex_count, -1);
  std::vector<Point> queue;
  for (Point start = 0; start < vertex_count; ++start) {
    if (color[start] != -1)
      continue;
    color[start] = 0;
    queue = {start};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Point v : adj[queue[i]]) {
        if (color[v] == -1) {
          color[v] = 1 - color[queue[i]];
          queue.push_back(v);
        } else if (color[v] == color[queue[i]]) {
          return std::nullopt;
        }
      }
  }
  std::pair<std::vector<Point>, std::vector<Point>> parts;
  for (Point v = 0; v < vertex_count; ++v)
    (color[v] == 0 ? parts.first : parts.second).push_back(v);
  return parts;
}

RegularizedGroup::RegularizedGroup(const PermGroup &g, std::uint64_t max_order)
    : group_(g) {
  if (g.order() > static_cast<Order>(max_order))
    throw Error(ErrorKind::BudgetExceeded, "RegularizedGroup: order exceeds budget");
  elems_ = g.elements(static_cast<Order>(max_order));
  std::sort(elems_.begin(), elems_.end());
  for (std::uint32_t i = 0; i < elems_.size(); ++i)
    index_.emplace(elems_[i], i);
  identity_ = index_of(Permutation(g.degree()));
}

std::uint32_t RegularizedGroup::index_of(const Permutation &p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw Error(ErrorKind::BadParameters, "RegularizedGroup: element not in group");
  return it->second;
}

std::uint32_t RegularizedGroup::multiply(std::uint32_t i, std::uint32_t j) const {
  return index_of(compose(elems_[i], elems_[j]));
}

std::uint32_t RegularizedGroup::inverse(std::uint32_t i) const {
  return index_of(elems_[i].inverse());
}

std::vector<std::uint32_t>
RegularizedGroup::closure(const std::vector<std::uint32_t> &gens) const {
  std::vector<bool> seen(elems_.size(), false);
  std::vector<std::uint32_t> members{identity_};
  seen[identity_] = true;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (auto g : gens) {
      std::uint32_t img = multiply(members[i], g);
      if (!seen[img]) {
        seen[img] = true;
        members.push_back(img);
      }
    }
  std::sort(members.begin(), members.end());
  return members;
}

Permutation RegularizedGroup::right_action(std::uint32_t i) const {
  std::vector<Point> im(elems_.size());
  for (std::uint32_t x = 0; x < elems_.size(); ++x)
    im[x] = multiply(x, i);
  return Permutation(std::move(im));
}

Graph build_bicayley(const BiCayleySpec &spec, std::uint64_t vertex_budget) {
  const RegularizedGroup &n = *spec.group;
  auto check_inverse_closed = [&](const std::vector<std::uint32_t> &set,
                                  const char *name) {
    for (auto e : set) {
      if (e == n.identity())
        throw Error(ErrorKind::BadParameters,
                    std::string("build_bicayley: identity in ") + name);
      if (std::find(set.begin(), set.end(), n.inverse(e)) == set.end())
        throw Error(ErrorKind::BadParameters,
                    std::string("build_bicayley: ") + name + " is not inverse-closed");
    }
  };
  check_inverse_closed(spec.right_set, "R");
  check_inverse_closed(spec.left_set, "L");

  std::uint64_t vertices = 2ull * n.size();
  if (vertices > vertex_budget)
    throw Error(ErrorKind::BudgetExceeded, "build_bicayley: vertex budget exceeded");

  Point m = n.size();
  std::vector<std::pair<Point, Point>> edges;
  for (std::uint32_t h = 0; h < m; ++h) {
    for (auto r : spec.right_set)
      edges.push_back({h, n.multiply(r, h)}); // g = r h
    for (auto l : spec.left_set)
      edges.push_back({m + h, m + n.multiply(l, h)});
    for (auto s : spec.spoke_set)
      edges.push_back({h, m + n.multiply(s, h)});
  }
  Graph g = Graph::from_edges(2 * m, std::move(edges));
  g.label_kind = VertexLabelKind::bicayley;
  g.label_elem.resize(2 * m);
  g.label_side.resize(2 * m);
  for (Point v = 0; v < 2 * m; ++v) {
    g.label_elem[v] = v % m;
    g.label_side[v] = v < m ? 0 : 1;
  }
  return g;
}

Permutation bicayley_right_mult(const RegularizedGroup &group, std::uint32_t elem) {
  Point m = group.size();
  Permutation ra = group.right_action(elem);
  std::vector<Point> im(2 * m);
  for (Point v = 0; v < m; ++v) {
    im[v] = ra[v];
    im[m + v] = m + ra[v];
  }
  return Permutation(std::move(im));
}

Permutation bicayley_automorphism(const RegularizedGroup &group,
                                  const Permutation &c, bool flip_side) {
  Point m = group.size();
  std::vector<Point> im(2 * m);
  for (std::uint32_t e = 0; e < m; ++e) {
    Point target = group.index_of(conjugated(group.element(e), c));
    im[e] = flip_side ? m + target : target;
    im[m + e] = flip_side ? target : m + target;
  }
  return Permutation(std::move(im));
}

namespace {

std::vector<Permutation> small_subgroup_elements(const PermGroup &s) {
  auto elems = s.elements(8); // throws if larger
  std::sort(elems.begin(), elems.end());
  return elems;
}

Permutation coset_canonical(const std::vector<Permutation> &sub_elems,
                            const Permutation &x) {
  Permutation best = compose(sub_elems.front(), x);
  for (std::size_t i = 1; i < sub_elems.size(); ++i) {
    Permutation candidate = compose(sub_elems[i], x);
    if (candidate < best)
      best = std::move(candidate);
  }
  return best;
}

} // namespace

CosetGraphResult build_coset_graph(const CosetGraphSpec &spec) {
  if (!is_subgroup_of(spec.subgroup, spec.group))
    throw Error(ErrorKind::NotSubgroup, "build_coset_graph: S is not a subgroup of G");
  if (!spec.group.contains(spec.connector))
    throw Error(ErrorKind::BadParameters, "build_coset_graph: g is not in G");
  auto sub = small_subgroup_elements(spec.subgroup);
  if (spec.known_group_order != 0) {
    Order index = spec.known_group_order / static_cast<Order>(sub.size());
    if (index > static_cast<Order>(spec.index_bound))
      throw Error(ErrorKind::BudgetExceeded,
                  "build_coset_graph: coset index exceeds bound (" +
                      order_to_string(index) + " cosets)");
  }

  // enumerate the whole coset space under right multiplication by G's
  // generators, keyed by canonical representative
  std::unordered_map<Permutation, Point, PermHash> coset_index;
  std::vector<Permutation> witnesses;
  auto intern = [&](const Permutation &x) -> std::pair<Point, bool> {
    Permutation canon = coset_canonical(sub, x);
    auto it = coset_index.find(canon);
    if (it != coset_index.end())
      return {it->second, false};
    Point id = static_cast<Point>(witnesses.size());
    coset_index.emplace(canon, id);
    witnesses.push_back(std::move(canon));
    return {id, true};
  };
  intern(Permutation(spec.group.degree()));
  for (std::size_t i = 0; i < witnesses.size(); ++i)
    for (const auto &gen : spec.group.generators()) {
      intern(compose(witnesses[i], gen));
      if (witnesses.size() > spec.index_bound)
        throw Error(ErrorKind::BudgetExceeded,
                    "build_coset_graph: coset index exceeds bound");
    }

  Point n = static_cast<Point>(witnesses.size());
  // adjacency: Sx ~ S(g s x) and Sx ~ S(g^-1 s x)
  Permutation ginv = spec.connector.inverse();
  std::vector<std::pair<Point, Point>> edges;
  for (Point v = 0; v < n; ++v)
    for (const auto &s : sub) {
      for (const Permutation *c : std::initializer_list<const Permutation *>{&spec.connector, &ginv}) {
        Permutation y = compose(compose(*c, s), witnesses[v]);
        auto [u, fresh] = intern(y);
        if (fresh)
          throw Error(ErrorKind::AssertionFailed,
                      "build_coset_graph: coset enumeration incomplete");
        if (u != v)
          edges.push_back({std::min(u, v), std::max(u, v)});
      }
    }
  CosetGraphResult result;
  result.graph = Graph::from_edges(n, std::move(edges));
  result.graph.label_kind = VertexLabelKind::coset;
  result.graph.label_elem.resize(n);
  for (Point v = 0; v < n; ++v)
    result.graph.label_elem[v] = v;
  result.graph.label_side.assign(n, 0);

  std::vector<Permutation> action_gens;
  for (const auto &gen : spec.group.generators()) {
    std::vector<Point> im(n);
    for (Point v = 0; v < n; ++v)
      im[v] = intern(compose(witnesses[v], gen)).first;
    action_gens.push_back(Permutation(std::move(im)));
  }
  result.witnesses = std::move(witnesses);
  result.action = PermGroup(std::max<Point>(n, 1), std::move(action_gens));
  return result;
}

LocalNeighborhood local_coset_neighborhood(const CosetGraphSpec &spec,
                                           unsigned radius) {
  if (radius > 4)
    throw Error(ErrorKind::BadParameters, "local_coset_neighborhood: radius > 4");
  if (!is_subgroup_of(spec.subgroup, spec.group))
    throw Error(ErrorKind::NotSubgroup,
                "local_coset_neighborhood: S is not a subgroup of G");
  auto sub = small_subgroup_elements(spec.subgroup);
  Permutation ginv = spec.connector.inverse();

  LocalNeighborhood out;
  for (const auto &s1 : sub)
    for (const auto &s2 : sub)
      if (compose(compose(s1, spec.connector), s2) == ginv)
        out.g_inverse_in_SgS = true;

  std::unordered_map<Permutation, Point, PermHash> coset_index;
  std::vector<Permutation> witnesses;
  std::vector<unsigned> depth;
  auto intern = [&](const Permutation &x) {
    Permutation canon = coset_canonical(sub, x);
    auto it = coset_index.find(canon);
    if (it != coset_index.end())
      return std::pair<Point, bool>{it->second, false};
    Point id = static_cast<Point>(witnesses.size());
    coset_index.emplace(canon, id);
    witnesses.push_back(std::move(canon));
    return std::pair<Point, bool>{id, true};
  };
  intern(Permutation(spec.group.degree()));
  depth.push_back(0);
  std::vector<std::pair<Point, Point>> edges;
  for (std::size_t i = 0; i < witnesses.size(); ++i) {
    if (depth[i] >= radius)
      continue;
    for (const auto &s : sub)
      for (const Permutation *c : std::initializer_list<const Permutation *>{&spec.connector, &ginv}) {
        auto [u, fresh] = intern(compose(compose(*c, s), witnesses[i]));
        if (fresh)
          depth.push_back(depth[i] + 1);
        if (u != static_cast<Point>(i))
          edges.push_back({std::min<Point>(u, static_cast<Point>(i)),
                           std::max<Point>(u, static_cast<Point>(i))});
      }
  }
  out.ball = Graph::from_edges(static_cast<Point>(witnesses.size()), std::move(edges));
  out.root_degree = radius == 0 ? 0 : static_cast<Point>(out.ball.adj[0].size());
  return out;
}

ExportFormat export_format_from_string(const std::string &s) {
  if (s == "edge_list")
    return ExportFormat::edge_list;
  if (s == "graph6")
    return ExportFormat::graph6;
  if (s == "dot_oriented")
    return ExportFormat::dot_oriented;
  throw Error(ErrorKind::UnknownFormat, "unknown export format: " + s);
}

namespace {

void append_graph6_size(std::string &out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

} // namespace

std::string export_graph(const Graph &g, ExportFormat format,
                         const std::vector<std::pair<Point, Point>> *orientation) {
  switch (format) {
  case ExportFormat::edge_list: {
    std::string out;
    for (auto [u, v] : g.edges())
      out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
  }
  case ExportFormat::graph6: {
    std::string out;
    append_graph6_size(out, g.vertex_count);
    unsigned bitpos = 0;
    char cur = 0;
    for (Point j = 1; j < g.vertex_count; ++j)
      for (Point i = 0; i < j; ++i) {
        cur = static_cast<char>(cur << 1 | (g.adjacent(i, j) ? 1 : 0));
        if (++bitpos == 6) {
          out.push_back(static_cast<char>(cur + 63));
          bitpos = 0;
          cur = 0;
        }
      }
    if (bitpos > 0)
      out.push_back(static_cast<char>((cur << (6 - bitpos)) + 63));
    out.push_back('\n');
    return out;
  }
  case ExportFormat::dot_oriented: {
    if (orientation == nullptr)
      throw Error(ErrorKind::BadParameters,
                  "dot_oriented export requires an orientation");
    std::vector<std::pair<Point, Point>> arcs = *orientation;
    std::sort(arcs.begin(), arcs.end());
    std::string out = "digraph og4 {\n";
    for (auto [u, v] : arcs)
      out += "  " + std::to_string(u) + " -> " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
  }
  }
  throw Error(ErrorKind::UnknownFormat, "unknown export format");
}

Graph import_graph6(const std::string &text) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r'))
    s.pop_back();
  if (s.empty())
    throw Error(ErrorKind::MalformedInput, "import_graph6: empty input");
  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto byte = [&](std::size_t i) -> std::uint64_t {
    if (i >= s.size())
      throw Error(ErrorKind::MalformedInput, "import_graph6: truncated input");
    int v = static_cast<unsigned char>(s[i]) - 63;
    if (v < 0 || v > 63)
      throw Error(ErrorKind::MalformedInput, "import_graph6: bad character");
    return static_cast<std::uint64_t>(v);
  };
  if (s[0] != 126) {
    n = byte(0);
    pos = 1;
  } else if (s.size() > 1 && s[1] != 126) {
    n = byte(1) << 12 | byte(2) << 6 | byte(3);
    pos = 4;
  } else {
    for (int i = 0; i < 6; ++i)
      n = n << 6 | byte(2 + static_cast<std::size_t>(i));
    pos = 8;
  }
  std::vector<std::pair<Point, Point>> edges;
  std::uint64_t bit_index = 0;
  std::uint64_t total_bits = n * (n - 1) / 2;
  for (Point j = 1; j < n; ++j)
    for (Point i = 0; i < j; ++i) {
      std::uint64_t chunk = byte(pos + bit_index / 6);
      bool set = (chunk >> (5 - bit_index % 6)) & 1;
      if (set)
        edges.push_back({i, j});
      ++bit_index;
    }
  if (pos + (total_bits + 5) / 6 != s.size())
    throw Error(ErrorKind::MalformedInput, "import_graph6: length mismatch");
  return Graph::from_edges(static_cast<Point>(n), std::move(edges));
}

} // namespace og4
