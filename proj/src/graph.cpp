#include "qplanar/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace qplanar {

Graph::Graph(int n) {
  if (n < 0) throw GraphError("vertex count must be nonnegative");
  adj_.resize(n);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= num_vertices())
    throw GraphError("vertex " + std::to_string(v) + " out of range [0," +
                     std::to_string(num_vertices()) + ")");
}

void Graph::add_edge_unchecked(int u, int v) {
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++m_;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) {
    g.check_vertex(u);
    g.check_vertex(v);
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (g.has_edge(u, v))
      throw GraphError("duplicate edge " + std::to_string(u) + "-" +
                       std::to_string(v));
    g.add_edge_unchecked(u, v);
  }
  return g;
}

bool Graph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

long long Graph::neighbor_degree_sum(int v) const {
  check_vertex(v);
  long long s = 0;
  for (int u : adj_[v]) s += degree(u);
  return s;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < num_vertices(); ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::second_max_degree() const {
  if (num_vertices() < 2)
    throw GraphError("second_max_degree needs at least two vertices");
  auto ds = degree_sequence();
  return ds[1];
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> ds(num_vertices());
  for (int v = 0; v < num_vertices(); ++v) ds[v] = degree(v);
  std::sort(ds.rbegin(), ds.rend());
  return ds;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (int u = 0; u < num_vertices(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_connected() const {
  int n = num_vertices();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj_[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  return count == n;
}

Graph Graph::with_edge(int u, int v) const {
  if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v))
    throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                     " already present");
  Graph g = *this;
  g.add_edge_unchecked(u, v);
  return g;
}

Graph Graph::without_edge(int u, int v) const {
  if (!has_edge(u, v))
    throw GraphError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                     " not present");
  Graph g = *this;
  auto erase_from = [](std::vector<int>& a, int x) {
    a.erase(std::lower_bound(a.begin(), a.end(), x));
  };
  erase_from(g.adj_[u], v);
  erase_from(g.adj_[v], u);
  --g.m_;
  return g;
}

Graph Graph::induced_subgraph(const std::vector<int>& verts) const {
  std::vector<int> pos(num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(verts.size()); ++i) {
    check_vertex(verts[i]);
    if (pos[verts[i]] != -1) throw GraphError("duplicate vertex in selection");
    pos[verts[i]] = i;
  }
  std::vector<Edge> es;
  for (int v : verts)
    for (int u : adj_[v])
      if (pos[u] != -1 && pos[v] < pos[u]) es.emplace_back(pos[v], pos[u]);
  return from_edges(static_cast<int>(verts.size()), es);
}

bool Graph::operator==(const Graph& other) const {
  return adj_ == other.adj_;
}

// --- standard constructions -------------------------------------------------

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return Graph::from_edges(n, es);
}

Graph cycle_graph(int n) {
  if (n < 3) throw GraphError("cycle needs at least three vertices");
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  for (auto& [u, v] : es)
    if (u > v) std::swap(u, v);
  return Graph::from_edges(n, es);
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> es;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) es.emplace_back(u, a + v);
  return Graph::from_edges(a + b, es);
}

Graph empty_graph(int n) { return Graph(n); }

Graph join(const Graph& g1, const Graph& g2) {
  int n1 = g1.num_vertices(), n2 = g2.num_vertices();
  std::vector<Edge> es = g1.edges();
  for (auto [u, v] : g2.edges()) es.emplace_back(n1 + u, n1 + v);
  for (int u = 0; u < n1; ++u)
    for (int v = 0; v < n2; ++v) es.emplace_back(u, n1 + v);
  return Graph::from_edges(n1 + n2, es);
}

Graph extremal_candidate(int n) {
  if (n < 1) throw GraphError("extremal candidate needs at least one vertex");
  if (n <= 3) return complete_graph(n);
  return join(complete_graph(2), path_graph(n - 2));
}

Graph snake_outerplanar(int k) {
  if (k < 3) throw GraphError("snake needs at least three vertices");
  // Zigzag visiting order 0, 1, k-1, 2, k-2, ...; triangulate with the ear
  // triangles over consecutive order triples.
  std::vector<int> s{0};
  int lo = 1, hi = k - 1;
  bool low = true;
  while (static_cast<int>(s.size()) < k) {
    s.push_back(low ? lo++ : hi--);
    low = !low;
  }
  std::set<Edge> es;
  auto add = [&es](int u, int v) {
    es.insert({std::min(u, v), std::max(u, v)});
  };
  for (int v = 0; v < k; ++v) add(v, (v + 1) % k);
  for (int i = 0; i + 2 < k; ++i) {
    add(s[i], s[i + 1]);
    add(s[i + 1], s[i + 2]);
    add(s[i], s[i + 2]);
  }
  return Graph::from_edges(k, std::vector<Edge>(es.begin(), es.end()));
}

Graph octahedron_graph() {
  // K_{2,2,2}: join of three independent pairs.
  return join(join(empty_graph(2), empty_graph(2)), empty_graph(2));
}

Graph icosahedron_graph() {
  return Graph::from_edges(
      12, {{0, 1},  {0, 2},  {0, 3},  {0, 4},  {0, 5},  {1, 2},  {2, 3},
           {3, 4},  {4, 5},  {5, 1},  {1, 6},  {2, 6},  {2, 7},  {3, 7},
           {3, 8},  {4, 8},  {4, 9},  {5, 9},  {5, 10}, {1, 10}, {6, 7},
           {7, 8},  {8, 9},  {9, 10}, {10, 6}, {6, 11}, {7, 11}, {8, 11},
           {9, 11}, {10, 11}});
}

// --- edge-list text I/O -----------------------------------------------------

Graph read_edge_list(std::istream& in) {
  int n = 0, m = 0;
  if (!(in >> n >> m)) throw GraphError("edge list: missing 'n m' header");
  if (n < 0 || m < 0) throw GraphError("edge list: negative n or m");
  std::vector<Edge> es;
  es.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v))
      throw GraphError("edge list: expected " + std::to_string(m) +
                       " edges, got " + std::to_string(i));
    es.emplace_back(u, v);
  }
  return Graph::from_edges(n, es);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open file: " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << " " << g.num_edges() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
}

}  // namespace qplanar
