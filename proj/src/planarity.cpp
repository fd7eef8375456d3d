#include "qplanar/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <map>

namespace qplanar {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(g.num_vertices());
  int idx = 0;
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, idx++, bg);
  return bg;
}

}  // namespace

std::optional<RotationEmbedding> planar_embedding(const Graph& g) {
  BoostGraph bg = to_boost(g);
  using EdgeDesc = boost::graph_traits<BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> embedding(g.num_vertices());
  bool ok = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = embedding.data());
  if (!ok) return std::nullopt;

  RotationEmbedding emb;
  emb.rotation.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (const auto& e : embedding[v]) {
      int s = static_cast<int>(boost::source(e, bg));
      int t = static_cast<int>(boost::target(e, bg));
      emb.rotation[v].push_back(s == v ? t : s);
    }
  }
  if (g.is_connected() && g.num_vertices() > 0)
    emb.faces = trace_faces(g, emb.rotation);
  return emb;
}

bool is_planar(const Graph& g) { return planar_embedding(g).has_value(); }

std::vector<std::vector<int>> trace_faces(
    const Graph& g, const std::vector<std::vector<int>>& rotation) {
  int n = g.num_vertices();
  if (!g.is_connected())
    throw GraphError("face tracing requires a connected graph");
  if (n == 1) return {{0}};  // single vertex: just the outer face
  // Position of u within rotation[v], for O(1) successor lookups.
  std::vector<std::map<int, int>> pos(n);
  for (int v = 0; v < n; ++v) {
    if (static_cast<int>(rotation[v].size()) != g.degree(v))
      throw GraphError("rotation size mismatch at vertex " + std::to_string(v));
    for (int i = 0; i < static_cast<int>(rotation[v].size()); ++i)
      pos[v][rotation[v][i]] = i;
  }

  // Walk each directed edge once: the face successor of u->v is v->w where w
  // follows u in the rotation at v.
  std::map<std::pair<int, int>, bool> used;
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) used[{v, u}] = false;

  std::vector<std::vector<int>> faces;
  for (auto& [dart, seen] : used) {
    if (seen) continue;
    std::vector<int> face;
    int u = dart.first, v = dart.second;
    while (!used.at({u, v})) {
      used.at({u, v}) = true;
      face.push_back(u);
      auto it = pos[v].find(u);
      if (it == pos[v].end())
        throw GraphError("rotation at vertex " + std::to_string(v) +
                         " does not list neighbor " + std::to_string(u));
      int next = rotation[v][(it->second + 1) % rotation[v].size()];
      u = v;
      v = next;
    }
    faces.push_back(std::move(face));
  }

  long long f = static_cast<long long>(faces.size());
  if (n - static_cast<long long>(g.num_edges()) + f != 2)
    throw GraphError("rotation system violates the Euler relation");
  return faces;
}

bool is_maximal_planar(const Graph& g) {
  int n = g.num_vertices();
  if (n < 3) return false;
  if (g.num_edges() != 3 * n - 6) return false;
  return is_planar(g);
}

bool is_outer_planar(const Graph& g) {
  int n = g.num_vertices();
  // Apex augmentation: add a vertex adjacent to everything and test planarity.
  std::vector<Edge> es = g.edges();
  for (int v = 0; v < n; ++v) es.emplace_back(v, n);
  return is_planar(Graph::from_edges(n + 1, es));
}

bool is_maximal_outer_planar(const Graph& g) {
  int n = g.num_vertices();
  if (n == 1) return true;
  if (n < 1) return false;
  if (g.num_edges() != 2 * n - 3) return false;
  return is_outer_planar(g);
}

std::vector<int> link_cycle(const Graph& g, const RotationEmbedding& emb,
                            int u) {
  if (!is_maximal_planar(g))
    throw GraphError("link cycles require a maximal planar graph");
  if (u < 0 || u >= g.num_vertices())
    throw GraphError("link cycle: vertex out of range");
  const std::vector<int>& rot = emb.rotation.at(u);
  int d = static_cast<int>(rot.size());
  if (d < 3) throw GraphError("link cycle: vertex degree below three");

  // In a triangulation the rotation at u lists the neighbors along the cycle
  // they induce.  Canonicalize: start at the smallest label, pick the
  // lexicographically smaller direction.
  int start = static_cast<int>(
      std::min_element(rot.begin(), rot.end()) - rot.begin());
  std::vector<int> fwd(d), rev(d);
  for (int i = 0; i < d; ++i) {
    fwd[i] = rot[(start + i) % d];
    rev[i] = rot[(start - i + d) % d];
  }
  std::vector<int> cyc = std::min(fwd, rev);

  // Sanity: consecutive members (cyclically) must be adjacent in g.
  for (int i = 0; i < d; ++i)
    if (!g.has_edge(cyc[i], cyc[(i + 1) % d]))
      throw GraphError("link of vertex " + std::to_string(u) +
                       " is not a cycle");
  return cyc;
}

bool outerplanar_degree_sum_ok(const Graph& g, int u) {
  int n = g.num_vertices();
  if (n < 2) throw GraphError("degree-sum check needs at least two vertices");
  if (!is_maximal_outer_planar(g))
    throw GraphError("degree-sum check requires a maximal outerplanar graph");
  if (u < 0 || u >= n) throw GraphError("degree-sum check: vertex out of range");
  return g.neighbor_degree_sum(u) <= n + 3LL * g.degree(u) - 4;
}

}  // namespace qplanar
