#pragma once
// Simple undirected graph value type with sorted adjacency lists, plus the
// standard constructions used throughout the toolkit (paths, cycles, complete
// and complete bipartite graphs, joins, and the extremal candidate family).

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qplanar {

using Edge = std::pair<int, int>;

class GraphError : public std::runtime_error {
public:
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

// Undirected simple graph on vertices 0..n-1.  Adjacency lists are kept
// sorted ascending so that iteration order (and every downstream report)
// is deterministic.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  // Builds a graph from an edge list.  Rejects out-of-range endpoints,
  // self-loops, and duplicate edges.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return m_; }

  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }

  // Sum of neighbor degrees of v (the quantity bounded by the outerplanar
  // degree-sum inequality and used by the Merris-type bound).
  long long neighbor_degree_sum(int v) const;

  int max_degree() const;
  // Second-largest degree counted with multiplicity; requires n >= 2.
  int second_max_degree() const;
  std::vector<int> degree_sequence() const;  // sorted descending

  // Edges as sorted (u < v) pairs in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_connected() const;

  // Copy with one edge added / removed; throws if already present / absent.
  Graph with_edge(int u, int v) const;
  Graph without_edge(int u, int v) const;

  // Subgraph induced on `verts` (vertices relabeled 0..k-1 in given order).
  Graph induced_subgraph(const std::vector<int>& verts) const;

  bool operator==(const Graph& other) const;

private:
  void add_edge_unchecked(int u, int v);
  void check_vertex(int v) const;

  std::vector<std::vector<int>> adj_;
  int m_ = 0;
};

// --- standard constructions -------------------------------------------------

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);                     // n >= 3
Graph complete_bipartite(int a, int b);
Graph empty_graph(int n);

// Join G1 * G2: disjoint union plus all edges between the two parts.
// G2's vertices are shifted by G1's order.
Graph join(const Graph& g1, const Graph& g2);

// The conjectured q-maximal planar graph of order n: two dominating vertices
// over a path on the remaining n-2 (complete graph for n <= 3).  Vertices 0,1
// are the dominating pair; 2..n-1 is the path in order.
Graph extremal_candidate(int n);

// Maximal outerplanar "zigzag" triangulation of the k-gon (k >= 3): cycle
// 0..k-1 plus the chords of the fan-free zigzag ear decomposition.  Every
// vertex has degree at most 4.
Graph snake_outerplanar(int k);

// Platonic triangulations used as fixed test subjects.
Graph octahedron_graph();
Graph icosahedron_graph();

// --- edge-list text I/O -----------------------------------------------------
// Format: first line "n m", then m lines "u v" (0-based endpoints).

Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace qplanar
