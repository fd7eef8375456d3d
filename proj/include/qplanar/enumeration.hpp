#pragma once
// Isomorph-free enumeration of maximal planar graphs at desk scale, canonical
// labeling, the byte-exact embedded-graph stream format, and the search for
// the spectral-radius maximizer over a pool.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qplanar/graph.hpp"
#include "qplanar/planarity.hpp"
#include "qplanar/spectral.hpp"

namespace qplanar {

// Canonical byte encoding of the isomorphism class (order byte followed by
// the upper-triangle adjacency bits of the canonically labeled graph).
// Individualization-refinement with automorphism pruning; n <= 64.
std::string canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// All maximal planar graphs on n vertices (4 <= n <= 12), one representative
// per isomorphism class, grown from K4 by vertex splitting.  Returned in
// canonical-encoding order.
std::vector<Graph> generate_triangulations(int n);

// Independent route to the same census: closure of the diagonal-flip move
// starting from the extremal candidate (the flip graph of triangulations of
// the sphere is connected).  Returned in canonical-encoding order.
std::vector<Graph> triangulations_by_flips(int n);

// --- embedded-graph byte stream ---------------------------------------------
// 15-byte header ">>planar_code<<", then per graph: one byte with the order,
// then for each vertex its neighbors in rotation order as 1-based bytes,
// 0-terminated.  Orders above 255 are not representable.

struct EmbeddedGraph {
  Graph graph;
  RotationEmbedding embedding;
};

class PlanarCodeError : public GraphError {
public:
  PlanarCodeError(const std::string& what, std::size_t offset)
      : GraphError(what + " (at byte " + std::to_string(offset) + ")"),
        offset(offset) {}
  std::size_t offset;
};

std::vector<EmbeddedGraph> read_planar_code(std::istream& in);
std::vector<EmbeddedGraph> read_planar_code_file(const std::string& path);
void write_planar_code(std::ostream& out, const std::vector<Graph>& graphs);

// --- extremal search ----------------------------------------------------------

struct SearchOptions {
  double tol = 1e-10;
  double escalate_gap = 1e-7;  // near-ties are recomputed at escalate_tol
  double escalate_tol = 1e-13;
  int jobs = 1;
};

struct SearchResult {
  int n = 0;
  int count = 0;       // pool size
  int best_index = -1;
  Graph best;
  double best_q = 0.0;
  std::optional<double> runner_up_q;  // absent when the pool has one graph
  bool best_is_candidate = false;     // best isomorphic to extremal_candidate
  std::vector<double> all_q;          // per-pool values, pool order
  std::vector<int> all_m;             // per-pool edge counts, pool order
};

// Search over an explicit pool (each graph must have order n).
SearchResult extremal_search(int n, const std::vector<Graph>& pool,
                             const SearchOptions& opts = {});
// Convenience: search over generate_triangulations(n).
SearchResult extremal_search(int n, const SearchOptions& opts = {});

nlohmann::json to_json(const SearchResult& r);
// CSV: header then one line per pool graph: index,n,m,q,is_best.
void write_search_csv(std::ostream& out, const SearchResult& r);

}  // namespace qplanar
