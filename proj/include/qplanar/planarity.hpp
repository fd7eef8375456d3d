#pragma once
// Planarity testing with combinatorial-embedding output (edge-addition
// method), maximality / outerplanarity predicates, link cycles of vertices in
// triangulations, and the outerplanar neighbor-degree-sum inequality.

#include <optional>
#include <vector>

#include "qplanar/graph.hpp"

namespace qplanar {

// Combinatorial embedding: per-vertex cyclic neighbor order plus the face
// walks it induces (each face listed as its vertex cycle).
struct RotationEmbedding {
  std::vector<std::vector<int>> rotation;
  std::vector<std::vector<int>> faces;
};

// Returns an embedding if g is planar, std::nullopt otherwise.
std::optional<RotationEmbedding> planar_embedding(const Graph& g);

bool is_planar(const Graph& g);

// Derives the face walks of a given rotation system and checks the Euler
// relation n - m + f = 2 (connected g required); throws on inconsistency.
std::vector<std::vector<int>> trace_faces(const Graph& g,
                                          const std::vector<std::vector<int>>& rotation);

// Maximal planar: n >= 3, planar, and m = 3n - 6 (every face a triangle).
bool is_maximal_planar(const Graph& g);

// Outerplanar: embeddable with all vertices on the outer face.  Tested via
// the apex trick: g is outerplanar iff g plus a vertex joined to all of g is
// planar.
bool is_outer_planar(const Graph& g);

// Maximal outerplanar: outerplanar with m = 2n - 3 (n >= 2; K1 for n = 1).
bool is_maximal_outer_planar(const Graph& g);

// Cyclic order of the neighbors of u in a planar triangulation, canonicalized
// to start at the smallest-labeled neighbor and run in the lexicographically
// smaller of the two directions.  Requires g maximal planar (so the open
// neighborhood of any vertex induces a cycle when d(u) >= 3).
std::vector<int> link_cycle(const Graph& g, const RotationEmbedding& emb, int u);

// Checks the neighbor-degree-sum inequality for maximal outerplanar graphs:
// sum of deg(v) over v ~ u is at most n + 3 deg(u) - 4.  Throws if g is not
// maximal outerplanar or n < 2.
bool outerplanar_degree_sum_ok(const Graph& g, int u);

}  // namespace qplanar
