#pragma once
// Independent test-side oracles.  Everything here deliberately avoids the
// library's own numerics and enumeration paths:
//   - eigenvalues come from Eigen's dense symmetric solver,
//   - small-order censuses come from brute force over all edge subsets,
//   - maximal outerplanar graphs come from convex-polygon triangulations,
//   - random graphs come from a seeded Erdos-Renyi sampler.

#include <random>
#include <set>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qplanar/enumeration.hpp"
#include "qplanar/graph.hpp"
#include "qplanar/planarity.hpp"

namespace oracle {

// All eigenvalues of Q(G) = D(G) + A(G), ascending.
inline std::vector<double> q_spectrum(const qplanar::Graph& g) {
  const int n = g.num_vertices();
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  for (int v = 0; v < n; ++v) {
    q(v, v) = g.degree(v);
    for (int w : g.neighbors(v)) q(v, w) = 1.0;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(q);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = solver.eigenvalues()(i);
  return out;
}

inline double q_max(const qplanar::Graph& g) {
  return g.num_vertices() == 0 ? 0.0 : q_spectrum(g).back();
}

// Every maximal planar graph of order n (4 <= n <= 7), one per isomorphism
// class, found by testing each (3n-6)-edge subset of the complete graph's
// edge set for planarity.  Planar with m = 3n-6 forces maximality, but we
// assert the library predicate rather than assume it.
inline std::vector<qplanar::Graph> brute_force_triangulations(int n) {
  using qplanar::Graph;
  std::vector<qplanar::Edge> all = qplanar::complete_graph(n).edges();
  const int total = static_cast<int>(all.size());
  const int want = 3 * n - 6;
  std::vector<Graph> reps;
  std::set<std::string> seen;
  std::vector<int> pick(want);
  for (int i = 0; i < want; ++i) pick[i] = i;
  while (true) {
    std::vector<qplanar::Edge> edges;
    edges.reserve(want);
    for (int i : pick) edges.push_back(all[i]);
    Graph g = Graph::from_edges(n, edges);
    if (qplanar::is_maximal_planar(g)) {
      std::string key = qplanar::canonical_form(g);
      if (seen.insert(key).second) reps.push_back(g);
    }
    // next combination
    int i = want - 1;
    while (i >= 0 && pick[i] == total - want + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < want; ++j) pick[j] = pick[j - 1] + 1;
  }
  return reps;
}

// All triangulations of a convex k-gon with vertices 0..k-1 (as graphs:
// the cycle plus the chosen chords).  Counted by the Catalan numbers.
inline void polygon_triangulations_rec(const std::vector<int>& poly,
                                       std::vector<qplanar::Edge>& chords,
                                       std::vector<std::vector<qplanar::Edge>>& out) {
  const int k = static_cast<int>(poly.size());
  if (k < 3) {
    out.push_back(chords);
    return;
  }
  // Triangle on the edge poly[0]-poly[k-1] with apex poly[i].
  for (int i = 1; i + 1 < k; ++i) {
    std::size_t mark = chords.size();
    if (i > 1) chords.emplace_back(poly[0], poly[i]);
    if (i + 2 < k) chords.emplace_back(poly[i], poly[k - 1]);
    std::vector<int> left(poly.begin(), poly.begin() + i + 1);
    std::vector<int> right(poly.begin() + i, poly.end());
    if (left.size() >= 3 && right.size() >= 3) {
      // Split the recursion: enumerate left, and for each, enumerate right.
      std::vector<std::vector<qplanar::Edge>> lefts;
      std::vector<qplanar::Edge> scratch;
      polygon_triangulations_rec(left, scratch, lefts);
      for (const auto& lc : lefts) {
        std::size_t mark2 = chords.size();
        chords.insert(chords.end(), lc.begin(), lc.end());
        polygon_triangulations_rec(right, chords, out);
        chords.resize(mark2);
      }
    } else if (left.size() >= 3) {
      polygon_triangulations_rec(left, chords, out);
    } else {
      polygon_triangulations_rec(right, chords, out);
    }
    chords.resize(mark);
  }
}

inline std::vector<qplanar::Graph> polygon_triangulations(int k) {
  std::vector<int> poly(k);
  for (int i = 0; i < k; ++i) poly[i] = i;
  std::vector<std::vector<qplanar::Edge>> chordsets;
  std::vector<qplanar::Edge> scratch;
  polygon_triangulations_rec(poly, scratch, chordsets);
  std::vector<qplanar::Graph> out;
  out.reserve(chordsets.size());
  for (const auto& cs : chordsets) {
    std::vector<qplanar::Edge> edges = qplanar::cycle_graph(k).edges();
    for (auto [a, b] : cs) edges.emplace_back(std::min(a, b), std::max(a, b));
    out.push_back(qplanar::Graph::from_edges(k, edges));
  }
  return out;
}

// Third power of a path: edges between vertices at distance <= 3.  For
// n >= 4 this is a maximal planar graph (3n - 6 edges) whose max degree 6
// stays at least three below n - 1 once n >= 9.
inline qplanar::Graph path_cube(int n) {
  std::vector<qplanar::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n && v <= u + 3; ++v) edges.emplace_back(u, v);
  return qplanar::Graph::from_edges(n, edges);
}

// Connected Erdos-Renyi sample; deterministic under a fixed engine state.
inline qplanar::Graph random_connected_graph(std::mt19937& rng, int n,
                                             double p) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (true) {
    std::vector<qplanar::Edge> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) < p) edges.emplace_back(u, v);
    qplanar::Graph g = qplanar::Graph::from_edges(n, edges);
    if (g.is_connected()) return g;
  }
}

// Uniformly random relabeling of g under the given engine.
inline qplanar::Graph shuffled_copy(std::mt19937& rng, const qplanar::Graph& g) {
  const int n = g.num_vertices();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<qplanar::Edge> edges;
  for (auto [u, v] : g.edges()) {
    int a = perm[u], b = perm[v];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return qplanar::Graph::from_edges(n, edges);
}

}  // namespace oracle
