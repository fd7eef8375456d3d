#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "qplanar/enumeration.hpp"
#include "qplanar/graph.hpp"
#include "qplanar/planarity.hpp"
#include "qplanar/spectral.hpp"

using namespace qplanar;

namespace {
std::set<std::string> canon_set(const std::vector<Graph>& pool) {
  std::set<std::string> out;
  for (const Graph& g : pool) out.insert(canonical_form(g));
  return out;
}
}  // namespace

TEST_CASE("canonical form is relabeling invariant") {
  std::mt19937 rng(60601u);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + static_cast<int>(rng() % 14);
    Graph g = oracle::random_connected_graph(rng, n, 0.4);
    std::string canon = canonical_form(g);
    for (int rep = 0; rep < 5; ++rep)
      CHECK(canonical_form(oracle::shuffled_copy(rng, g)) == canon);
  }
}

TEST_CASE("canonical form separates same-degree-sequence graphs") {
  // C6 and two disjoint triangles are both 2-regular but not isomorphic.
  Graph c6 = cycle_graph(6);
  Graph twoc3 = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(canonical_form(c6) != canonical_form(twoc3));
  CHECK_FALSE(isomorphic(c6, twoc3));
  // K_{3,3} vs the prism: both 3-regular on 6 vertices.
  Graph prism = Graph::from_edges(
      6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK_FALSE(isomorphic(complete_bipartite(3, 3), prism));
}

TEST_CASE("isomorphism testing") {
  std::mt19937 rng(70707u);
  Graph g = extremal_candidate(11);
  for (int rep = 0; rep < 10; ++rep)
    CHECK(isomorphic(g, oracle::shuffled_copy(rng, g)));
  CHECK_FALSE(isomorphic(g, path_graph(11)));
  CHECK_FALSE(isomorphic(complete_graph(4), cycle_graph(4)));
  CHECK(isomorphic(complete_graph(1), complete_graph(1)));
  // Different orders are never isomorphic.
  CHECK_FALSE(isomorphic(complete_graph(4), complete_graph(5)));
}

TEST_CASE("triangulation census counts") {
  const int expected[] = {1, 1, 2, 5, 14, 50, 233};
  for (int n = 4; n <= 10; ++n) {
    auto pool = generate_triangulations(n);
    CHECK(static_cast<int>(pool.size()) == expected[n - 4]);
    for (const Graph& g : pool) {
      CHECK(g.num_vertices() == n);
      CHECK(is_maximal_planar(g));
    }
    // Output ordering is canonical and duplicate-free.
    std::vector<std::string> forms;
    for (const Graph& g : pool) forms.push_back(canonical_form(g));
    CHECK(std::is_sorted(forms.begin(), forms.end()));
    CHECK(std::adjacent_find(forms.begin(), forms.end()) == forms.end());
  }
  CHECK_THROWS_AS(generate_triangulations(3), GraphError);
  CHECK_THROWS_AS(generate_triangulations(13), GraphError);
}

TEST_CASE("census agrees with brute force at tiny orders") {
  for (int n = 4; n <= 7; ++n) {
    auto fast = generate_triangulations(n);
    auto slow = oracle::brute_force_triangulations(n);
    CHECK(fast.size() == slow.size());
    CHECK(canon_set(fast) == canon_set(slow));
  }
}

TEST_CASE("flip connectivity reaches the same census") {
  for (int n = 6; n <= 10; ++n) {
    auto split = generate_triangulations(n);
    auto flips = triangulations_by_flips(n);
    CHECK(flips.size() == split.size());
    CHECK(canon_set(flips) == canon_set(split));
  }
}

TEST_CASE("planar code round trip") {
  auto pool = generate_triangulations(7);
  std::ostringstream out;
  write_planar_code(out, pool);
  std::string bytes = out.str();
  CHECK(bytes.rfind(">>planar_code<<", 0) == 0);

  std::istringstream in(bytes);
  auto back = read_planar_code(in);
  REQUIRE(back.size() == pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    CHECK(back[i].graph == pool[i]);
    // The stored rotation is a genuine embedding: faces satisfy Euler.
    auto faces = trace_faces(back[i].graph, back[i].embedding.rotation);
    CHECK(static_cast<int>(faces.size()) ==
          2 - 7 + back[i].graph.num_edges());
  }

  // Writing is deterministic byte for byte.
  std::ostringstream again;
  write_planar_code(again, pool);
  CHECK(again.str() == bytes);

  // A K4 record is exactly order byte + 4 terminated rotation lists.
  std::ostringstream k4out;
  write_planar_code(k4out, {complete_graph(4)});
  CHECK(k4out.str().size() == 15 + 1 + 4 * 4);
}

TEST_CASE("planar code errors carry byte offsets") {
  auto record = [](std::initializer_list<int> bytes) {
    std::string s = ">>planar_code<<";
    for (int b : bytes) s.push_back(static_cast<char>(b));
    return s;
  };

  std::istringstream bad_header("not_planar_code");
  CHECK_THROWS_AS(read_planar_code(bad_header), PlanarCodeError);

  // Truncated: order says 4, stream ends mid rotation list.
  std::istringstream truncated(record({4, 2, 3, 4, 0, 1}));
  CHECK_THROWS_AS(read_planar_code(truncated), PlanarCodeError);

  // Neighbor byte exceeds the order.
  std::istringstream out_of_range(record({3, 2, 3, 0, 1, 3, 0, 1, 7, 0}));
  try {
    read_planar_code(out_of_range);
    FAIL("expected PlanarCodeError");
  } catch (const PlanarCodeError& e) {
    CHECK(e.offset == 15 + 8);  // the offending byte
  }

  // Self-loop: vertex 1 lists itself.
  std::istringstream self_loop(record({3, 1, 2, 3, 0, 1, 3, 0, 1, 2, 0}));
  CHECK_THROWS_AS(read_planar_code(self_loop), PlanarCodeError);

  // Asymmetric: vertex 1 lists 2, vertex 2 does not list 1.
  std::istringstream asymmetric(record({3, 2, 3, 0, 3, 0, 1, 2, 0}));
  CHECK_THROWS_AS(read_planar_code(asymmetric), PlanarCodeError);

  // Zero order.
  std::istringstream zero(record({0}));
  CHECK_THROWS_AS(read_planar_code(zero), PlanarCodeError);

  CHECK_THROWS_AS(read_planar_code_file("/nonexistent/pool.pc"), GraphError);
}

TEST_CASE("extremal search finds the candidate at small orders") {
  for (int n = 4; n <= 9; ++n) {
    SearchResult r = extremal_search(n);
    CHECK(r.n == n);
    CHECK(r.best_is_candidate);
    CHECK(isomorphic(r.best, extremal_candidate(n)));
    CHECK(static_cast<int>(r.all_q.size()) == r.count);
    CHECK(static_cast<int>(r.all_m.size()) == r.count);
    CHECK(r.best_q == *std::max_element(r.all_q.begin(), r.all_q.end()));
    if (r.count > 1) {
      REQUIRE(r.runner_up_q.has_value());
      CHECK(*r.runner_up_q < r.best_q);
    }
    // Cross-check the winner's value against the dense eigensolver.
    CHECK(std::abs(r.best_q - oracle::q_max(r.best)) < 1e-8);
  }
}

TEST_CASE("search is deterministic across thread counts") {
  SearchOptions serial;
  SearchOptions parallel;
  parallel.jobs = 4;
  SearchResult a = extremal_search(9, serial);
  SearchResult b = extremal_search(9, parallel);
  CHECK(a.best_index == b.best_index);
  CHECK(a.best_q == b.best_q);
  CHECK(a.all_q == b.all_q);
}

TEST_CASE("search over an explicit pool") {
  std::vector<Graph> pool = {octahedron_graph(), extremal_candidate(6),
                             oracle::path_cube(6)};
  SearchResult r = extremal_search(6, pool);
  CHECK(r.count == 3);
  CHECK(r.best_index == 1);
  CHECK(r.best_is_candidate);
  // Pools must be order-consistent.
  std::vector<Graph> mixed = {octahedron_graph(), extremal_candidate(7)};
  CHECK_THROWS_AS(extremal_search(6, mixed), GraphError);
  std::vector<Graph> none;
  CHECK_THROWS_AS(extremal_search(6, none), GraphError);
}

TEST_CASE("search reports serialize") {
  SearchResult r = extremal_search(6);
  nlohmann::json j = to_json(r);
  CHECK(j["n"] == 6);
  CHECK(j["count"] == 2);
  CHECK(j["is_extremal_candidate"] == true);
  CHECK(j["best_q"].get<double>() == doctest::Approx(8.449489742783));

  std::ostringstream csv;
  write_search_csv(csv, r);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "index,n,m,q,is_best");
  int rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == r.count);
}
