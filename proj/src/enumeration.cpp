#include "qplanar/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <exception>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace qplanar {

// --- canonical labeling -------------------------------------------------------

namespace {

// Individualization-refinement search for the lexicographically smallest
// adjacency encoding, with orbit pruning from automorphisms discovered at
// equal-encoding leaves.
struct CanonSearch {
  const Graph& g;
  int n;
  std::string best;
  std::vector<int> best_label;
  std::vector<std::vector<int>> autos;
  std::vector<int> prefix;  // individualized vertices on the current branch

  explicit CanonSearch(const Graph& gg)
      : g(gg), n(gg.num_vertices()) {}

  // Coarsest stable refinement: repeatedly re-rank vertices by the pair
  // (own color, sorted neighbor colors) until the class count stabilizes.
  std::vector<int> refine(std::vector<int> colors) const {
    int classes = 1 + *std::max_element(colors.begin(), colors.end());
    while (true) {
      std::vector<std::pair<std::pair<int, std::vector<int>>, int>> sig(n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> nb;
        nb.reserve(g.degree(v));
        for (int u : g.neighbors(v)) nb.push_back(colors[u]);
        std::sort(nb.begin(), nb.end());
        sig[v] = {{colors[v], std::move(nb)}, v};
      }
      std::sort(sig.begin(), sig.end());
      std::vector<int> next(n);
      int c = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && sig[i].first != sig[i - 1].first) ++c;
        next[sig[i].second] = c;
      }
      if (c + 1 == classes) return next;
      classes = c + 1;
      colors = std::move(next);
    }
  }

  std::string encode(const std::vector<int>& label) const {
    std::vector<int> inv(n);
    for (int v = 0; v < n; ++v) inv[label[v]] = v;
    std::string s;
    s.push_back(static_cast<char>(n));
    int bits = n * (n - 1) / 2;
    s.resize(1 + (bits + 7) / 8, '\0');
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (g.has_edge(inv[i], inv[j]))
          s[1 + bit / 8] |= static_cast<char>(0x80 >> (bit % 8));
    return s;
  }

  void record_automorphism(const std::vector<int>& la,
                           const std::vector<int>& lb) {
    std::vector<int> invb(n), gamma(n);
    for (int v = 0; v < n; ++v) invb[lb[v]] = v;
    bool identity = true;
    for (int v = 0; v < n; ++v) {
      gamma[v] = invb[la[v]];
      if (gamma[v] != v) identity = false;
    }
    if (!identity) autos.push_back(std::move(gamma));
  }

  // Orbit partition under the automorphisms that fix the current prefix.
  std::vector<int> orbits() const {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& a : autos) {
      bool usable = true;
      for (int w : prefix)
        if (a[w] != w) {
          usable = false;
          break;
        }
      if (!usable) continue;
      for (int v = 0; v < n; ++v) {
        int ra = find(v), rb = find(a[v]);
        if (ra != rb) parent[ra] = rb;
      }
    }
    std::vector<int> root(n);
    for (int v = 0; v < n; ++v) root[v] = find(v);
    return root;
  }

  void search(std::vector<int> colors) {
    colors = refine(std::move(colors));
    int maxc = *std::max_element(colors.begin(), colors.end());
    if (maxc == n - 1) {  // discrete: a leaf labeling
      std::string enc = encode(colors);
      if (best.empty() || enc < best) {
        best = enc;
        best_label = colors;
      } else if (enc == best) {
        record_automorphism(colors, best_label);
      }
      return;
    }
    // First non-singleton class, members in vertex order.
    std::vector<int> count(maxc + 1, 0);
    for (int c : colors) ++count[c];
    int target = 0;
    while (count[target] < 2) ++target;
    std::vector<int> members;
    for (int v = 0; v < n; ++v)
      if (colors[v] == target) members.push_back(v);

    std::vector<int> explored;
    for (int v : members) {
      std::vector<int> orb = orbits();  // autos grow as leaves are visited
      bool redundant = false;
      for (int e : explored)
        if (orb[e] == orb[v]) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      explored.push_back(v);
      std::vector<int> split(n);
      for (int w = 0; w < n; ++w)
        split[w] = 2 * colors[w] + (w == v ? 0 : 1);
      prefix.push_back(v);
      search(split);
      prefix.pop_back();
    }
  }
};

}  // namespace

std::string canonical_form(const Graph& g) {
  int n = g.num_vertices();
  if (n > 64) throw GraphError("canonical form supports n <= 64");
  if (n == 0) return std::string(1, '\0');
  CanonSearch cs(g);
  cs.search(std::vector<int>(n, 0));
  return cs.best;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges())
    return false;
  return canonical_form(a) == canonical_form(b);
}

// --- generation by vertex splitting -------------------------------------------

std::vector<Graph> generate_triangulations(int n) {
  if (n < 4 || n > 12)
    throw GraphError("triangulation generation supports 4 <= n <= 12");
  std::map<std::string, Graph> level;
  Graph k4 = complete_graph(4);
  level.emplace(canonical_form(k4), k4);

  for (int sz = 4; sz < n; ++sz) {
    std::map<std::string, Graph> next;
    for (const auto& [key, g] : level) {
      auto emb = planar_embedding(g);
      std::vector<Edge> base;  // edges not incident to the split vertex
      for (int v = 0; v < sz; ++v) {
        std::vector<int> link = link_cycle(g, *emb, v);
        int d = static_cast<int>(link.size());
        base.clear();
        for (auto [a, b] : g.edges())
          if (a != v && b != v) base.emplace_back(a, b);
        // Split v along the two link arcs between positions i and j: v keeps
        // the arc i..j, the new vertex sz takes the arc j..i (both keep the
        // shared endpoints), and the pair is joined.
        for (int i = 0; i < d; ++i)
          for (int j = i + 1; j < d; ++j) {
            std::vector<Edge> es = base;
            for (int t = i; t <= j; ++t) es.emplace_back(v, link[t]);
            for (int t = j;; t = (t + 1) % d) {
              es.emplace_back(sz, link[t]);
              if (t == i) break;
            }
            es.emplace_back(v, sz);
            Graph child = Graph::from_edges(sz + 1, es);
            std::string form = canonical_form(child);
            next.emplace(std::move(form), std::move(child));
          }
      }
    }
    level = std::move(next);
  }

  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [key, g] : level) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> triangulations_by_flips(int n) {
  if (n < 4 || n > 12)
    throw GraphError("flip enumeration supports 4 <= n <= 12");
  Graph start = extremal_candidate(n);
  std::map<std::string, Graph> seen;
  std::deque<Graph> queue;
  seen.emplace(canonical_form(start), start);
  queue.push_back(start);

  while (!queue.empty()) {
    Graph g = std::move(queue.front());
    queue.pop_front();
    auto emb = planar_embedding(g);
    // Each edge of a triangulation borders exactly two triangles; flipping
    // replaces it by the opposite diagonal when that diagonal is absent.
    std::map<Edge, std::vector<int>> thirds;
    for (const auto& face : emb->faces) {
      if (face.size() != 3) throw GraphError("non-triangular face");
      for (int i = 0; i < 3; ++i) {
        int a = face[i], b = face[(i + 1) % 3], c = face[(i + 2) % 3];
        thirds[{std::min(a, b), std::max(a, b)}].push_back(c);
      }
    }
    for (const auto& [e, ts] : thirds) {
      if (ts.size() != 2)
        throw GraphError("edge is not on exactly two triangles");
      int w = ts[0], x = ts[1];
      if (w == x || g.has_edge(w, x)) continue;
      Graph f = g.without_edge(e.first, e.second).with_edge(w, x);
      std::string form = canonical_form(f);
      if (seen.emplace(form, f).second) queue.push_back(std::move(f));
    }
  }

  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [key, g] : seen) out.push_back(std::move(g));
  return out;
}

// --- embedded-graph byte stream -----------------------------------------------

std::vector<EmbeddedGraph> read_planar_code(std::istream& in) {
  std::string data((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  static const std::string header = ">>planar_code<<";
  if (data.size() < header.size() ||
      data.compare(0, header.size(), header) != 0)
    throw PlanarCodeError("missing planar_code header", 0);

  std::vector<EmbeddedGraph> out;
  std::size_t pos = header.size();
  while (pos < data.size()) {
    std::size_t rec_start = pos;
    int n = static_cast<unsigned char>(data[pos++]);
    if (n == 0) throw PlanarCodeError("record with zero order", rec_start);
    RotationEmbedding emb;
    emb.rotation.resize(n);
    for (int v = 0; v < n; ++v) {
      std::set<int> seen_here;
      while (true) {
        if (pos >= data.size())
          throw PlanarCodeError("truncated record", pos);
        int b = static_cast<unsigned char>(data[pos++]);
        if (b == 0) break;
        if (b > n)
          throw PlanarCodeError("neighbor byte exceeds the order", pos - 1);
        int u = b - 1;
        if (u == v) throw PlanarCodeError("vertex listed as its own neighbor",
                                          pos - 1);
        if (!seen_here.insert(u).second)
          throw PlanarCodeError("repeated neighbor entry", pos - 1);
        emb.rotation[v].push_back(u);
      }
    }
    std::map<Edge, int> pair_count;
    for (int v = 0; v < n; ++v)
      for (int u : emb.rotation[v])
        ++pair_count[{std::min(u, v), std::max(u, v)}];
    std::vector<Edge> edges;
    for (const auto& [e, c] : pair_count) {
      if (c != 2)
        throw PlanarCodeError("adjacency lists are not symmetric", rec_start);
      edges.push_back(e);
    }
    Graph g = Graph::from_edges(n, edges);
    if (!g.is_connected())
      throw PlanarCodeError("record is not connected", rec_start);
    try {
      emb.faces = trace_faces(g, emb.rotation);
    } catch (const GraphError& e) {
      throw PlanarCodeError(std::string("record embedding invalid: ") +
                                e.what(),
                            rec_start);
    }
    out.push_back({std::move(g), std::move(emb)});
  }
  return out;
}

std::vector<EmbeddedGraph> read_planar_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GraphError("cannot open file: " + path);
  return read_planar_code(in);
}

void write_planar_code(std::ostream& out, const std::vector<Graph>& graphs) {
  out.write(">>planar_code<<", 15);
  for (const Graph& g : graphs) {
    int n = g.num_vertices();
    if (n < 1 || n > 255)
      throw GraphError("planar_code supports 1 <= n <= 255");
    if (!g.is_connected())
      throw GraphError("planar_code requires connected graphs");
    auto emb = planar_embedding(g);
    if (!emb) throw GraphError("planar_code requires planar graphs");
    out.put(static_cast<char>(static_cast<unsigned char>(n)));
    for (int v = 0; v < n; ++v) {
      for (int u : emb->rotation[v])
        out.put(static_cast<char>(static_cast<unsigned char>(u + 1)));
      out.put('\0');
    }
  }
  out.flush();
}

// --- extremal search ----------------------------------------------------------

namespace {

// Evaluates q over the pool with a fixed tolerance, optionally on several
// threads; results land in pool order regardless of scheduling.
std::vector<double> pool_q(const std::vector<Graph>& pool, double tol,
                           int jobs) {
  int count = static_cast<int>(pool.size());
  std::vector<double> q(count, 0.0);
  PowerOptions opts;
  opts.tol = tol;
  jobs = std::max(1, std::min(jobs, count));
  if (jobs == 1) {
    for (int i = 0; i < count; ++i) q[i] = q_max(pool[i], opts).q;
    return q;
  }
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(jobs);
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&, w]() {
      try {
        for (int i = w; i < count; i += jobs) q[i] = q_max(pool[i], opts).q;
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return q;
}

}  // namespace

SearchResult extremal_search(int n, const std::vector<Graph>& pool,
                             const SearchOptions& opts) {
  if (pool.empty()) throw GraphError("search pool is empty");
  for (const Graph& g : pool)
    if (g.num_vertices() != n)
      throw GraphError("search pool contains a graph of the wrong order");

  SearchResult r;
  r.n = n;
  r.count = static_cast<int>(pool.size());
  r.all_q = pool_q(pool, opts.tol, opts.jobs);
  r.all_m.reserve(r.count);
  for (const Graph& g : pool) r.all_m.push_back(g.num_edges());

  auto argmax = [&]() {
    int best = 0;
    for (int i = 1; i < r.count; ++i)
      if (r.all_q[i] > r.all_q[best]) best = i;
    return best;
  };
  r.best_index = argmax();

  // Near-ties are settled at a finer tolerance.
  if (r.count > 1) {
    double top = r.all_q[r.best_index];
    std::vector<int> close;
    for (int i = 0; i < r.count; ++i)
      if (top - r.all_q[i] <= opts.escalate_gap) close.push_back(i);
    if (close.size() > 1) {
      PowerOptions fine;
      fine.tol = opts.escalate_tol;
      for (int i : close) r.all_q[i] = q_max(pool[i], fine).q;
      r.best_index = argmax();
    }
  }

  r.best = pool[r.best_index];
  r.best_q = r.all_q[r.best_index];
  if (r.count > 1) {
    double second = -1.0;
    for (int i = 0; i < r.count; ++i)
      if (i != r.best_index) second = std::max(second, r.all_q[i]);
    r.runner_up_q = second;
  }
  r.best_is_candidate = isomorphic(r.best, extremal_candidate(n));
  return r;
}

SearchResult extremal_search(int n, const SearchOptions& opts) {
  return extremal_search(n, generate_triangulations(n), opts);
}

nlohmann::json to_json(const SearchResult& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["count"] = r.count;
  j["best_index"] = r.best_index;
  j["best_q"] = r.best_q;
  j["runner_up_q"] =
      r.runner_up_q ? nlohmann::json(*r.runner_up_q) : nlohmann::json();
  j["is_extremal_candidate"] = r.best_is_candidate;
  j["best_edges"] = nlohmann::json::array();
  for (auto [u, v] : r.best.edges()) j["best_edges"].push_back({u, v});
  return j;
}

void write_search_csv(std::ostream& out, const SearchResult& r) {
  out << "index,n,m,q,is_best\n";
  for (int i = 0; i < r.count; ++i) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", r.all_q[i]);
    out << i << "," << r.n << "," << r.all_m[i] << "," << buf << ","
        << (i == r.best_index ? 1 : 0) << "\n";
  }
}

}  // namespace qplanar
