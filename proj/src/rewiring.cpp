#include "qplanar/rewiring.hpp"

#include <algorithm>
#include <set>

#include "qplanar/enumeration.hpp"
#include "qplanar/planarity.hpp"

namespace qplanar {

const char* to_string(RimConfig cfg) {
  switch (cfg) {
    case RimConfig::SingleNotch: return "single";
    case RimConfig::AdjacentNotches: return "adjacent";
    case RimConfig::StraddledNotches: return "straddled";
    case RimConfig::SpreadNotches: return "spread";
  }
  return "?";
}

RimConfig rim_config_from_string(const std::string& s) {
  if (s == "single") return RimConfig::SingleNotch;
  if (s == "adjacent") return RimConfig::AdjacentNotches;
  if (s == "straddled") return RimConfig::StraddledNotches;
  if (s == "spread") return RimConfig::SpreadNotches;
  throw GraphError("unknown configuration '" + s +
                   "' (want single|adjacent|straddled|spread)");
}

Graph build_rim_config(RimConfig cfg, int n, int k, int l) {
  // Missed rim positions (in v1..vn numbering) and patch chords per config.
  std::vector<int> missed;
  std::vector<Edge> chords;  // in v-position numbering
  switch (cfg) {
    case RimConfig::SingleNotch:
      if (n < 5 || k < 4 || k > n - 1)
        throw GraphError("single: need 4 <= k <= n-1");
      missed = {k};
      chords = {{k - 1, k + 1}};
      break;
    case RimConfig::AdjacentNotches:
      if (n < 6 || k < 4 || k > n - 2)
        throw GraphError("adjacent: need 4 <= k <= n-2");
      missed = {k, k + 1};
      chords = {{k, k + 2}, {k - 1, k + 2}};
      break;
    case RimConfig::StraddledNotches:
      if (n < 7 || k < 5 || k > n - 2)
        throw GraphError("straddled: need 5 <= k <= n-2");
      missed = {k - 1, k + 1};
      chords = {{k - 2, k}, {k, k + 2}};
      break;
    case RimConfig::SpreadNotches:
      if (n < 7 || k < 4 || l < k + 2 || l > n - 1)
        throw GraphError("spread: need 4 <= k <= l-2 and l <= n-1");
      missed = {k, l};
      chords = {{k - 1, k + 1}, {l - 1, l + 1}};
      break;
  }

  auto label = [](int pos) { return pos - 1; };  // v_pos has label pos-1
  std::set<Edge> es;
  auto add = [&es](int u, int v) {
    es.insert({std::min(u, v), std::max(u, v)});
  };
  for (int pos = 2; pos <= n; ++pos) add(label(1), label(pos));
  for (int pos = 2; pos < n; ++pos) add(label(pos), label(pos + 1));
  add(label(n), label(2));  // rim cycle closes through the second hub
  for (int pos = 4; pos <= n - 1; ++pos)
    if (std::find(missed.begin(), missed.end(), pos) == missed.end())
      add(label(2), label(pos));
  for (auto [a, b] : chords) add(label(a), label(b));

  Graph g = Graph::from_edges(n, std::vector<Edge>(es.begin(), es.end()));
  if (!is_maximal_planar(g))
    throw GraphError("rim configuration build is not maximal planar");
  return g;
}

namespace {

// Positions 1..n-2 on `cycle` (index 0 is the second hub) that the second
// hub is not adjacent to.
std::vector<int> missed_positions(const Graph& g, const std::vector<int>& cycle,
                                  int second) {
  std::vector<int> missed;
  for (int p = 1; p < static_cast<int>(cycle.size()); ++p)
    if (!g.has_edge(second, cycle[p])) missed.push_back(p);
  return missed;
}

// Attempts to read one catalogued configuration off an oriented rim cycle.
std::optional<SwapPlan> match_direction(const Graph& g, int hub, int second,
                                        const std::vector<int>& cycle) {
  std::vector<int> missed = missed_positions(g, cycle, second);
  SwapPlan plan;
  plan.hub = hub;
  plan.second = second;

  auto at = [&cycle](int p) { return cycle[p]; };

  if (missed.size() == 1) {
    int p = missed[0];
    plan.config = RimConfig::SingleNotch;
    plan.ring = {at(p - 1), at(p), at(p + 1)};
    plan.remove = {at(p - 1), at(p + 1)};
    plan.add = {second, at(p)};
    if (!g.has_edge(plan.remove.first, plan.remove.second)) return std::nullopt;
    return plan;
  }
  if (missed.size() != 2) return std::nullopt;

  // The rim neighbors of the second hub are always adjacent to it, so every
  // missed position p satisfies 2 <= p <= n-3 and p-1, p+1 stay on the rim.
  int p1 = missed[0], p2 = missed[1];
  int dist = p2 - p1;
  if (dist == 1) {
    // Pentagon over the two notches; the patch must fan from the far anchor
    // in this orientation (the mirror fan is caught by the other direction).
    int prev = at(p1 - 1), near = at(p1), far = at(p2), anchor = at(p2 + 1);
    if (!g.has_edge(near, anchor) || !g.has_edge(prev, anchor))
      return std::nullopt;
    plan.config = RimConfig::AdjacentNotches;
    plan.ring = {prev, near, far, anchor};
    plan.remove = {prev, anchor};
    plan.add = {second, near};
    return plan;
  }
  if (dist == 2) {
    int center = at(p1 + 1);
    int beyond = at(p2 + 1);
    if (!g.has_edge(center, at(p1 - 1)) || !g.has_edge(center, beyond))
      return std::nullopt;
    plan.config = RimConfig::StraddledNotches;
    plan.ring = {at(p1), center, at(p2), beyond};
    plan.remove = {center, beyond};
    plan.add = {second, at(p2)};
    return plan;
  }
  // Distance three or more: two independent notches, each patched by the
  // chord over it; the swap reconnects the second one in this orientation.
  if (!g.has_edge(at(p1 - 1), at(p1 + 1)) ||
      !g.has_edge(at(p2 - 1), at(p2 + 1)))
    return std::nullopt;
  plan.config = RimConfig::SpreadNotches;
  plan.ring = {at(p2 - 1), at(p2), at(p2 + 1)};
  plan.remove = {at(p2 - 1), at(p2 + 1)};
  plan.add = {second, at(p2)};
  return plan;
}

// Rebuilds the reference instance for a detected plan and checks isomorphism
// with g, so a detection can never misreport the configuration class.
bool template_matches(const Graph& g, const SwapPlan& plan,
                      const std::vector<int>& cycle) {
  int n = g.num_vertices();
  auto position_of = [&cycle](int v) {
    for (int i = 0; i < static_cast<int>(cycle.size()); ++i)
      if (cycle[i] == v) return i + 2;  // cycle index 0 is v2
    return -1;
  };
  int k = 0, l = 0;
  switch (plan.config) {
    case RimConfig::SingleNotch:
      k = position_of(plan.ring[1]);
      break;
    case RimConfig::AdjacentNotches:
      k = position_of(plan.ring[1]);
      break;
    case RimConfig::StraddledNotches:
      k = position_of(plan.ring[1]);  // center is v_k
      break;
    case RimConfig::SpreadNotches: {
      std::vector<int> missed;
      for (int p = 1; p < n - 1; ++p)
        if (!g.has_edge(plan.second, cycle[p])) missed.push_back(p + 2);
      k = missed[0] == position_of(plan.ring[1]) ? missed[1] : missed[0];
      l = position_of(plan.ring[1]);
      if (k > l) std::swap(k, l);
      break;
    }
  }
  Graph ref = plan.config == RimConfig::SpreadNotches
                  ? build_rim_config(plan.config, n, k, l)
                  : build_rim_config(plan.config, n, k);
  return isomorphic(g, ref);
}

}  // namespace

std::optional<SwapPlan> detect_config(const Graph& g) {
  int n = g.num_vertices();
  if (!is_maximal_planar(g))
    throw GraphError("detection requires a maximal planar graph");
  if (g.max_degree() != n - 1)
    throw GraphError("detection requires a dominating vertex");
  int hub = -1;
  for (int v = 0; v < n && hub < 0; ++v)
    if (g.degree(v) == n - 1) hub = v;

  auto emb = planar_embedding(g);
  std::vector<int> rim = link_cycle(g, *emb, hub);

  // Second hub: smallest rim vertex of largest rim degree.
  int second = -1, best_deg = -1;
  for (int v = 0; v < n; ++v) {
    if (v == hub) continue;
    if (g.degree(v) > best_deg) {
      best_deg = g.degree(v);
      second = v;
    }
  }

  // Orient the rim starting at the second hub, trying both directions.
  int n1 = n - 1;
  int s = 0;
  while (rim[s] != second) ++s;
  for (int dir : {1, -1}) {
    std::vector<int> cycle(n1);
    for (int i = 0; i < n1; ++i) cycle[i] = rim[((s + dir * i) % n1 + n1) % n1];
    auto plan = match_direction(g, hub, second, cycle);
    if (plan && template_matches(g, *plan, cycle)) return plan;
  }
  return std::nullopt;
}

Graph apply_swap(const Graph& g, const SwapPlan& plan) {
  if (!g.has_edge(plan.remove.first, plan.remove.second))
    throw GraphError("swap plan: edge to remove is absent");
  if (g.has_edge(plan.add.first, plan.add.second))
    throw GraphError("swap plan: edge to add is already present");
  Graph f = g.without_edge(plan.remove.first, plan.remove.second)
                .with_edge(plan.add.first, plan.add.second);
  if (!is_maximal_planar(f))
    throw GraphError("swap result is not maximal planar");
  return f;
}

SwapCheck verify_increase(const Graph& g, const Graph& f, const SwapPlan& plan,
                          const PowerOptions& opts, double identity_tol) {
  if (f.num_vertices() != g.num_vertices())
    throw GraphError("swap verification: order mismatch");
  if (!(apply_swap(g, plan) == f))
    throw GraphError("swap verification: f is not g transformed by the plan");

  SpectralResult sg = q_max(g, opts);
  const std::vector<double>& x = sg.x;

  SwapCheck chk;
  chk.q_before = sg.q;
  chk.rayleigh_before = rayleigh_quotient(g, x);
  chk.rayleigh_after = rayleigh_quotient(f, x);
  chk.diff_direct = chk.rayleigh_after - chk.rayleigh_before;
  double sa = x[plan.add.first] + x[plan.add.second];
  double sr = x[plan.remove.first] + x[plan.remove.second];
  chk.diff_formula = sa * sa - sr * sr;
  chk.identity_ok = std::abs(chk.diff_direct - chk.diff_formula) <= identity_tol;

  auto order = [&](const std::string& name, double lhs, double rhs) {
    chk.orderings.push_back({name, lhs - rhs, lhs > rhs});
  };
  double xs = x[plan.second];
  switch (plan.config) {
    case RimConfig::SingleNotch:
    case RimConfig::SpreadNotches: {
      double prev = x[plan.ring[0]], notch = x[plan.ring[1]],
             next = x[plan.ring[2]];
      order("second>notch", xs, notch);
      order("second+notch>prev+next", xs + notch, prev + next);
      break;
    }
    case RimConfig::AdjacentNotches: {
      double prev = x[plan.ring[0]], near = x[plan.ring[1]],
             far = x[plan.ring[2]], anchor = x[plan.ring[3]];
      order("near>far", near, far);
      order("prev+far>near", prev + far, near);
      order("second>prev", xs, prev);
      order("second>near", xs, near);
      order("second>far", xs, far);
      order("second>anchor", xs, anchor);
      order("second+near>prev+anchor", xs + near, prev + anchor);
      break;
    }
    case RimConfig::StraddledNotches: {
      double left = x[plan.ring[0]], center = x[plan.ring[1]],
             right = x[plan.ring[2]], beyond = x[plan.ring[3]];
      order("second>left", xs, left);
      order("second>center", xs, center);
      order("second>right", xs, right);
      order("second>beyond", xs, beyond);
      order("second+right>center+beyond", xs + right, center + beyond);
      break;
    }
  }
  chk.orderings_ok =
      std::all_of(chk.orderings.begin(), chk.orderings.end(),
                  [](const SwapCheck::Ordering& o) { return o.ok; });

  chk.q_after = q_max(f, opts).q;
  chk.q_increased = chk.q_after > chk.q_before;
  chk.all_ok = chk.identity_ok && chk.orderings_ok && chk.q_increased;
  return chk;
}

nlohmann::json to_json(const SwapPlan& p) {
  return {{"config", to_string(p.config)},
          {"hub", p.hub},
          {"second", p.second},
          {"ring", p.ring},
          {"remove", {p.remove.first, p.remove.second}},
          {"add", {p.add.first, p.add.second}}};
}

nlohmann::json to_json(const SwapCheck& c) {
  nlohmann::json orderings = nlohmann::json::array();
  for (const auto& o : c.orderings)
    orderings.push_back({{"name", o.name}, {"margin", o.margin}, {"ok", o.ok}});
  return {{"q_before", c.q_before},
          {"q_after", c.q_after},
          {"rayleigh_before", c.rayleigh_before},
          {"rayleigh_after", c.rayleigh_after},
          {"diff_direct", c.diff_direct},
          {"diff_formula", c.diff_formula},
          {"identity_ok", c.identity_ok},
          {"orderings", orderings},
          {"orderings_ok", c.orderings_ok},
          {"q_increased", c.q_increased},
          {"all_ok", c.all_ok}};
}

}  // namespace qplanar
