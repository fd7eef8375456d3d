#pragma once
// Local edge swaps on dominating-hub triangulations.  Each catalogued rim
// configuration admits a swap (remove one patch chord, connect the second hub
// to a missed rim vertex) that strictly increases the signless Laplacian
// spectral radius; the increase is witnessed through the Rayleigh difference
// identity  x^T Q(F) x - x^T Q(G) x = (x_a + x_b)^2 - (x_c + x_d)^2  for the
// added edge ab and removed edge cd.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qplanar/graph.hpp"
#include "qplanar/spectral.hpp"

namespace qplanar {

// A maximal planar graph with a dominating hub whose rim (the hub's link
// cycle) carries a second hub missing one or two rim vertices:
//   SingleNotch      second hub misses one vertex
//   AdjacentNotches  misses two consecutive vertices
//   StraddledNotches misses two vertices at rim distance two
//   SpreadNotches    misses two vertices at rim distance three or more
enum class RimConfig {
  SingleNotch,
  AdjacentNotches,
  StraddledNotches,
  SpreadNotches,
};

const char* to_string(RimConfig cfg);
RimConfig rim_config_from_string(const std::string& s);  // "single" etc.

// The swap prescription for one configuration instance.  `ring` lists the
// rim stretch around the swapped notch in cycle order:
//   SingleNotch / SpreadNotches: {prev, notch, next}
//   AdjacentNotches: {prev, near notch, far notch, anchor}  (the anchor
//     carries the patch fan; the swap reconnects the near notch)
//   StraddledNotches: {left notch, center, right notch, beyond}  (the swap
//     reconnects the right notch and removes the center-beyond chord)
struct SwapPlan {
  RimConfig config = RimConfig::SingleNotch;
  int hub = -1;     // dominating vertex
  int second = -1;  // second hub
  std::vector<int> ring;
  Edge remove{-1, -1};  // role-ordered, not sorted
  Edge add{-1, -1};
};

// Reference instances on the labeling: 0 the hub, 1..n-1 the rim cycle in
// label order, 1 the second hub.  k (and l) are positions in the conventional
// 1-based vertex listing v1..vn (v1 the hub, v2 the second hub), so rim
// vertex v_k has label k-1.  Valid ranges:
//   SingleNotch      4 <= k <= n-1        (v_k missed, chord v_{k-1}v_{k+1})
//   AdjacentNotches  4 <= k <= n-2        (v_k,v_{k+1} missed, fan at v_{k+2})
//   StraddledNotches 5 <= k <= n-2        (v_{k-1},v_{k+1} missed, chords at v_k)
//   SpreadNotches    4 <= k <= l-2 <= n-3 (v_k,v_l missed, two patch chords)
Graph build_rim_config(RimConfig cfg, int n, int k, int l = 0);

// Recognizes which catalogued configuration a graph carries.  Requires a
// maximal planar graph with a dominating vertex; returns std::nullopt when
// the rim pattern is outside the catalog (e.g. the second hub misses nothing,
// as in the extremal candidate, or misses three or more vertices).
std::optional<SwapPlan> detect_config(const Graph& g);

// Executes the swap; validates the plan against the graph and that the
// result is again maximal planar.
Graph apply_swap(const Graph& g, const SwapPlan& plan);

// Numeric witness that the swap increased q.  Uses the Perron vector x of G:
// checks the Rayleigh difference identity, the strict entry orderings the
// configuration promises for x, and finally q(F) > q(G).
struct SwapCheck {
  double q_before = 0, q_after = 0;
  double rayleigh_before = 0, rayleigh_after = 0;
  double diff_direct = 0;   // rayleigh_after - rayleigh_before
  double diff_formula = 0;  // (x_a+x_b)^2 - (x_c+x_d)^2
  bool identity_ok = false;
  struct Ordering {
    std::string name;
    double margin = 0;
    bool ok = false;
  };
  std::vector<Ordering> orderings;
  bool orderings_ok = false;
  bool q_increased = false;
  bool all_ok = false;
};

SwapCheck verify_increase(const Graph& g, const Graph& f, const SwapPlan& plan,
                          const PowerOptions& opts = {},
                          double identity_tol = 1e-8);

nlohmann::json to_json(const SwapPlan& p);
nlohmann::json to_json(const SwapCheck& c);

}  // namespace qplanar
