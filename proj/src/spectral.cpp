#include "qplanar/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "qplanar/planarity.hpp"

namespace qplanar {

std::vector<std::vector<double>> assemble_q_matrix(const Graph& g) {
  int n = g.num_vertices();
  std::vector<std::vector<double>> q(n, std::vector<double>(n, 0.0));
  for (int v = 0; v < n; ++v) {
    q[v][v] = g.degree(v);
    for (int u : g.neighbors(v)) q[v][u] = 1.0;
  }
  return q;
}

namespace {

// y = Q x directly from adjacency lists.
void apply_q_sparse(const Graph& g, const std::vector<double>& x,
                    std::vector<double>& y) {
  int n = g.num_vertices();
  for (int v = 0; v < n; ++v) {
    double s = g.degree(v) * x[v];
    for (int u : g.neighbors(v)) s += x[u];
    y[v] = s;
  }
}

void apply_q_dense(const std::vector<std::vector<double>>& q,
                   const std::vector<double>& x, std::vector<double>& y) {
  int n = static_cast<int>(q.size());
  for (int v = 0; v < n; ++v) {
    double s = 0.0;
    const auto& row = q[v];
    for (int u = 0; u < n; ++u) s += row[u] * x[u];
    y[v] = s;
  }
}

double norm2(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

SpectralResult q_max(const Graph& g, const PowerOptions& opts) {
  int n = g.num_vertices();
  SpectralResult res;
  if (n == 0) return res;
  res.connected = g.is_connected();

  bool dense = n <= opts.dense_threshold;
  std::vector<std::vector<double>> qm;
  if (dense) qm = assemble_q_matrix(g);

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> y(n, 0.0);

  for (int it = 1; it <= opts.max_iter; ++it) {
    if (dense)
      apply_q_dense(qm, x, y);
    else
      apply_q_sparse(g, x, y);

    double rq = 0.0;  // Rayleigh quotient: x is unit-norm
    for (int v = 0; v < n; ++v) rq += x[v] * y[v];

    double rinf = 0.0, r2 = 0.0;
    for (int v = 0; v < n; ++v) {
      double d = y[v] - rq * x[v];
      rinf = std::max(rinf, std::abs(d));
      r2 += d * d;
    }
    res.q = rq;
    res.x = x;
    res.residual_inf = rinf;
    res.residual_2 = std::sqrt(r2);
    res.iterations = it;
    if (rinf <= opts.tol) return res;

    double ny = norm2(y);
    if (ny == 0.0) {  // Q x = 0: x is an exact eigenvector for q = 0
      res.q = 0.0;
      res.residual_inf = 0.0;
      res.residual_2 = 0.0;
      return res;
    }
    for (int v = 0; v < n; ++v) x[v] = y[v] / ny;
  }
  char tol_str[32];
  std::snprintf(tol_str, sizeof(tol_str), "%g", opts.tol);
  throw NonConvergence("power iteration did not reach tol " +
                           std::string(tol_str) + " within " +
                           std::to_string(opts.max_iter) + " iterations",
                       res);
}

double rayleigh_quotient(const Graph& g, const std::vector<double>& x) {
  if (static_cast<int>(x.size()) != g.num_vertices())
    throw GraphError("rayleigh_quotient: vector length mismatch");
  // x^T Q x = sum_v d(v) x_v^2 + 2 sum_{uv in E} x_u x_v
  //         = sum_{uv in E} (x_u + x_v)^2.
  double s = 0.0;
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int u : g.neighbors(v))
      if (u > v) {
        double t = x[u] + x[v];
        s += t * t;
      }
  return s;
}

double merris_bound(const Graph& g) {
  int n = g.num_vertices();
  if (n < 1) throw GraphError("merris_bound needs at least one vertex");
  double best = 0.0;
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (d == 0)
      throw GraphError("merris_bound: isolated vertex " + std::to_string(v));
    best = std::max(best,
                    d + static_cast<double>(g.neighbor_degree_sum(v)) / d);
  }
  return best;
}

double delta_lower_bound(const Graph& g) {
  if (g.num_vertices() < 2)
    throw GraphError("delta_lower_bound needs at least two vertices");
  if (!g.is_connected())
    throw GraphError("delta_lower_bound requires a connected graph");
  return g.max_degree() + 1.0;
}

PlanarBound planar_degree_bound(const Graph& g) {
  int n = g.num_vertices();
  if (n < 6) throw GraphError("planar degree bound needs n >= 6");
  if (!is_maximal_planar(g))
    throw GraphError("planar degree bound requires a maximal planar graph");
  PlanarBound b;
  double fm = 0.0;
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    fm = std::max(fm, d + 2.0 + (3.0 * n - 9.0) / d);
  }
  b.formula_max = fm;
  int delta = g.max_degree();
  if (delta == n - 1) {
    b.case_bound = n + 4.0 - 6.0 / (n - 1);
    b.case_tag = "delta=n-1";
  } else if (delta == n - 2) {
    b.case_bound = n + 3.0 - 3.0 / (n - 2);
    b.case_tag = "delta=n-2";
  } else {
    b.case_bound = n + 2.0;
    b.case_tag = "delta<=n-3";
  }
  return b;
}

BoundReport bound_report(const Graph& g, const PowerOptions& opts) {
  BoundReport r;
  r.n = g.num_vertices();
  r.m = g.num_edges();
  SpectralResult s = q_max(g, opts);
  r.q = s.q;
  r.residual = s.residual_2;
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  r.lower_delta =
      (r.n >= 2 && g.is_connected()) ? delta_lower_bound(g) : nan;
  r.merris = nan;
  if (r.n >= 1) {
    bool isolated = false;
    for (int v = 0; v < r.n; ++v)
      if (g.degree(v) == 0) isolated = true;
    if (!isolated) r.merris = merris_bound(g);
  }
  if (r.n >= 6 && is_maximal_planar(g)) r.planar = planar_degree_bound(g);
  return r;
}

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["q"] = r.q;
  j["residual"] = r.residual;
  j["lower_delta"] =
      std::isnan(r.lower_delta) ? nlohmann::json() : nlohmann::json(r.lower_delta);
  j["merris"] = std::isnan(r.merris) ? nlohmann::json() : nlohmann::json(r.merris);
  if (r.planar) {
    j["planar_bound"] = r.planar->formula_max;
    j["case_bound"] = r.planar->case_bound;
    j["case_tag"] = r.planar->case_tag;
  } else {
    j["planar_bound"] = nullptr;
    j["case_bound"] = nullptr;
    j["case_tag"] = nullptr;
  }
  return j;
}

IdentityReport extremal_identities(int n, const SpectralResult& result,
                                   double tol) {
  if (n < 5) throw GraphError("identity checks need n >= 5");
  if (static_cast<int>(result.x.size()) != n)
    throw GraphError("identity checks: vector length mismatch");
  double q = result.q;
  // Rescale the Perron vector so its entries sum to 1.
  double sum = 0.0;
  for (double v : result.x) sum += v;
  if (sum <= 0.0) throw GraphError("identity checks: nonpositive vector sum");
  std::vector<double> x(result.x);
  for (double& v : x) v /= sum;

  double x1 = x[0], x2 = x[1], x3 = x[2], xn = x[n - 1];
  IdentityReport rep;
  rep.n = n;
  rep.q = q;

  auto eq = [&](const std::string& name, double lhs, double rhs) {
    double e = std::abs(lhs - rhs);
    rep.checks.push_back({name, e, e <= tol});
  };
  auto gt = [&](const std::string& name, double lhs, double rhs) {
    double margin = lhs - rhs;
    rep.checks.push_back({name, margin, margin > 0.0});
  };

  eq("x1=x2", x1, x2);
  eq("x3=xn", x3, xn);
  eq("x1*(q-n+2)=1", x1 * (q - n + 2.0), 1.0);
  eq("x3-closed-form", x3,
     (2.0 * (n - 2.0) - (q - n) * (q - 6.0)) / (4.0 * (q - n + 2.0)));
  gt("x1>x3", x1, x3);
  gt("quadratic>0", q * q - (6.0 + n) * q + 4.0 * n + 8.0, 0.0);
  gt("q>n+2", q, n + 2.0);

  rep.all_ok = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const IdentityCheck& c) { return c.ok; });
  return rep;
}

nlohmann::json to_json(const IdentityReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["q"] = r.q;
  j["all_ok"] = r.all_ok;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks)
    j["checks"].push_back({{"name", c.name}, {"error", c.error}, {"ok", c.ok}});
  return j;
}

}  // namespace qplanar
