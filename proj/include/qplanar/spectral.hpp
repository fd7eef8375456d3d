#pragma once
// Signless Laplacian spectral radius: Q(G) = D(G) + A(G) assembly, power
// iteration with an a-posteriori error bound, the classical degree-based
// bounds that sandwich q(G), and the eigenvector identities satisfied by the
// extremal candidate family.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qplanar/graph.hpp"

namespace qplanar {

struct PowerOptions {
  double tol = 1e-10;        // convergence: ||Qx - qx||_inf <= tol
  int max_iter = 100000;
  int dense_threshold = 2000;  // use an explicit dense matrix up to this n
};

struct SpectralResult {
  double q = 0.0;
  std::vector<double> x;     // Perron vector, unit 2-norm, entrywise >= 0
  double residual_inf = 0.0; // ||Qx - qx||_inf at termination
  double residual_2 = 0.0;   // ||Qx - qx||_2; |q - q(G)| is at most this
  int iterations = 0;
  bool connected = true;     // flags reducible input: x is then not a
                             // Perron vector of a single component
};

// Thrown when power iteration fails to reach tol; carries the best iterate.
class NonConvergence : public std::runtime_error {
public:
  NonConvergence(const std::string& what, SpectralResult best)
      : std::runtime_error(what), best_iterate(std::move(best)) {}
  SpectralResult best_iterate;
};

// Dense Q(G) = D(G) + A(G), row-major.
std::vector<std::vector<double>> assemble_q_matrix(const Graph& g);

// Largest eigenvalue of Q(G) by power iteration from the all-ones vector.
// Works for disconnected graphs too (the result is the maximum over
// components); for connected graphs the returned x is the Perron vector.
SpectralResult q_max(const Graph& g, const PowerOptions& opts = {});

// Rayleigh quotient x^T Q(G) x (x need not be normalized; used by the
// edge-swap comparisons).
double rayleigh_quotient(const Graph& g, const std::vector<double>& x);

// Upper bound q <= max_u { d(u) + (sum of deg over neighbors of u) / d(u) }.
// Requires n >= 1 and no isolated vertices.
double merris_bound(const Graph& g);

// Lower bound q >= max_degree + 1 for connected graphs on n >= 2 vertices
// (equality exactly for stars).
double delta_lower_bound(const Graph& g);

// Degree-based upper bound for maximal planar graphs on n >= 6 vertices:
//   q <= max_u { d(u) + 2 + (3n-9)/d(u) },
// together with the coarser bound determined by the maximum degree:
//   n+4-6/(n-1) if max_degree = n-1, n+3-3/(n-2) if n-2, n+2 otherwise.
struct PlanarBound {
  double formula_max = 0.0;  // the max_u expression (never exceeds case_bound)
  double case_bound = 0.0;
  std::string case_tag;      // "delta=n-1" | "delta=n-2" | "delta<=n-3"
};
PlanarBound planar_degree_bound(const Graph& g);

// One-stop numeric report for a graph.  planar is present only when the
// degree-based planar bound applies (maximal planar, n >= 6).
struct BoundReport {
  int n = 0;
  int m = 0;
  double q = 0.0;
  double residual = 0.0;       // a-posteriori 2-norm bound from q_max
  double lower_delta = 0.0;    // n >= 2 and connected; NaN otherwise
  double merris = 0.0;         // NaN if some vertex is isolated
  std::optional<PlanarBound> planar;
};
BoundReport bound_report(const Graph& g, const PowerOptions& opts = {});
nlohmann::json to_json(const BoundReport& r);

// Eigenvector identities of the extremal candidate (vertices as built by
// extremal_candidate: 0,1 the dominating pair, 2..n-1 the path).  The Perron
// vector is rescaled to sum 1 before checking.  Requires n >= 5.
struct IdentityCheck {
  std::string name;
  double error = 0.0;   // |lhs - rhs| for equations, margin for inequalities
  bool ok = false;
};
struct IdentityReport {
  int n = 0;
  double q = 0.0;
  bool all_ok = false;
  std::vector<IdentityCheck> checks;
};
IdentityReport extremal_identities(int n, const SpectralResult& result,
                                   double tol = 1e-8);
nlohmann::json to_json(const IdentityReport& r);

}  // namespace qplanar
