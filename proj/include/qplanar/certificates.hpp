#pragma once
// Exact rational certificates that bound the signless Laplacian spectral
// radius from above.  The certificate principle: for a connected graph and a
// polynomial f with f(Q) entrywise nonnegative, exhibiting x >= 0, x != 0
// with f(Q) x <= r x entrywise proves f(q) <= r.  All built-in rules use
// f(t) = t and r = n + 2, with piecewise-constant vectors driven by the
// degree census near the top of the degree sequence.

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include "qplanar/graph.hpp"

namespace qplanar {

using Rational = boost::multiprecision::cpp_rational;

// Always renders "p/q", including "p/1" for integers; parser accepts both.
std::string to_fraction_string(const Rational& r);
Rational fraction_from_string(const std::string& s);

struct Certificate {
  std::vector<Rational> x;           // entrywise >= 0, not all zero
  Rational r;                        // claimed bound on f(q)
  std::vector<Rational> poly{0, 1};  // f(t) = sum_i poly[i] t^i, degree <= 4
  std::string rule;                  // provenance tag for reports ("" if ad hoc)
};

nlohmann::json to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);

struct Verdict {
  bool pass = false;
  Rational worst_slack;  // min_i (r x_i - (f(Q)x)_i); pass iff >= 0
  int worst_index = -1;
};

nlohmann::json to_json(const Verdict& v);

// Exact entrywise check of f(Q) x <= r x.  f(Q) x is evaluated by Horner on
// vectors: z = poly[d] x, then z = Q z + poly[i] x.  Requires g connected,
// dimensions matching, x nonnegative and nonzero, polynomial degree <= 4.
Verdict verify_certificate(const Graph& g, const Certificate& c);

// --- degree-census classification -------------------------------------------

// Dominating: max degree n-1.  NearDominating: max degree n-2.
enum class HubRegime { Dominating, NearDominating };

// Census of a graph relative to one of the two hub regimes.  Band thresholds
// are compared in exact integer arithmetic:
//   Dominating:      in band iff 7d >= n + 19 and d <= n - 75
//   NearDominating:  in band iff 6d >= n + 6  and d <= n - 61
// ("small" means below the lower threshold; the hub itself is excluded).
struct StructureClass {
  HubRegime regime;
  int n = 0;
  int delta = 0;         // max degree
  int hub = -1;          // smallest vertex attaining delta
  int delta_second = 0;  // second-largest degree, with multiplicity
  int second_hub = -1;   // smallest non-hub vertex attaining delta_second
  std::vector<int> band;     // non-hub vertices inside the band
  int k_mid = 0;             // band.size()
  bool all_small = false;    // every non-hub vertex below the lower threshold
  bool none_above_band = false;  // every non-hub vertex small or in band
};

// Throws unless the max degree matches the requested regime.
StructureClass classify(const Graph& g, HubRegime regime);

// --- certificate rules ------------------------------------------------------

// Naming: "hub-*" rules apply in the Dominating regime, "subhub-*" rules in
// the NearDominating regime.  Applicability conditions and vectors:
//   hub-all-small     n >= 6,   all small;          x = [1; 3/(n-1) others]
//   hub-band          n >= 91,  1 <= k <= 13 in band, none above band;
//                     x = [1; 2/(3k) band; 7/(3(n-k-1)) others]
//   hub-second-hub    n >= 461, n-81 <= delta_second <= n-4;
//                     x = [1; 4/7 second hub; 17/(7(n-2)) others]
//   subhub-all-small  n >= 4,   all small;          x = [1; 4/(n-1) others]
//   subhub-band       n >= 115, 1 <= k <= 12 in band, none above band;
//                     x = [1; 1/k band; 3/(n-k-1) others]
//   subhub-second-hub n >= 380, delta_second >= n-62;
//                     x = [1; 1 second hub; 3/(n-2) others]
// All rules claim r = n + 2.
enum class CertRule {
  HubAllSmall,
  HubBand,
  HubSecondHub,
  SubhubAllSmall,
  SubhubBand,
  SubhubSecondHub,
};

const char* to_string(CertRule rule);

// Builds the rule's vector for a graph whose census satisfies the rule's
// applicability conditions; throws naming the violated condition otherwise.
Certificate build_vector(const Graph& g, CertRule rule,
                         const StructureClass& cls);

// --- one-stop certification -------------------------------------------------

struct CertifyAttempt {
  std::string rule;
  bool applicable = false;
  bool pass = false;
  std::string detail;  // violated condition, or worst slack when verified
};

struct CertifyReport {
  bool certified = false;
  std::string rule;          // successful rule, or "" when uncertified
  Rational bound;            // n + 2 when certified
  std::optional<Certificate> certificate;  // absent for the degree-cap case
  std::optional<Verdict> verdict;
  std::vector<CertifyAttempt> attempts;
};

nlohmann::json to_json(const CertifyReport& r);

// Tries to certify q(g) <= n + 2 for a maximal planar graph (n >= 6).
// Dispatch by max degree: n-1 tries hub-all-small, hub-band, hub-second-hub;
// n-2 tries subhub-all-small, subhub-band, subhub-second-hub; max degree
// <= n-3 is certified outright by the degree bound ("degree-cap").
CertifyReport certify_upper(const Graph& g);

// --- census-validated fixture families --------------------------------------
// Each builder returns a maximal planar graph whose degree census provably
// satisfies one rule's conditions, and throws if the construction's census
// check fails rather than returning a non-conforming graph.

// Dominating+1 wheel-like graph: hub of degree n-2 over a zigzag rim, one
// extra vertex sunk in a rim face.  All non-hub degrees <= 6, which is small
// exactly when n >= 31.  Target: subhub-all-small.
Graph near_wheel_fixture(int n);

// Two dominating-ish vertices: vertex 0 adjacent to everything, vertex 1
// missing `gap` rim vertices (each gap patched by a chord).  With hub_gap the
// top hub also skips one rim vertex, moving the census to the NearDominating
// regime.  Targets: hub-second-hub / subhub-second-hub.
Graph two_hub_fixture(int n, int gap, bool hub_gap = false);

// Hub over a rim containing exactly one vertex of mid-range degree
// (band_degree; 0 picks the middle of the band).  Target: hub-band
// (Dominating) or subhub-band (NearDominating).
Graph mid_band_fixture(int n, HubRegime regime, int band_degree = 0);

}  // namespace qplanar
