#include "qplanar/certificates.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "qplanar/planarity.hpp"

namespace qplanar {

std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Rational fraction_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw GraphError("zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw GraphError("malformed rational '" + s + "'");
  }
}

nlohmann::json to_json(const Certificate& c) {
  nlohmann::json j;
  j["rule"] = c.rule;
  j["r"] = to_fraction_string(c.r);
  j["x"] = nlohmann::json::array();
  for (const auto& v : c.x) j["x"].push_back(to_fraction_string(v));
  j["poly"] = nlohmann::json::array();
  for (const auto& v : c.poly) j["poly"].push_back(to_fraction_string(v));
  return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
  Certificate c;
  c.rule = j.value("rule", std::string());
  c.r = fraction_from_string(j.at("r").get<std::string>());
  c.x.clear();
  for (const auto& v : j.at("x")) c.x.push_back(fraction_from_string(v.get<std::string>()));
  c.poly.clear();
  for (const auto& v : j.at("poly"))
    c.poly.push_back(fraction_from_string(v.get<std::string>()));
  return c;
}

nlohmann::json to_json(const Verdict& v) {
  return {{"pass", v.pass},
          {"worst_slack", to_fraction_string(v.worst_slack)},
          {"worst_index", v.worst_index}};
}

Verdict verify_certificate(const Graph& g, const Certificate& c) {
  int n = g.num_vertices();
  if (static_cast<int>(c.x.size()) != n)
    throw GraphError("certificate dimension " + std::to_string(c.x.size()) +
                     " does not match graph order " + std::to_string(n));
  if (n == 0) throw GraphError("certificate on the empty graph");
  if (!g.is_connected())
    throw GraphError("certificate verification requires a connected graph");
  if (c.poly.empty() || c.poly.size() > 5)
    throw GraphError("certificate polynomial degree must be between 0 and 4");
  bool any_positive = false;
  for (const auto& v : c.x) {
    if (v < 0) throw GraphError("certificate vector has a negative entry");
    if (v > 0) any_positive = true;
  }
  if (!any_positive) throw GraphError("certificate vector is zero");

  // z = f(Q) x by Horner on vectors: z <- Q z + poly[i] x.
  int d = static_cast<int>(c.poly.size()) - 1;
  std::vector<Rational> z(n), qz(n);
  for (int v = 0; v < n; ++v) z[v] = c.poly[d] * c.x[v];
  for (int i = d - 1; i >= 0; --i) {
    for (int v = 0; v < n; ++v) {
      Rational s = Rational(g.degree(v)) * z[v];
      for (int u : g.neighbors(v)) s += z[u];
      qz[v] = s + c.poly[i] * c.x[v];
    }
    z.swap(qz);
  }

  Verdict verdict;
  verdict.pass = true;
  for (int v = 0; v < n; ++v) {
    Rational slack = c.r * c.x[v] - z[v];
    if (verdict.worst_index < 0 || slack < verdict.worst_slack) {
      verdict.worst_slack = slack;
      verdict.worst_index = v;
    }
    if (slack < 0) verdict.pass = false;
  }
  return verdict;
}

// --- degree-census classification -------------------------------------------

namespace {

// Exact threshold tests; "small" is strictly below the band's lower edge.
bool below_band(HubRegime regime, int n, int d) {
  return regime == HubRegime::Dominating ? 7 * d < n + 19 : 6 * d < n + 6;
}
int band_high(HubRegime regime, int n) {
  return regime == HubRegime::Dominating ? n - 75 : n - 61;
}

}  // namespace

StructureClass classify(const Graph& g, HubRegime regime) {
  StructureClass cls;
  cls.regime = regime;
  cls.n = g.num_vertices();
  if (cls.n < 2) throw GraphError("classification needs at least two vertices");
  cls.delta = g.max_degree();
  int want = regime == HubRegime::Dominating ? cls.n - 1 : cls.n - 2;
  if (cls.delta != want)
    throw GraphError("max degree " + std::to_string(cls.delta) +
                     " does not match regime (expected " +
                     std::to_string(want) + ")");
  for (int v = 0; v < cls.n; ++v)
    if (g.degree(v) == cls.delta) {
      cls.hub = v;
      break;
    }
  cls.delta_second = 0;
  for (int v = 0; v < cls.n; ++v) {
    if (v == cls.hub) continue;
    if (g.degree(v) > cls.delta_second) {
      cls.delta_second = g.degree(v);
      cls.second_hub = v;
    }
  }
  int hi = band_high(regime, cls.n);
  cls.all_small = true;
  cls.none_above_band = true;
  for (int v = 0; v < cls.n; ++v) {
    if (v == cls.hub) continue;
    int d = g.degree(v);
    if (below_band(regime, cls.n, d)) continue;
    cls.all_small = false;
    if (d <= hi)
      cls.band.push_back(v);
    else
      cls.none_above_band = false;
  }
  cls.k_mid = static_cast<int>(cls.band.size());
  return cls;
}

// --- certificate rules ------------------------------------------------------

const char* to_string(CertRule rule) {
  switch (rule) {
    case CertRule::HubAllSmall: return "hub-all-small";
    case CertRule::HubBand: return "hub-band";
    case CertRule::HubSecondHub: return "hub-second-hub";
    case CertRule::SubhubAllSmall: return "subhub-all-small";
    case CertRule::SubhubBand: return "subhub-band";
    case CertRule::SubhubSecondHub: return "subhub-second-hub";
  }
  return "?";
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw GraphError(what);
}

HubRegime regime_of(CertRule rule) {
  switch (rule) {
    case CertRule::HubAllSmall:
    case CertRule::HubBand:
    case CertRule::HubSecondHub:
      return HubRegime::Dominating;
    default:
      return HubRegime::NearDominating;
  }
}

}  // namespace

Certificate build_vector(const Graph& g, CertRule rule,
                         const StructureClass& cls) {
  int n = g.num_vertices();
  require(cls.n == n, "classification does not match the graph");
  require(cls.regime == regime_of(rule),
          std::string("rule ") + to_string(rule) + " needs the " +
              (regime_of(rule) == HubRegime::Dominating ? "max-degree n-1"
                                                        : "max-degree n-2") +
              " regime");
  Certificate c;
  c.rule = to_string(rule);
  c.r = n + 2;
  c.x.assign(n, Rational());
  int k = cls.k_mid;

  switch (rule) {
    case CertRule::HubAllSmall:
      require(n >= 6, "hub-all-small needs n >= 6");
      require(cls.all_small,
              "hub-all-small: some non-hub degree is at least (n+19)/7");
      for (int v = 0; v < n; ++v) c.x[v] = Rational(3, n - 1);
      break;
    case CertRule::HubBand:
      require(n >= 91, "hub-band needs n >= 91");
      require(k >= 1, "hub-band: the degree band is empty");
      require(k <= 13, "hub-band: more than 13 band vertices");
      require(cls.none_above_band,
              "hub-band: some non-hub degree exceeds n-75");
      for (int v = 0; v < n; ++v) c.x[v] = Rational(7, 3 * (n - k - 1));
      for (int v : cls.band) c.x[v] = Rational(2, 3 * k);
      break;
    case CertRule::HubSecondHub:
      require(n >= 461, "hub-second-hub needs n >= 461");
      require(cls.delta_second >= n - 81,
              "hub-second-hub: second-largest degree below n-81");
      require(cls.delta_second <= n - 4,
              "hub-second-hub: second-largest degree above n-4");
      for (int v = 0; v < n; ++v) c.x[v] = Rational(17, 7 * (n - 2));
      c.x[cls.second_hub] = Rational(4, 7);
      break;
    case CertRule::SubhubAllSmall:
      require(n >= 4, "subhub-all-small needs n >= 4");
      require(cls.all_small,
              "subhub-all-small: some non-hub degree is at least n/6+1");
      for (int v = 0; v < n; ++v) c.x[v] = Rational(4, n - 1);
      break;
    case CertRule::SubhubBand:
      require(n >= 115, "subhub-band needs n >= 115");
      require(k >= 1, "subhub-band: the degree band is empty");
      require(k <= 12, "subhub-band: more than 12 band vertices");
      require(cls.none_above_band,
              "subhub-band: some non-hub degree exceeds n-61");
      for (int v = 0; v < n; ++v) c.x[v] = Rational(3, n - k - 1);
      for (int v : cls.band) c.x[v] = Rational(1, k);
      break;
    case CertRule::SubhubSecondHub:
      require(n >= 380, "subhub-second-hub needs n >= 380");
      require(cls.delta_second >= n - 62,
              "subhub-second-hub: second-largest degree below n-62");
      for (int v = 0; v < n; ++v) c.x[v] = Rational(3, n - 2);
      c.x[cls.second_hub] = 1;
      break;
  }
  c.x[cls.hub] = 1;
  return c;
}

// --- one-stop certification -------------------------------------------------

nlohmann::json to_json(const CertifyReport& r) {
  nlohmann::json j;
  j["certified"] = r.certified;
  j["rule"] = r.rule;
  j["bound"] = r.certified ? nlohmann::json(to_fraction_string(r.bound))
                           : nlohmann::json();
  j["certificate"] =
      r.certificate ? to_json(*r.certificate) : nlohmann::json();
  j["verdict"] = r.verdict ? to_json(*r.verdict) : nlohmann::json();
  j["attempts"] = nlohmann::json::array();
  for (const auto& a : r.attempts)
    j["attempts"].push_back({{"rule", a.rule},
                             {"applicable", a.applicable},
                             {"pass", a.pass},
                             {"detail", a.detail}});
  return j;
}

CertifyReport certify_upper(const Graph& g) {
  int n = g.num_vertices();
  if (n < 6) throw GraphError("certification needs n >= 6");
  if (!is_maximal_planar(g))
    throw GraphError("certification requires a maximal planar graph");

  CertifyReport rep;
  int delta = g.max_degree();
  if (delta <= n - 3) {
    // The degree bound alone caps q at n+2 in this regime.
    rep.certified = true;
    rep.rule = "degree-cap";
    rep.bound = n + 2;
    rep.attempts.push_back(
        {"degree-cap", true, true, "max degree at most n-3"});
    return rep;
  }

  HubRegime regime =
      delta == n - 1 ? HubRegime::Dominating : HubRegime::NearDominating;
  StructureClass cls = classify(g, regime);
  std::vector<CertRule> order =
      regime == HubRegime::Dominating
          ? std::vector<CertRule>{CertRule::HubAllSmall, CertRule::HubBand,
                                  CertRule::HubSecondHub}
          : std::vector<CertRule>{CertRule::SubhubAllSmall,
                                  CertRule::SubhubBand,
                                  CertRule::SubhubSecondHub};
  for (CertRule rule : order) {
    CertifyAttempt attempt;
    attempt.rule = to_string(rule);
    try {
      Certificate cert = build_vector(g, rule, cls);
      attempt.applicable = true;
      Verdict v = verify_certificate(g, cert);
      attempt.pass = v.pass;
      attempt.detail = "worst slack " + to_fraction_string(v.worst_slack) +
                       " at vertex " + std::to_string(v.worst_index);
      rep.attempts.push_back(attempt);
      if (v.pass) {
        rep.certified = true;
        rep.rule = attempt.rule;
        rep.bound = cert.r;
        rep.certificate = std::move(cert);
        rep.verdict = std::move(v);
        return rep;
      }
    } catch (const GraphError& e) {
      attempt.applicable = false;
      attempt.detail = e.what();
      rep.attempts.push_back(attempt);
    }
  }
  return rep;
}

// --- census-validated fixture families --------------------------------------

namespace {

// Zigzag visiting order 0, 1, k-1, 2, k-2, ... of polygon positions.
std::vector<int> zigzag_order(int k) {
  std::vector<int> s{0};
  int lo = 1, hi = k - 1;
  bool low = true;
  while (static_cast<int>(s.size()) < k) {
    s.push_back(low ? lo++ : hi--);
    low = !low;
  }
  return s;
}

using EdgeSet = std::set<Edge>;

void add(EdgeSet& es, int u, int v) {
  if (u > v) std::swap(u, v);
  es.insert({u, v});
}

// Triangulates the polygon whose boundary visits `poly` in order with zigzag
// chords (no vertex gains more than two chords).  Returns the triangles.
std::vector<std::array<int, 3>> add_zigzag(EdgeSet& es,
                                           const std::vector<int>& poly) {
  int p = static_cast<int>(poly.size());
  for (int i = 0; i < p; ++i) add(es, poly[i], poly[(i + 1) % p]);
  std::vector<int> s = zigzag_order(p);
  std::vector<std::array<int, 3>> tris;
  for (int i = 0; i + 2 < p; ++i) {
    std::array<int, 3> t = {poly[s[i]], poly[s[i + 1]], poly[s[i + 2]]};
    add(es, t[0], t[1]);
    add(es, t[1], t[2]);
    add(es, t[0], t[2]);
    tris.push_back(t);
  }
  return tris;
}

Graph finish(int n, const EdgeSet& es) {
  return Graph::from_edges(n, std::vector<Edge>(es.begin(), es.end()));
}

void check_maximal_planar(const Graph& g, const std::string& name) {
  if (!is_maximal_planar(g))
    throw GraphError(name + ": construction is not maximal planar");
}

}  // namespace

Graph near_wheel_fixture(int n) {
  if (n < 8) throw GraphError("near_wheel needs n >= 8");
  int k = n - 2, hub = n - 2, w = n - 1;
  EdgeSet es;
  std::vector<int> rim(k);
  for (int i = 0; i < k; ++i) rim[i] = i;
  auto tris = add_zigzag(es, rim);
  for (int i = 0; i < k; ++i) add(es, i, hub);
  for (int t : tris.back()) add(es, t, w);
  Graph g = finish(n, es);

  check_maximal_planar(g, "near_wheel");
  StructureClass cls = classify(g, HubRegime::NearDominating);
  if (g.degree(hub) != n - 2 || !cls.all_small)
    throw GraphError(
        "near_wheel census: some non-hub degree is at least n/6+1 "
        "(the family only conforms for n >= 31)");
  return g;
}

Graph two_hub_fixture(int n, int gap, bool hub_gap) {
  if (gap < 1) throw GraphError("two_hub needs gap >= 1");
  // Rim path positions 1..n-2 carry labels 2..n-1; vertex 1 skips positions
  // 3, 5, ..., 2*gap+1 and vertex 0 (with hub_gap) skips position 2*gap+4.
  int last_skip = 2 * gap + 1 + (hub_gap ? 3 : 0);
  if (last_skip > n - 3)
    throw GraphError("two_hub: gap too large for this order");
  EdgeSet es;
  add(es, 0, 1);
  for (int v = 2; v < n; ++v) {
    add(es, 0, v);
    add(es, 1, v);
  }
  for (int v = 2; v + 1 < n; ++v) add(es, v, v + 1);
  for (int t = 0; t < gap; ++t) {
    int label = (3 + 2 * t) + 1;
    es.erase({1, label});
    add(es, label - 1, label + 1);
  }
  if (hub_gap) {
    int label = (2 * gap + 4) + 1;
    es.erase({0, label});
    add(es, label - 1, label + 1);
  }
  Graph g = finish(n, es);

  check_maximal_planar(g, "two_hub");
  HubRegime regime =
      hub_gap ? HubRegime::NearDominating : HubRegime::Dominating;
  StructureClass cls = classify(g, regime);
  int expect_second = n - 1 - gap;
  if (hub_gap && gap == 1) expect_second = n - 2;  // both hubs reach n-2
  if (cls.delta_second != expect_second)
    throw GraphError("two_hub census: unexpected second-largest degree");
  return g;
}

Graph mid_band_fixture(int n, HubRegime regime, int band_degree) {
  int k = regime == HubRegime::Dominating ? n - 1 : n - 2;
  int lo_num = regime == HubRegime::Dominating ? n + 19 : n + 6;
  int lo_den = regime == HubRegime::Dominating ? 7 : 6;
  int lo = (lo_num + lo_den - 1) / lo_den;  // ceil of the band's lower edge
  int hi = band_high(regime, n);
  if (hi < lo)
    throw GraphError("mid_band: the degree band is empty at this order");
  int D = band_degree == 0 ? (lo + hi) / 2 : band_degree;
  if (D < lo || D > hi)
    throw GraphError("mid_band: requested degree outside the band [" +
                     std::to_string(lo) + "," + std::to_string(hi) + "]");
  int j = D - 2;  // rim vertex 0 keeps degree D = fan chords + cycle + hub
  int max_j = regime == HubRegime::Dominating ? k - 2 : k - 4;
  if (j < 2 || j > max_j)
    throw GraphError("mid_band: order too small for the requested degree");

  EdgeSet es;
  int hub = k;
  for (int i = 0; i < k; ++i) add(es, i, (i + 1) % k);
  for (int i = 2; i <= j; ++i) add(es, 0, i);
  std::vector<int> rest{0};
  for (int i = j; i < k; ++i) rest.push_back(i);
  auto tris = add_zigzag(es, rest);
  for (int i = 0; i < k; ++i) add(es, i, hub);
  if (regime == HubRegime::NearDominating) {
    int w = n - 1;
    for (int t : tris.back()) add(es, t, w);
  }
  Graph g = finish(n, es);

  check_maximal_planar(g, "mid_band");
  StructureClass cls = classify(g, regime);
  if (cls.k_mid != 1 || cls.band != std::vector<int>{0} ||
      !cls.none_above_band || g.degree(0) != D)
    throw GraphError("mid_band census: band is not the single rim vertex");
  return g;
}

}  // namespace qplanar
