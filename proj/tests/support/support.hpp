// Shared helpers and brute-force oracles for the test suites. The oracles
// deliberately avoid the library's own algorithms.
#ifndef ORBITDUAL_TESTS_SUPPORT_HPP
#define ORBITDUAL_TESTS_SUPPORT_HPP

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "orbitdual/orbitdual.hpp"

namespace testsupport {

using namespace orbitdual;

inline std::string data_path(const std::string& name) { return std::string(ORBITDUAL_DATA_DIR) + "/" + name; }

inline const std::string& f4_text() {
  static const std::string doc = read_file(data_path("f4.json"));
  return doc;
}

inline GroupBundle f4_bundle() { return parse_bundle(f4_text()); }

/// Shared, validated F4 model.
inline const LoadedBundle& f4() {
  static const LoadedBundle lb = load_bundle(f4_text());
  return lb;
}

inline Orbit f4_orbit(const std::string& label) { return Orbit(*f4().model.group, label); }

inline const ParameterSet& f4_params() { return f4().model.parameter_sets.front(); }

inline std::vector<std::string> ids(const std::vector<Parameter>& v) {
  std::vector<std::string> out;
  for (const auto& p : v) out.push_back(p.id);
  return out;
}

inline std::vector<std::string> labels(const std::vector<Orbit>& v) {
  std::vector<std::string> out;
  for (const auto& o : v) out.push_back(o.label());
  std::sort(out.begin(), out.end());
  return out;
}

// Partition oracles ----------------------------------------------------------

/// Every partition of n with parts at most max_part, by recursion.
inline std::vector<std::vector<int>> raw_partitions(int n, int max_part) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int k = std::min(n, max_part); k >= 1; --k)
    for (auto rest : raw_partitions(n - k, k)) {
      rest.insert(rest.begin(), k);
      out.push_back(rest);
    }
  return out;
}

inline bool oracle_valid(const std::vector<int>& parts, char family) {
  // Restricted parity: B/D even parts, C odd parts need even multiplicity.
  if (family == 'A') return true;
  const int parity = family == 'C' ? 1 : 0;
  for (int v : parts) {
    if (v % 2 != parity) continue;
    if (std::count(parts.begin(), parts.end(), v) % 2 != 0) return false;
  }
  return true;
}

inline bool oracle_dominates(const std::vector<int>& p, const std::vector<int>& q) {
  int a = 0, b = 0;
  for (std::size_t i = 0; i < std::max(p.size(), q.size()); ++i) {
    a += i < p.size() ? p[i] : 0;
    b += i < q.size() ? q[i] : 0;
    if (a < b) return false;
  }
  return true;
}

/// Dominance-maximum of the valid partitions dominated by p, or nullopt if
/// there is no unique maximum.
inline std::optional<std::vector<int>> oracle_collapse(const std::vector<int>& p, char family) {
  int n = 0;
  for (int v : p) n += v;
  std::vector<std::vector<int>> below;
  for (auto& q : raw_partitions(n, n)) {
    if (oracle_valid(q, family) && oracle_dominates(p, q)) below.push_back(q);
  }
  for (const auto& c : below) {
    if (std::all_of(below.begin(), below.end(), [&](const auto& q) { return oracle_dominates(c, q); })) return c;
  }
  return std::nullopt;
}

inline std::vector<int> oracle_transpose(const std::vector<int>& p) {
  std::vector<int> t;
  for (int col = 1; !p.empty() && col <= p.front(); ++col) {
    int c = 0;
    for (int v : p) c += v >= col ? 1 : 0;
    t.push_back(c);
  }
  return t;
}

/// Special classical partitions: B and C when the transpose is a partition of
/// the same family, D when the transpose is a C-partition.
inline bool oracle_special(const std::vector<int>& p, char family) {
  auto t = oracle_transpose(p);
  switch (family) {
    case 'A': return true;
    case 'B': return oracle_valid(t, 'B');
    case 'C': return oracle_valid(t, 'C');
    case 'D': return oracle_valid(t, 'C');
  }
  return false;
}

// Weyl group oracle ------------------------------------------------------------

/// Full Weyl orbit by breadth-first search over simple reflections, computed
/// from the Cartan matrix directly.
inline std::set<std::vector<int>> weyl_orbit(const std::vector<int>& doubled, const RootSystem& rs) {
  std::set<std::vector<int>> seen{doubled};
  std::deque<std::vector<int>> todo{doubled};
  while (!todo.empty()) {
    auto w = todo.front();
    todo.pop_front();
    for (std::size_t j = 0; j < w.size(); ++j) {
      auto v = w;
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= w[j] * rs.cartan(j, i);
      if (seen.insert(v).second) todo.push_back(v);
    }
  }
  return seen;
}

/// Some element of W.h(lan) making the infinitesimal-character sum work
/// against h(art), or nullopt.
inline std::optional<Coweight> infl_witness(const Orbit& lan, const Orbit& art, const Orbit& target,
                                            const RootSystem& rs) {
  const Coweight h_art = *art.info().weighted_dynkin;
  for (const auto& w : weyl_orbit(lan.info().weighted_dynkin->doubled(), rs)) {
    Coweight h_lan = Coweight::from_doubled(w);
    if (check_infl_sum(h_art, h_lan, target, rs)) return h_lan;
  }
  return std::nullopt;
}

}  // namespace testsupport

#endif  // ORBITDUAL_TESTS_SUPPORT_HPP
