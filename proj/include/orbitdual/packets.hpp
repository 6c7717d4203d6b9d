#ifndef ORBITDUAL_PACKETS_HPP
#define ORBITDUAL_PACKETS_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitdual/duality.hpp"
#include "orbitdual/error.hpp"
#include "orbitdual/orbits.hpp"
#include "orbitdual/rootdata.hpp"
#include "orbitdual/text.hpp"

namespace orbitdual {

/// Unipotent parameter at the real infinitesimal character attached to
/// ic_orbit. Both orbits live in the dual group.
struct Parameter {
  std::string id;
  Orbit ic_orbit;
  Orbit n_orbit;
  std::string rho;
  bool iwahori = true;
  std::optional<bool> unitary;
  std::string az_partner;
};

/// Parameters sharing one infinitesimal-character orbit, sorted by id.
class ParameterSet {
 public:
  /// Throws DataError on duplicate ids, a parameter with another ic orbit,
  /// dangling AZ links or an AZ map that is not an involution.
  ParameterSet(Orbit ic_orbit, std::vector<Parameter> params) : ic_(ic_orbit), params_(std::move(params)) {
    std::sort(params_.begin(), params_.end(),
              [](const Parameter& a, const Parameter& b) { return text::natural_less(a.id, b.id); });
    for (std::size_t i = 0; i < params_.size(); ++i) {
      if (!by_id_.emplace(params_[i].id, i).second) throw DataError("duplicate parameter id " + params_[i].id);
      if (!(params_[i].ic_orbit == ic_))
        throw DataError("parameter " + params_[i].id + " has a different infinitesimal character");
    }
    for (const auto& p : params_) {
      auto it = by_id_.find(p.az_partner);
      if (it == by_id_.end()) throw DataError("parameter " + p.id + " has dangling AZ link " + p.az_partner);
      if (params_[it->second].az_partner != p.id)
        throw DataError("AZ links are not an involution at " + p.id + " -> " + p.az_partner);
    }
  }

  const std::vector<Parameter>& params() const noexcept { return params_; }
  std::size_t size() const noexcept { return params_.size(); }
  bool empty() const noexcept { return params_.empty(); }
  const Orbit& ic_orbit() const noexcept { return ic_; }

  const Parameter& at(std::string_view id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) throw DomainError("unknown parameter '" + std::string(id) + "'");
    return params_[it->second];
  }

  bool contains(std::string_view id) const { return by_id_.find(id) != by_id_.end(); }

  const Parameter& az_dual(const Parameter& x) const { return at(x.az_partner); }

 private:
  Orbit ic_;
  std::vector<Parameter> params_;
  std::map<std::string, std::size_t, std::less<>> by_id_;
};

inline bool is_tempered(const Parameter& x) { return x.n_orbit == x.ic_orbit; }

/// D of the AZ partner's orbit with the trivial class.
inline BarClass cuwf(const ParameterSet& s, const Parameter& x, const AcharDuality& dual) {
  return dual.achar_dual(dual.trivial(s.az_dual(x).n_orbit));
}

inline Orbit geometric_wf(const ParameterSet& s, const Parameter& x, const AcharDuality& dual) {
  return cuwf(s, x, dual).orbit;
}

/// D((ic_orbit, 1)), the smallest possible CUWF on the set.
inline BarClass cuwf_bound(const ParameterSet& s, const AcharDuality& dual) {
  return dual.achar_dual(dual.trivial(s.ic_orbit()));
}

namespace detail {

inline std::string ids_of(const std::vector<Parameter>& v) {
  std::vector<std::string> ids;
  for (const auto& p : v) ids.push_back(p.id);
  return text::join(ids, " ");
}

inline void require_same(const std::vector<Parameter>& a, const std::vector<Parameter>& b, std::string_view what) {
  auto key = [](const std::vector<Parameter>& v) {
    std::vector<std::string> ids;
    for (const auto& p : v) ids.push_back(p.id);
    return ids;
  };
  if (key(a) != key(b))
    throw DataError(std::string(what) + " characterizations disagree: {" + ids_of(a) + "} vs {" + ids_of(b) + "}");
}

}  // namespace detail

/// Members whose CUWF is bounded by D((ic_orbit, 1)); cross-checked against
/// the members whose AZ dual is tempered.
inline std::vector<Parameter> arthur_packet(const ParameterSet& s, const AcharDuality& dual) {
  const OrbitPair bound = dual.embed(cuwf_bound(s, dual));
  std::vector<Parameter> by_wf, by_az;
  for (const auto& x : s.params()) {
    if (dual.pair_leq(dual.embed(cuwf(s, x, dual)), bound)) by_wf.push_back(x);
    if (is_tempered(s.az_dual(x))) by_az.push_back(x);
  }
  detail::require_same(by_wf, by_az, "Arthur packet");
  return by_wf;
}

/// Members whose geometric wavefront set is bounded by d(ic_orbit);
/// cross-checked against the members whose AZ partner lies in the special
/// piece of ic_orbit.
inline std::vector<Parameter> weak_packet(const ParameterSet& s, const AcharDuality& dual) {
  const OrbitDuality& d = dual.orbit_duality();
  const Orbit bound = d.dual(s.ic_orbit());
  const auto piece = d.special_piece_of(s.ic_orbit());
  std::vector<Parameter> by_wf, by_piece;
  for (const auto& x : s.params()) {
    if (closure_leq(geometric_wf(s, x, dual), bound)) by_wf.push_back(x);
    const Orbit n = s.az_dual(x).n_orbit;
    if (std::find(piece.begin(), piece.end(), n) != piece.end()) by_piece.push_back(x);
  }
  detail::require_same(by_wf, by_piece, "weak packet");
  return by_wf;
}

struct JiangReport {
  struct Row {
    std::string id;
    std::string geometric_wf;
    bool equal = false;
  };
  std::string expected;                 // d(ic_orbit)
  std::vector<Row> rows;                // one per Arthur-packet member
  std::vector<std::string> lower_bound_failures;  // ids with CUWF not above D((ic_orbit, 1))
  std::string error;                    // set if the packet itself could not be computed

  bool pass() const {
    if (!error.empty() || !lower_bound_failures.empty()) return false;
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.equal; });
  }
};

/// Every Arthur-packet member has geometric WF equal to d(ic_orbit), and
/// every member of the set has CUWF at least D((ic_orbit, 1)).
inline JiangReport check_jiang(const ParameterSet& s, const AcharDuality& dual) {
  JiangReport rep;
  const Orbit expected = dual.orbit_duality().dual(s.ic_orbit());
  rep.expected = expected.label();
  try {
    for (const auto& x : arthur_packet(s, dual)) {
      const Orbit wf = geometric_wf(s, x, dual);
      rep.rows.push_back({x.id, wf.label(), wf == expected});
    }
    const OrbitPair lower = dual.embed(cuwf_bound(s, dual));
    for (const auto& x : s.params()) {
      if (!dual.pair_leq(lower, dual.embed(cuwf(s, x, dual)))) rep.lower_bound_failures.push_back(x.id);
    }
  } catch (const Error& e) {
    rep.error = e.what();
  }
  return rep;
}

/// Whether (h_art + h_lan) / 2 is Weyl-conjugate to h(target) / 2.
inline bool check_infl_sum(const Coweight& h_art, const Coweight& h_lan, const Orbit& target, const RootSystem& rs) {
  const auto& wdd = target.info().weighted_dynkin;
  if (!wdd) throw DataError("orbit " + target.label() + " has no weighted Dynkin diagram");
  const Coweight sum = h_art + h_lan;
  if (sum.rank() != wdd->rank() || !sum.is_integral() || !wdd->is_integral())
    throw DomainError("infinitesimal-character check needs integral coweights of rank " + std::to_string(rs.rank()));
  // Halving a doubled-storage coweight: reinterpret its integral coordinates.
  const Coweight half_sum = Coweight::from_doubled(sum.coords());
  const Coweight half_target = Coweight::from_doubled(wdd->coords());
  return weyl_conjugate(half_sum, half_target, rs);
}

}  // namespace orbitdual

#endif  // ORBITDUAL_PACKETS_HPP
