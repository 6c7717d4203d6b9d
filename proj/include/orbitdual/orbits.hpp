#ifndef ORBITDUAL_ORBITS_HPP
#define ORBITDUAL_ORBITS_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitdual/error.hpp"
#include "orbitdual/partitions.hpp"
#include "orbitdual/poset.hpp"
#include "orbitdual/rootdata.hpp"
#include "orbitdual/text.hpp"

namespace orbitdual {

struct OrbitInfo {
  std::string label;
  std::optional<int> dim;
  std::optional<Coweight> weighted_dynkin;
  std::optional<Partition> partition;  // classical groups only
  std::string decoration;              // "I" / "II" for very even type D, else empty
  std::optional<bool> declared_special;
};

/// Finite set of orbits of one group with its closure order.
class OrbitPoset {
 public:
  /// Throws DataError on duplicate labels, a size mismatch or a relation
  /// that is not antisymmetric.
  OrbitPoset(std::string group_name, std::vector<OrbitInfo> orbits, Relation leq)
      : group_(std::move(group_name)), orbits_(std::move(orbits)), leq_(std::move(leq)) {
    if (leq_.size() != orbits_.size())
      throw DataError("closure relation has the wrong size for group " + group_);
    for (std::size_t i = 0; i < orbits_.size(); ++i) {
      auto [it, fresh] = by_label_.emplace(orbits_[i].label, i);
      if (!fresh) throw DataError("duplicate orbit label '" + orbits_[i].label + "' in group " + group_);
    }
    auto bad = leq_.antisymmetry_violations();
    if (!bad.empty())
      throw DataError("closure order of " + group_ + " is not antisymmetric: " + orbits_[bad[0].first].label +
                      " and " + orbits_[bad[0].second].label);
  }

  /// Builds the order from covering pairs given by label.
  static OrbitPoset from_covers(std::string group_name, std::vector<OrbitInfo> orbits,
                                const std::vector<std::pair<std::string, std::string>>& covers) {
    std::map<std::string, std::size_t, std::less<>> idx;
    for (std::size_t i = 0; i < orbits.size(); ++i) idx.emplace(orbits[i].label, i);
    std::vector<std::pair<std::size_t, std::size_t>> gens;
    for (const auto& [lo, hi] : covers) {
      auto a = idx.find(lo), b = idx.find(hi);
      if (a == idx.end() || b == idx.end())
        throw DataError("closure pair names an unknown orbit: (" + lo + ", " + hi + ")");
      gens.emplace_back(a->second, b->second);
    }
    Relation r = Relation::closure_of(orbits.size(), gens);
    return OrbitPoset(std::move(group_name), std::move(orbits), std::move(r));
  }

  const std::string& group_name() const noexcept { return group_; }
  std::size_t size() const noexcept { return orbits_.size(); }
  const OrbitInfo& info(std::size_t i) const { return orbits_.at(i); }
  const std::string& label(std::size_t i) const { return orbits_.at(i).label; }
  const Relation& relation() const noexcept { return leq_; }
  bool leq(std::size_t a, std::size_t b) const { return leq_(a, b); }

  /// Lookup after label normalization (Unicode tildes, subscripts, spaces).
  std::optional<std::size_t> find(std::string_view label) const {
    auto it = by_label_.find(label);
    if (it != by_label_.end()) return it->second;
    it = by_label_.find(text::normalize_orbit_label(label));
    if (it != by_label_.end()) return it->second;
    return std::nullopt;
  }

  std::size_t index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw DomainError("unknown orbit '" + std::string(label) + "' in group " + group_);
  }

  std::optional<std::size_t> minimum() const { return leq_.minimum(); }
  std::optional<std::size_t> maximum() const { return leq_.maximum(); }

 private:
  std::string group_;
  std::vector<OrbitInfo> orbits_;
  Relation leq_;
  std::map<std::string, std::size_t, std::less<>> by_label_;
};

/// Lightweight handle to an orbit of a poset. The poset must outlive it.
class Orbit {
 public:
  Orbit() = default;
  Orbit(const OrbitPoset& poset, std::size_t index) : poset_(&poset), index_(index) {
    if (index >= poset.size()) throw DomainError("orbit index out of range");
  }
  Orbit(const OrbitPoset& poset, std::string_view label) : Orbit(poset, poset.index_of(label)) {}

  bool valid() const noexcept { return poset_ != nullptr; }
  const OrbitPoset& poset() const {
    if (!poset_) throw DomainError("empty orbit handle");
    return *poset_;
  }
  std::size_t index() const noexcept { return index_; }
  const OrbitInfo& info() const { return poset().info(index_); }
  const std::string& label() const { return poset().label(index_); }

  friend bool operator==(const Orbit& a, const Orbit& b) noexcept {
    return a.poset_ == b.poset_ && a.index_ == b.index_;
  }

 private:
  const OrbitPoset* poset_ = nullptr;
  std::size_t index_ = 0;
};

inline bool closure_leq(const Orbit& a, const Orbit& b) {
  if (&a.poset() != &b.poset())
    throw DomainError("group mismatch: " + a.poset().group_name() + " vs " + b.poset().group_name());
  return a.poset().leq(a.index(), b.index());
}

/// The order-reversing duality d between a group's orbits and its dual
/// group's orbits, with special orbits and special pieces on either side.
/// For a self-dual group both sides are the same poset.
class OrbitDuality {
 public:
  /// forward[i] = d(orbit i of group), backward[j] = d(orbit j of dual).
  OrbitDuality(std::shared_ptr<const OrbitPoset> group, std::shared_ptr<const OrbitPoset> dual,
               std::vector<std::size_t> forward, std::vector<std::size_t> backward)
      : group_(std::move(group)), dual_(std::move(dual)), fwd_(std::move(forward)), back_(std::move(backward)) {
    if (!group_ || !dual_) throw DataError("orbit duality needs both groups");
    if (fwd_.size() != group_->size() || back_.size() != dual_->size())
      throw DataError("duality map does not cover every orbit");
    for (auto j : fwd_) {
      if (j >= dual_->size()) throw DataError("duality map leaves the dual group");
    }
    for (auto j : back_) {
      if (j >= group_->size()) throw DataError("duality map leaves the group");
    }
    if (self_dual() && fwd_ != back_) throw DataError("self-dual group with two different duality maps");
  }

  const OrbitPoset& group() const noexcept { return *group_; }
  const OrbitPoset& dual_group() const noexcept { return *dual_; }
  std::shared_ptr<const OrbitPoset> group_ptr() const noexcept { return group_; }
  std::shared_ptr<const OrbitPoset> dual_group_ptr() const noexcept { return dual_; }
  bool self_dual() const noexcept { return group_ == dual_; }

  /// The poset on the other side of the duality from p.
  const OrbitPoset& other(const OrbitPoset& p) const {
    if (&p == group_.get()) return *dual_;
    if (&p == dual_.get()) return *group_;
    throw DomainError("group mismatch: " + p.group_name() + " is not part of this duality");
  }

  Orbit dual(const Orbit& o) const {
    const OrbitPoset& p = o.poset();
    if (&p == group_.get()) return Orbit(*dual_, fwd_[o.index()]);
    if (&p == dual_.get()) return Orbit(*group_, back_[o.index()]);
    throw DomainError("missing dual-group data for orbit " + o.label() + " of " + p.group_name());
  }

  bool is_special(const Orbit& o) const { return dual(dual(o)) == o; }

  std::vector<Orbit> specials(const OrbitPoset& p) const {
    std::vector<Orbit> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
      Orbit o(p, i);
      if (is_special(o)) out.push_back(o);
    }
    return out;
  }

  /// The unique minimal special orbit above o.
  Orbit special_closure(const Orbit& o) const {
    const OrbitPoset& p = o.poset();
    std::vector<bool> mask(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) mask[i] = p.leq(o.index(), i) && is_special(Orbit(p, i));
    auto mins = p.relation().minimal_elements(mask);
    if (mins.size() != 1)
      throw DataError("orbit " + o.label() + " has " + std::to_string(mins.size()) +
                      " minimal special orbits above it");
    return Orbit(p, mins.front());
  }

  /// {b : special_closure(b) = special_closure(o)}, in poset index order.
  std::vector<Orbit> special_piece_of(const Orbit& o) const {
    const Orbit top = special_closure(o);
    const OrbitPoset& p = o.poset();
    std::vector<Orbit> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
      Orbit b(p, i);
      if (special_closure(b) == top) out.push_back(b);
    }
    return out;
  }

 private:
  std::shared_ptr<const OrbitPoset> group_;
  std::shared_ptr<const OrbitPoset> dual_;
  std::vector<std::size_t> fwd_;
  std::vector<std::size_t> back_;
};

// Classical groups ----------------------------------------------------------

namespace classical {

inline PartitionFamily family_of(FamilyKind kind, int rank) {
  switch (kind) {
    case FamilyKind::A: return PartitionFamily::type_a(rank);
    case FamilyKind::B: return PartitionFamily::type_b(rank);
    case FamilyKind::C: return PartitionFamily::type_c(rank);
    case FamilyKind::D: return PartitionFamily::type_d(rank);
  }
  throw DomainError("unknown family");
}

inline FamilyKind dual_kind(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::B: return FamilyKind::C;
    case FamilyKind::C: return FamilyKind::B;
    default: return kind;
  }
}

inline std::string group_name(FamilyKind kind, int rank) {
  static constexpr char kLetters[] = {'A', 'B', 'C', 'D'};
  return std::string(1, kLetters[static_cast<int>(kind)]) + std::to_string(rank);
}

/// Hesselink-style weighted Dynkin diagram in type A: sorted eigenvalues of h.
inline Coweight type_a_weighted_dynkin(const Partition& p) {
  std::vector<int> eig;
  for (int k : p.parts())
    for (int j = 0; j < k; ++j) eig.push_back(k - 1 - 2 * j);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  std::vector<int> w;
  for (std::size_t i = 0; i + 1 < eig.size(); ++i) w.push_back(eig[i] - eig[i + 1]);
  return Coweight::integral(std::move(w));
}

/// dim of the type A orbit: N^2 - sum of squared transpose parts.
inline int type_a_dimension(const Partition& p) {
  int n = p.size();
  int s = 0;
  const Partition t = transpose(p);
  for (int c : t.parts()) s += c * c;
  return n * n - s;
}

/// Orbit poset of a classical group of rank 1..: labels are partitions,
/// very even type D partitions get two orbits "...I" and "...II". Closure is
/// dominance, except that the two orbits of a very even pair are incomparable.
inline OrbitPoset make_poset(FamilyKind kind, int rank) {
  if (rank < 1 || (kind == FamilyKind::B && rank < 2) || (kind == FamilyKind::C && rank < 2) ||
      (kind == FamilyKind::D && rank < 3))
    throw DomainError("unsupported rank " + std::to_string(rank) + " for " + group_name(kind, rank));
  const PartitionFamily f = family_of(kind, rank);
  auto parts = enumerate(f.size, f);
  std::reverse(parts.begin(), parts.end());  // smallest first, so index order is a linear extension
  std::vector<OrbitInfo> infos;
  for (const auto& p : parts) {
    if (kind == FamilyKind::D && is_very_even(p)) {
      for (const char* dec : {"I", "II"}) infos.push_back({p.to_string() + dec, std::nullopt, std::nullopt, p, dec, {}});
    } else {
      OrbitInfo info{p.to_string(), std::nullopt, std::nullopt, p, "", {}};
      if (kind == FamilyKind::A) {
        info.dim = type_a_dimension(p);
        info.weighted_dynkin = type_a_weighted_dynkin(p);
      }
      infos.push_back(std::move(info));
    }
  }
  Relation r(infos.size());
  for (std::size_t i = 0; i < infos.size(); ++i)
    for (std::size_t j = 0; j < infos.size(); ++j) {
      if (i == j) continue;
      const auto& a = *infos[i].partition;
      const auto& b = *infos[j].partition;
      if (a == b) continue;  // very even twins
      if (dominates(b, a)) r.set(i, j);
    }
  return OrbitPoset(group_name(kind, rank), std::move(infos), std::move(r));
}

/// Partition-level d: A transpose; B -> C ((p^t)^-)_C; C -> B ((p^t)^+)_B; D (p^t)_D.
inline Partition dual_partition(const Partition& p, FamilyKind kind) {
  Partition t = transpose(p);
  switch (kind) {
    case FamilyKind::A: return t;
    case FamilyKind::B: {
      std::vector<int> v = t.parts();
      v.back() -= 1;
      Partition minus(v);
      return collapse(minus, PartitionFamily{FamilyKind::C, p.size() - 1});
    }
    case FamilyKind::C: {
      std::vector<int> v = t.parts();
      if (v.empty()) v.push_back(0);
      v.front() += 1;
      Partition plus(v);
      return collapse(plus, PartitionFamily{FamilyKind::B, p.size() + 1});
    }
    case FamilyKind::D: return collapse(t, PartitionFamily{FamilyKind::D, p.size()});
  }
  throw DomainError("unknown family");
}

/// d between the classical group of the given kind and its dual group.
/// A very even image keeps the decoration of a very even source, else "I".
inline OrbitDuality make_duality(FamilyKind kind, int rank) {
  auto group = std::make_shared<const OrbitPoset>(make_poset(kind, rank));
  const FamilyKind dk = dual_kind(kind);
  std::shared_ptr<const OrbitPoset> dual = dk == kind ? group : std::make_shared<const OrbitPoset>(make_poset(dk, rank));

  auto map_side = [](const OrbitPoset& from, FamilyKind from_kind, const OrbitPoset& to) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < from.size(); ++i) {
      const OrbitInfo& info = from.info(i);
      Partition image = dual_partition(*info.partition, from_kind);
      std::string label = image.to_string();
      if (!to.find(label)) label += info.decoration.empty() ? "I" : info.decoration;
      out.push_back(to.index_of(label));
    }
    return out;
  };
  auto fwd = map_side(*group, kind, *dual);
  auto back = dk == kind ? fwd : map_side(*dual, dk, *group);
  return OrbitDuality(group, dual, std::move(fwd), std::move(back));
}

}  // namespace classical

}  // namespace orbitdual

#endif  // ORBITDUAL_ORBITS_HPP
