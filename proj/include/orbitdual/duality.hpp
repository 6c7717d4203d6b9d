#ifndef ORBITDUAL_DUALITY_HPP
#define ORBITDUAL_DUALITY_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitdual/error.hpp"
#include "orbitdual/orbits.hpp"
#include "orbitdual/text.hpp"

namespace orbitdual {

inline constexpr std::string_view kTrivialClass = "1";

/// An orbit together with a conjugacy class of its canonical quotient.
struct BarClass {
  Orbit orbit;
  std::string class_label;

  std::string to_string() const { return "(" + orbit.label() + "," + class_label + ")"; }
  friend bool operator==(const BarClass&, const BarClass&) = default;
};

/// Element of (orbits of G) x (orbits of the dual group).
struct OrbitPair {
  Orbit o;
  Orbit o_dual;

  std::string to_string() const { return "(" + o.label() + "," + o_dual.label() + ")"; }
  friend bool operator==(const OrbitPair&, const OrbitPair&) = default;
};

/// Class lists and Sommers dual for one side of a dual pair.
/// classes[i] lists the class labels of orbit i; sommers[i][k] is the index,
/// in the other side's poset, of d_S(orbit i, classes[i][k]).
struct ClassTable {
  std::vector<std::vector<std::string>> classes;
  std::vector<std::vector<std::size_t>> sommers;
};

/// Sommers duality, the embedding into pairs, special pairs, minimal special
/// covers and Achar's duality for a group and its dual.
class AcharDuality {
 public:
  /// For a self-dual group pass the same poset twice and an empty dual table.
  AcharDuality(std::shared_ptr<const OrbitPoset> group, ClassTable group_table,
               std::shared_ptr<const OrbitPoset> dual, ClassTable dual_table)
      : duality_(build_d(group, group_table, dual, dual_table)) {
    sides_.push_back(make_side(*group, std::move(group_table), *duality_.dual_group_ptr()));
    if (!duality_.self_dual()) sides_.push_back(make_side(*dual, std::move(dual_table), *group));
  }

  const OrbitDuality& orbit_duality() const noexcept { return duality_; }
  const OrbitPoset& group() const noexcept { return duality_.group(); }
  const OrbitPoset& dual_group() const noexcept { return duality_.dual_group(); }
  bool self_dual() const noexcept { return duality_.self_dual(); }

  const std::vector<std::string>& classes(const Orbit& o) const { return side(o.poset()).table.classes[o.index()]; }

  /// Validates the class label; returns the BarClass with the canonical spelling.
  BarClass bar_class(const Orbit& o, std::string_view class_label) const {
    const auto& cls = classes(o);
    const std::string key = text::normalize_class_label(class_label);
    for (const auto& c : cls) {
      if (c == key) return {o, c};
    }
    throw DomainError("orbit " + o.label() + " has no class '" + std::string(class_label) + "'");
  }

  BarClass bar_class(const OrbitPoset& p, std::string_view orbit_label, std::string_view class_label) const {
    return bar_class(Orbit(p, orbit_label), class_label);
  }

  BarClass trivial(const Orbit& o) const { return bar_class(o, kTrivialClass); }

  /// Every (orbit, class) of the given side, in orbit then class order.
  std::vector<BarClass> elements(const OrbitPoset& p) const {
    const Side& s = side(p);
    std::vector<BarClass> out;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (const auto& c : s.table.classes[i]) out.push_back({Orbit(p, i), c});
    return out;
  }

  Orbit sommers_dual(const BarClass& x) const {
    const Side& s = side(x.orbit.poset());
    std::size_t k = class_index(s, x);
    return Orbit(*s.other, s.table.sommers[x.orbit.index()][k]);
  }

  OrbitPair embed(const BarClass& x) const { return {x.orbit, sommers_dual(x)}; }

  /// O1 <= O2 and O1' >= O2'.
  bool pair_leq(const OrbitPair& p, const OrbitPair& q) const {
    return closure_leq(p.o, q.o) && closure_leq(q.o_dual, p.o_dual);
  }

  bool leq(const BarClass& x, const BarClass& y) const { return pair_leq(embed(x), embed(y)); }

  /// The element of the other side whose embedding is the given pair, if any.
  std::optional<BarClass> preimage(const OrbitPair& pair) const {
    const Side& s = side(pair.o.poset());
    if (&pair.o_dual.poset() != s.other) throw DomainError("group mismatch in orbit pair " + pair.to_string());
    auto it = s.inverse.find({pair.o.index(), pair.o_dual.index()});
    if (it == s.inverse.end()) return std::nullopt;
    return BarClass{pair.o, s.table.classes[pair.o.index()][it->second]};
  }

  static OrbitPair flip(const OrbitPair& p) { return {p.o_dual, p.o}; }

  bool is_special_pair(const BarClass& x) const { return preimage(flip(embed(x))).has_value(); }

  /// The unique minimal special element above x.
  BarClass min_special_cover(const BarClass& x) const {
    if (is_special_pair(x)) return x;
    std::vector<BarClass> above;
    for (const auto& y : elements(x.orbit.poset())) {
      if (is_special_pair(y) && leq(x, y)) above.push_back(y);
    }
    std::vector<BarClass> minimal;
    for (const auto& y : above) {
      bool is_min = true;
      for (const auto& z : above) {
        if (!(z == y) && leq(z, y)) {
          is_min = false;
          break;
        }
      }
      if (is_min) minimal.push_back(y);
    }
    if (minimal.size() != 1)
      throw DataError("element " + x.to_string() + " has " + std::to_string(minimal.size()) +
                      " minimal special covers");
    return minimal.front();
  }

  /// D(x): flip the embedding of the minimal special cover and pull it back.
  BarClass achar_dual(const BarClass& x) const {
    const BarClass cover = min_special_cover(x);
    auto y = preimage(flip(embed(cover)));
    if (!y) throw DataError("flip of " + embed(cover).to_string() + " is not in the image of the dual embedding");
    return *y;
  }

  /// Pairs of distinct elements of a side with the same embedding.
  std::vector<std::pair<BarClass, BarClass>> embedding_collisions(const OrbitPoset& p) const {
    std::vector<std::pair<BarClass, BarClass>> out;
    auto all = elements(p);
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        if (embed(all[i]) == embed(all[j])) out.emplace_back(all[i], all[j]);
      }
    return out;
  }

 private:
  struct Side {
    const OrbitPoset* poset = nullptr;
    const OrbitPoset* other = nullptr;
    ClassTable table;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> inverse;  // (orbit, dual orbit) -> class index
  };

  static OrbitDuality build_d(const std::shared_ptr<const OrbitPoset>& group, const ClassTable& gt,
                              const std::shared_ptr<const OrbitPoset>& dual, const ClassTable& dt) {
    if (!group || !dual) throw DataError("duality needs both groups");
    const bool self = group == dual;
    auto trivial_images = [](const OrbitPoset& p, const ClassTable& t, const OrbitPoset& other) {
      check_table(p, t, other);
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < p.size(); ++i) out.push_back(t.sommers[i][trivial_index(p, t, i)]);
      return out;
    };
    auto fwd = trivial_images(*group, gt, *dual);
    auto back = self ? fwd : trivial_images(*dual, dt, *group);
    return OrbitDuality(group, dual, std::move(fwd), std::move(back));
  }

  static void check_table(const OrbitPoset& p, const ClassTable& t, const OrbitPoset& other) {
    if (t.classes.size() != p.size() || t.sommers.size() != p.size())
      throw DataError("class table of " + p.group_name() + " does not cover every orbit");
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (t.classes[i].size() != t.sommers[i].size())
        throw DataError("Sommers table of " + p.label(i) + " does not cover every class");
      for (auto j : t.sommers[i]) {
        if (j >= other.size()) throw DataError("Sommers dual of " + p.label(i) + " is out of range");
      }
    }
  }

  static std::size_t trivial_index(const OrbitPoset& p, const ClassTable& t, std::size_t i) {
    for (std::size_t k = 0; k < t.classes[i].size(); ++k) {
      if (t.classes[i][k] == kTrivialClass) return k;
    }
    throw DataError("orbit " + p.label(i) + " has no trivial class");
  }

  static Side make_side(const OrbitPoset& p, ClassTable t, const OrbitPoset& other) {
    Side s{&p, &other, std::move(t), {}};
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t k = 0; k < s.table.classes[i].size(); ++k) s.inverse.emplace(std::pair{i, s.table.sommers[i][k]}, k);
    return s;
  }

  const Side& side(const OrbitPoset& p) const {
    for (const auto& s : sides_) {
      if (s.poset == &p) return s;
    }
    throw DomainError("group mismatch: " + p.group_name() + " is not part of this duality");
  }

  static std::size_t class_index(const Side& s, const BarClass& x) {
    const auto& cls = s.table.classes[x.orbit.index()];
    for (std::size_t k = 0; k < cls.size(); ++k) {
      if (cls[k] == x.class_label) return k;
    }
    throw DomainError("orbit " + x.orbit.label() + " has no class '" + x.class_label + "'");
  }

  OrbitDuality duality_;
  std::vector<Side> sides_;
};

/// Type A: every canonical quotient is trivial and d_S is the transpose.
inline AcharDuality make_type_a_duality(int rank) {
  auto poset = std::make_shared<const OrbitPoset>(classical::make_poset(FamilyKind::A, rank));
  ClassTable t;
  for (std::size_t i = 0; i < poset->size(); ++i) {
    t.classes.push_back({std::string(kTrivialClass)});
    t.sommers.push_back({poset->index_of(transpose(*poset->info(i).partition).to_string())});
  }
  return AcharDuality(poset, std::move(t), poset, {});
}

}  // namespace orbitdual

#endif  // ORBITDUAL_DUALITY_HPP
