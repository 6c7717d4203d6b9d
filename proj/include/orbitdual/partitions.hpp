#ifndef ORBITDUAL_PARTITIONS_HPP
#define ORBITDUAL_PARTITIONS_HPP

#include <algorithm>
#include <compare>
#include <functional>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "orbitdual/error.hpp"

namespace orbitdual {

/// Weakly decreasing sequence of positive integers. Trailing zeros are
/// never stored; the empty partition is the unique partition of 0.
class Partition {
 public:
  Partition() = default;

  /// Accepts trailing zeros and drops them; rejects anything else that is
  /// not weakly decreasing and non-negative.
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) throw DomainError("partition parts must be positive: " + to_string());
      if (i && parts_[i] > parts_[i - 1])
        throw DomainError("partition parts must be weakly decreasing: " + to_string());
      size_ += parts_[i];
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  /// i-th part, 0 past the end.
  int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  int multiplicity(int value) const noexcept {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts; used only for containers and enumeration order.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Conjugate partition.
inline Partition transpose(const Partition& p) {
  std::vector<int> out(static_cast<std::size_t>(p.part(0)), 0);
  for (int part : p.parts())
    for (int k = 0; k < part; ++k) ++out[static_cast<std::size_t>(k)];
  return Partition(std::move(out));
}

/// Dominance order: every prefix sum of p is at least that of q.
inline bool dominates(const Partition& p, const Partition& q) {
  if (p.size() != q.size())
    throw DomainError("dominance needs equal sizes: " + p.to_string() + " vs " + q.to_string());
  int sp = 0, sq = 0;
  const std::size_t n = std::max(p.length(), q.length());
  for (std::size_t i = 0; i < n; ++i) {
    sp += p.part(i);
    sq += q.part(i);
    if (sp < sq) return false;
  }
  return true;
}

enum class FamilyKind { A, B, C, D };

/// Classical partition family with its size: A(N), B(2n+1), C(2n), D(2n).
struct PartitionFamily {
  FamilyKind kind;
  int size;

  static PartitionFamily type_a(int rank) { return {FamilyKind::A, rank + 1}; }
  static PartitionFamily type_b(int rank) { return {FamilyKind::B, 2 * rank + 1}; }
  static PartitionFamily type_c(int rank) { return {FamilyKind::C, 2 * rank}; }
  static PartitionFamily type_d(int rank) { return {FamilyKind::D, 2 * rank}; }

  /// Size parity is consistent with the family.
  bool consistent() const noexcept {
    if (size < 0) return false;
    switch (kind) {
      case FamilyKind::A: return true;
      case FamilyKind::B: return size % 2 == 1;
      case FamilyKind::C:
      case FamilyKind::D: return size % 2 == 0;
    }
    return false;
  }

  /// Parity of the parts that must occur with even multiplicity, or -1 if none.
  int restricted_parity() const noexcept {
    switch (kind) {
      case FamilyKind::A: return -1;
      case FamilyKind::B:
      case FamilyKind::D: return 0;
      case FamilyKind::C: return 1;
    }
    return -1;
  }

  std::string name() const {
    static constexpr char kLetters[] = {'A', 'B', 'C', 'D'};
    return std::string(1, kLetters[static_cast<int>(kind)]) + "(" + std::to_string(size) + ")";
  }

  friend bool operator==(const PartitionFamily&, const PartitionFamily&) = default;
};

inline bool is_valid(const Partition& p, const PartitionFamily& f) {
  if (!f.consistent() || p.size() != f.size) return false;
  const int parity = f.restricted_parity();
  if (parity < 0) return true;
  std::map<int, int> mult;
  for (int part : p.parts()) ++mult[part];
  for (auto [value, m] : mult) {
    if (value % 2 == parity && m % 2 != 0) return false;
  }
  return true;
}

/// All parts even (type D orbits with such a partition come in pairs).
inline bool is_very_even(const Partition& p) {
  if (p.empty()) return false;
  for (int part : p.parts()) {
    if (part % 2 != 0) return false;
  }
  return true;
}

/// Largest f-valid partition dominated by p. Repeatedly takes the largest
/// part q of the restricted parity with odd multiplicity, lowers its last
/// occurrence by one and raises the first later part below q - 1 by one.
inline Partition collapse(const Partition& p, const PartitionFamily& f) {
  if (!f.consistent() || p.size() != f.size)
    throw DomainError("cannot collapse " + p.to_string() + " into family " + f.name());
  const int parity = f.restricted_parity();
  if (parity < 0) return p;
  std::vector<int> parts = p.parts();
  for (std::size_t guard = 0;; ++guard) {
    if (guard > static_cast<std::size_t>(f.size) * static_cast<std::size_t>(f.size) + 8)
      throw DataError("collapse did not terminate for " + p.to_string());
    std::map<int, int, std::greater<>> mult;
    for (int part : parts) ++mult[part];
    int bad = 0;
    for (auto [value, m] : mult) {
      if (value % 2 == parity && m % 2 != 0) {
        bad = value;
        break;
      }
    }
    if (bad == 0) break;
    std::size_t last = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] == bad) last = i;
    }
    parts[last] -= 1;
    std::size_t next = last + 1;
    while (next < parts.size() && parts[next] >= bad - 1) ++next;
    if (next == parts.size()) parts.push_back(0);
    parts[next] += 1;
    std::sort(parts.begin(), parts.end(), std::greater<>());
  }
  Partition out(parts);
  if (!is_valid(out, f)) throw DataError("collapse produced invalid partition " + out.to_string());
  return out;
}

/// All partitions of n in reverse-lexicographic order.
inline std::vector<Partition> all_partitions(int n) {
  if (n < 0) throw DomainError("negative partition size");
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

/// All f-valid partitions of n, each once, reverse-lexicographic.
inline std::vector<Partition> enumerate(int n, const PartitionFamily& f) {
  if (n != f.size || !f.consistent())
    throw DomainError("size " + std::to_string(n) + " is inconsistent with family " + f.name());
  std::vector<Partition> out;
  for (auto& p : all_partitions(n)) {
    if (is_valid(p, f)) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace orbitdual

#endif  // ORBITDUAL_PARTITIONS_HPP
