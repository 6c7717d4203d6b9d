#ifndef ORBITDUAL_POSET_HPP
#define ORBITDUAL_POSET_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace orbitdual {

/// Reflexive-transitive closure of a relation on {0, ..., n-1}, stored as a
/// dense boolean matrix. Nothing here assumes antisymmetry; callers check it.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), m_(n * n, false) {
    for (std::size_t i = 0; i < n; ++i) set(i, i);
  }

  /// Closure of the given generating pairs (lower, upper).
  static Relation closure_of(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& gens) {
    Relation r(n);
    for (auto [a, b] : gens) r.set(a, b);
    r.close();
    return r;
  }

  std::size_t size() const noexcept { return n_; }
  bool operator()(std::size_t a, std::size_t b) const { return m_[a * n_ + b]; }
  void set(std::size_t a, std::size_t b) { m_[a * n_ + b] = true; }

  /// Warshall.
  void close() {
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < n_; ++i) {
        if (!(*this)(i, k)) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          if ((*this)(k, j)) set(i, j);
        }
      }
  }

  /// Pairs a != b with a <= b and b <= a.
  std::vector<std::pair<std::size_t, std::size_t>> antisymmetry_violations() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j) {
        if ((*this)(i, j) && (*this)(j, i)) out.emplace_back(i, j);
      }
    return out;
  }

  bool is_partial_order() const { return antisymmetry_violations().empty(); }

  std::optional<std::size_t> minimum() const {
    for (std::size_t i = 0; i < n_; ++i) {
      bool all = true;
      for (std::size_t j = 0; j < n_ && all; ++j) all = (*this)(i, j);
      if (all) return i;
    }
    return std::nullopt;
  }

  std::optional<std::size_t> maximum() const {
    for (std::size_t i = 0; i < n_; ++i) {
      bool all = true;
      for (std::size_t j = 0; j < n_ && all; ++j) all = (*this)(j, i);
      if (all) return i;
    }
    return std::nullopt;
  }

  /// Covering pairs (a < b with nothing strictly between). Assumes a partial order.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        if (a == b || !(*this)(a, b)) continue;
        bool direct = true;
        for (std::size_t c = 0; c < n_ && direct; ++c) {
          if (c != a && c != b && (*this)(a, c) && (*this)(c, b)) direct = false;
        }
        if (direct) out.emplace_back(a, b);
      }
    return out;
  }

  /// Minimal elements of the subset given by the mask.
  std::vector<std::size_t> minimal_elements(const std::vector<bool>& mask) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n_; ++i) {
      if (!mask[i]) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < n_ && minimal; ++j) {
        if (j != i && mask[j] && (*this)(j, i) && !(*this)(i, j)) minimal = false;
      }
      if (minimal) out.push_back(i);
    }
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<bool> m_;
};

}  // namespace orbitdual

#endif  // ORBITDUAL_POSET_HPP
