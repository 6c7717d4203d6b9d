#ifndef ORBITDUAL_ROOTDATA_HPP
#define ORBITDUAL_ROOTDATA_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbitdual/error.hpp"

namespace orbitdual {

enum class RootType { A, B, C, D, F, G };

/// Finite root system of one simple type, given by its Cartan matrix.
///
/// Convention: cartan(i, j) = <alpha_i^vee, alpha_j>, nodes numbered as in
/// Bourbaki. For B_n the last node is short, for C_n it is long, for F4 the
/// first two nodes are long, for G2 the first node is short.
class RootSystem {
 public:
  static RootSystem make(RootType type, int rank) {
    validate_rank(type, rank);
    const auto n = static_cast<std::size_t>(rank);
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i) c[i][i] = 2;
    auto bond = [&](std::size_t i, std::size_t j, int ij, int ji) {
      c[i][j] = ij;
      c[j][i] = ji;
    };
    switch (type) {
      case RootType::A:
        for (std::size_t i = 0; i + 1 < n; ++i) bond(i, i + 1, -1, -1);
        break;
      case RootType::B:
        for (std::size_t i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
        bond(n - 2, n - 1, -1, -2);
        break;
      case RootType::C:
        for (std::size_t i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
        bond(n - 2, n - 1, -2, -1);
        break;
      case RootType::D:
        for (std::size_t i = 0; i + 2 < n; ++i) bond(i, i + 1, -1, -1);
        bond(n - 3, n - 1, -1, -1);
        break;
      case RootType::F:
        bond(0, 1, -1, -1);
        bond(1, 2, -1, -2);
        bond(2, 3, -1, -1);
        break;
      case RootType::G:
        bond(0, 1, -3, -1);
        break;
    }
    return RootSystem(type, rank, std::move(c));
  }

  /// Parses "A4", "B3", "F4", "G2", ...
  static RootSystem parse(std::string_view name) {
    if (name.size() < 2) throw DomainError("unknown root system '" + std::string(name) + "'");
    RootType type{};
    switch (name.front()) {
      case 'A': type = RootType::A; break;
      case 'B': type = RootType::B; break;
      case 'C': type = RootType::C; break;
      case 'D': type = RootType::D; break;
      case 'F': type = RootType::F; break;
      case 'G': type = RootType::G; break;
      default: throw DomainError("unknown root system '" + std::string(name) + "'");
    }
    int rank = 0;
    for (char ch : name.substr(1)) {
      if (ch < '0' || ch > '9') throw DomainError("unknown root system '" + std::string(name) + "'");
      rank = rank * 10 + (ch - '0');
      if (rank > 64) throw DomainError("root system rank too large: '" + std::string(name) + "'");
    }
    return make(type, rank);
  }

  RootType type() const noexcept { return type_; }
  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(rank_); }

  std::string name() const {
    static constexpr char kLetters[] = {'A', 'B', 'C', 'D', 'F', 'G'};
    return std::string(1, kLetters[static_cast<int>(type_)]) + std::to_string(rank_);
  }

  int cartan(std::size_t i, std::size_t j) const { return cartan_.at(i).at(j); }
  const std::vector<std::vector<int>>& cartan_matrix() const noexcept { return cartan_; }

  /// Squared lengths of the simple roots, scaled so the shortest is 1.
  std::vector<int> squared_lengths() const {
    // (a_i,a_i) c(i,j) = (a_j,a_j) c(j,i); propagate along the (connected) diagram.
    const std::size_t n = size();
    std::vector<std::int64_t> num(n, 0), den(n, 1);
    num[0] = 1;
    std::vector<std::size_t> stack{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < n; ++j) {
        if (seen[j] || cartan_[i][j] == 0) continue;
        num[j] = num[i] * cartan_[i][j];
        den[j] = den[i] * cartan_[j][i];
        std::int64_t g = std::gcd(num[j], den[j]);
        num[j] /= g;
        den[j] /= g;
        if (den[j] < 0) {
          num[j] = -num[j];
          den[j] = -den[j];
        }
        seen[j] = true;
        stack.push_back(j);
      }
    }
    std::int64_t l = 1;
    for (auto d : den) l = std::lcm(l, d);
    std::vector<std::int64_t> scaled(n);
    for (std::size_t i = 0; i < n; ++i) scaled[i] = num[i] * (l / den[i]);
    std::int64_t g = 0;
    for (auto v : scaled) g = std::gcd(g, v);
    std::vector<int> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<int>(scaled[i] / g);
    return out;
  }

  /// True when every simple root has the maximal length.
  bool simply_laced() const {
    auto len = squared_lengths();
    for (int v : len) {
      if (v != len.front()) return false;
    }
    return true;
  }

  /// Determinant of the Cartan matrix (fraction-free elimination).
  std::int64_t determinant() const {
    const std::size_t n = size();
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i][j] = cartan_[i][j];
    std::int64_t sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      if (m[k][k] == 0) {
        std::size_t p = k + 1;
        while (p < n && m[p][k] == 0) ++p;
        if (p == n) return 0;
        std::swap(m[k], m[p]);
        sign = -sign;
      }
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
  }

 private:
  RootSystem(RootType type, int rank, std::vector<std::vector<int>> cartan)
      : type_(type), rank_(rank), cartan_(std::move(cartan)) {}

  static void validate_rank(RootType type, int rank) {
    bool ok = false;
    switch (type) {
      case RootType::A: ok = rank >= 1; break;
      case RootType::B: ok = rank >= 2; break;
      case RootType::C: ok = rank >= 2; break;
      case RootType::D: ok = rank >= 3; break;
      case RootType::F: ok = rank == 4; break;
      case RootType::G: ok = rank == 2; break;
    }
    if (!ok) throw DomainError("unsupported rank " + std::to_string(rank) + " for this root type");
  }

  RootType type_;
  int rank_;
  std::vector<std::vector<int>> cartan_;
};

/// Element of the coweight lattice tensored with (1/2)Z, in
/// fundamental-coweight coordinates: coordinate i is <alpha_i, w>.
/// Stored doubled so half-integers stay exact.
class Coweight {
 public:
  Coweight() = default;

  static Coweight integral(std::vector<int> coords) {
    for (int& c : coords) c *= 2;
    return Coweight(std::move(coords));
  }

  static Coweight from_doubled(std::vector<int> doubled) { return Coweight(std::move(doubled)); }

  std::size_t rank() const noexcept { return doubled_.size(); }
  const std::vector<int>& doubled() const noexcept { return doubled_; }

  bool is_integral() const noexcept {
    for (int v : doubled_) {
      if (v % 2 != 0) return false;
    }
    return true;
  }

  /// Integral coordinates; throws if some coordinate is a half-integer.
  std::vector<int> coords() const {
    if (!is_integral()) throw DomainError("coweight " + to_string() + " is not integral");
    std::vector<int> out(doubled_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = doubled_[i] / 2;
    return out;
  }

  /// w / 2, exact for every integral w.
  Coweight halved() const {
    if (!is_integral()) throw DomainError("cannot halve non-integral coweight " + to_string());
    std::vector<int> out(doubled_.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = doubled_[i] / 2;
    return Coweight(std::move(out));
  }

  bool is_dominant() const noexcept {
    for (int v : doubled_) {
      if (v < 0) return false;
    }
    return true;
  }

  friend Coweight operator+(const Coweight& a, const Coweight& b) {
    if (a.rank() != b.rank())
      throw DomainError("coweight dimension mismatch: " + std::to_string(a.rank()) + " vs " +
                        std::to_string(b.rank()));
    std::vector<int> out(a.rank());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.doubled_[i] + b.doubled_[i];
    return Coweight(std::move(out));
  }

  friend bool operator==(const Coweight&, const Coweight&) = default;
  friend auto operator<=>(const Coweight&, const Coweight&) = default;

  std::string to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < doubled_.size(); ++i) {
      if (i) out += ",";
      int v = doubled_[i];
      out += (v % 2 == 0) ? std::to_string(v / 2) : std::to_string(v) + "/2";
    }
    return out + "]";
  }

 private:
  explicit Coweight(std::vector<int> doubled) : doubled_(std::move(doubled)) {}
  std::vector<int> doubled_;
};

/// Applies the simple reflection s_j: w -> w - <alpha_j, w> alpha_j^vee.
inline Coweight reflect(const Coweight& w, std::size_t j, const RootSystem& rs) {
  if (w.rank() != rs.size())
    throw DomainError("coweight has " + std::to_string(w.rank()) + " coordinates, root system " +
                      rs.name() + " has rank " + std::to_string(rs.rank()));
  std::vector<int> d = w.doubled();
  const int pairing = d[j];
  for (std::size_t i = 0; i < d.size(); ++i) d[i] -= pairing * rs.cartan(j, i);
  return Coweight::from_doubled(std::move(d));
}

/// Dominant representative of the Weyl orbit of w. Reflects at the first
/// negative coordinate until none is left.
inline Coweight dominant_rep(const Coweight& w, const RootSystem& rs) {
  if (w.rank() != rs.size())
    throw DomainError("coweight has " + std::to_string(w.rank()) + " coordinates, root system " +
                      rs.name() + " has rank " + std::to_string(rs.rank()));
  Coweight cur = w;
  for (;;) {
    const auto& d = cur.doubled();
    std::size_t j = 0;
    while (j < d.size() && d[j] >= 0) ++j;
    if (j == d.size()) return cur;
    cur = reflect(cur, j, rs);
  }
}

inline bool weyl_conjugate(const Coweight& a, const Coweight& b, const RootSystem& rs) {
  return dominant_rep(a, rs) == dominant_rep(b, rs);
}

}  // namespace orbitdual

#endif  // ORBITDUAL_ROOTDATA_HPP
