#ifndef ORBITDUAL_TEXT_HPP
#define ORBITDUAL_TEXT_HPP

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orbitdual::text {

/// Conjugacy-class labels compare after all whitespace is removed.
inline std::string normalize_class_label(std::string_view label) {
  std::string out;
  out.reserve(label.size());
  for (char c : label) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

/// Maps the usual typographic spellings of orbit labels onto the ASCII form
/// used in bundles: tildes become a leading "~" on the decorated letter and
/// subscript digits become plain digits. "Ã₁+A₂" -> "~A1+A2".
inline std::string normalize_orbit_label(std::string_view label) {
  struct Rule {
    std::string_view from;
    std::string_view to;
  };
  // Precomposed letters with tilde (UTF-8).
  static constexpr Rule kPrecomposed[] = {
      {"\xC3\x83", "~A"},  // U+00C3
      {"\xC3\x95", "~O"},  // U+00D5
      {"\xC3\x91", "~N"},  // U+00D1
  };
  static constexpr Rule kStandalone[] = {
      {"\xCB\x9C", "~"},      // U+02DC small tilde
      {"\xE2\x88\xBC", "~"},  // U+223C tilde operator
      {"\xEF\xBD\x9E", "~"},  // U+FF5E fullwidth tilde
  };
  static constexpr std::string_view kCombiningTilde = "\xCC\x83";  // U+0303
  static constexpr std::string_view kSubscriptLead = "\xE2\x82";   // U+2080..U+2089

  std::string out;
  out.reserve(label.size());
  std::size_t i = 0;
  while (i < label.size()) {
    std::string_view rest = label.substr(i);
    bool matched = false;
    for (const auto& r : kPrecomposed) {
      if (rest.starts_with(r.from)) {
        out.append(r.to);
        i += r.from.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    for (const auto& r : kStandalone) {
      if (rest.starts_with(r.from)) {
        out.append(r.to);
        i += r.from.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (rest.starts_with(kCombiningTilde)) {
      // Attach to the letter just emitted: "A" + U+0303 -> "~A".
      if (!out.empty() && std::isalpha(static_cast<unsigned char>(out.back()))) {
        char letter = out.back();
        out.pop_back();
        out.push_back('~');
        out.push_back(letter);
      }
      i += kCombiningTilde.size();
      continue;
    }
    if (rest.size() >= 3 && rest.starts_with(kSubscriptLead)) {
      auto third = static_cast<unsigned char>(rest[2]);
      if (third >= 0x80 && third <= 0x89) {
        out.push_back(static_cast<char>('0' + (third - 0x80)));
        i += 3;
        continue;
      }
    }
    if (!std::isspace(static_cast<unsigned char>(label[i]))) out.push_back(label[i]);
    ++i;
  }
  return out;
}

/// Ordering that compares embedded digit runs numerically, so "X5" < "X13".
inline bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
    const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
    if (da && db) {
      std::size_t ei = i, ej = j;
      while (ei < a.size() && std::isdigit(static_cast<unsigned char>(a[ei]))) ++ei;
      while (ej < b.size() && std::isdigit(static_cast<unsigned char>(b[ej]))) ++ej;
      std::string_view na = a.substr(i, ei - i), nb = b.substr(j, ej - j);
      while (na.size() > 1 && na.front() == '0') na.remove_prefix(1);
      while (nb.size() > 1 && nb.front() == '0') nb.remove_prefix(1);
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ei;
      j = ej;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return (a.size() - i) < (b.size() - j);
}

inline std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (std::size_t k = 0; k < items.size(); ++k) {
    if (k) out.append(sep);
    out.append(items[k]);
  }
  return out;
}

}  // namespace orbitdual::text

#endif  // ORBITDUAL_TEXT_HPP
