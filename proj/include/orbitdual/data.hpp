#ifndef ORBITDUAL_DATA_HPP
#define ORBITDUAL_DATA_HPP

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "orbitdual/duality.hpp"
#include "orbitdual/error.hpp"
#include "orbitdual/orbits.hpp"
#include "orbitdual/packets.hpp"
#include "orbitdual/rootdata.hpp"
#include "orbitdual/text.hpp"

namespace orbitdual {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

// Raw bundle records ---------------------------------------------------------

struct GroupDescriptor {
  std::string name;
  std::string root_system;              // "F4", "A3", ...
  std::vector<std::string> node_order;  // one entry per simple root; may be empty for a dual descriptor
  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

struct OrbitRecord {
  std::string label;
  std::optional<int> dim;
  std::optional<std::vector<int>> weighted_dynkin;
  bool special = false;
  friend bool operator==(const OrbitRecord&, const OrbitRecord&) = default;
};

struct SommersRecord {
  std::string orbit;
  std::string cls;
  std::string dual;
  friend bool operator==(const SommersRecord&, const SommersRecord&) = default;
};

struct ParameterRecord {
  std::string id;
  std::string n_orbit;
  std::string rho;
  bool iwahori = true;
  std::optional<bool> unitary;
  std::string az;
  friend bool operator==(const ParameterRecord&, const ParameterRecord&) = default;
};

struct ParameterSetRecord {
  std::string ic_orbit;
  std::vector<ParameterRecord> parameters;
  friend bool operator==(const ParameterSetRecord&, const ParameterSetRecord&) = default;
};

/// Descriptive, non-authoritative decomposition of a weak packet into
/// pieces indexed by (lan, art) orbit pairs.
struct DecompositionRecord {
  std::string lan;
  std::string art;
  std::vector<std::string> members;
  friend bool operator==(const DecompositionRecord&, const DecompositionRecord&) = default;
};

struct ConjecturalDecomposition {
  bool authoritative = false;
  std::string ic_orbit;
  std::string note;
  std::vector<DecompositionRecord> pieces;
  friend bool operator==(const ConjecturalDecomposition&, const ConjecturalDecomposition&) = default;
};

struct GroupBundle {
  int format_version = kFormatVersion;
  GroupDescriptor group;
  std::optional<GroupDescriptor> dual_group;  // empty means self-dual
  std::vector<OrbitRecord> orbits;
  std::vector<std::pair<std::string, std::string>> closure;  // covering pairs (lower, upper)
  std::map<std::string, std::vector<std::string>> bar_a;
  std::vector<SommersRecord> d_s;
  std::vector<ParameterSetRecord> parameter_sets;
  std::map<std::string, std::string> provenance;
  std::optional<ConjecturalDecomposition> conjectural_decomposition;

  bool self_dual() const noexcept { return !dual_group.has_value(); }
  friend bool operator==(const GroupBundle&, const GroupBundle&) = default;
};

// Parsing --------------------------------------------------------------------

namespace detail {

inline json parse_strict(std::string_view doc) {
  std::vector<std::set<std::string>> keys;
  json::parser_callback_t cb = [&keys](int, json::parse_event_t ev, json& parsed) {
    switch (ev) {
      case json::parse_event_t::object_start: keys.emplace_back(); break;
      case json::parse_event_t::object_end:
        if (!keys.empty()) keys.pop_back();
        break;
      case json::parse_event_t::key: {
        const auto& k = parsed.get_ref<const std::string&>();
        if (keys.empty() || !keys.back().insert(k).second) throw ParseError("duplicate key '" + k + "'");
        break;
      }
      default: break;
    }
    return true;
  };
  try {
    return json::parse(doc.begin(), doc.end(), cb);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed bundle: ") + e.what());
  }
}

class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) throw SchemaError(path_ + ": expected an object");
  }

  /// Rejects keys outside the allowed set.
  void only(std::initializer_list<std::string_view> allowed) const {
    for (const auto& [k, v] : j_.items()) {
      if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
        throw SchemaError(path_ + ": unexpected field '" + k + "'");
    }
  }

  bool has(std::string_view key) const { return j_.contains(key); }

  const json& at(std::string_view key) const {
    auto it = j_.find(key);
    if (it == j_.end()) throw SchemaError(path_ + ": missing field '" + std::string(key) + "'");
    return *it;
  }

  std::string str(std::string_view key) const { return as_string(at(key), sub(key)); }
  int integer(std::string_view key) const { return as_int(at(key), sub(key)); }
  bool boolean(std::string_view key) const {
    const json& v = at(key);
    if (!v.is_boolean()) throw SchemaError(sub(key) + ": expected a boolean");
    return v.get<bool>();
  }
  const json& array(std::string_view key) const {
    const json& v = at(key);
    if (!v.is_array()) throw SchemaError(sub(key) + ": expected an array");
    return v;
  }
  Reader object(std::string_view key) const { return Reader(at(key), sub(key)); }
  std::string sub(std::string_view key) const { return path_ + "." + std::string(key); }
  const json& raw() const noexcept { return j_; }

  static std::string as_string(const json& v, const std::string& path) {
    if (!v.is_string()) throw SchemaError(path + ": expected a string");
    return v.get<std::string>();
  }
  static int as_int(const json& v, const std::string& path) {
    if (!v.is_number_integer()) throw SchemaError(path + ": expected an integer");
    return v.get<int>();
  }

 private:
  const json& j_;
  std::string path_;
};

inline GroupDescriptor read_descriptor(const Reader& r, bool need_nodes) {
  r.only({"name", "root_system", "node_order"});
  GroupDescriptor g{r.str("name"), r.str("root_system"), {}};
  if (need_nodes || r.has("node_order")) {
    const json& nodes = r.array("node_order");
    for (std::size_t i = 0; i < nodes.size(); ++i)
      g.node_order.push_back(Reader::as_string(nodes[i], r.sub("node_order") + "[" + std::to_string(i) + "]"));
  }
  return g;
}

inline std::vector<std::string> read_strings(const json& arr, const std::string& path) {
  if (!arr.is_array()) throw SchemaError(path + ": expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(Reader::as_string(arr[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

}  // namespace detail

/// Parses a bundle document. Throws ParseError on malformed JSON (including
/// duplicate keys) and SchemaError on missing, mistyped or unexpected fields.
/// Invariants are not checked here; see validate_bundle.
inline GroupBundle parse_bundle(std::string_view doc) {
  using detail::Reader;
  const json root = detail::parse_strict(doc);
  Reader r(root, "$");
  r.only({"format_version", "group", "dual_group", "orbits", "closure", "bar_a", "d_s", "parameter_sets",
          "provenance", "conjectural_decomposition"});
  GroupBundle b;
  b.format_version = r.integer("format_version");
  b.group = detail::read_descriptor(r.object("group"), true);

  const json& dg = r.at("dual_group");
  if (dg.is_string()) {
    if (dg.get<std::string>() != "self") throw SchemaError("$.dual_group: expected \"self\" or a group descriptor");
  } else {
    b.dual_group = detail::read_descriptor(Reader(dg, "$.dual_group"), false);
  }

  const json& orbits = r.array("orbits");
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    Reader o(orbits[i], "$.orbits[" + std::to_string(i) + "]");
    o.only({"label", "dim", "weighted_dynkin", "special"});
    OrbitRecord rec;
    rec.label = o.str("label");
    if (o.has("dim")) rec.dim = o.integer("dim");
    if (o.has("weighted_dynkin")) {
      const json& w = o.array("weighted_dynkin");
      std::vector<int> coords;
      for (std::size_t k = 0; k < w.size(); ++k)
        coords.push_back(Reader::as_int(w[k], o.sub("weighted_dynkin") + "[" + std::to_string(k) + "]"));
      rec.weighted_dynkin = std::move(coords);
    }
    rec.special = o.boolean("special");
    b.orbits.push_back(std::move(rec));
  }

  const json& closure = r.array("closure");
  for (std::size_t i = 0; i < closure.size(); ++i) {
    const std::string path = "$.closure[" + std::to_string(i) + "]";
    auto pair = detail::read_strings(closure[i], path);
    if (pair.size() != 2) throw SchemaError(path + ": expected [lower, upper]");
    b.closure.emplace_back(pair[0], pair[1]);
  }

  Reader bar(r.at("bar_a"), "$.bar_a");
  for (const auto& [label, classes] : bar.raw().items())
    b.bar_a[label] = detail::read_strings(classes, "$.bar_a." + label);

  const json& ds = r.array("d_s");
  for (std::size_t i = 0; i < ds.size(); ++i) {
    Reader e(ds[i], "$.d_s[" + std::to_string(i) + "]");
    e.only({"orbit", "class", "dual"});
    b.d_s.push_back({e.str("orbit"), e.str("class"), e.str("dual")});
  }

  if (r.has("parameter_sets")) {
    const json& sets = r.array("parameter_sets");
    for (std::size_t i = 0; i < sets.size(); ++i) {
      Reader s(sets[i], "$.parameter_sets[" + std::to_string(i) + "]");
      s.only({"ic_orbit", "parameters"});
      ParameterSetRecord set;
      set.ic_orbit = s.str("ic_orbit");
      const json& params = s.array("parameters");
      for (std::size_t k = 0; k < params.size(); ++k) {
        Reader p(params[k], s.sub("parameters") + "[" + std::to_string(k) + "]");
        p.only({"id", "n_orbit", "rho", "iwahori", "unitary", "az"});
        ParameterRecord rec;
        rec.id = p.str("id");
        rec.n_orbit = p.str("n_orbit");
        rec.rho = p.str("rho");
        rec.iwahori = p.boolean("iwahori");
        if (p.has("unitary")) rec.unitary = p.boolean("unitary");
        rec.az = p.str("az");
        set.parameters.push_back(std::move(rec));
      }
      b.parameter_sets.push_back(std::move(set));
    }
  }

  Reader prov(r.at("provenance"), "$.provenance");
  for (const auto& [k, v] : prov.raw().items()) b.provenance[k] = Reader::as_string(v, "$.provenance." + k);

  if (r.has("conjectural_decomposition")) {
    Reader c = r.object("conjectural_decomposition");
    c.only({"authoritative", "ic_orbit", "note", "pieces"});
    ConjecturalDecomposition cd;
    cd.authoritative = c.boolean("authoritative");
    cd.ic_orbit = c.str("ic_orbit");
    cd.note = c.str("note");
    const json& pieces = c.array("pieces");
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      Reader p(pieces[i], c.sub("pieces") + "[" + std::to_string(i) + "]");
      p.only({"lan", "art", "members"});
      cd.pieces.push_back({p.str("lan"), p.str("art"), detail::read_strings(p.at("members"), p.sub("members"))});
    }
    b.conjectural_decomposition = std::move(cd);
  }
  return b;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read bundle file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Serialization --------------------------------------------------------------

namespace detail {

inline json descriptor_json(const GroupDescriptor& g, bool with_nodes) {
  json j = {{"name", g.name}, {"root_system", g.root_system}};
  if (with_nodes || !g.node_order.empty()) j["node_order"] = g.node_order;
  return j;
}

}  // namespace detail

/// Canonical JSON form (object keys sorted, array order preserved).
inline json to_json(const GroupBundle& b) {
  json j;
  j["format_version"] = b.format_version;
  j["group"] = detail::descriptor_json(b.group, true);
  j["dual_group"] = b.dual_group ? detail::descriptor_json(*b.dual_group, false) : json("self");
  json orbits = json::array();
  for (const auto& o : b.orbits) {
    json e = {{"label", o.label}, {"special", o.special}};
    if (o.dim) e["dim"] = *o.dim;
    if (o.weighted_dynkin) e["weighted_dynkin"] = *o.weighted_dynkin;
    orbits.push_back(std::move(e));
  }
  j["orbits"] = std::move(orbits);
  json closure = json::array();
  for (const auto& [lo, hi] : b.closure) closure.push_back({lo, hi});
  j["closure"] = std::move(closure);
  j["bar_a"] = json::object();
  for (const auto& [label, classes] : b.bar_a) j["bar_a"][label] = classes;
  json ds = json::array();
  for (const auto& e : b.d_s) ds.push_back({{"orbit", e.orbit}, {"class", e.cls}, {"dual", e.dual}});
  j["d_s"] = std::move(ds);
  if (!b.parameter_sets.empty()) {
    json sets = json::array();
    for (const auto& s : b.parameter_sets) {
      json params = json::array();
      for (const auto& p : s.parameters) {
        json e = {{"id", p.id}, {"n_orbit", p.n_orbit}, {"rho", p.rho}, {"iwahori", p.iwahori}, {"az", p.az}};
        if (p.unitary) e["unitary"] = *p.unitary;
        params.push_back(std::move(e));
      }
      sets.push_back({{"ic_orbit", s.ic_orbit}, {"parameters", std::move(params)}});
    }
    j["parameter_sets"] = std::move(sets);
  }
  j["provenance"] = json::object();
  for (const auto& [k, v] : b.provenance) j["provenance"][k] = v;
  if (b.conjectural_decomposition) {
    const auto& cd = *b.conjectural_decomposition;
    json pieces = json::array();
    for (const auto& p : cd.pieces) pieces.push_back({{"lan", p.lan}, {"art", p.art}, {"members", p.members}});
    j["conjectural_decomposition"] = {
        {"authoritative", cd.authoritative}, {"ic_orbit", cd.ic_orbit}, {"note", cd.note}, {"pieces", pieces}};
  }
  return j;
}

inline std::string serialize(const GroupBundle& b) { return to_json(b).dump(2) + "\n"; }

// Model ----------------------------------------------------------------------

/// Queryable objects built from a bundle (and its dual bundle when the group
/// is not self-dual). Parameter orbits live in the dual group.
struct Model {
  RootSystem root_system;
  std::shared_ptr<const OrbitPoset> group;
  std::shared_ptr<const OrbitPoset> dual_group;
  std::shared_ptr<const AcharDuality> duality;  // null when dual data is missing
  std::vector<ParameterSet> parameter_sets;

  const OrbitDuality& orbit_duality() const {
    if (!duality) throw DataError("missing dual-group data for " + group->group_name());
    return duality->orbit_duality();
  }
  const AcharDuality& achar() const {
    if (!duality) throw DataError("missing dual-group data for " + group->group_name());
    return *duality;
  }

  const ParameterSet& parameter_set(const Orbit& ic) const {
    for (const auto& s : parameter_sets) {
      if (s.ic_orbit() == ic) return s;
    }
    throw DomainError("no parameter set with infinitesimal-character orbit " + ic.label());
  }

  /// Set and parameter for an id.
  std::pair<const ParameterSet*, const Parameter*> parameter(std::string_view id) const {
    for (const auto& s : parameter_sets) {
      if (s.contains(id)) return {&s, &s.at(id)};
    }
    throw DomainError("unknown parameter '" + std::string(id) + "'");
  }
};

namespace detail {

inline std::shared_ptr<const OrbitPoset> build_poset(const GroupBundle& b) {
  std::vector<OrbitInfo> infos;
  for (const auto& o : b.orbits) {
    OrbitInfo info{o.label, o.dim, std::nullopt, std::nullopt, "", o.special};
    if (o.weighted_dynkin) info.weighted_dynkin = Coweight::integral(*o.weighted_dynkin);
    infos.push_back(std::move(info));
  }
  return std::make_shared<const OrbitPoset>(OrbitPoset::from_covers(b.group.name, std::move(infos), b.closure));
}

inline ClassTable build_table(const GroupBundle& b, const OrbitPoset& p, const OrbitPoset& other) {
  ClassTable t;
  t.classes.resize(p.size());
  t.sommers.resize(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    auto it = b.bar_a.find(p.label(i));
    if (it == b.bar_a.end()) throw DataError("orbit " + p.label(i) + " has no class list");
    for (const auto& c : it->second) t.classes[i].push_back(text::normalize_class_label(c));
    t.sommers[i].assign(t.classes[i].size(), other.size());
  }
  for (const auto& e : b.d_s) {
    auto i = p.find(e.orbit);
    auto j = other.find(e.dual);
    if (!i || !j) throw DataError("d_s entry names an unknown orbit: " + e.orbit + " -> " + e.dual);
    const auto& cls = t.classes[*i];
    auto k = std::find(cls.begin(), cls.end(), text::normalize_class_label(e.cls));
    if (k == cls.end()) throw DataError("d_s entry names an unknown class: (" + e.orbit + "," + e.cls + ")");
    t.sommers[*i][static_cast<std::size_t>(k - cls.begin())] = *j;
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t k = 0; k < t.classes[i].size(); ++k) {
      if (t.sommers[i][k] == other.size())
        throw DataError("d_s has no entry for (" + p.label(i) + "," + t.classes[i][k] + ")");
    }
  return t;
}

}  // namespace detail

/// Builds the model without running the validator. Throws DataError on data
/// the model cannot represent at all (unknown labels, cycles, gaps).
inline Model build_model(const GroupBundle& b, const GroupBundle* dual_bundle = nullptr) {
  Model m{RootSystem::parse(b.group.root_system), detail::build_poset(b), nullptr, nullptr, {}};
  const GroupBundle* db = b.self_dual() ? &b : dual_bundle;
  if (b.self_dual()) {
    m.dual_group = m.group;
  } else if (db) {
    m.dual_group = detail::build_poset(*db);
  }
  if (m.dual_group) {
    ClassTable gt = detail::build_table(b, *m.group, *m.dual_group);
    ClassTable dt = b.self_dual() ? ClassTable{} : detail::build_table(*db, *m.dual_group, *m.group);
    m.duality = std::make_shared<const AcharDuality>(m.group, std::move(gt), m.dual_group, std::move(dt));
    for (const auto& s : b.parameter_sets) {
      std::vector<Parameter> params;
      const Orbit ic(*m.dual_group, s.ic_orbit);
      for (const auto& p : s.parameters)
        params.push_back({p.id, ic, Orbit(*m.dual_group, p.n_orbit), p.rho, p.iwahori, p.unitary, p.az});
      m.parameter_sets.emplace_back(ic, std::move(params));
    }
  }
  return m;
}

// Validation -----------------------------------------------------------------

enum class CheckStatus { pass, fail, skip };

inline std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skip: return "skip";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::vector<std::string> details;  // offending items, or the reason for a skip
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool pass() const {
    return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::fail; });
  }

  std::vector<std::string> failed() const {
    std::vector<std::string> out;
    for (const auto& c : checks) {
      if (c.status == CheckStatus::fail) out.push_back(c.name);
    }
    return out;
  }

  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  std::string to_text() const {
    std::string out;
    std::size_t fails = 0;
    for (const auto& c : checks) {
      out += std::string(to_string(c.status)) + " " + c.name;
      if (!c.details.empty()) out += ": " + text::join(c.details, "; ");
      out += "\n";
      fails += c.status == CheckStatus::fail;
    }
    out += pass() ? "ok: " : "FAILED: ";
    out += std::to_string(checks.size()) + " checks, " + std::to_string(fails) + " failed\n";
    return out;
  }

  json to_json() const {
    json arr = json::array();
    for (const auto& c : checks)
      arr.push_back({{"name", c.name}, {"status", std::string(to_string(c.status))}, {"details", c.details}});
    return {{"pass", pass()}, {"checks", std::move(arr)}};
  }
};

namespace detail {

/// Accumulates checks; a check whose prerequisites failed is recorded as skipped.
class Checker {
 public:
  explicit Checker(ValidationReport& rep) : rep_(rep) {}

  /// Runs fn, which appends offending items; fail iff any were appended.
  /// Exceptions from fn count as a failure with the message as detail.
  bool run(const std::string& name, bool ready, const std::function<void(std::vector<std::string>&)>& fn,
           const std::string& skip_reason = "prerequisite checks failed") {
    CheckResult r{name, CheckStatus::pass, {}};
    if (!ready) {
      r.status = CheckStatus::skip;
      r.details.push_back(skip_reason);
    } else {
      try {
        fn(r.details);
      } catch (const std::exception& e) {
        r.details.push_back(e.what());
      }
      if (!r.details.empty()) r.status = CheckStatus::fail;
    }
    const bool ok = r.status == CheckStatus::pass;
    rep_.checks.push_back(std::move(r));
    return ok;
  }

 private:
  ValidationReport& rep_;
};

/// Structural checks that need only one bundle. Returns whether the poset and
/// class lists are sound enough to build on.
struct StructuralState {
  std::optional<RootSystem> rs;
  bool labels_ok = false;
  bool order_ok = false;
  bool bar_ok = false;
  std::shared_ptr<const OrbitPoset> poset;
};

inline StructuralState check_structure(const GroupBundle& b, Checker& ck, const std::string& prefix) {
  StructuralState st;
  ck.run(prefix + "format.version", true, [&](auto& bad) {
    if (b.format_version != kFormatVersion) bad.push_back("format_version " + std::to_string(b.format_version));
  });
  ck.run(prefix + "group.root_system", true, [&](auto&) { st.rs = RootSystem::parse(b.group.root_system); });
  ck.run(prefix + "group.node_order", st.rs.has_value(), [&](auto& bad) {
    if (b.group.node_order.size() != st.rs->size())
      bad.push_back(std::to_string(b.group.node_order.size()) + " nodes declared for rank " +
                    std::to_string(st.rs->rank()));
  });
  st.labels_ok = ck.run(prefix + "labels.unique", true, [&](auto& bad) {
    std::set<std::string> seen;
    for (const auto& o : b.orbits) {
      if (o.label.empty()) bad.push_back("empty label");
      if (!seen.insert(o.label).second) bad.push_back(o.label);
    }
    if (b.orbits.empty()) bad.push_back("no orbits");
  });
  std::set<std::string> labels;
  for (const auto& o : b.orbits) labels.insert(o.label);
  const bool closure_labels = ck.run(prefix + "closure.labels", st.labels_ok, [&](auto& bad) {
    for (const auto& [lo, hi] : b.closure) {
      if (!labels.count(lo)) bad.push_back(lo);
      if (!labels.count(hi)) bad.push_back(hi);
    }
  });
  const bool ready = st.labels_ok && closure_labels;
  st.order_ok = ck.run(prefix + "closure.antisymmetry", ready, [&](auto& bad) {
    std::vector<std::pair<std::size_t, std::size_t>> gens;
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < b.orbits.size(); ++i) idx[b.orbits[i].label] = i;
    for (const auto& [lo, hi] : b.closure) gens.emplace_back(idx[lo], idx[hi]);
    Relation r = Relation::closure_of(b.orbits.size(), gens);
    for (auto [x, y] : r.antisymmetry_violations()) bad.push_back(b.orbits[x].label + " ~ " + b.orbits[y].label);
  });
  if (st.order_ok) st.poset = build_poset(b);
  const bool have = st.poset != nullptr;
  ck.run(prefix + "closure.minimum", have, [&](auto& bad) {
    auto m = st.poset->minimum();
    if (!m) return bad.push_back("no minimum");
    const auto& o = b.orbits[*m];
    if (o.dim && *o.dim != 0) bad.push_back(o.label + " has dim " + std::to_string(*o.dim));
    if (o.weighted_dynkin && std::any_of(o.weighted_dynkin->begin(), o.weighted_dynkin->end(), [](int v) { return v != 0; }))
      bad.push_back(o.label + " has a nonzero weighted Dynkin diagram");
  });
  ck.run(prefix + "closure.maximum", have, [&](auto& bad) {
    auto m = st.poset->maximum();
    if (!m) return bad.push_back("no maximum");
    const auto& o = b.orbits[*m];
    if (o.weighted_dynkin && std::any_of(o.weighted_dynkin->begin(), o.weighted_dynkin->end(), [](int v) { return v != 2; }))
      bad.push_back(o.label + " is not regular");
  });
  ck.run(prefix + "closure.dimension", have, [&](auto& bad) {
    for (std::size_t i = 0; i < b.orbits.size(); ++i)
      for (std::size_t j = 0; j < b.orbits.size(); ++j) {
        const auto &a = b.orbits[i], &c = b.orbits[j];
        if (i != j && a.dim && c.dim && st.poset->leq(i, j) && *a.dim >= *c.dim)
          bad.push_back(a.label + " < " + c.label + " but dim " + std::to_string(*a.dim) + " >= " + std::to_string(*c.dim));
      }
  });
  const bool wdd_len = ck.run(prefix + "weighted_dynkin.length", st.rs.has_value(), [&](auto& bad) {
    for (const auto& o : b.orbits) {
      if (o.weighted_dynkin && o.weighted_dynkin->size() != st.rs->size()) bad.push_back(o.label);
    }
  });
  ck.run(prefix + "weighted_dynkin.range", true, [&](auto& bad) {
    for (const auto& o : b.orbits) {
      if (o.weighted_dynkin && std::any_of(o.weighted_dynkin->begin(), o.weighted_dynkin->end(), [](int v) { return v < 0 || v > 2; }))
        bad.push_back(o.label);
    }
  });
  ck.run(prefix + "weighted_dynkin.dominant", wdd_len, [&](auto& bad) {
    for (const auto& o : b.orbits) {
      if (o.weighted_dynkin && !Coweight::integral(*o.weighted_dynkin).is_dominant()) bad.push_back(o.label);
    }
  });
  ck.run(prefix + "weighted_dynkin.unique", true, [&](auto& bad) {
    std::map<std::vector<int>, std::string> seen;
    for (const auto& o : b.orbits) {
      if (!o.weighted_dynkin) continue;
      auto [it, fresh] = seen.emplace(*o.weighted_dynkin, o.label);
      if (!fresh) bad.push_back(it->second + " and " + o.label);
    }
  });
  const bool coverage = ck.run(prefix + "bar_a.coverage", st.labels_ok, [&](auto& bad) {
    for (const auto& o : b.orbits) {
      if (!b.bar_a.count(o.label)) bad.push_back("missing " + o.label);
    }
    for (const auto& [label, cls] : b.bar_a) {
      if (!labels.count(label)) bad.push_back("unknown " + label);
    }
  });
  const bool trivial = ck.run(prefix + "bar_a.trivial_class", true, [&](auto& bad) {
    for (const auto& [label, cls] : b.bar_a) {
      std::set<std::string> seen;
      bool has_trivial = false;
      for (const auto& c : cls) {
        const auto n = text::normalize_class_label(c);
        has_trivial |= n == kTrivialClass;
        if (!seen.insert(n).second) bad.push_back(label + " repeats class " + c);
      }
      if (!has_trivial) bad.push_back(label);
    }
  });
  st.bar_ok = coverage && trivial;
  ck.run(prefix + "provenance.present", true, [&](auto& bad) {
    auto note = [&](const std::string& key) {
      auto it = b.provenance.find(key);
      if (it == b.provenance.end() || it->second.empty()) bad.push_back("no provenance for " + key);
    };
    note("d_s");
    if (!b.parameter_sets.empty()) note("parameter_sets");
  });
  return st;
}

}  // namespace detail

/// Runs every invariant check. For a group that is not self-dual, pass the
/// dual group's bundle; checks that need it are skipped otherwise.
inline ValidationReport validate_bundle(const GroupBundle& b, const GroupBundle* dual_bundle = nullptr) {
  ValidationReport rep;
  detail::Checker ck(rep);
  auto st = detail::check_structure(b, ck, "");

  // Dual side.
  const GroupBundle* db = b.self_dual() ? &b : dual_bundle;
  std::shared_ptr<const OrbitPoset> dual_poset = b.self_dual() ? st.poset : nullptr;
  bool dual_ok = b.self_dual() ? st.poset != nullptr && st.bar_ok : false;
  if (!b.self_dual()) {
    if (!db) {
      ck.run("dual_group.present", false, [](auto&) {}, "no dual bundle supplied");
    } else {
      ck.run("dual_group.descriptor", true, [&](auto& bad) {
        if (b.dual_group->name != db->group.name || b.dual_group->root_system != db->group.root_system)
          bad.push_back("dual bundle is " + db->group.name);
        if (!db->dual_group || db->dual_group->name != b.group.name)
          bad.push_back("dual bundle does not name " + b.group.name + " as its dual");
      });
      ValidationReport sub;
      detail::Checker sck(sub);
      auto dst = detail::check_structure(*db, sck, "dual.");
      for (auto& c : sub.checks) rep.checks.push_back(std::move(c));
      dual_poset = dst.poset;
      dual_ok = st.poset != nullptr && st.bar_ok && dst.poset != nullptr && dst.bar_ok;
    }
  }
  const std::string no_dual = db ? "prerequisite checks failed" : "no dual bundle supplied";

  auto sommers_checks = [&](const GroupBundle& bundle, const OrbitPoset* other, const std::string& prefix) {
    bool labels = ck.run(prefix + "d_s.labels", st.labels_ok && other != nullptr, [&](auto& bad) {
      std::set<std::string> mine;
      for (const auto& o : bundle.orbits) mine.insert(o.label);
      for (const auto& e : bundle.d_s) {
        if (!mine.count(e.orbit)) bad.push_back("orbit " + e.orbit);
        else if (auto it = bundle.bar_a.find(e.orbit); it == bundle.bar_a.end() ||
                 std::none_of(it->second.begin(), it->second.end(), [&](const std::string& c) {
                   return text::normalize_class_label(c) == text::normalize_class_label(e.cls);
                 }))
          bad.push_back("class (" + e.orbit + "," + e.cls + ")");
        if (!other->find(e.dual)) bad.push_back("dual orbit " + e.dual);
      }
    }, no_dual);
    bool functional = ck.run(prefix + "d_s.functional", true, [&](auto& bad) {
      std::set<std::pair<std::string, std::string>> seen;
      for (const auto& e : bundle.d_s) {
        if (!seen.emplace(e.orbit, text::normalize_class_label(e.cls)).second)
          bad.push_back("(" + e.orbit + "," + e.cls + ") listed twice");
      }
    });
    bool total = ck.run(prefix + "d_s.totality", true, [&](auto& bad) {
      std::set<std::pair<std::string, std::string>> seen;
      for (const auto& e : bundle.d_s) seen.emplace(e.orbit, text::normalize_class_label(e.cls));
      for (const auto& o : bundle.orbits) {
        auto it = bundle.bar_a.find(o.label);
        if (it == bundle.bar_a.end()) continue;
        for (const auto& c : it->second) {
          if (!seen.count({o.label, text::normalize_class_label(c)})) bad.push_back("(" + o.label + "," + c + ")");
        }
      }
    });
    ck.run(prefix + "d_s.surjectivity", labels && other != nullptr, [&](auto& bad) {
      std::set<std::string> hit;
      for (const auto& e : bundle.d_s) hit.insert(e.dual);
      for (std::size_t j = 0; j < other->size(); ++j) {
        if (!hit.count(other->label(j))) bad.push_back(other->label(j));
      }
    }, no_dual);
    return labels && functional && total;
  };
  bool tables_ok = sommers_checks(b, dual_poset.get(), "");
  if (!b.self_dual() && db) tables_ok = sommers_checks(*db, st.poset.get(), "dual.") && tables_ok;

  std::shared_ptr<const AcharDuality> ad;
  const bool can_build = dual_ok && tables_ok;
  ck.run("duality.construct", can_build, [&](auto&) {
    ClassTable gt = detail::build_table(b, *st.poset, *dual_poset);
    ClassTable dt = b.self_dual() ? ClassTable{} : detail::build_table(*db, *dual_poset, *st.poset);
    ad = std::make_shared<const AcharDuality>(st.poset, std::move(gt), dual_poset, std::move(dt));
  }, no_dual);
  const bool have_d = ad != nullptr;

  std::vector<const OrbitPoset*> sides;
  if (have_d) {
    sides.push_back(&ad->group());
    if (!ad->self_dual()) sides.push_back(&ad->dual_group());
  }
  auto each_orbit = [&](const std::function<void(const Orbit&)>& fn) {
    for (const auto* p : sides)
      for (std::size_t i = 0; i < p->size(); ++i) fn(Orbit(*p, i));
  };
  auto each_element = [&](const std::function<void(const BarClass&)>& fn) {
    for (const auto* p : sides)
      for (const auto& x : ad->elements(*p)) fn(x);
  };

  ck.run("d.cube", have_d, [&](auto& bad) {
    const auto& d = ad->orbit_duality();
    each_orbit([&](const Orbit& o) {
      if (!(d.dual(d.dual(d.dual(o))) == d.dual(o))) bad.push_back(o.label());
    });
  }, no_dual);
  ck.run("d.order_reversing", have_d, [&](auto& bad) {
    const auto& d = ad->orbit_duality();
    for (const auto* p : sides)
      for (std::size_t i = 0; i < p->size(); ++i)
        for (std::size_t j = 0; j < p->size(); ++j) {
          Orbit a(*p, i), c(*p, j);
          if (closure_leq(a, c) && !closure_leq(d.dual(c), d.dual(a))) bad.push_back(a.label() + " <= " + c.label());
        }
  }, no_dual);
  ck.run("d.special_involution", have_d, [&](auto& bad) {
    const auto& d = ad->orbit_duality();
    each_orbit([&](const Orbit& o) {
      const Orbit s = d.dual(o);  // always special when d^3 = d
      if (!(d.dual(d.dual(s)) == s)) bad.push_back(s.label());
    });
  }, no_dual);
  ck.run("special.flags", have_d, [&](auto& bad) {
    const auto& d = ad->orbit_duality();
    each_orbit([&](const Orbit& o) {
      const auto& declared = o.info().declared_special;
      if (declared && *declared != d.is_special(o))
        bad.push_back(o.label() + (d.is_special(o) ? " is special but not flagged" : " is flagged but not special"));
    });
  }, no_dual);
  ck.run("special.extremes", have_d, [&](auto& bad) {
    const auto& d = ad->orbit_duality();
    for (const auto* p : sides) {
      for (auto m : {p->minimum(), p->maximum()}) {
        if (m && !d.is_special(Orbit(*p, *m))) bad.push_back(p->label(*m));
      }
    }
  }, no_dual);
  ck.run("special_pieces.partition", have_d, [&](auto& bad) {
    const auto& d = ad->orbit_duality();
    for (const auto* p : sides) {
      std::vector<int> seen(p->size(), 0);
      for (const auto& s : d.specials(*p)) {
        auto piece = d.special_piece_of(s);
        for (const auto& o : piece) {
          ++seen[o.index()];
          if (!closure_leq(o, s)) bad.push_back(o.label() + " is not below the special " + s.label());
        }
      }
      for (std::size_t i = 0; i < p->size(); ++i) {
        if (seen[i] != 1) bad.push_back(p->label(i) + " lies in " + std::to_string(seen[i]) + " pieces");
      }
      for (std::size_t i = 0; i < p->size(); ++i) {
        Orbit o(*p, i);
        if (!(d.dual(o) == d.dual(d.special_closure(o)))) bad.push_back("d(" + o.label() + ") differs from d of its special closure");
      }
    }
  }, no_dual);
  ck.run("duality.sommers_trivial", have_d, [&](auto& bad) {
    each_orbit([&](const Orbit& o) {
      if (!(ad->sommers_dual(ad->trivial(o)) == ad->orbit_duality().dual(o))) bad.push_back(o.label());
    });
  }, no_dual);
  const bool injective = ck.run("duality.embed_injective", have_d, [&](auto& bad) {
    for (const auto* p : sides)
      for (const auto& [x, y] : ad->embedding_collisions(*p)) bad.push_back(x.to_string() + " and " + y.to_string());
  }, no_dual);
  const bool defined = ck.run("duality.achar_defined", have_d && injective, [&](auto& bad) {
    each_element([&](const BarClass& x) {
      try {
        (void)ad->achar_dual(x);
      } catch (const DataError& e) {
        bad.push_back(e.what());
      }
    });
  }, no_dual);
  const bool achar_ready = have_d && injective && defined;
  ck.run("duality.pr1_sommers", achar_ready, [&](auto& bad) {
    each_element([&](const BarClass& x) {
      if (!(ad->achar_dual(x).orbit == ad->sommers_dual(x))) bad.push_back(x.to_string());
    });
  });
  ck.run("duality.achar_cube", achar_ready, [&](auto& bad) {
    each_element([&](const BarClass& x) {
      const BarClass once = ad->achar_dual(x);
      if (!(ad->achar_dual(ad->achar_dual(once)) == once)) bad.push_back(x.to_string());
    });
  });
  ck.run("duality.achar_order_reversing", achar_ready, [&](auto& bad) {
    for (const auto* p : sides) {
      auto all = ad->elements(*p);
      for (const auto& x : all)
        for (const auto& y : all) {
          if (ad->leq(x, y) && !ad->leq(ad->achar_dual(y), ad->achar_dual(x)))
            bad.push_back(x.to_string() + " <= " + y.to_string());
        }
    }
  });
  ck.run("duality.achar_special_involution", achar_ready, [&](auto& bad) {
    each_element([&](const BarClass& x) {
      if (ad->is_special_pair(x) && !(ad->achar_dual(ad->achar_dual(x)) == x)) bad.push_back(x.to_string());
    });
  });

  // Parameters (orbits in the dual group).
  const bool has_params = !b.parameter_sets.empty();
  std::map<std::string, std::pair<std::size_t, const ParameterRecord*>> by_id;
  for (std::size_t s = 0; s < b.parameter_sets.size(); ++s)
    for (const auto& p : b.parameter_sets[s].parameters) by_id.emplace(p.id, std::pair{s, &p});
  ck.run("parameters.ids_unique", has_params, [&](auto& bad) {
    std::set<std::string> seen;
    for (const auto& s : b.parameter_sets) {
      for (const auto& p : s.parameters) {
        if (!seen.insert(p.id).second) bad.push_back(p.id);
      }
    }
  }, "no parameter sets");
  const bool param_labels = ck.run("parameters.labels", has_params && dual_poset != nullptr, [&](auto& bad) {
    for (const auto& s : b.parameter_sets) {
      if (!dual_poset->find(s.ic_orbit)) bad.push_back("ic_orbit " + s.ic_orbit);
      for (const auto& p : s.parameters) {
        if (!dual_poset->find(p.n_orbit)) bad.push_back(p.id + " n_orbit " + p.n_orbit);
      }
    }
  }, has_params ? no_dual : "no parameter sets");
  const bool links = ck.run("parameters.az_links", has_params, [&](auto& bad) {
    for (const auto& [id, sp] : by_id) {
      if (!by_id.count(sp.second->az)) bad.push_back(id + " -> " + sp.second->az);
    }
  }, "no parameter sets");
  const bool involution = ck.run("parameters.az_involution", has_params && links, [&](auto& bad) {
    for (const auto& [id, sp] : by_id) {
      const auto& partner = *by_id.at(sp.second->az).second;
      if (partner.az != id) bad.push_back(id + " -> " + partner.id + " -> " + partner.az);
    }
  }, has_params ? "prerequisite checks failed" : "no parameter sets");
  const bool same_ic = ck.run("parameters.az_ic_orbit", has_params && links, [&](auto& bad) {
    for (const auto& [id, sp] : by_id) {
      const auto partner_set = by_id.at(sp.second->az).first;
      if (b.parameter_sets[partner_set].ic_orbit != b.parameter_sets[sp.first].ic_orbit)
        bad.push_back(id + " (" + b.parameter_sets[sp.first].ic_orbit + ") -> " + sp.second->az + " (" +
                      b.parameter_sets[partner_set].ic_orbit + ")");
    }
  }, has_params ? "prerequisite checks failed" : "no parameter sets");
  ck.run("parameters.n_below_ic", has_params && param_labels, [&](auto& bad) {
    for (const auto& s : b.parameter_sets) {
      const auto ic = *dual_poset->find(s.ic_orbit);
      for (const auto& p : s.parameters) {
        if (!dual_poset->leq(*dual_poset->find(p.n_orbit), ic)) bad.push_back(p.id + ": " + p.n_orbit + " not <= " + s.ic_orbit);
      }
    }
  }, has_params ? no_dual : "no parameter sets");

  // Packet-level consequences; these need everything above.
  const bool packets_ready = has_params && achar_ready && param_labels && involution && same_ic;
  std::vector<ParameterSet> sets;
  if (packets_ready) {
    try {
      for (const auto& s : b.parameter_sets) {
        std::vector<Parameter> params;
        const Orbit ic(*dual_poset, s.ic_orbit);
        for (const auto& p : s.parameters)
          params.push_back({p.id, ic, Orbit(*dual_poset, p.n_orbit), p.rho, p.iwahori, p.unitary, p.az});
        sets.emplace_back(ic, std::move(params));
      }
    } catch (const Error&) {
      sets.clear();
    }
  }
  const bool sets_ready = packets_ready && sets.size() == b.parameter_sets.size();
  const std::string packet_skip = has_params ? "prerequisite checks failed" : "no parameter sets";
  ck.run("packets.arthur_consistent", sets_ready, [&](auto&) {
    for (const auto& s : sets) (void)arthur_packet(s, *ad);
  }, packet_skip);
  ck.run("packets.weak_consistent", sets_ready, [&](auto&) {
    for (const auto& s : sets) (void)weak_packet(s, *ad);
  }, packet_skip);
  ck.run("packets.jiang", sets_ready, [&](auto& bad) {
    for (const auto& s : sets) {
      auto rep = check_jiang(s, *ad);
      if (!rep.error.empty()) bad.push_back(rep.error);
      for (const auto& r : rep.rows) {
        if (!r.equal) bad.push_back(r.id + " has geometric WF " + r.geometric_wf + ", expected " + rep.expected);
      }
      for (const auto& id : rep.lower_bound_failures) bad.push_back(id + " violates the CUWF lower bound");
    }
  }, packet_skip);

  const bool has_cd = b.conjectural_decomposition.has_value();
  ck.run("conjectural_decomposition.non_authoritative", has_cd, [&](auto& bad) {
    if (b.conjectural_decomposition->authoritative) bad.push_back("marked authoritative");
  }, "absent");
  ck.run("conjectural_decomposition.references", has_cd && dual_poset != nullptr, [&](auto& bad) {
    const auto& cd = *b.conjectural_decomposition;
    if (!dual_poset->find(cd.ic_orbit)) bad.push_back("ic_orbit " + cd.ic_orbit);
    for (const auto& p : cd.pieces) {
      if (!dual_poset->find(p.lan)) bad.push_back("orbit " + p.lan);
      if (!dual_poset->find(p.art)) bad.push_back("orbit " + p.art);
      for (const auto& id : p.members) {
        if (!by_id.count(id)) bad.push_back("parameter " + id);
      }
    }
  }, has_cd ? no_dual : "absent");
  return rep;
}

// Loading --------------------------------------------------------------------

struct LoadedBundle {
  GroupBundle bundle;
  std::optional<GroupBundle> dual_bundle;
  Model model;
};

/// Parses, validates and builds. Throws ParseError, SchemaError or
/// ValidationError (naming every failed check).
inline LoadedBundle load_bundle(std::string_view doc, std::optional<std::string_view> dual_doc = std::nullopt) {
  GroupBundle b = parse_bundle(doc);
  std::optional<GroupBundle> db;
  if (dual_doc && !b.self_dual()) db = parse_bundle(*dual_doc);
  ValidationReport rep = validate_bundle(b, db ? &*db : nullptr);
  if (!rep.pass()) {
    auto failed = rep.failed();
    throw ValidationError("bundle " + b.group.name + " failed validation: " + text::join(failed, ", "), failed);
  }
  Model m = build_model(b, db ? &*db : nullptr);
  return {std::move(b), std::move(db), std::move(m)};
}

inline LoadedBundle load_bundle_file(const std::string& path, const std::optional<std::string>& dual_path = std::nullopt) {
  const std::string doc = read_file(path);
  if (dual_path) {
    const std::string dual_doc = read_file(*dual_path);
    return load_bundle(doc, std::string_view(dual_doc));
  }
  return load_bundle(doc);
}

/// Generated bundle for type A_rank: partitions as labels, dominance closure,
/// trivial canonical quotients, d_S = transpose.
inline GroupBundle make_type_a_bundle(int rank) {
  const OrbitPoset p = classical::make_poset(FamilyKind::A, rank);
  GroupBundle b;
  b.group = {p.group_name(), p.group_name(), {}};
  for (int i = 1; i <= rank; ++i) b.group.node_order.push_back("alpha" + std::to_string(i));
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& info = p.info(i);
    std::vector<int> w;
    for (int v : info.weighted_dynkin->doubled()) w.push_back(v / 2);
    b.orbits.push_back({info.label, info.dim, w, true});
    b.bar_a[info.label] = {std::string(kTrivialClass)};
    b.d_s.push_back({info.label, std::string(kTrivialClass), transpose(*info.partition).to_string()});
  }
  for (auto [lo, hi] : p.relation().covers()) b.closure.emplace_back(p.label(lo), p.label(hi));
  b.provenance["orbits"] = "partitions of " + std::to_string(rank + 1) + ", closure by dominance";
  b.provenance["d_s"] = "type A: every canonical quotient is trivial and d_S is the transpose";
  return b;
}

}  // namespace orbitdual

#endif  // ORBITDUAL_DATA_HPP
