// Broken variants of the shipped F4 bundle, one per validator check.
#ifndef ORBITDUAL_TESTS_FIXTURES_HPP
#define ORBITDUAL_TESTS_FIXTURES_HPP

#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "orbitdual/data.hpp"

namespace testsupport {

using orbitdual::json;

inline json& orbit_record(json& j, const std::string& label) {
  for (auto& o : j["orbits"]) {
    if (o["label"] == label) return o;
  }
  throw std::runtime_error("no orbit " + label);
}

inline json& sommers_entry(json& j, const std::string& orbit, const std::string& cls) {
  for (auto& e : j["d_s"]) {
    if (e["orbit"] == orbit && e["class"] == cls) return e;
  }
  throw std::runtime_error("no d_s entry");
}

inline json& parameter(json& j, const std::string& id) {
  for (auto& s : j["parameter_sets"])
    for (auto& p : s["parameters"]) {
      if (p["id"] == id) return p;
    }
  throw std::runtime_error("no parameter " + id);
}

inline void erase_where(json& arr, const std::function<bool(const json&)>& pred) {
  json out = json::array();
  for (auto& e : arr) {
    if (!pred(e)) out.push_back(e);
  }
  arr = out;
}

inline void add_class(json& j, const std::string& orbit, const std::string& cls, const std::string& dual) {
  j["bar_a"][orbit].push_back(cls);
  j["d_s"].push_back({{"orbit", orbit}, {"class", cls}, {"dual", dual}});
}

/// Checks that hold by construction once their prerequisites pass: d is read
/// off the trivial-class column of d_S, and with an injective embedding and a
/// unique minimal special cover, D^2 is the cover map, which gives D^3 = D,
/// order reversal and the involution on special pairs.
inline const std::vector<std::string>& implied_checks() {
  static const std::vector<std::string> names = {"duality.construct", "duality.sommers_trivial", "duality.achar_cube",
                                                 "duality.achar_order_reversing", "duality.achar_special_involution"};
  return names;
}

struct Fixture {
  std::string check;
  std::function<void(json&)> mutate;
};

inline void PrintTo(const Fixture& f, std::ostream* os) { *os << f.check; }

/// Each mutation must make the named check fail.
inline const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> all = {
    {"format.version", [](json& j) { j["format_version"] = 2; }},
    {"group.root_system", [](json& j) { j["group"]["root_system"] = "F5"; }},
    {"group.node_order", [](json& j) { j["group"]["node_order"].erase(3); }},
    {"labels.unique", [](json& j) { j["orbits"].push_back(j["orbits"][1]); }},
    {"closure.labels", [](json& j) { j["closure"].push_back({"E6", "F4"}); }},
    {"closure.antisymmetry", [](json& j) { j["closure"].push_back({"F4", "A1"}); }},
    {"closure.minimum", [](json& j) { erase_where(j["closure"], [](const json& p) { return p[0] == "0"; }); }},
    {"closure.maximum", [](json& j) { erase_where(j["closure"], [](const json& p) { return p[1] == "F4"; }); }},
    {"closure.dimension", [](json& j) { orbit_record(j, "A1")["dim"] = 50; }},
    {"weighted_dynkin.length", [](json& j) { orbit_record(j, "A1")["weighted_dynkin"] = {1, 0, 0}; }},
    {"weighted_dynkin.range", [](json& j) { orbit_record(j, "A1")["weighted_dynkin"] = {3, 0, 0, 0}; }},
    {"weighted_dynkin.dominant", [](json& j) { orbit_record(j, "A1")["weighted_dynkin"] = {-1, 0, 0, 0}; }},
    {"weighted_dynkin.unique", [](json& j) { orbit_record(j, "A2")["weighted_dynkin"] = {0, 0, 0, 2}; }},
    {"bar_a.coverage", [](json& j) { j["bar_a"].erase("B2"); }},
    {"bar_a.trivial_class", [](json& j) { j["bar_a"]["F4(a3)"].erase(0); }},
    {"provenance.present", [](json& j) { j["provenance"].erase("d_s"); }},
    {"d_s.labels", [](json& j) { sommers_entry(j, "A2", "1")["dual"] = "E8"; }},
    {"d_s.functional", [](json& j) { j["d_s"].push_back(sommers_entry(j, "B2", "1")); }},
    {"d_s.totality",
     [](json& j) { erase_where(j["d_s"], [](const json& e) { return e["orbit"] == "F4(a3)" && e["class"] == "(123)"; }); }},
    {"d_s.surjectivity", [](json& j) { sommers_entry(j, "F4(a3)", "(12)")["dual"] = "F4(a3)"; }},
    {"d.cube", [](json& j) { sommers_entry(j, "F4", "1")["dual"] = "A1"; }},
    {"d.order_reversing", [](json& j) { sommers_entry(j, "F4(a2)", "1")["dual"] = "A2"; }},
    {"special.flags", [](json& j) { orbit_record(j, "F4(a3)")["special"] = false; }},
    {"special.extremes", [](json& j) { sommers_entry(j, "F4", "1")["dual"] = "A1"; }},
    {"duality.embed_injective", [](json& j) { sommers_entry(j, "F4(a3)", "(12)")["dual"] = "F4(a3)"; }},
    {"d.special_involution", [](json& j) { sommers_entry(j, "A1+~A1", "1")["dual"] = "F4(a1)"; }},
    {"special_pieces.partition", [](json& j) { sommers_entry(j, "A1", "1")["dual"] = "F4"; }},
    // A new class of A1 whose d_S is B3: its minimal special cover flips to a
    // pair outside the image.
    {"duality.achar_defined", [](json& j) { add_class(j, "A1", "(99)", "B3"); }},
    {"duality.pr1_sommers", [](json& j) { add_class(j, "B3", "(99)", "A2"); }},
    {"parameters.ids_unique", [](json& j) { parameter(j, "X3")["id"] = "X2"; }},
    {"parameters.labels", [](json& j) { parameter(j, "X6")["n_orbit"] = "E8"; }},
    {"parameters.az_links", [](json& j) { parameter(j, "X9")["az"] = "X99"; }},
    {"parameters.az_involution", [](json& j) { parameter(j, "X9")["az"] = "X8"; }},
    {"parameters.az_ic_orbit",
     [](json& j) {
       auto& params = j["parameter_sets"][0]["parameters"];
       json moved = json::array();
       moved.push_back(params[0]);  // X1, whose partner X20 stays behind
       params.erase(0);
       j["parameter_sets"].push_back({{"ic_orbit", "F4"}, {"parameters", moved}});
     }},
    {"parameters.n_below_ic", [](json& j) { parameter(j, "X6")["n_orbit"] = "F4"; }},
    // An n-orbit above ic puts X20's CUWF at (0,1): inside the CUWF bound
    // although its AZ partner X1 is no longer tempered.
    {"packets.arthur_consistent", [](json& j) { parameter(j, "X1")["n_orbit"] = "F4"; }},
    {"packets.weak_consistent", [](json& j) { parameter(j, "X1")["n_orbit"] = "F4"; }},
    {"packets.jiang", [](json& j) { parameter(j, "X1")["n_orbit"] = "F4"; }},
    {"conjectural_decomposition.non_authoritative",
     [](json& j) { j["conjectural_decomposition"]["authoritative"] = true; }},
    {"conjectural_decomposition.references",
     [](json& j) { j["conjectural_decomposition"]["pieces"][0]["members"].push_back("X42"); }},
  };
  return all;
}

}  // namespace testsupport

#endif  // ORBITDUAL_TESTS_FIXTURES_HPP
