#ifndef ORBITDUAL_CLI_HPP
#define ORBITDUAL_CLI_HPP

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "orbitdual/data.hpp"
#include "orbitdual/duality.hpp"
#include "orbitdual/error.hpp"
#include "orbitdual/orbits.hpp"
#include "orbitdual/packets.hpp"

namespace orbitdual::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitData = 2;

namespace detail {

inline json bar_json(const BarClass& x) { return {{"orbit", x.orbit.label()}, {"class", x.class_label}}; }

inline std::vector<std::string> labels(const std::vector<Orbit>& v) {
  std::vector<std::string> out;
  for (const auto& o : v) out.push_back(o.label());
  return out;
}

struct Output {
  bool as_json = false;
  std::ostream& out;
  std::string text;
  json doc;

  void emit() const {
    if (as_json)
      out << doc.dump(2) << "\n";
    else
      out << text;
  }
};

}  // namespace detail

/// Runs one invocation. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nilpotent-orbit dualities, wavefront sets and unipotent Arthur packets over data bundles",
               "orbitdual"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string bundle_path, dual_path, format = "text";
  app.add_option("--bundle", bundle_path, "Group bundle (JSON)")->required();
  app.add_option("--dual-bundle", dual_path, "Dual group bundle (defaults to the group itself when self-dual)");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  std::string a1, a2;
  auto* dual = app.add_subcommand("dual", "Print d(ORBIT)");
  dual->add_option("orbit", a1)->required();
  auto* achar = app.add_subcommand("achar-dual", "Print D((ORBIT, CLASS))");
  achar->add_option("orbit", a1)->required();
  achar->add_option("class", a2)->required();
  auto* closure = app.add_subcommand("closure", "Print whether A <= B in the closure order");
  closure->add_option("a", a1)->required();
  closure->add_option("b", a2)->required();
  auto* piece = app.add_subcommand("special-piece", "Print the special piece containing ORBIT");
  piece->add_option("orbit", a1)->required();
  auto* cuwf_cmd = app.add_subcommand("cuwf", "Print the CUWF and geometric wavefront set of a parameter");
  cuwf_cmd->add_option("id", a1)->required();
  auto* packet = app.add_subcommand("packet", "Print the Arthur packet of an infinitesimal-character orbit");
  packet->add_option("ic_orbit", a1)->required();
  auto* weak = app.add_subcommand("weak-packet", "Print the weak Arthur packet of an infinitesimal-character orbit");
  weak->add_option("ic_orbit", a1)->required();
  auto* verify = app.add_subcommand("verify", "Run every bundle check and the Jiang check");
  auto* list = app.add_subcommand("list", "List orbits, classes and parameters");
  list->add_option("what", a1, "orbits | parameters (default: both)")->check(CLI::IsMember({"orbits", "parameters"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }

  detail::Output o{format == "json", out, {}, json::object()};
  try {
    const std::string doc = read_file(bundle_path);
    std::optional<std::string> dual_doc;
    if (!dual_path.empty()) dual_doc = read_file(dual_path);

    if (verify->parsed()) {
      GroupBundle b = parse_bundle(doc);
      std::optional<GroupBundle> db;
      if (dual_doc && !b.self_dual()) db = parse_bundle(*dual_doc);
      ValidationReport rep = validate_bundle(b, db ? &*db : nullptr);
      o.doc = {{"bundle", b.group.name}, {"report", rep.to_json()}};
      o.text = rep.to_text();
      if (rep.pass()) {
        Model m = build_model(b, db ? &*db : nullptr);
        json jiang = json::array();
        for (const auto& s : m.parameter_sets) {
          auto jr = check_jiang(s, m.achar());
          std::string line = "jiang " + s.ic_orbit().label() + ": " + (jr.pass() ? "pass" : "fail");
          json members = json::array();
          for (const auto& r : jr.rows) {
            line += " " + r.id + "=" + r.geometric_wf;
            members.push_back({{"id", r.id}, {"geometric_wf", r.geometric_wf}, {"equal", r.equal}});
          }
          o.text += line + "\n";
          jiang.push_back({{"ic_orbit", s.ic_orbit().label()}, {"expected", jr.expected}, {"pass", jr.pass()},
                           {"members", members}, {"lower_bound_failures", jr.lower_bound_failures}});
        }
        o.doc["jiang"] = jiang;
      }
      o.emit();
      return rep.pass() ? kExitOk : kExitData;
    }

    LoadedBundle lb = dual_doc ? load_bundle(doc, std::string_view(*dual_doc)) : load_bundle(doc);
    const Model& m = lb.model;

    if (dual->parsed()) {
      const Orbit x(*m.group, a1);
      const Orbit y = m.orbit_duality().dual(x);
      o.text = y.label() + "\n";
      o.doc = {{"orbit", x.label()}, {"dual", y.label()}};
    } else if (achar->parsed()) {
      const BarClass x = m.achar().bar_class(*m.group, a1, a2);
      const BarClass y = m.achar().achar_dual(x);
      o.text = y.to_string() + "\n";
      o.doc = {{"input", detail::bar_json(x)}, {"dual", detail::bar_json(y)}};
    } else if (closure->parsed()) {
      const Orbit x(*m.group, a1), y(*m.group, a2);
      const bool leq = closure_leq(x, y);
      o.text = std::string(leq ? "true" : "false") + "\n";
      o.doc = {{"lower", x.label()}, {"upper", y.label()}, {"leq", leq}};
    } else if (piece->parsed()) {
      const Orbit x(*m.group, a1);
      const auto& d = m.orbit_duality();
      const Orbit top = d.special_closure(x);
      const auto members = detail::labels(d.special_piece_of(x));
      o.text = "special: " + top.label() + "\npiece: " + text::join(members, " ") + "\n";
      o.doc = {{"orbit", x.label()}, {"special", top.label()}, {"piece", members}};
    } else if (cuwf_cmd->parsed()) {
      auto [set, x] = m.parameter(a1);
      const BarClass c = cuwf(*set, *x, m.achar());
      o.text = x->id + " cuwf=" + c.to_string() + " geometric_wf=" + c.orbit.label() + "\n";
      o.doc = {{"id", x->id}, {"cuwf", detail::bar_json(c)}, {"geometric_wf", c.orbit.label()}};
    } else if (packet->parsed()) {
      const ParameterSet& s = m.parameter_set(Orbit(*m.dual_group, a1));
      const BarClass bound = cuwf_bound(s, m.achar());
      o.text = "bound: " + bound.to_string() + "\n";
      json members = json::array();
      for (const auto& x : arthur_packet(s, m.achar())) {
        const BarClass c = cuwf(s, x, m.achar());
        o.text += x.id + " " + c.to_string() + "\n";
        members.push_back({{"id", x.id}, {"cuwf", detail::bar_json(c)}});
      }
      o.doc = {{"ic_orbit", s.ic_orbit().label()}, {"bound", detail::bar_json(bound)}, {"members", members}};
    } else if (weak->parsed()) {
      const ParameterSet& s = m.parameter_set(Orbit(*m.dual_group, a1));
      const auto& d = m.orbit_duality();
      const Orbit bound = d.dual(s.ic_orbit());
      const auto piece_labels = detail::labels(d.special_piece_of(s.ic_orbit()));
      o.text = "bound: " + bound.label() + "\nspecial piece: " + text::join(piece_labels, " ") + "\n";
      json members = json::array();
      for (const auto& x : weak_packet(s, m.achar())) {
        const Orbit wf = geometric_wf(s, x, m.achar());
        const Orbit az_orbit = s.az_dual(x).n_orbit;
        o.text += x.id + " geometric_wf=" + wf.label() + " az_orbit=" + az_orbit.label() + "\n";
        members.push_back({{"id", x.id}, {"geometric_wf", wf.label()}, {"az_orbit", az_orbit.label()}});
      }
      o.doc = {{"ic_orbit", s.ic_orbit().label()}, {"bound", bound.label()}, {"special_piece", piece_labels},
               {"members", members}};
    } else if (list->parsed()) {
      const bool orbits = a1.empty() || a1 == "orbits";
      const bool params = a1.empty() || a1 == "parameters";
      if (orbits) {
        json arr = json::array();
        for (std::size_t i = 0; i < m.group->size(); ++i) {
          const Orbit x(*m.group, i);
          const auto& cls = m.achar().classes(x);
          const bool special = m.orbit_duality().is_special(x);
          o.text += "orbit " + x.label() + (x.info().dim ? " dim=" + std::to_string(*x.info().dim) : "") +
                    (special ? " special" : "") + " classes=" + text::join(cls, ",") + "\n";
          json e = {{"label", x.label()}, {"special", special}, {"classes", cls}};
          if (x.info().dim) e["dim"] = *x.info().dim;
          arr.push_back(std::move(e));
        }
        o.doc["orbits"] = std::move(arr);
      }
      if (params) {
        json arr = json::array();
        for (const auto& s : m.parameter_sets)
          for (const auto& x : s.params()) {
            o.text += "parameter " + x.id + " ic=" + x.ic_orbit.label() + " n=" + x.n_orbit.label() + " rho=" + x.rho +
                      " az=" + x.az_partner + (is_tempered(x) ? " tempered" : "") + "\n";
            arr.push_back({{"id", x.id}, {"ic_orbit", x.ic_orbit.label()}, {"n_orbit", x.n_orbit.label()},
                           {"rho", x.rho}, {"az", x.az_partner}, {"tempered", is_tempered(x)}});
          }
        o.doc["parameters"] = std::move(arr);
      }
    }
    o.emit();
    return kExitOk;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitData;
  }
}

}  // namespace orbitdual::cli

#endif  // ORBITDUAL_CLI_HPP
