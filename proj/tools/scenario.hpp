#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dsmt/dynamic.hpp"
#include "dsmt/error.hpp"
#include "dsmt/exprparse.hpp"
#include "format.hpp"

namespace dsmt::cli {

struct MixtureEntry {
  std::vector<std::string> constraints;
  double probability = 0.0;
};

// The first stage carries the top-level frame, sources and constraints; each
// event becomes one more stage.
struct Scenario {
  std::vector<Stage> stages;
  bool smets_mode = false;
  std::vector<MixtureEntry> mixture;
};

// EMPTY names the empty proposition, which the grammar does not express.
inline Proposition parse_key(const Frame& frame, std::string_view text) {
  if (text == "EMPTY") return empty_proposition(frame);
  return parse(frame, text);
}

namespace detail {

using nlohmann::json;

inline const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw Error(Errc::kInvalidScenario, where + ": missing \"" + key + "\"");
  return j.at(key);
}

inline std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw Error(Errc::kInvalidScenario, where + ": expected a list of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw Error(Errc::kInvalidScenario, where + ": expected a string");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline double decimal(const json& j, const std::string& where) {
  if (j.is_string()) return parse_decimal(j.get<std::string>());
  throw Error(Errc::kInvalidScenario, where + ": masses and probabilities are decimal strings");
}

inline NamedSource source(const json& j, const Frame& frame, bool smets, const std::string& where) {
  NamedSource out;
  const json& name = require(j, "name", where);
  if (!name.is_string()) throw Error(Errc::kInvalidScenario, where + ": \"name\" must be a string");
  out.name = name.get<std::string>();
  std::string here = where + " '" + out.name + "'";
  out.masses = MassAssignment(frame, smets);
  const json& masses = require(j, "masses", here);
  if (!masses.is_array()) throw Error(Errc::kInvalidScenario, here + ": \"masses\" must be a list");
  for (const auto& m : masses) {
    const json& prop = require(m, "prop", here);
    if (!prop.is_string()) throw Error(Errc::kInvalidScenario, here + ": \"prop\" must be a string");
    out.masses.add(parse_key(frame, prop.get<std::string>()), decimal(require(m, "mass", here), here));
  }
  return out;
}

}  // namespace detail

inline Scenario load_scenario(const nlohmann::json& j) {
  using detail::require;
  if (!j.is_object()) throw Error(Errc::kInvalidScenario, "scenario must be a JSON object");
  Scenario sc;
  if (j.contains("smets_mode")) {
    if (!j["smets_mode"].is_boolean())
      throw Error(Errc::kInvalidScenario, "\"smets_mode\" must be a boolean");
    sc.smets_mode = j["smets_mode"].get<bool>();
  }

  std::vector<std::string> names = detail::string_list(require(j, "frame", "scenario"), "frame");
  Frame frame = build_frame(names);

  Stage first;
  first.label = "initial";
  first.add_elements = names;
  if (j.contains("sources")) {
    if (!j["sources"].is_array()) throw Error(Errc::kInvalidScenario, "\"sources\" must be a list");
    for (const auto& s : j["sources"])
      first.add_sources.push_back(detail::source(s, frame, sc.smets_mode, "source"));
  }
  if (j.contains("constraints"))
    first.set_constraints = detail::string_list(j["constraints"], "constraints");
  sc.stages.push_back(std::move(first));

  if (j.contains("events")) {
    if (!j["events"].is_array()) throw Error(Errc::kInvalidScenario, "\"events\" must be a list");
    for (const auto& e : j["events"]) {
      Stage st;
      const auto& at = require(e, "at", "event");
      if (!at.is_string()) throw Error(Errc::kInvalidScenario, "event: \"at\" must be a string");
      st.label = at.get<std::string>();
      std::string where = "event '" + st.label + "'";
      if (e.contains("add_elements")) {
        st.add_elements = detail::string_list(e["add_elements"], where);
        for (const auto& n : st.add_elements) names.push_back(n);
        frame = build_frame(names);
      }
      if (e.contains("add_source"))
        st.add_sources.push_back(detail::source(e["add_source"], frame, sc.smets_mode, where));
      if (e.contains("set_constraints"))
        st.set_constraints = detail::string_list(e["set_constraints"], where);
      sc.stages.push_back(std::move(st));
    }
  }

  if (j.contains("mixture")) {
    if (!j["mixture"].is_array()) throw Error(Errc::kInvalidScenario, "\"mixture\" must be a list");
    for (const auto& e : j["mixture"]) {
      MixtureEntry me;
      me.constraints = detail::string_list(require(e, "constraints", "mixture"), "mixture");
      me.probability = detail::decimal(require(e, "probability", "mixture"), "mixture");
      sc.mixture.push_back(std::move(me));
    }
  }
  return sc;
}

inline Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::kInvalidScenario, "cannot open '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::kInvalidScenario, path + ": " + e.what());
  }
  return load_scenario(j);
}

}  // namespace dsmt::cli
