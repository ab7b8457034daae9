#pragma once

// Run configuration and JSON reports shared by the command-line tools.

#include "helicap/quadrature.hpp"
#include "helicap/recognition.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace helicap {

struct Tolerances {
  double stokes = 1e-6;     // relative, Stokes and primitive independence
  double scaling = 1e-9;    // relative, h(Cσ) vs Cⁿ h(σ)
  double reference = 1e-6;  // relative, closed-form reference values
};

struct RunConfig {
  std::size_t quad_order = 32;
  std::uint64_t cap = kDefaultAssignmentCap;
  unsigned threads = 1;
  std::uint64_t seed = 0;
  std::string out;
  Tolerances tol;

  QuadratureSpec quadrature() const {
    QuadratureSpec q;
    q.order = quad_order;
    q.threads = threads;
    return q;
  }

  void validate() const {
    if (quad_order == 0) throw std::invalid_argument("config: quad_order must be positive");
    if (cap == 0) throw std::invalid_argument("config: cap must be positive");
    if (threads == 0) throw std::invalid_argument("config: threads must be positive");
    for (double t : {tol.stokes, tol.scaling, tol.reference})
      if (!(t > 0.0)) throw std::invalid_argument("config: tolerances must be positive");
  }
};

inline nlohmann::json to_json(const RunConfig& c) {
  return {{"quad_order", c.quad_order},
          {"cap", c.cap},
          {"threads", c.threads},
          {"seed", c.seed},
          {"out", c.out},
          {"tolerances", {{"stokes", c.tol.stokes}, {"scaling", c.tol.scaling}, {"reference", c.tol.reference}}}};
}

/// Fields absent from `j` keep their values in `base`.
inline RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {}) {
  if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");
  static const char* known[] = {"quad_order", "cap", "threads", "seed", "out", "tolerances"};
  for (const auto& [key, v] : j.items()) {
    bool ok = false;
    for (const char* k : known) ok = ok || key == k;
    if (!ok) throw std::invalid_argument("config: unknown field '" + key + "'");
  }
  auto uint_field = [&](const char* key, auto& dst) {
    if (!j.contains(key)) return;
    const auto& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw std::invalid_argument(std::string("config field '") + key + "': expected a non-negative integer");
    dst = v.get<std::decay_t<decltype(dst)>>();
  };
  uint_field("quad_order", base.quad_order);
  uint_field("cap", base.cap);
  uint_field("threads", base.threads);
  uint_field("seed", base.seed);
  if (j.contains("out")) {
    if (!j.at("out").is_string()) throw std::invalid_argument("config field 'out': expected a string");
    base.out = j.at("out").get<std::string>();
  }
  if (j.contains("tolerances")) {
    const auto& t = j.at("tolerances");
    if (!t.is_object()) throw std::invalid_argument("config field 'tolerances': expected an object");
    for (const auto& [key, v] : t.items()) {
      if (!v.is_number()) throw std::invalid_argument("config field 'tolerances." + key + "': expected a number");
      if (key == "stokes")
        base.tol.stokes = v.get<double>();
      else if (key == "scaling")
        base.tol.scaling = v.get<double>();
      else if (key == "reference")
        base.tol.reference = v.get<double>();
      else
        throw std::invalid_argument("config: unknown field 'tolerances." + key + "'");
    }
  }
  base.validate();
  return base;
}

inline RunConfig load_config(const std::string& path, RunConfig base = {}) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(ss.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("config: malformed JSON: ") + e.what());
  }
  return config_from_json(j, base);
}

/// A command's record: echo, config, inputs, outputs, derivations, checks.
/// Wall-clock time lives under "timing" and is the only non-deterministic field.
class Report {
 public:
  Report(std::string command, const RunConfig& cfg) : start_(std::chrono::steady_clock::now()) {
    j_["command"] = std::move(command);
    j_["config"] = to_json(cfg);
    j_["inputs"] = nlohmann::json::object();
    j_["outputs"] = nlohmann::json::object();
    j_["derivations"] = nlohmann::json::object();
    j_["checks"] = nlohmann::json::array();
  }

  nlohmann::json& inputs() { return j_["inputs"]; }
  nlohmann::json& outputs() { return j_["outputs"]; }
  nlohmann::json& derivations() { return j_["derivations"]; }

  void check(const std::string& name, bool pass, nlohmann::json detail = nullptr) {
    nlohmann::json c{{"name", name}, {"pass", pass}};
    if (!detail.is_null()) c["detail"] = std::move(detail);
    j_["checks"].push_back(std::move(c));
  }

  bool pass() const {
    for (const auto& c : j_.at("checks"))
      if (!c.at("pass").get<bool>()) return false;
    return true;
  }

  /// Report JSON with pass flag and timing filled in.
  nlohmann::json finish() const {
    nlohmann::json out = j_;
    out["pass"] = pass();
    out["timing"] = {
        {"wall_clock_s", std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count()}};
    return out;
  }

  /// Same without the timing field, for reproducibility comparisons.
  nlohmann::json deterministic() const {
    nlohmann::json out = j_;
    out["pass"] = pass();
    return out;
  }

 private:
  nlohmann::json j_;
  std::chrono::steady_clock::time_point start_;
};

/// Appends one JSON line to `path`.
inline void append_report(const std::string& path, const nlohmann::json& report) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("report: cannot open '" + path + "' for appending");
  out << report.dump() << "\n";
}

}  // namespace helicap
