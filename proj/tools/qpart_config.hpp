#pragma once

// Run configuration for the qpart CLI: a single JSON document with sections
// system, thermal, grid, quad, bath, output. Every field has a default;
// unknown keys are rejected so silent typos cannot change a sweep.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace qcli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct KernelConfig {
  std::string model = "drude";  // drude, strict_ohmic, algebraic_cutoff
  double gamma0 = 1.0;
  double omega_c = 10.0;  // ignored for strict_ohmic
};

struct SystemConfig {
  double mass = 1.0;
  double omega0 = 0.0;  // 0 selects the free particle
  KernelConfig kernel;
};

struct ThermalConfig {
  std::vector<double> temperatures = {1.0};
  double hbar = 1.0;
  double kB = 1.0;
};

struct GridConfig {
  double omega_max = 50.0;
  std::size_t n_points = 2000;
  std::string spacing = "linear";  // linear or log
  double omega_min = 0.0;          // log spacing only; 0 selects the default
};

struct QuadConfig {
  double tolerance = 1e-10;
  double omega_max = 0.0;  // 0 = automatic cutoff
  std::size_t max_intervals = 4000;
};

struct BathConfig {
  std::size_t n_modes = 2000;
  double omega_max = 400.0;
  double epsilon = 1e-3;  // pinning substituted for omega0 = 0 in bath-compare
  bool counter_term = true;
  double rel_gate = 0.005;  // bath-compare failure threshold on rel_err
};

struct OutputConfig {
  std::string path;    // empty = stdout
  std::string format;  // csv, json, or empty for the per-command default
};

struct RunConfig {
  SystemConfig system;
  ThermalConfig thermal;
  GridConfig grid;
  QuadConfig quad;
  BathConfig bath;
  OutputConfig output;
};

namespace detail {

using nlohmann::json;

inline void check_keys(const json& j, std::initializer_list<const char*> allowed,
                       const char* where) {
  if (!j.is_object()) throw ConfigError(std::string(where) + " must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) known = true;
    if (!known) throw ConfigError("unknown key '" + it.key() + "' in " + where);
  }
}

inline double read_double(const json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw ConfigError(std::string(key) + " must be a number");
  return j.at(key).get<double>();
}

inline std::size_t read_size(const json& j, const char* key, std::size_t fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_unsigned())
    throw ConfigError(std::string(key) + " must be a nonnegative integer");
  return j.at(key).get<std::size_t>();
}

inline bool read_bool(const json& j, const char* key, bool fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_boolean()) throw ConfigError(std::string(key) + " must be a boolean");
  return j.at(key).get<bool>();
}

inline std::string read_string(const json& j, const char* key, const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_string()) throw ConfigError(std::string(key) + " must be a string");
  return j.at(key).get<std::string>();
}

}  // namespace detail

inline RunConfig parse_config(const nlohmann::json& j) {
  using namespace detail;
  RunConfig c;
  check_keys(j, {"system", "thermal", "grid", "quad", "bath", "output"}, "config root");

  if (j.contains("system")) {
    const auto& s = j.at("system");
    check_keys(s, {"mass", "omega0", "kernel"}, "system");
    c.system.mass = read_double(s, "mass", c.system.mass);
    c.system.omega0 = read_double(s, "omega0", c.system.omega0);
    if (s.contains("kernel")) {
      const auto& k = s.at("kernel");
      check_keys(k, {"model", "gamma0", "omega_c"}, "system.kernel");
      c.system.kernel.model = read_string(k, "model", c.system.kernel.model);
      c.system.kernel.gamma0 = read_double(k, "gamma0", c.system.kernel.gamma0);
      c.system.kernel.omega_c = read_double(k, "omega_c", c.system.kernel.omega_c);
    }
  }
  if (j.contains("thermal")) {
    const auto& t = j.at("thermal");
    check_keys(t, {"temperatures", "hbar", "kB"}, "thermal");
    if (t.contains("temperatures")) {
      if (!t.at("temperatures").is_array())
        throw ConfigError("thermal.temperatures must be an array of numbers");
      c.thermal.temperatures.clear();
      for (const auto& v : t.at("temperatures")) {
        if (!v.is_number()) throw ConfigError("thermal.temperatures must be an array of numbers");
        c.thermal.temperatures.push_back(v.get<double>());
      }
    }
    c.thermal.hbar = read_double(t, "hbar", c.thermal.hbar);
    c.thermal.kB = read_double(t, "kB", c.thermal.kB);
  }
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    check_keys(g, {"omega_max", "n_points", "spacing", "omega_min"}, "grid");
    c.grid.omega_max = read_double(g, "omega_max", c.grid.omega_max);
    c.grid.n_points = read_size(g, "n_points", c.grid.n_points);
    c.grid.spacing = read_string(g, "spacing", c.grid.spacing);
    c.grid.omega_min = read_double(g, "omega_min", c.grid.omega_min);
  }
  if (j.contains("quad")) {
    const auto& q = j.at("quad");
    check_keys(q, {"tolerance", "omega_max", "max_intervals"}, "quad");
    c.quad.tolerance = read_double(q, "tolerance", c.quad.tolerance);
    c.quad.omega_max = read_double(q, "omega_max", c.quad.omega_max);
    c.quad.max_intervals = read_size(q, "max_intervals", c.quad.max_intervals);
  }
  if (j.contains("bath")) {
    const auto& b = j.at("bath");
    check_keys(b, {"n_modes", "omega_max", "epsilon", "counter_term", "rel_gate"}, "bath");
    c.bath.n_modes = read_size(b, "n_modes", c.bath.n_modes);
    c.bath.omega_max = read_double(b, "omega_max", c.bath.omega_max);
    c.bath.epsilon = read_double(b, "epsilon", c.bath.epsilon);
    c.bath.counter_term = read_bool(b, "counter_term", c.bath.counter_term);
    c.bath.rel_gate = read_double(b, "rel_gate", c.bath.rel_gate);
  }
  if (j.contains("output")) {
    const auto& o = j.at("output");
    check_keys(o, {"path", "format"}, "output");
    c.output.path = read_string(o, "path", c.output.path);
    c.output.format = read_string(o, "format", c.output.format);
  }

  if (c.thermal.temperatures.empty())
    throw ConfigError("thermal.temperatures must not be empty");
  for (double T : c.thermal.temperatures)
    if (!(T >= 0.0)) throw ConfigError("temperatures must be >= 0");
  if (c.grid.spacing != "linear" && c.grid.spacing != "log")
    throw ConfigError("grid.spacing must be 'linear' or 'log'");
  if (!c.output.format.empty() && c.output.format != "csv" && c.output.format != "json")
    throw ConfigError("output.format must be 'csv' or 'json'");
  if (!(c.bath.epsilon > 0.0)) throw ConfigError("bath.epsilon must be > 0");
  if (!(c.bath.rel_gate > 0.0)) throw ConfigError("bath.rel_gate must be > 0");
  return c;
}

inline nlohmann::json serialize_config(const RunConfig& c) {
  nlohmann::json j;
  j["system"] = {{"mass", c.system.mass},
                 {"omega0", c.system.omega0},
                 {"kernel",
                  {{"model", c.system.kernel.model},
                   {"gamma0", c.system.kernel.gamma0},
                   {"omega_c", c.system.kernel.omega_c}}}};
  j["thermal"] = {{"temperatures", c.thermal.temperatures},
                  {"hbar", c.thermal.hbar},
                  {"kB", c.thermal.kB}};
  j["grid"] = {{"omega_max", c.grid.omega_max},
               {"n_points", c.grid.n_points},
               {"spacing", c.grid.spacing},
               {"omega_min", c.grid.omega_min}};
  j["quad"] = {{"tolerance", c.quad.tolerance},
               {"omega_max", c.quad.omega_max},
               {"max_intervals", c.quad.max_intervals}};
  j["bath"] = {{"n_modes", c.bath.n_modes},
               {"omega_max", c.bath.omega_max},
               {"epsilon", c.bath.epsilon},
               {"counter_term", c.bath.counter_term},
               {"rel_gate", c.bath.rel_gate}};
  j["output"] = {{"path", c.output.path}, {"format", c.output.format}};
  return j;
}

}  // namespace qcli
