// qpart: partition density, kinetic energy sweeps, verification checks, and
// finite-bath oracle comparisons for dissipative quantum systems.
//
// Exit codes: 0 success, 1 check failure, 2 config error, 3 numerical error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qpart/qpart.h"
#include "qpart_config.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheck = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// %.17g prints nan/inf, which JSON cannot carry; those become null.
std::string json_num(double x) { return std::isfinite(x) ? fmt(x) : "null"; }

std::string json_str(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += "\"";
  return out;
}

std::string csv_str(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    out += c;
    if (c == '"') out += '"';
  }
  out += "\"";
  return out;
}

std::string join_json_rows(const std::vector<std::string>& rows) {
  std::string out = "[\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    out += "  " + rows[i];
    if (i + 1 < rows.size()) out += ",";
    out += "\n";
  }
  out += "]\n";
  return out;
}

int status_exit(qpart_status st) {
  return st == QPART_ERR_INVALID ? kExitConfig : kExitNumeric;
}

int report_error(const char* what, qpart_status st) {
  std::fprintf(stderr, "qpart: %s: %s\n", what, qpart_last_error());
  return status_exit(st);
}

struct Handles {
  qpart_kernel* kernel = nullptr;
  qpart_system* system = nullptr;
  qpart_bath* bath = nullptr;
  qpart_modes* modes = nullptr;
  ~Handles() {
    qpart_modes_destroy(modes);
    qpart_bath_destroy(bath);
    qpart_system_destroy(system);
    qpart_kernel_destroy(kernel);
  }
};

int open_system(const qcli::RunConfig& cfg, double omega0, Handles& h) {
  qpart_status st = qpart_kernel_create(cfg.system.kernel.model.c_str(), cfg.system.kernel.gamma0,
                                        cfg.system.kernel.omega_c, &h.kernel);
  if (st != QPART_OK) return report_error("kernel", st);
  st = qpart_system_create(h.kernel, cfg.system.mass, omega0, &h.system);
  if (st != QPART_OK) return report_error("system", st);
  return kExitOk;
}

qpart_quad_spec to_quad(const qcli::QuadConfig& q) {
  return {q.tolerance, q.omega_max, q.max_intervals};
}

// Emits the whole artifact in one write so a failure cannot leave half a table.
int emit(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    std::cout.flush();
    return std::cout.fail() ? kExitConfig : kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  out << body;
  out.flush();
  if (out.fail()) {
    std::fprintf(stderr, "qpart: cannot write %s\n", path.c_str());
    return kExitConfig;
  }
  return kExitOk;
}

int cmd_pdensity(const qcli::RunConfig& cfg, const std::string& path, const std::string& format) {
  Handles h;
  if (int rc = open_system(cfg, cfg.system.omega0, h)) return rc;

  qpart_grid_spec grid{cfg.grid.omega_max, cfg.grid.n_points, cfg.grid.spacing == "log" ? 1 : 0,
                       cfg.grid.omega_min};
  qpart_density* density = nullptr;
  qpart_status st = qpart_partition_density(h.system, &grid, &density);
  if (st != QPART_OK) return report_error("partition density", st);

  qpart_quad_spec quad = to_quad(cfg.quad);
  double norm = 0.0;
  st = qpart_normalization(h.system, &quad, &norm);
  if (st == QPART_OK)
    std::fprintf(stderr, "normalization = %s\n", fmt(norm).c_str());
  else
    std::fprintf(stderr, "normalization estimate unavailable: %s\n", qpart_last_error());

  double T0 = cfg.thermal.temperatures.front();
  size_t n = 0;
  qpart_density_size(density, &n);
  std::string body;
  std::vector<std::string> rows;
  for (size_t i = 0; i < n; ++i) {
    double w = 0.0, p = 0.0, ek = std::nan("");
    qpart_density_point(density, i, &w, &p);
    double tmp = 0.0;
    if (qpart_kinetic_per_mode(T0, cfg.thermal.hbar, cfg.thermal.kB, w, &tmp) == QPART_OK)
      ek = tmp;
    if (format == "csv")
      rows.push_back(fmt(w) + "," + fmt(p) + "," + fmt(ek));
    else
      rows.push_back("{\"omega\":" + fmt(w) + ",\"P\":" + fmt(p) +
                     ",\"Ek_mode\":" + json_num(ek) + "}");
  }
  qpart_density_destroy(density);
  if (format == "csv") {
    body = "omega,P,Ek_mode\n";
    for (const auto& r : rows) body += r + "\n";
  } else {
    body = join_json_rows(rows);
  }
  return emit(path, body);
}

int cmd_energy(const qcli::RunConfig& cfg, const std::string& path, const std::string& format) {
  Handles h;
  if (int rc = open_system(cfg, cfg.system.omega0, h)) return rc;

  struct Point {
    qpart_status st;
    qpart_energy e;
    std::string msg;
  };
  qpart_quad_spec quad = to_quad(cfg.quad);
  const qpart_system* sys = h.system;

  // Sweep points run concurrently; rows are emitted in input order.
  std::vector<std::future<Point>> futures;
  for (double T : cfg.thermal.temperatures)
    futures.push_back(std::async(std::launch::async, [sys, T, &cfg, &quad] {
      Point p{};
      p.st = qpart_mean_kinetic_energy(sys, T, cfg.thermal.hbar, cfg.thermal.kB, &quad, &p.e);
      if (p.st != QPART_OK) p.msg = qpart_last_error();
      return p;
    }));

  bool any_failed = false;
  std::vector<std::string> rows;
  for (size_t i = 0; i < futures.size(); ++i) {
    Point p = futures[i].get();
    double T = cfg.thermal.temperatures[i];
    if (p.st == QPART_ERR_INVALID) {
      std::fprintf(stderr, "qpart: energy: %s\n", p.msg.c_str());
      return kExitConfig;
    }
    if (format == "csv") {
      if (p.st == QPART_OK)
        rows.push_back(fmt(T) + "," + fmt(p.e.kinetic_energy) + "," + fmt(p.e.p_squared) + "," +
                       fmt(p.e.quad_error));
      else
        rows.push_back(fmt(T) + ",nan,nan,inf");
    } else {
      if (p.st == QPART_OK)
        rows.push_back("{\"T\":" + fmt(T) + ",\"Ek\":" + fmt(p.e.kinetic_energy) +
                       ",\"p2\":" + fmt(p.e.p_squared) + ",\"quad_err\":" + fmt(p.e.quad_error) +
                       ",\"omega_cut\":" + fmt(p.e.omega_cut) +
                       ",\"truncated\":" + (p.e.truncated ? "true" : "false") +
                       ",\"status\":\"ok\"}");
      else
        rows.push_back("{\"T\":" + fmt(T) +
                       ",\"Ek\":null,\"p2\":null,\"quad_err\":null,\"omega_cut\":null,"
                       "\"truncated\":null,\"status\":" +
                       json_str((p.st == QPART_ERR_DIVERGENT ? "divergent: " : "error: ") + p.msg) +
                       "}");
    }
    if (p.st != QPART_OK) {
      std::fprintf(stderr, "qpart: energy at T = %s: %s\n", fmt(T).c_str(), p.msg.c_str());
      any_failed = true;
    }
  }
  std::string body;
  if (format == "csv") {
    body = "T,Ek,p2,quad_err\n";
    for (const auto& r : rows) body += r + "\n";
  } else {
    body = join_json_rows(rows);
  }
  if (int rc = emit(path, body)) return rc;
  return any_failed ? kExitNumeric : kExitOk;
}

std::string report_row(const qpart_report& r, const std::string& format) {
  std::string name(r.check_name);
  if (format == "csv")
    return csv_str(name) + "," + fmt(r.expected) + "," + fmt(r.computed) + "," +
           fmt(r.tolerance) + "," + (r.passed ? "1" : "0");
  return "{\"check_name\":" + json_str(name) + ",\"expected\":" + fmt(r.expected) +
         ",\"computed\":" + fmt(r.computed) + ",\"tolerance\":" + fmt(r.tolerance) +
         ",\"passed\":" + (r.passed ? "true" : "false") + "}";
}

int cmd_verify(const std::string& path, const std::string& format, bool sabotage) {
  qpart_verify_options opt{1.0};
  // Regression drill: drop the 1/M from the sum-rule prefactor, which the
  // non-unit-mass systems in the suite must catch.
  if (sabotage) opt.prefactor_scale = 2.5;
  qpart_report* reports = nullptr;
  size_t count = 0;
  qpart_status st = qpart_default_suite(&opt, &reports, &count);
  if (st != QPART_OK) return report_error("verify", st);

  size_t failed = 0;
  std::vector<std::string> rows;
  for (size_t i = 0; i < count; ++i) {
    rows.push_back(report_row(reports[i], format));
    if (!reports[i].passed) {
      ++failed;
      std::fprintf(stderr, "qpart: check failed: %s (computed %s, expected %s)\n",
                   reports[i].check_name, fmt(reports[i].computed).c_str(),
                   fmt(reports[i].expected).c_str());
    }
  }
  qpart_reports_destroy(reports);
  std::string body;
  if (format == "csv") {
    body = "check_name,expected,computed,tolerance,passed\n";
    for (const auto& r : rows) body += r + "\n";
  } else {
    body = join_json_rows(rows);
  }
  if (int rc = emit(path, body)) return rc;
  return failed ? kExitCheck : kExitOk;
}

int cmd_bath_compare(const qcli::RunConfig& cfg, const std::string& path,
                     const std::string& format) {
  // The finite bath needs a pinned system; a free particle is approximated by
  // the configured epsilon pinning on the oracle side only.
  bool free_particle = cfg.system.omega0 == 0.0;
  double omega0_bath = free_particle ? cfg.bath.epsilon : cfg.system.omega0;
  double epsilon_out = free_particle ? cfg.bath.epsilon : 0.0;

  Handles h;
  if (int rc = open_system(cfg, omega0_bath, h)) return rc;
  Handles hc;
  if (int rc = open_system(cfg, cfg.system.omega0, hc)) return rc;

  qpart_status st = qpart_bath_build(h.system, cfg.bath.n_modes, cfg.bath.omega_max,
                                     cfg.bath.counter_term ? 1 : 0, &h.bath);
  if (st != QPART_OK) return report_error("bath", st);
  st = qpart_bath_modes(h.bath, &h.modes);
  if (st != QPART_OK) return report_error("normal modes", st);

  // A uv-divergent kernel has no full continuum integral; compare at the
  // bath's own hard cutoff unless the config already fixes one.
  qpart_quad_spec quad = to_quad(cfg.quad);
  int uv = 0;
  qpart_uv_divergent(h.kernel, &uv);
  if (uv && quad.omega_max == 0.0) quad.omega_max = cfg.bath.omega_max;

  bool gate_failed = false;
  std::vector<std::string> rows;
  for (double T : cfg.thermal.temperatures) {
    double oracle = 0.0;
    st = qpart_exact_kinetic(h.modes, T, cfg.thermal.hbar, cfg.thermal.kB, &oracle);
    if (st != QPART_OK) return report_error("oracle energy", st);
    qpart_energy e{};
    st = qpart_mean_kinetic_energy(hc.system, T, cfg.thermal.hbar, cfg.thermal.kB, &quad, &e);
    if (st != QPART_OK) return report_error("continuum energy", st);
    double rel = std::fabs(oracle - e.kinetic_energy) / std::fabs(oracle);
    if (rel > cfg.bath.rel_gate) {
      gate_failed = true;
      std::fprintf(stderr, "qpart: bath-compare at T = %s: rel_err %s exceeds gate %s\n",
                   fmt(T).c_str(), fmt(rel).c_str(), fmt(cfg.bath.rel_gate).c_str());
    }
    char nbuf[32];
    std::snprintf(nbuf, sizeof(nbuf), "%zu", cfg.bath.n_modes);
    if (format == "csv")
      rows.push_back(std::string(nbuf) + "," + fmt(cfg.bath.omega_max) + "," + fmt(epsilon_out) +
                     "," + fmt(T) + "," + fmt(oracle) + "," + fmt(e.kinetic_energy) + "," +
                     fmt(rel));
    else
      rows.push_back("{\"N\":" + std::string(nbuf) + ",\"omega_max\":" + fmt(cfg.bath.omega_max) +
                     ",\"epsilon\":" + fmt(epsilon_out) + ",\"T\":" + fmt(T) +
                     ",\"Ek_oracle\":" + fmt(oracle) + ",\"Ek_continuum\":" +
                     fmt(e.kinetic_energy) + ",\"rel_err\":" + fmt(rel) + "}");
  }
  std::string body;
  if (format == "csv") {
    body = "N,omega_max,epsilon,T,Ek_oracle,Ek_continuum,rel_err\n";
    for (const auto& r : rows) body += r + "\n";
  } else {
    body = join_json_rows(rows);
  }
  if (int rc = emit(path, body)) return rc;
  return gate_failed ? kExitCheck : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum energy partition toolkit"};
  app.require_subcommand(1);

  struct SubArgs {
    std::string config_path;
    std::string output_path;
    std::string format;
  };
  std::vector<std::string> names = {"pdensity", "energy", "verify", "bath-compare"};
  std::vector<std::string> descriptions = {
      "partition density P(omega) over a frequency grid",
      "mean kinetic energy sweep over temperatures",
      "run the verification check matrix",
      "compare continuum energies against the finite-bath oracle"};
  std::vector<SubArgs> args(names.size());
  std::vector<CLI::App*> subs;
  bool sabotage = false;
  for (size_t i = 0; i < names.size(); ++i) {
    CLI::App* sub = app.add_subcommand(names[i], descriptions[i]);
    sub->add_option("--config", args[i].config_path, "JSON run configuration");
    sub->add_option("--output", args[i].output_path, "output path (default stdout)");
    sub->add_option("--format", args[i].format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    subs.push_back(sub);
  }
  subs[2]->add_flag("--sabotage-sum-rule", sabotage, "")->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  size_t which = 0;
  for (size_t i = 0; i < subs.size(); ++i)
    if (subs[i]->parsed()) which = i;

  qcli::RunConfig cfg;
  if (!args[which].config_path.empty()) {
    std::ifstream in(args[which].config_path);
    if (!in) {
      std::fprintf(stderr, "qpart: cannot read %s\n", args[which].config_path.c_str());
      return kExitConfig;
    }
    try {
      cfg = qcli::parse_config(nlohmann::json::parse(in));
    } catch (const std::exception& e) {
      std::fprintf(stderr, "qpart: config: %s\n", e.what());
      return kExitConfig;
    }
  }
  std::string path = !args[which].output_path.empty() ? args[which].output_path : cfg.output.path;
  std::string format = !args[which].format.empty() ? args[which].format : cfg.output.format;
  if (format.empty()) format = which < 2 ? "csv" : "json";

  switch (which) {
    case 0: return cmd_pdensity(cfg, path, format);
    case 1: return cmd_energy(cfg, path, format);
    case 2: return cmd_verify(path, format, sabotage);
    default: return cmd_bath_compare(cfg, path, format);
  }
}
