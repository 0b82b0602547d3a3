// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccfock/geometry.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ccfock {

namespace {

double dist(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

const std::map<std::string, double>& element_charges() {
  static const std::map<std::string, double> table = {
      {"H", 1},  {"He", 2}, {"Li", 3}, {"Be", 4}, {"B", 5},
      {"C", 6},  {"N", 7},  {"O", 8},  {"F", 9},  {"Ne", 10},
  };
  return table;
}

std::map<std::string, double> parse_kv(const std::string& s) {
  std::map<std::string, double> kv;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("geometry parameter must be key=value: " + item);
    kv[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
  }
  return kv;
}

double kv_get(const std::map<std::string, double>& kv, const std::string& key, double dflt) {
  const auto it = kv.find(key);
  return it == kv.end() ? dflt : it->second;
}

}  // namespace

double Geometry::nuclear_repulsion() const {
  double e = 0.0;
  for (std::size_t a = 0; a < atoms.size(); ++a)
    for (std::size_t b = a + 1; b < atoms.size(); ++b)
      e += atoms[a].charge * atoms[b].charge / dist(atoms[a].position, atoms[b].position);
  return e;
}

int Geometry::n_electrons_neutral() const {
  double z = 0.0;
  for (const auto& a : atoms) z += a.charge;
  return static_cast<int>(std::lround(z));
}

Geometry h_chain(int n, double r) {
  if (n < 1) throw std::invalid_argument("h_chain: n must be positive");
  Geometry g;
  for (int k = 0; k < n; ++k) g.atoms.push_back({1.0, {0.0, 0.0, k * r}});
  return g;
}

Geometry h_ring(int n, double r) {
  if (n < 3) throw std::invalid_argument("h_ring: n must be at least 3");
  Geometry g;
  const double radius = r / (2.0 * std::sin(std::numbers::pi / n));
  for (int k = 0; k < n; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / n;
    g.atoms.push_back({1.0, {radius * std::cos(phi), radius * std::sin(phi), 0.0}});
  }
  return g;
}

Geometry h4_model(double alpha) {
  if (alpha < 0.0 || alpha > 0.5)
    throw std::invalid_argument("h4_model: alpha must lie in [0, 0.5]");
  const double theta = alpha * std::numbers::pi;
  const double x = 1.0 + 2.0 * std::sin(theta);
  const double y = 2.0 * std::cos(theta);
  Geometry g;
  g.atoms.push_back({1.0, {-x, y, 0.0}});
  g.atoms.push_back({1.0, {-1.0, 0.0, 0.0}});
  g.atoms.push_back({1.0, {1.0, 0.0, 0.0}});
  g.atoms.push_back({1.0, {x, y, 0.0}});
  return g;
}

Geometry h2_pair(double r, double d) {
  Geometry g;
  g.atoms.push_back({1.0, {0.0, 0.0, 0.0}});
  g.atoms.push_back({1.0, {0.0, 0.0, r}});
  g.atoms.push_back({1.0, {0.0, 0.0, d}});
  g.atoms.push_back({1.0, {0.0, 0.0, d + r}});
  return g;
}

Geometry parse_geometry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open geometry file: " + path);

  Geometry g;
  double to_bohr = 0.0;  // set by the mandatory units line
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::stringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;

    if (to_bohr == 0.0) {
      std::string unit;
      if (first != "units" || !(ss >> unit))
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": expected 'units bohr|angstrom' before any atom");
      if (unit == "bohr")
        to_bohr = 1.0;
      else if (unit == "angstrom")
        to_bohr = kBohrPerAngstrom;
      else
        throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown unit " + unit);
      continue;
    }

    Atom atom;
    const auto& table = element_charges();
    if (auto it = table.find(first); it != table.end()) {
      atom.charge = it->second;
    } else {
      try {
        atom.charge = std::stod(first);
      } catch (const std::exception&) {
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": unknown element or charge: " + first);
      }
    }
    if (!(ss >> atom.position[0] >> atom.position[1] >> atom.position[2]))
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected 3 coordinates");
    atom.position[0] *= to_bohr;
    atom.position[1] *= to_bohr;
    atom.position[2] *= to_bohr;
    g.atoms.push_back(atom);
  }
  if (g.atoms.empty()) throw std::runtime_error(path + ": no atoms");
  return g;
}

Geometry resolve_geometry(const std::string& spec) {
  std::string name = spec, params;
  if (const auto colon = spec.find(':'); colon != std::string::npos) {
    name = spec.substr(0, colon);
    params = spec.substr(colon + 1);
  }
  const auto kv = params.empty() ? std::map<std::string, double>{} : parse_kv(params);

  if (name == "h2") return h_chain(2, kv_get(kv, "r", 1.4));
  if (name == "h4") return h4_model(kv_get(kv, "alpha", 0.5));
  if (name == "h6") return h_chain(6, kv_get(kv, "r", 2.0));
  if (name == "h8") return h_chain(8, kv_get(kv, "r", 2.0));
  if (name == "hchain") return h_chain(static_cast<int>(kv_get(kv, "n", 2)), kv_get(kv, "r", 2.0));
  if (name == "hring") return h_ring(static_cast<int>(kv_get(kv, "n", 4)), kv_get(kv, "r", 2.0));
  if (name == "h2pair") return h2_pair(kv_get(kv, "r", 1.4), kv_get(kv, "d", 1000.0));

  if (std::filesystem::exists(spec)) return parse_geometry_file(spec);
  throw std::invalid_argument("unknown geometry '" + spec + "' (not a named system or file)");
}

}  // namespace ccfock
