// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccfock/basis_set.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ccfock {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

// Primitive s normalization (2a/pi)^(3/4).
double prim_norm(double a) { return std::pow(2.0 * a / std::numbers::pi, 0.75); }

ContractedS make_contracted(const ShellData& sd, const std::array<double, 3>& center) {
  ContractedS c;
  c.exponents = sd.exponents;
  c.center = center;
  c.coefficients.resize(sd.coefficients.size());
  for (std::size_t k = 0; k < sd.coefficients.size(); ++k)
    c.coefficients[k] = sd.coefficients[k] * prim_norm(sd.exponents[k]);
  // renormalize the contraction
  double s = 0.0;
  for (std::size_t i = 0; i < c.exponents.size(); ++i)
    for (std::size_t j = 0; j < c.exponents.size(); ++j) {
      const double p = c.exponents[i] + c.exponents[j];
      s += c.coefficients[i] * c.coefficients[j] * std::pow(std::numbers::pi / p, 1.5);
    }
  const double scale = 1.0 / std::sqrt(s);
  for (auto& x : c.coefficients) x *= scale;
  return c;
}

}  // namespace

std::vector<ShellData> builtin_s_shells(const std::string& name, double charge) {
  const std::string n = lower(name);
  const bool is_h = std::abs(charge - 1.0) < 1e-12;
  if (!is_h) return {};
  if (n == "sto-3g") {
    return {{{3.42525091, 0.62391373, 0.16885540}, {0.15432897, 0.53532814, 0.44463454}}};
  }
  if (n == "6-31g") {
    return {{{18.7311370, 2.8253937, 0.6401217}, {0.03349460, 0.23472695, 0.81375733}},
            {{0.1612778}, {1.0}}};
  }
  return {};
}

GaussianBasis build_basis(const Geometry& geometry, const std::string& name) {
  GaussianBasis basis;
  for (const auto& atom : geometry.atoms) {
    const auto shells = builtin_s_shells(name, atom.charge);
    if (shells.empty())
      throw std::runtime_error(
          "basis '" + name + "' is not available for Z=" + std::to_string(atom.charge) +
          " in the built-in s-function engine; supply integrals via an FCIDUMP file instead");
    for (const auto& sd : shells) basis.shells.push_back(make_contracted(sd, atom.position));
  }
  return basis;
}

}  // namespace ccfock
