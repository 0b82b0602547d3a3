// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "ccfock/geometry.hpp"

namespace ccfock {

/// Contracted s-type Gaussian shell. Primitive normalization factors are
/// folded into the coefficients at construction; the contraction itself is
/// renormalized to <phi|phi> = 1.
struct ContractedS {
  std::vector<double> exponents;
  std::vector<double> coefficients;   // includes primitive norms
  std::array<double, 3> center{};
};

struct GaussianBasis {
  std::vector<ContractedS> shells;    // one basis function per shell (s only)

  [[nodiscard]] int size() const noexcept { return static_cast<int>(shells.size()); }
};

/// Build a basis for a geometry from a named set ("sto-3g" or "6-31g").
/// Only s-function elements are supported (hydrogen); anything else throws
/// with a pointer at the FCIDUMP path.
[[nodiscard]] GaussianBasis build_basis(const Geometry& geometry, const std::string& name);

/// Raw shell for one element: exponents and contraction coefficients of
/// plain (unnormalized-primitive) tabulated data.
struct ShellData {
  std::vector<double> exponents;
  std::vector<double> coefficients;
};

/// Tabulated s-shells for a named basis and nuclear charge; empty if the
/// element is not covered by the built-in engine.
[[nodiscard]] std::vector<ShellData> builtin_s_shells(const std::string& name, double charge);

}  // namespace ccfock
