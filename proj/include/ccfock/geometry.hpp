// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <string>
#include <vector>

namespace ccfock {

inline constexpr double kBohrPerAngstrom = 1.8897261246257702;

struct Atom {
  double charge = 0.0;                     // nuclear charge Z
  std::array<double, 3> position{};        // bohr
};

struct Geometry {
  std::vector<Atom> atoms;

  [[nodiscard]] double nuclear_repulsion() const;
  [[nodiscard]] int n_electrons_neutral() const;
};

/// Linear chain of n hydrogens with spacing r (bohr) along z.
[[nodiscard]] Geometry h_chain(int n, double r);

/// Regular n-ring of hydrogens with nearest-neighbour distance r (bohr).
[[nodiscard]] Geometry h_ring(int n, double r);

/// Planar trapezoidal H4 model: central pair fixed at 2 bohr, outer atoms
/// swung by angle alpha*pi so that alpha=0 is the square of side 2 and
/// alpha=0.5 the linear chain with spacing 2. All nearest-neighbour
/// distances are 2 bohr throughout.
[[nodiscard]] Geometry h4_model(double alpha);

/// Two H2 monomers (bond r) separated by d along z; used for the
/// non-interacting sub-system limit.
[[nodiscard]] Geometry h2_pair(double r, double d);

/// Parse a geometry file: first significant line "units bohr|angstrom",
/// then one atom per line as "<symbol|charge> x y z". '#' starts a comment.
[[nodiscard]] Geometry parse_geometry_file(const std::string& path);

/// Named geometries for the CLI: "h2[:r=1.4]", "h4[:alpha=0.5]",
/// "h6[:r=2.0]", "h8[:r=2.0]", "hchain:n=6,r=2.0", "hring:n=6,r=2.0".
/// Falls back to parse_geometry_file when the string names an existing file.
[[nodiscard]] Geometry resolve_geometry(const std::string& spec);

}  // namespace ccfock
