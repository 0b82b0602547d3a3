// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>

#include "ccfock/ao_integrals.hpp"
#include "ccfock/scf.hpp"

namespace ccfock {

/// One- and two-electron integrals in the molecular-orbital basis, chemist
/// notation (pq|rs), plus the nuclear repulsion constant. Everything in
/// hartree; amplitudes built on top of these are dimensionless.
struct MOIntegrals {
  int n_orb = 0;
  int n_elec = 0;
  Eigen::MatrixXd h;             // one-electron matrix
  EriTensor g;                   // (pq|rs)
  double e_nuc = 0.0;
  Eigen::VectorXd orbital_energies;

  [[nodiscard]] int n_occ() const noexcept { return n_elec / 2; }
  [[nodiscard]] int n_virt() const noexcept { return n_orb - n_occ(); }

  /// FNV-1a over the integral payload; stable across runs on one platform.
  [[nodiscard]] std::uint64_t fingerprint() const;
  [[nodiscard]] std::string fingerprint_hex() const;
};

/// Quarter-transform chain g_mo(pqrs) = sum C.C.C.C (ao|ao); h_mo = C^T h C.
[[nodiscard]] MOIntegrals transform_to_mo(const AOIntegrals& ao, const Eigen::MatrixXd& C,
                                          const Eigen::VectorXd& orbital_energies, int n_elec);

/// Convenience: geometry + basis name -> AO -> RHF -> MO.
struct MoFromScf {
  MOIntegrals mo;
  ScfResult scf;
};
[[nodiscard]] MoFromScf mo_from_geometry(const Geometry& geometry, const std::string& basis_name,
                                         const ScfConfig& cfg = {});

/// Super-system integrals from a direct sum of per-fragment RHF orbitals:
/// AO integrals of the union geometry transformed with blkdiag(C_1..C_K),
/// orbitals re-sorted by ascending energy (stable, so degenerate fragment
/// orbitals keep fragment order). Used in the non-interacting-limit setup,
/// where the dissociated super-system RHF is degenerate.
[[nodiscard]] MoFromScf mo_direct_sum(const std::vector<Geometry>& fragments,
                                      const std::vector<int>& fragment_electrons,
                                      const std::string& basis_name, const ScfConfig& cfg = {});

}  // namespace ccfock
