// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>

#include "ccfock/excitations.hpp"
#include "ccfock/opmatrix.hpp"
#include "ccfock/scf.hpp"

namespace ccfock {

struct CcConfig {
  double cc_tol = 1e-10;    // max |<mu| e^{-T} H e^{T} |Phi>|
  int max_iter = 300;
  int diis_depth = 8;
  double level_shift = 0.0; // subtracted from the MP denominators
};

struct CCSolution {
  AmplitudeSet amplitudes;
  double e_total = 0.0;     // hartree
  double e_corr = 0.0;      // hartree
  double e_ref = 0.0;       // <Phi|H|Phi>, hartree
  double residual_norm = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Solve Q e^{-T} H e^{T} |Phi> = 0 over the given excitation set. Jacobi
/// updates with Moller-Plesset denominators accelerated by DIIS on the
/// amplitude vector; deterministic iteration order throughout.
[[nodiscard]] CCSolution solve_cc(const MOIntegrals& mo, const ExcitationSet& exset,
                                  const CcConfig& cfg = {});

/// Same, reusing a prebuilt Hamiltonian matrix (and its basis).
[[nodiscard]] CCSolution solve_cc(const OperatorMatrix& H, const Eigen::VectorXd& orbital_energies,
                                  const ExcitationSet& exset, const CcConfig& cfg = {});

/// <Phi| e^{-T} H e^{T} |Phi>: element (0,0) of the transformed Hamiltonian,
/// evaluated without forming the full transform.
[[nodiscard]] double cc_energy(const OperatorMatrix& H, const AmplitudeSet& t);

/// Residuals r_mu = <mu| e^{-T} H e^{T} |Phi> for every mu in exset, in
/// exset order. Pure function of (H, t).
[[nodiscard]] Eigen::VectorXd cc_residuals(const OperatorMatrix& H, const AmplitudeSet& t,
                                           const ExcitationSet& exset);

/// Reference column of e^{-T} H e^{T} (all <D|..|Phi> components at once).
[[nodiscard]] Eigen::VectorXd hbar_reference_column(const OperatorMatrix& H,
                                                    const Eigen::MatrixXd& t_matrix);

}  // namespace ccfock
