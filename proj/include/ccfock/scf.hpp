// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccfock/ao_integrals.hpp"

namespace ccfock {

struct ScfConfig {
  double scf_tol = 1e-10;      // max |FDS - SDF|
  int max_iter = 200;
  int diis_depth = 8;
  double s_cutoff = 1e-10;     // overlap eigenvalue cutoff in S^{-1/2}
};

struct ScfResult {
  Eigen::MatrixXd C;                    // MO coefficients, columns ascending in energy
  Eigen::VectorXd orbital_energies;
  double e_rhf = 0.0;                   // total RHF energy, hartree
  int iterations = 0;
  bool converged = false;
};

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::vector<double> trace)
      : std::runtime_error(what), iteration_trace(std::move(trace)) {}
  std::vector<double> iteration_trace;  // per-iteration residual norms
};

/// Restricted Hartree-Fock with a core-Hamiltonian guess, DIIS on FDS-SDF,
/// and symmetric orthogonalization of S.
[[nodiscard]] ScfResult solve_rhf(const AOIntegrals& ao, int n_elec, const ScfConfig& cfg = {});

}  // namespace ccfock
