// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ccfock/downfold.hpp"

namespace ccfock {

struct FlowConfig {
  double flow_tol = 1e-9;   // max spread of per-spec eigenvalues
  double amp_tol = 1e-9;    // max amplitude change per sweep
  int max_sweeps = 200;
  double damping = 1.0;     // update mixing; halved on sustained oscillation
};

/// Coupled SES eigenproblems sharing one Hamiltonian.
struct FlowProblem {
  MOIntegrals mo;
  std::vector<SesSpec> specs;
  FlowConfig cfg;
};

struct FlowTraceRow {
  int sweep = 0;
  int spec_index = 0;
  double eigenvalue = 0.0;
  double amp_change = 0.0;
};

struct FlowSolution {
  AmplitudeSet amplitudes;            // union over all internal excitations
  std::vector<double> eigenvalues;    // per spec, last sweep
  double energy = 0.0;                // eigenvalue consensus (first spec)
  bool converged = false;
  bool ambiguous = false;             // any root selection was ambiguous
  int sweeps = 0;
  double spread = 0.0;
  std::vector<FlowTraceRow> trace;
};

/// Map an internal eigenvector back to cluster amplitudes: normalize to unit
/// reference coefficient, then take the formal logarithm of the CI operator
/// (terminating series in the nilpotent part).
[[nodiscard]] AmplitudeSet cluster_analysis(const Eigen::VectorXd& civec, const DetSubset& space,
                                            const SesSpec& spec);

/// Gauss-Seidel sweeps over the coupled eigenproblems: every spec refreshes
/// its T_int from its own effective Hamiltonian while all other amplitudes
/// form its T_ext. Converged when all eigenvalues agree to flow_tol and the
/// amplitude update stalls.
[[nodiscard]] FlowSolution solve_flow(const FlowProblem& problem);

}  // namespace ccfock
