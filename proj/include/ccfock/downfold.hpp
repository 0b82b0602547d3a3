// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>

#include "ccfock/cc.hpp"
#include "ccfock/ses.hpp"

namespace ccfock {

/// Downfolded Hamiltonian (P+Q_int) e^{-T_ext} H e^{T_ext} (P+Q_int) in the
/// internal-space ordering. Generally non-Hermitian.
struct EffectiveHamiltonian {
  Eigen::MatrixXd matrix;
  DetSubset space;
  SesSpec spec;

  [[nodiscard]] double max_asymmetry() const {
    return (matrix - matrix.transpose()).cwiseAbs().maxCoeff();
  }
};

struct EigenPairs {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;  // right eigenvectors, one per column
};

/// Full eigendecomposition of a real non-symmetric matrix (Hessenberg + QR
/// via Eigen::EigenSolver). Residuals ||Mv - lambda v|| are checked against
/// 1e-9 * ||M||; failure throws.
[[nodiscard]] EigenPairs eig_general(const Eigen::MatrixXd& m);

struct RootSelection {
  std::complex<double> eigenvalue;
  Eigen::VectorXcd eigenvector;
  double overlap = 0.0;        // |<v*|v>| / (||v*|| ||v||)
  bool ambiguous = false;      // runner-up overlap within 1e-6
  std::complex<double> runner_up_eigenvalue{0.0, 0.0};
  double runner_up_overlap = 0.0;
};

/// The eigenvector of e^{T_int}|Phi> restricted to the internal space, in
/// subset ordering (exact: T_int closes on the CAS).
[[nodiscard]] Eigen::VectorXd subsystem_vector(const AmplitudeSet& t_int, const DetSubset& space);

/// Cluster-operator matrix restricted to a closed determinant subset.
/// Throws if an excitation maps a subset determinant outside the subset.
[[nodiscard]] Eigen::MatrixXd cluster_matrix_in_subspace(const AmplitudeSet& t,
                                                         const DetSubset& space);

/// Pick the eigenpair with maximal normalized overlap against
/// v* = e^{T_int}|Phi>. Two overlaps within 1e-6 set the ambiguity flag and
/// report the runner-up.
[[nodiscard]] RootSelection select_ses_root(const EigenPairs& eigs, const AmplitudeSet& t_int,
                                            const DetSubset& space);

/// H^eff by exact nilpotent exponentials applied columnwise over the
/// internal space. T_ext must contain no internal excitations.
[[nodiscard]] EffectiveHamiltonian build_heff(const OperatorMatrix& H, const AmplitudeSet& t_ext,
                                              const SesSpec& spec);

struct DownfoldReport {
  SesSpec spec;
  double e_cc = 0.0;             // reference-projection energy of the CC solve
  double e_h = 0.0;              // selected eigenvalue (real part)
  double e_h_imag = 0.0;
  double eigvec_residual = 0.0;  // ||H^eff v* - e_cc v*|| / ||v*||
  double overlap = 0.0;
  bool ambiguous = false;
  double max_asymmetry = 0.0;
  std::size_t internal_dim = 0;
  double wall_ms = 0.0;
};

/// End-to-end theorem check for one SES: solve CC, partition, downfold,
/// diagonalize, select the sub-system root.
[[nodiscard]] DownfoldReport verify_theorem(const MOIntegrals& mo, const ExcitationSet& exset,
                                            const SesSpec& spec, const CcConfig& cfg = {});

/// Same, starting from an existing Hamiltonian matrix and converged solution
/// (one shared solve across a SES sweep).
[[nodiscard]] DownfoldReport verify_theorem_with(const OperatorMatrix& H,
                                                 const CCSolution& solution,
                                                 const SesSpec& spec);

}  // namespace ccfock
