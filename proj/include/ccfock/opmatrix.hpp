// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <memory>
#include <vector>

#include "ccfock/amplitudes.hpp"
#include "ccfock/fock.hpp"
#include "ccfock/mo_integrals.hpp"

namespace ccfock {

/// Dense matrix representation of a second-quantized operator over a
/// FockBasis sector. The basis handle ties the row/column ordering to the
/// determinant enumeration.
class OperatorMatrix {
 public:
  OperatorMatrix(Eigen::MatrixXd data, std::shared_ptr<const FockBasis> basis);

  [[nodiscard]] const Eigen::MatrixXd& data() const noexcept { return data_; }
  [[nodiscard]] Eigen::MatrixXd& data() noexcept { return data_; }
  [[nodiscard]] const FockBasis& basis() const noexcept { return *basis_; }
  [[nodiscard]] std::shared_ptr<const FockBasis> basis_ptr() const noexcept { return basis_; }
  [[nodiscard]] Eigen::Index dim() const noexcept { return data_.rows(); }

  /// Debug dump: one "row col value" triplet per nonzero entry.
  void write_triplets(std::ostream& out, double threshold = 0.0) const;

 private:
  Eigen::MatrixXd data_;
  std::shared_ptr<const FockBasis> basis_;
};

/// Ordered subset of basis determinants (reference first when present),
/// used for projections and sub-block extraction.
struct DetSubset {
  std::shared_ptr<const FockBasis> basis;
  std::vector<std::size_t> indices;  // positions in the basis

  [[nodiscard]] std::size_t size() const noexcept { return indices.size(); }
};

/// <D'|H|D> over the whole sector, e_nuc on the diagonal. Built from
/// Slater-Condon rules over the occupation strings; agrees entry-wise with
/// the literal second-quantized string expansion.
[[nodiscard]] OperatorMatrix build_hamiltonian_matrix(const MOIntegrals& mo,
                                                      std::shared_ptr<const FockBasis> basis);

/// Matrix of sum_mu t_mu E_mu: column index(D) picks up coeff*phase at row
/// index(E_mu D) for every determinant D the excitation applies to.
[[nodiscard]] OperatorMatrix build_cluster_matrix(const AmplitudeSet& t,
                                                  std::shared_ptr<const FockBasis> basis);

/// In-place refill of a preallocated cluster matrix (same basis, new
/// amplitudes); avoids reallocating the dense buffer in solver loops.
void fill_cluster_matrix(const AmplitudeSet& t, const FockBasis& basis, Eigen::MatrixXd& out);

/// exp(T) of a nilpotent cluster matrix by the terminating Taylor series.
/// The series must vanish after at most n_elec powers; anything else is an
/// invariant violation and throws.
[[nodiscard]] OperatorMatrix exp_nilpotent(const OperatorMatrix& T);

/// e^{-T} H e^{T} by explicit products with exact exponentials.
[[nodiscard]] OperatorMatrix similarity_transform(const OperatorMatrix& H,
                                                  const OperatorMatrix& T);

/// Sub-block of M over the given determinant subset, in subset ordering.
[[nodiscard]] Eigen::MatrixXd extract_subblock(const OperatorMatrix& M, const DetSubset& rows,
                                               const DetSubset& cols);
[[nodiscard]] Eigen::MatrixXd extract_subblock(const OperatorMatrix& M, const DetSubset& subset);

/// v <- e^{sign*T} v via the terminating series, without forming the
/// exponential. Exact for nilpotent T.
[[nodiscard]] Eigen::VectorXd apply_exp_nilpotent(const Eigen::MatrixXd& T,
                                                  const Eigen::VectorXd& v, double sign,
                                                  int n_elec);

}  // namespace ccfock
