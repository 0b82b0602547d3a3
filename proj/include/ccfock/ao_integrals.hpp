// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ccfock/basis_set.hpp"
#include "ccfock/geometry.hpp"

namespace ccfock {

/// Dense 4-index tensor with chemist-notation accessors. Stored full; the
/// 8-fold permutational symmetry is a property of the contents.
class EriTensor {
 public:
  EriTensor() = default;
  explicit EriTensor(int n) : n_(n), data_(static_cast<std::size_t>(n) * n * n * n, 0.0) {}

  [[nodiscard]] int n() const noexcept { return n_; }
  double& operator()(int p, int q, int r, int s) noexcept {
    return data_[((static_cast<std::size_t>(p) * n_ + q) * n_ + r) * n_ + s];
  }
  double operator()(int p, int q, int r, int s) const noexcept {
    return data_[((static_cast<std::size_t>(p) * n_ + q) * n_ + r) * n_ + s];
  }
  [[nodiscard]] const std::vector<double>& raw() const noexcept { return data_; }

 private:
  int n_ = 0;
  std::vector<double> data_;
};

struct AOIntegrals {
  Eigen::MatrixXd S;   // overlap
  Eigen::MatrixXd T;   // kinetic
  Eigen::MatrixXd V;   // nuclear attraction (negative definite-ish)
  EriTensor eri;       // (pq|rs), chemist notation
  double e_nuc = 0.0;  // hartree

  [[nodiscard]] int n() const noexcept { return static_cast<int>(S.rows()); }
};

/// Boys function F0(x) = (1/2) sqrt(pi/x) erf(sqrt(x)), F0(0) = 1.
[[nodiscard]] double boys_f0(double x);

/// Analytic integrals over contracted s-type Gaussians.
[[nodiscard]] AOIntegrals compute_ao_integrals(const Geometry& geometry,
                                               const GaussianBasis& basis);

}  // namespace ccfock
