// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccfock/scf.hpp"

#include <deque>

namespace ccfock {

namespace {

Eigen::MatrixXd symmetric_orthogonalizer(const Eigen::MatrixXd& S, double cutoff) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(S);
  const auto& vals = es.eigenvalues();
  const auto& vecs = es.eigenvectors();
  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(S.rows(), S.cols());
  for (int k = 0; k < vals.size(); ++k) {
    if (vals[k] < cutoff) continue;  // drop near-singular combinations
    X += vecs.col(k) * vecs.col(k).transpose() / std::sqrt(vals[k]);
  }
  return X;
}

Eigen::MatrixXd build_fock(const AOIntegrals& ao, const Eigen::MatrixXd& D) {
  const int n = ao.n();
  Eigen::MatrixXd F = ao.T + ao.V;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      double g = 0.0;
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          g += D(r, s) * (ao.eri(p, q, r, s) - 0.5 * ao.eri(p, r, q, s));
      F(p, q) += g;
    }
  return F;
}

}  // namespace

ScfResult solve_rhf(const AOIntegrals& ao, int n_elec, const ScfConfig& cfg) {
  if (n_elec % 2 != 0) throw std::invalid_argument("solve_rhf: n_elec must be even");
  const int n = ao.n();
  const int n_occ = n_elec / 2;
  if (n_occ > n) throw std::invalid_argument("solve_rhf: more electron pairs than orbitals");

  const Eigen::MatrixXd X = symmetric_orthogonalizer(ao.S, cfg.s_cutoff);
  const Eigen::MatrixXd hcore = ao.T + ao.V;

  auto orbitals_from = [&](const Eigen::MatrixXd& F) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(X.transpose() * F * X);
    ScfResult r;
    r.orbital_energies = es.eigenvalues();
    r.C = X * es.eigenvectors();
    return r;
  };
  auto density_of = [&](const Eigen::MatrixXd& C) {
    return Eigen::MatrixXd(2.0 * C.leftCols(n_occ) * C.leftCols(n_occ).transpose());
  };

  ScfResult res = orbitals_from(hcore);
  Eigen::MatrixXd D = density_of(res.C);

  std::deque<Eigen::MatrixXd> diis_err, diis_fock;
  std::vector<double> trace;

  for (int it = 1; it <= cfg.max_iter; ++it) {
    Eigen::MatrixXd F = build_fock(ao, D);
    const Eigen::MatrixXd err = F * D * ao.S - ao.S * D * F;
    const double resid = err.cwiseAbs().maxCoeff();
    trace.push_back(resid);

    if (resid < cfg.scf_tol) {
      res = orbitals_from(F);
      res.e_rhf = 0.5 * (D.cwiseProduct(hcore + F)).sum() + ao.e_nuc;
      res.iterations = it;
      res.converged = true;
      return res;
    }

    diis_err.push_back(X.transpose() * err * X);
    diis_fock.push_back(F);
    if (static_cast<int>(diis_err.size()) > cfg.diis_depth) {
      diis_err.pop_front();
      diis_fock.pop_front();
    }

    if (diis_err.size() > 1) {
      const int m = static_cast<int>(diis_err.size());
      Eigen::MatrixXd B = Eigen::MatrixXd::Zero(m + 1, m + 1);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          B(i, j) = (diis_err[i].cwiseProduct(diis_err[j])).sum();
      B.row(m).setConstant(-1.0);
      B.col(m).setConstant(-1.0);
      B(m, m) = 0.0;
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m + 1);
      rhs[m] = -1.0;
      const Eigen::VectorXd c = B.fullPivLu().solve(rhs);
      F.setZero();
      for (int i = 0; i < m; ++i) F += c[i] * diis_fock[i];
    }

    res = orbitals_from(F);
    D = density_of(res.C);
  }

  throw ConvergenceError("RHF did not converge in " + std::to_string(cfg.max_iter) +
                             " iterations (last residual " + std::to_string(trace.back()) + ")",
                         trace);
}

}  // namespace ccfock
