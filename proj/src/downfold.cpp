// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccfock/downfold.hpp"

#include <chrono>
#include <stdexcept>

namespace ccfock {

EigenPairs eig_general(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("eig_general: matrix must be square");
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m, /*computeEigenvectors=*/true);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eig_general: QR iteration failed to converge");
  EigenPairs out{solver.eigenvalues(), solver.eigenvectors()};

  const double scale = std::max(1.0, m.norm());
  for (Eigen::Index k = 0; k < out.values.size(); ++k) {
    const double resid = (m * out.vectors.col(k) - out.values[k] * out.vectors.col(k)).norm();
    if (resid > 1e-9 * scale)
      throw std::runtime_error("eig_general: eigenpair residual " + std::to_string(resid) +
                               " exceeds tolerance");
  }
  return out;
}

Eigen::MatrixXd cluster_matrix_in_subspace(const AmplitudeSet& t, const DetSubset& space) {
  const FockBasis& basis = *space.basis;
  const std::size_t m = space.size();
  std::unordered_map<std::size_t, std::size_t> pos;
  pos.reserve(m);
  for (std::size_t k = 0; k < m; ++k) pos.emplace(space.indices[k], k);

  Eigen::MatrixXd X = Eigen::MatrixXd::Zero(m, m);
  for (const auto& [ex, coeff] : t) {
    if (coeff == 0.0) continue;
    for (std::size_t c = 0; c < m; ++c) {
      const auto img = apply_excitation(basis[space.indices[c]], ex);
      if (!img) continue;
      const auto it = pos.find(basis.index_of(img->first));
      if (it == pos.end())
        throw std::logic_error("cluster_matrix_in_subspace: operator leaves the subset (" +
                               ex.str() + ")");
      X(it->second, c) += coeff * img->second;
    }
  }
  return X;
}

Eigen::VectorXd subsystem_vector(const AmplitudeSet& t_int, const DetSubset& space) {
  const Eigen::MatrixXd X = cluster_matrix_in_subspace(t_int, space);
  Eigen::VectorXd v = Eigen::VectorXd::Zero(space.size());
  v[0] = 1.0;  // reference-first ordering
  return apply_exp_nilpotent(X, v, +1.0, space.basis->n_elec());
}

RootSelection select_ses_root(const EigenPairs& eigs, const AmplitudeSet& t_int,
                              const DetSubset& space) {
  const Eigen::VectorXd target = subsystem_vector(t_int, space);
  const double tnorm = target.norm();

  RootSelection best, second;
  for (Eigen::Index k = 0; k < eigs.values.size(); ++k) {
    const Eigen::VectorXcd v = eigs.vectors.col(k);
    const double ov = std::abs(target.cast<std::complex<double>>().dot(v)) /
                      (tnorm * v.norm());
    if (ov > best.overlap) {
      second = best;
      best.overlap = ov;
      best.eigenvalue = eigs.values[k];
      best.eigenvector = v;
    } else if (ov > second.overlap) {
      second.overlap = ov;
      second.eigenvalue = eigs.values[k];
    }
  }
  best.runner_up_eigenvalue = second.eigenvalue;
  best.runner_up_overlap = second.overlap;
  // conjugate pairs share the overlap by construction; only distinct
  // eigenvalues within 1e-6 of the winner count as ambiguous
  best.ambiguous = (best.overlap - second.overlap) < 1e-6 &&
                   std::abs(best.eigenvalue - second.eigenvalue) > 1e-12;
  return best;
}

EffectiveHamiltonian build_heff(const OperatorMatrix& H, const AmplitudeSet& t_ext,
                                const SesSpec& spec) {
  for (const auto& [ex, value] : t_ext) {
    (void)value;
    if (is_internal(spec, ex))
      throw std::invalid_argument("build_heff: internal excitation " + ex.str() +
                                  " found in T_ext for " + spec.str());
  }

  auto basis = H.basis_ptr();
  DetSubset space = internal_space(spec, basis);
  const std::size_t m = space.size();
  const int n_elec = basis->n_elec();

  Eigen::MatrixXd tmat;
  fill_cluster_matrix(t_ext, *basis, tmat);

  Eigen::MatrixXd heff(m, m);
  Eigen::VectorXd unit = Eigen::VectorXd::Zero(H.dim());
  for (std::size_t j = 0; j < m; ++j) {
    unit[space.indices[j]] = 1.0;
    Eigen::VectorXd col = apply_exp_nilpotent(tmat, unit, +1.0, n_elec);
    col = H.data() * col;
    col = apply_exp_nilpotent(tmat, col, -1.0, n_elec);
    for (std::size_t i = 0; i < m; ++i) heff(i, j) = col[space.indices[i]];
    unit[space.indices[j]] = 0.0;
  }
  return {std::move(heff), std::move(space), spec};
}

DownfoldReport verify_theorem_with(const OperatorMatrix& H, const CCSolution& solution,
                                   const SesSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();

  const Partition parts = partition_amplitudes(solution.amplitudes, spec);
  const EffectiveHamiltonian heff = build_heff(H, parts.t_ext, spec);
  const EigenPairs eigs = eig_general(heff.matrix);
  const RootSelection root = select_ses_root(eigs, parts.t_int, heff.space);

  DownfoldReport report;
  report.spec = spec;
  report.e_cc = solution.e_total;
  report.e_h = root.eigenvalue.real();
  report.e_h_imag = root.eigenvalue.imag();
  report.overlap = root.overlap;
  report.ambiguous = root.ambiguous;
  report.max_asymmetry = heff.max_asymmetry();
  report.internal_dim = heff.space.size();

  const Eigen::VectorXd target = subsystem_vector(parts.t_int, heff.space);
  report.eigvec_residual =
      (heff.matrix * target - solution.e_total * target).norm() / target.norm();

  report.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - t0).count();
  return report;
}

DownfoldReport verify_theorem(const MOIntegrals& mo, const ExcitationSet& exset,
                              const SesSpec& spec, const CcConfig& cfg) {
  if (!validate_ses(spec, exset, mo.n_orb, mo.n_occ()))
    throw std::invalid_argument("verify_theorem: " + spec.str() +
                                " is not an embedding sub-algebra of the given model");
  auto basis = std::make_shared<const FockBasis>(
      FockBasis::enumerate(mo.n_orb, mo.n_occ(), mo.n_occ()));
  const OperatorMatrix H = build_hamiltonian_matrix(mo, basis);
  const CCSolution solution = solve_cc(H, mo.orbital_energies, exset, cfg);
  return verify_theorem_with(H, solution, spec);
}

}  // namespace ccfock
