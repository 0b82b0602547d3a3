// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccfock/cc.hpp"

#include <cmath>
#include <deque>
#include <stdexcept>

namespace ccfock {

namespace {

// Fixed scatter pattern of a cluster operator over the basis: each
// (amplitude, determinant) pair that survives Pauli blocking contributes to
// exactly one matrix entry, so refills are plain stores.
struct ClusterScatter {
  struct Entry {
    std::uint32_t row, col;
    std::uint32_t amp;
    float phase;
  };
  std::vector<Entry> entries;

  ClusterScatter(const ExcitationSet& exset, const FockBasis& basis) {
    const auto& dets = basis.determinants();
    std::uint32_t a = 0;
    for (const auto& ex : exset) {
      for (std::size_t c = 0; c < dets.size(); ++c) {
        const auto img = apply_excitation(dets[c], ex);
        if (!img) continue;
        entries.push_back({static_cast<std::uint32_t>(basis.index_of(img->first)),
                           static_cast<std::uint32_t>(c), a,
                           static_cast<float>(img->second)});
      }
      ++a;
    }
  }

  void fill(const Eigen::VectorXd& amps, Eigen::MatrixXd& T) const {
    for (const auto& e : entries) T(e.row, e.col) = amps[e.amp] * e.phase;
  }
};

struct DenominatorInfo {
  Eigen::VectorXd d;                 // sum eps_i - sum eps_a per excitation
  std::vector<std::size_t> ref_row;  // basis index of E_mu |Phi>
  Eigen::VectorXd ref_phase;
};

DenominatorInfo analyze_excitations(const ExcitationSet& exset, const FockBasis& basis,
                                    const Eigen::VectorXd& eps, double level_shift) {
  DenominatorInfo info;
  const std::size_t m = exset.size();
  info.d.resize(m);
  info.ref_phase.resize(m);
  info.ref_row.resize(m);
  const Determinant& ref = basis.reference();
  std::size_t k = 0;
  for (const auto& ex : exset) {
    const auto img = apply_excitation(ref, ex);
    if (!img)
      throw std::invalid_argument("solve_cc: excitation " + ex.str() +
                                  " does not apply to the reference determinant");
    info.ref_row[k] = basis.index_of(img->first);
    info.ref_phase[k] = img->second;
    double d = 0.0;
    for (auto h : ex.holes) d += eps[h.spatial];
    for (auto p : ex.particles) d -= eps[p.spatial];
    d -= level_shift;
    if (std::abs(d) < 1e-12)
      throw std::runtime_error("solve_cc: vanishing denominator for " + ex.str() +
                               "; retry with a level shift (cfg.level_shift)");
    info.d[k] = d;
    ++k;
  }
  return info;
}

AmplitudeSet to_amplitude_set(const ExcitationSet& exset, const Eigen::VectorXd& amps) {
  AmplitudeSet t;
  std::size_t k = 0;
  for (const auto& ex : exset) t[ex] = amps[k++];
  return t;
}

}  // namespace

Eigen::VectorXd hbar_reference_column(const OperatorMatrix& H, const Eigen::MatrixXd& t_matrix) {
  const int n_elec = H.basis().n_elec();
  Eigen::VectorXd v = Eigen::VectorXd::Zero(H.dim());
  v[0] = 1.0;
  v = apply_exp_nilpotent(t_matrix, v, +1.0, n_elec);
  v = H.data() * v;
  return apply_exp_nilpotent(t_matrix, v, -1.0, n_elec);
}

double cc_energy(const OperatorMatrix& H, const AmplitudeSet& t) {
  Eigen::MatrixXd tm;
  fill_cluster_matrix(t, H.basis(), tm);
  return hbar_reference_column(H, tm)[0];
}

Eigen::VectorXd cc_residuals(const OperatorMatrix& H, const AmplitudeSet& t,
                             const ExcitationSet& exset) {
  Eigen::MatrixXd tm;
  fill_cluster_matrix(t, H.basis(), tm);
  const Eigen::VectorXd col = hbar_reference_column(H, tm);
  Eigen::VectorXd r(exset.size());
  const Determinant& ref = H.basis().reference();
  std::size_t k = 0;
  for (const auto& ex : exset) {
    const auto img = apply_excitation(ref, ex);
    if (!img)
      throw std::invalid_argument("cc_residuals: excitation does not apply to reference");
    r[k++] = img->second * col[H.basis().index_of(img->first)];
  }
  return r;
}

CCSolution solve_cc(const OperatorMatrix& H, const Eigen::VectorXd& orbital_energies,
                    const ExcitationSet& exset, const CcConfig& cfg) {
  const FockBasis& basis = H.basis();
  const std::size_t m = exset.size();
  const auto info = analyze_excitations(exset, basis, orbital_energies, cfg.level_shift);
  const ClusterScatter scatter(exset, basis);

  Eigen::VectorXd amps = Eigen::VectorXd::Zero(m);
  Eigen::MatrixXd tmat = Eigen::MatrixXd::Zero(H.dim(), H.dim());

  std::deque<Eigen::VectorXd> diis_t, diis_r;
  std::vector<double> trace;

  CCSolution sol;
  sol.e_ref = H.data()(0, 0);

  for (int it = 1; it <= cfg.max_iter; ++it) {
    scatter.fill(amps, tmat);
    const Eigen::VectorXd col = hbar_reference_column(H, tmat);

    Eigen::VectorXd resid(m);
    for (std::size_t k = 0; k < m; ++k)
      resid[k] = info.ref_phase[k] * col[info.ref_row[k]];
    const double rmax = m ? resid.cwiseAbs().maxCoeff() : 0.0;
    trace.push_back(rmax);

    if (rmax < cfg.cc_tol) {
      sol.amplitudes = to_amplitude_set(exset, amps);
      sol.e_total = col[0];
      sol.e_corr = sol.e_total - sol.e_ref;
      sol.residual_norm = rmax;
      sol.iterations = it;
      sol.converged = true;
      return sol;
    }

    // Jacobi step on the MP denominators, then DIIS extrapolation.
    Eigen::VectorXd next = amps + resid.cwiseQuotient(info.d);

    diis_t.push_back(next);
    diis_r.push_back(resid);
    if (static_cast<int>(diis_t.size()) > cfg.diis_depth) {
      diis_t.pop_front();
      diis_r.pop_front();
    }
    if (diis_t.size() > 1) {
      const int nd = static_cast<int>(diis_t.size());
      Eigen::MatrixXd B = Eigen::MatrixXd::Zero(nd + 1, nd + 1);
      for (int i = 0; i < nd; ++i)
        for (int j = 0; j < nd; ++j) B(i, j) = diis_r[i].dot(diis_r[j]);
      B.row(nd).setConstant(-1.0);
      B.col(nd).setConstant(-1.0);
      B(nd, nd) = 0.0;
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(nd + 1);
      rhs[nd] = -1.0;
      const Eigen::VectorXd c = B.fullPivLu().solve(rhs);
      next.setZero();
      for (int i = 0; i < nd; ++i) next += c[i] * diis_t[i];
    }
    amps = next;
  }

  throw ConvergenceError("CC amplitude equations did not converge in " +
                             std::to_string(cfg.max_iter) + " iterations (last residual " +
                             std::to_string(trace.back()) + ")",
                         trace);
}

CCSolution solve_cc(const MOIntegrals& mo, const ExcitationSet& exset, const CcConfig& cfg) {
  if (mo.n_elec % 2 != 0)
    throw std::invalid_argument("solve_cc: closed-shell sectors only (even n_elec)");
  auto basis = std::make_shared<const FockBasis>(
      FockBasis::enumerate(mo.n_orb, mo.n_elec / 2, mo.n_elec / 2));
  const OperatorMatrix H = build_hamiltonian_matrix(mo, basis);
  return solve_cc(H, mo.orbital_energies, exset, cfg);
}

}  // namespace ccfock
