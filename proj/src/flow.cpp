// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccfock/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ccfock {

AmplitudeSet cluster_analysis(const Eigen::VectorXd& civec, const DetSubset& space,
                              const SesSpec& spec) {
  if (static_cast<std::size_t>(civec.size()) != space.size())
    throw std::invalid_argument("cluster_analysis: vector/space dimension mismatch");
  if (std::abs(civec[0]) < 1e-12)
    throw std::runtime_error(
        "cluster_analysis: vanishing reference coefficient, intermediate normalization fails");

  const FockBasis& basis = *space.basis;
  const Eigen::VectorXd c = civec / civec[0];

  const auto internal = internal_excitations(spec, basis.n_orb(), basis.n_alpha());
  const Determinant& ref = basis.reference();

  // CI operator coefficients c_mu from determinant components.
  AmplitudeSet ci_op;
  std::unordered_map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < space.size(); ++k) pos.emplace(space.indices[k], k);
  for (const auto& ex : internal) {
    const auto img = apply_excitation(ref, ex);
    if (!img) continue;
    const auto it = pos.find(basis.index_of(img->first));
    if (it == pos.end()) continue;
    const double coeff = img->second * c[it->second];  // phase^{-1} = phase
    if (coeff != 0.0) ci_op[ex] = coeff;
  }

  // T = log(1 + X) with X the nilpotent CI-operator matrix on the subspace.
  const Eigen::MatrixXd X = cluster_matrix_in_subspace(ci_op, space);
  Eigen::VectorXd e0 = Eigen::VectorXd::Zero(space.size());
  e0[0] = 1.0;
  Eigen::VectorXd term = X * e0;
  Eigen::VectorXd log_col = term;
  for (int k = 2;; ++k) {
    term = X * term;
    if ((term.array() == 0.0).all()) break;
    if (k > basis.n_elec())
      throw std::logic_error("cluster_analysis: logarithm series did not terminate");
    log_col += (k % 2 ? 1.0 : -1.0) / k * term;
  }

  AmplitudeSet t;
  for (const auto& ex : internal) {
    const auto img = apply_excitation(ref, ex);
    if (!img) continue;
    const auto it = pos.find(basis.index_of(img->first));
    if (it == pos.end()) continue;
    const double value = img->second * log_col[it->second];
    if (value != 0.0) t[ex] = value;
  }
  return t;
}

FlowSolution solve_flow(const FlowProblem& problem) {
  if (problem.specs.empty()) throw std::invalid_argument("solve_flow: no SES specified");
  const MOIntegrals& mo = problem.mo;

  auto basis = std::make_shared<const FockBasis>(
      FockBasis::enumerate(mo.n_orb, mo.n_occ(), mo.n_occ()));
  const OperatorMatrix H = build_hamiltonian_matrix(mo, basis);

  struct SpecData {
    SesSpec spec;
    ExcitationSet internal;
    DetSubset space;
  };
  std::vector<SpecData> specs;
  for (const auto& s : problem.specs) {
    s.validate_ranges(mo.n_orb, mo.n_occ());
    specs.push_back({s, internal_excitations(s, mo.n_orb, mo.n_occ()),
                     internal_space(s, basis)});
  }

  FlowSolution sol;
  sol.eigenvalues.assign(specs.size(), 0.0);
  AmplitudeSet amps;  // union amplitudes, all owned here
  double damping = problem.cfg.damping;
  double prev_spread = std::numeric_limits<double>::infinity();
  int worsening = 0;

  for (int sweep = 1; sweep <= problem.cfg.max_sweeps; ++sweep) {
    double max_change = 0.0;

    for (std::size_t i = 0; i < specs.size(); ++i) {
      const auto& sd = specs[i];

      AmplitudeSet t_ext;
      AmplitudeSet t_int;
      for (const auto& [ex, value] : amps) {
        if (sd.internal.contains(ex))
          t_int[ex] = value;
        else
          t_ext[ex] = value;
      }

      const EffectiveHamiltonian heff = build_heff(H, t_ext, sd.spec);
      const EigenPairs eigs = eig_general(heff.matrix);
      const RootSelection root = select_ses_root(eigs, t_int, heff.space);
      sol.ambiguous = sol.ambiguous || root.ambiguous;
      if (std::abs(root.eigenvalue.imag()) > 1e-8)
        throw std::runtime_error("solve_flow: selected root has imaginary part " +
                                 std::to_string(root.eigenvalue.imag()));
      sol.eigenvalues[i] = root.eigenvalue.real();

      if (root.eigenvector.cwiseAbs().maxCoeff() == 0.0)
        throw std::runtime_error("solve_flow: degenerate eigenvector");
      Eigen::VectorXd civec = root.eigenvector.real();
      if (civec.cwiseAbs().maxCoeff() < 0.5 * root.eigenvector.cwiseAbs().maxCoeff())
        civec = root.eigenvector.imag();  // essentially imaginary vector of a real root

      const AmplitudeSet analyzed = cluster_analysis(civec, heff.space, sd.spec);

      double change = 0.0;
      for (const auto& ex : sd.internal) {
        const double old_v = amps.get(ex);
        const double new_v = old_v + damping * (analyzed.get(ex) - old_v);
        change = std::max(change, std::abs(new_v - old_v));
        if (new_v == 0.0)
          amps.erase(ex);
        else
          amps[ex] = new_v;
      }
      max_change = std::max(max_change, change);
      sol.trace.push_back({sweep, static_cast<int>(i), sol.eigenvalues[i], change});
    }

    const auto [lo, hi] = std::minmax_element(sol.eigenvalues.begin(), sol.eigenvalues.end());
    sol.spread = *hi - *lo;
    sol.sweeps = sweep;

    if (sol.spread < problem.cfg.flow_tol && max_change < problem.cfg.amp_tol) {
      sol.converged = true;
      sol.amplitudes = amps;
      sol.energy = sol.eigenvalues.front();
      return sol;
    }

    if (sol.spread > prev_spread) {
      if (++worsening >= 3 && damping > 0.49) {
        damping *= 0.5;
        worsening = 0;
      }
    } else {
      worsening = 0;
    }
    prev_spread = sol.spread;
  }

  throw ConvergenceError("quantum flow did not converge in " +
                             std::to_string(problem.cfg.max_sweeps) + " sweeps (spread " +
                             std::to_string(sol.spread) + ")",
                         {sol.spread});
}

}  // namespace ccfock
