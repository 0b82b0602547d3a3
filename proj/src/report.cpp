// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccfock/report.hpp"

#include <Eigen/Core>
#include <fstream>

namespace ccfock {

Document system_json(const MOIntegrals& mo, const std::string& source) {
  Document d;
  d["source"] = source;
  d["fingerprint"] = mo.fingerprint_hex();
  d["n_orb"] = mo.n_orb;
  d["n_elec"] = mo.n_elec;
  d["e_nuc"] = mo.e_nuc;
  return d;
}

Document scf_json(const ScfResult& scf) {
  Document d;
  d["e_rhf"] = scf.e_rhf;
  d["iterations"] = scf.iterations;
  d["converged"] = scf.converged;
  d["orbital_energies"] = std::vector<double>(
      scf.orbital_energies.data(), scf.orbital_energies.data() + scf.orbital_energies.size());
  return d;
}

Document cc_json(const CCSolution& sol, const std::string& model) {
  Document d;
  d["model"] = model;
  d["e_total"] = sol.e_total;
  d["e_corr"] = sol.e_corr;
  d["e_ref"] = sol.e_ref;
  d["residual_norm"] = sol.residual_norm;
  d["iterations"] = sol.iterations;
  d["converged"] = sol.converged;
  d["n_amplitudes"] = sol.amplitudes.size();
  return d;
}

Document downfold_json(const DownfoldReport& r) {
  Document d;
  d["ses"] = r.spec.str();
  d["mode"] = r.spec.mode == SesMode::orbital ? "orbital" : "spin_orbital";
  d["internal_dim"] = r.internal_dim;
  d["e_cc"] = r.e_cc;
  d["e_h"] = r.e_h;
  d["e_h_imag"] = r.e_h_imag;
  d["abs_diff"] = std::abs(r.e_h - r.e_cc);
  d["eigvec_residual"] = r.eigvec_residual;
  d["overlap"] = r.overlap;
  d["ambiguous"] = r.ambiguous;
  d["max_asymmetry"] = r.max_asymmetry;
  d["wall_ms"] = r.wall_ms;
  return d;
}

Document flow_json(const FlowSolution& sol) {
  Document d;
  d["energy"] = sol.energy;
  d["eigenvalues"] = sol.eigenvalues;
  d["spread"] = sol.spread;
  d["sweeps"] = sol.sweeps;
  d["converged"] = sol.converged;
  d["ambiguous"] = sol.ambiguous;
  d["n_amplitudes"] = sol.amplitudes.size();
  Document trace = Document::array();
  for (const auto& row : sol.trace) {
    Document r;
    r["sweep"] = row.sweep;
    r["spec"] = row.spec_index;
    r["eigenvalue"] = row.eigenvalue;
    r["amp_change"] = row.amp_change;
    trace.push_back(std::move(r));
  }
  d["trace"] = std::move(trace);
  return d;
}

Document versions_json() {
  Document d;
  d["ccfock"] = "0.1.0";
  d["eigen"] = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) +
               "." + std::to_string(EIGEN_MINOR_VERSION);
  return d;
}

void write_document(const Document& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << doc.dump(2) << "\n";
}

}  // namespace ccfock
