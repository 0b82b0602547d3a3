// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>

#include "ccfock/fcidump.hpp"
#include "ccfock/flow.hpp"
#include "ccfock/report.hpp"

using namespace ccfock;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConvergence = 1;
constexpr int kExitInput = 2;

struct CommonOpts {
  std::string geom;
  std::string fcidump_path;
  std::string basis = "sto-3g";
  std::string model = "ccsd";
  std::string out;
  double scf_tol = 1e-10;
  double cc_tol = 1e-10;
  double flow_tol = 1e-9;
  double level_shift = 0.0;
  int max_iter = 300;
  int diis_depth = 8;
  int jobs = 1;
};

void add_system_flags(CLI::App* cmd, CommonOpts& opt) {
  cmd->add_option("--geom", opt.geom,
                  "named geometry (h2,h4,h6,h8,hchain,hring,h2pair with :k=v params) or file");
  cmd->add_option("--fcidump", opt.fcidump_path, "read integrals from an FCIDUMP file");
  cmd->add_option("--basis", opt.basis, "basis set name for --geom (sto-3g, 6-31g)");
  cmd->add_option("-o,--out", opt.out, "write the result document (JSON) here");
  cmd->add_option("--scf-tol", opt.scf_tol, "SCF convergence on max|FDS-SDF|");
  cmd->add_option("--cc-tol", opt.cc_tol, "CC convergence on the max residual");
  cmd->add_option("--level-shift", opt.level_shift, "denominator level shift (hartree)");
  cmd->add_option("--max-iter", opt.max_iter, "iteration budget for SCF and CC");
  cmd->add_option("--diis", opt.diis_depth, "DIIS subspace depth");
}

struct LoadedSystem {
  MOIntegrals mo;
  ScfResult scf;
  bool has_scf = false;
  std::string source;
};

LoadedSystem load_system(const CommonOpts& opt) {
  if (!opt.fcidump_path.empty()) {
    LoadedSystem sys;
    sys.mo = read_fcidump(opt.fcidump_path);
    sys.source = "fcidump:" + opt.fcidump_path;
    return sys;
  }
  if (opt.geom.empty())
    throw std::invalid_argument("either --geom or --fcidump is required");
  ScfConfig cfg;
  cfg.scf_tol = opt.scf_tol;
  cfg.max_iter = opt.max_iter;
  cfg.diis_depth = opt.diis_depth;
  LoadedSystem sys;
  auto built = mo_from_geometry(resolve_geometry(opt.geom), opt.basis, cfg);
  sys.mo = std::move(built.mo);
  sys.scf = std::move(built.scf);
  sys.has_scf = true;
  sys.source = opt.geom + "/" + opt.basis;
  return sys;
}

ExcitationSet model_excitations(const std::string& model, const MOIntegrals& mo) {
  const int n_occ = mo.n_occ();
  auto ranked = [&](int m) { return generate_excitation_set(m, mo.n_orb, n_occ); };
  if (model == "ccsd") return ranked(2);
  if (model == "ccsdt") return ranked(3);
  if (model == "ccsdtq") return ranked(4);
  if (model == "fci") return ranked(mo.n_elec);
  if (model.rfind("rank=", 0) == 0) return ranked(std::stoi(model.substr(5)));
  if (model.rfind("custom=", 0) == 0) {
    std::ifstream in(model.substr(7));
    if (!in) throw std::invalid_argument("cannot open excitation list " + model.substr(7));
    std::vector<Excitation> list;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      list.push_back(parse_excitation(line));
    }
    return ExcitationSet(std::move(list), model);
  }
  throw std::invalid_argument("unknown model '" + model +
                              "' (ccsd|ccsdt|ccsdtq|fci|rank=k|custom=file)");
}

CcConfig cc_config(const CommonOpts& opt) {
  CcConfig cfg;
  cfg.cc_tol = opt.cc_tol;
  cfg.max_iter = opt.max_iter;
  cfg.diis_depth = opt.diis_depth;
  cfg.level_shift = opt.level_shift;
  return cfg;
}

Document base_document(const LoadedSystem& sys, const CommonOpts& opt) {
  Document doc;
  doc["system"] = system_json(sys.mo, sys.source);
  Document config;
  config["model"] = opt.model;
  config["basis"] = opt.basis;
  config["scf_tol"] = opt.scf_tol;
  config["cc_tol"] = opt.cc_tol;
  config["flow_tol"] = opt.flow_tol;
  config["level_shift"] = opt.level_shift;
  config["max_iter"] = opt.max_iter;
  config["diis_depth"] = opt.diis_depth;
  doc["config"] = std::move(config);
  if (sys.has_scf) doc["scf"] = scf_json(sys.scf);
  doc["versions"] = versions_json();
  return doc;
}

void finish(Document& doc, const CommonOpts& opt,
            std::chrono::steady_clock::time_point t0) {
  Document timings;
  timings["total_ms"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  doc["timings"] = std::move(timings);
  if (!opt.out.empty()) write_document(doc, opt.out);
}

std::vector<SesSpec> parse_specs(const std::vector<std::string>& raw) {
  std::vector<SesSpec> specs;
  for (const auto& text : raw) specs.push_back(parse_ses_spec(text));
  return specs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coupled-cluster workbench on Fock-space operator matrices"};
  app.require_subcommand(1);

  CommonOpts opt;
  std::vector<std::string> ses_raw;
  std::string amps_out, amps_in, trace_path, dump_in;
  double tol = 1e-8;
  double damping = 1.0;
  int max_sweeps = 200;
  std::size_t max_ses = 0;
  int census_no = 0, census_nv = 0;
  bool info_only = false;

  auto* scf_cmd = app.add_subcommand("scf", "restricted Hartree-Fock");
  add_system_flags(scf_cmd, opt);

  auto* cc_cmd = app.add_subcommand("cc", "solve the CC amplitude equations");
  add_system_flags(cc_cmd, opt);
  cc_cmd->add_option("--model", opt.model, "ccsd|ccsdt|ccsdtq|fci|rank=k|custom=file");
  cc_cmd->add_option("--save-amps", amps_out, "write converged amplitudes");
  cc_cmd->add_option("--load-amps", amps_in, "check a stored amplitude file instead of solving");

  auto* down_cmd = app.add_subcommand("downfold",
                                      "effective-Hamiltonian eigenvalue per sub-algebra");
  add_system_flags(down_cmd, opt);
  down_cmd->add_option("--model", opt.model);
  down_cmd->add_option("--ses", ses_raw, "sub-algebra, e.g. \"R=2;S=3,4\" or \"R=1a;S=3a\"")
      ->required();

  auto* census_cmd = app.add_subcommand("census", "count CCSD sub-algebras");
  census_cmd->add_option("--no", census_no, "occupied orbitals")->required();
  census_cmd->add_option("--nv", census_nv, "virtual orbitals")->required();
  census_cmd->add_option("-o,--out", opt.out);

  auto* flow_cmd = app.add_subcommand("flow", "coupled sub-system eigenproblems");
  add_system_flags(flow_cmd, opt);
  flow_cmd->add_option("--ses", ses_raw)->required();
  flow_cmd->add_option("--flow-tol", opt.flow_tol, "eigenvalue-spread tolerance");
  flow_cmd->add_option("--max-sweeps", max_sweeps);
  flow_cmd->add_option("--damping", damping);
  flow_cmd->add_option("--trace", trace_path, "per-sweep CSV trace");

  auto* dump_cmd = app.add_subcommand("fcidump", "export or inspect integral files");
  add_system_flags(dump_cmd, opt);
  dump_cmd->add_option("--in", dump_in, "existing FCIDUMP to inspect");
  dump_cmd->add_flag("--info", info_only, "print header info only");

  auto* verify_cmd = app.add_subcommand("verify-all",
                                        "sweep sub-algebras and compare eigenvalues to E_CC");
  add_system_flags(verify_cmd, opt);
  verify_cmd->add_option("--model", opt.model);
  verify_cmd->add_option("--tol", tol, "acceptance threshold on |E(h) - E_CC|");
  verify_cmd->add_option("--max-ses", max_ses, "limit the sweep to the first N sub-algebras");
  verify_cmd->add_option("--ses", ses_raw, "extra sub-algebras (e.g. spin-orbital ones)");
  verify_cmd->add_option("--jobs", opt.jobs, "parallel sub-algebra verifications");

  CLI11_PARSE(app, argc, argv);
  const auto t0 = std::chrono::steady_clock::now();

  try {
    if (scf_cmd->parsed()) {
      const auto sys = load_system(opt);
      if (!sys.has_scf)
        throw std::invalid_argument("scf needs --geom (an FCIDUMP is already in MO basis)");
      std::printf("E_RHF = %.12f hartree (%d iterations)\n", sys.scf.e_rhf,
                  sys.scf.iterations);
      Document doc = base_document(sys, opt);
      finish(doc, opt, t0);
      return kExitOk;
    }

    if (cc_cmd->parsed()) {
      const auto sys = load_system(opt);
      const auto exset = model_excitations(opt.model, sys.mo);
      Document doc = base_document(sys, opt);
      if (!amps_in.empty()) {
        const auto file = read_amplitudes_file(amps_in);
        if (file.fingerprint != sys.mo.fingerprint_hex())
          throw std::invalid_argument("amplitude file fingerprint does not match this system");
        auto basis = std::make_shared<const FockBasis>(
            FockBasis::enumerate(sys.mo.n_orb, sys.mo.n_occ(), sys.mo.n_occ()));
        const auto H = build_hamiltonian_matrix(sys.mo, basis);
        const auto r = cc_residuals(H, file.amplitudes, exset);
        std::printf("E = %.12f hartree, max residual %.3e (stored amplitudes)\n",
                    cc_energy(H, file.amplitudes), r.cwiseAbs().maxCoeff());
        finish(doc, opt, t0);
        return kExitOk;
      }
      const auto sol = solve_cc(sys.mo, exset, cc_config(opt));
      std::printf("E_CC = %.12f hartree (E_corr = %.12f, %d iterations, %zu amplitudes)\n",
                  sol.e_total, sol.e_corr, sol.iterations, sol.amplitudes.size());
      doc["cc"] = cc_json(sol, opt.model);
      if (!amps_out.empty())
        write_amplitudes_file(amps_out, sol.amplitudes, sys.mo.fingerprint_hex());
      finish(doc, opt, t0);
      return kExitOk;
    }

    if (down_cmd->parsed()) {
      const auto sys = load_system(opt);
      const auto exset = model_excitations(opt.model, sys.mo);
      const auto specs = parse_specs(ses_raw);
      for (const auto& spec : specs)
        if (!validate_ses(spec, exset, sys.mo.n_orb, sys.mo.n_occ()))
          throw std::invalid_argument(spec.str() + " is not a SES of model " + opt.model);

      auto basis = std::make_shared<const FockBasis>(
          FockBasis::enumerate(sys.mo.n_orb, sys.mo.n_occ(), sys.mo.n_occ()));
      const auto H = build_hamiltonian_matrix(sys.mo, basis);
      const auto sol = solve_cc(H, sys.mo.orbital_energies, exset, cc_config(opt));
      std::printf("E_CC = %.12f hartree\n", sol.e_total);

      Document doc = base_document(sys, opt);
      doc["cc"] = cc_json(sol, opt.model);
      Document reports = Document::array();
      for (const auto& spec : specs) {
        const auto rep = verify_theorem_with(H, sol, spec);
        std::printf("%-24s dim=%3zu  E(h) = %.12f  |dE| = %.3e  resid = %.3e\n",
                    rep.spec.str().c_str(), rep.internal_dim, rep.e_h,
                    std::abs(rep.e_h - rep.e_cc), rep.eigvec_residual);
        reports.push_back(downfold_json(rep));
      }
      doc["downfold"] = std::move(reports);
      finish(doc, opt, t0);
      return kExitOk;
    }

    if (census_cmd->parsed()) {
      const auto count = ses_census_ccsd(census_no, census_nv);
      std::printf("%llu\n", static_cast<unsigned long long>(count));
      Document doc;
      doc["n_occupied"] = census_no;
      doc["n_virtual"] = census_nv;
      doc["census_ccsd"] = count;
      doc["distinct_pairs"] = count - static_cast<std::uint64_t>(census_no) * census_nv;
      doc["versions"] = versions_json();
      finish(doc, opt, t0);
      return kExitOk;
    }

    if (flow_cmd->parsed()) {
      const auto sys = load_system(opt);
      FlowProblem problem{sys.mo, parse_specs(ses_raw), {}};
      problem.cfg.flow_tol = opt.flow_tol;
      problem.cfg.amp_tol = opt.flow_tol;
      problem.cfg.max_sweeps = max_sweeps;
      problem.cfg.damping = damping;
      const auto sol = solve_flow(problem);
      std::printf("flow energy = %.12f hartree (%d sweeps, spread %.3e)\n", sol.energy,
                  sol.sweeps, sol.spread);
      if (!trace_path.empty()) {
        std::ofstream trace(trace_path);
        trace << "sweep,spec,eigenvalue,amp_change\n";
        for (const auto& row : sol.trace)
          trace << row.sweep << ',' << row.spec_index << ',' << std::setprecision(17)
                << row.eigenvalue << ',' << row.amp_change << '\n';
      }
      Document doc = base_document(sys, opt);
      doc["flow"] = flow_json(sol);
      finish(doc, opt, t0);
      return kExitOk;
    }

    if (dump_cmd->parsed()) {
      if (!dump_in.empty()) {
        const auto mo = read_fcidump(dump_in);
        std::printf("NORB=%d NELEC=%d e_nuc=%.12f fingerprint=%s\n", mo.n_orb, mo.n_elec,
                    mo.e_nuc, mo.fingerprint_hex().c_str());
        if (!info_only && !opt.out.empty()) write_fcidump(mo, opt.out);
        return kExitOk;
      }
      const auto sys = load_system(opt);
      if (opt.out.empty()) throw std::invalid_argument("fcidump export needs -o <path>");
      write_fcidump(sys.mo, opt.out);
      std::printf("wrote %s (NORB=%d NELEC=%d)\n", opt.out.c_str(), sys.mo.n_orb,
                  sys.mo.n_elec);
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      const auto sys = load_system(opt);
      const auto exset = model_excitations(opt.model, sys.mo);
      auto basis = std::make_shared<const FockBasis>(
          FockBasis::enumerate(sys.mo.n_orb, sys.mo.n_occ(), sys.mo.n_occ()));
      const auto H = build_hamiltonian_matrix(sys.mo, basis);
      const auto sol = solve_cc(H, sys.mo.orbital_energies, exset, cc_config(opt));

      int model_rank = 0;
      for (const auto& ex : exset) model_rank = std::max(model_rank, ex.rank());
      auto specs = enumerate_valid_ses(sys.mo.n_occ(), sys.mo.n_virt(), model_rank);
      specs.push_back(SesSpec{});  // trivial sub-algebra closes the sweep
      for (const auto& extra : parse_specs(ses_raw)) specs.push_back(extra);
      if (max_ses > 0 && specs.size() > max_ses) specs.resize(max_ses);

      std::vector<DownfoldReport> reports(specs.size());
      const int jobs = std::max(1, opt.jobs);
      std::atomic<std::size_t> next{0};
      auto worker = [&]() {
        for (std::size_t k = next.fetch_add(1); k < specs.size(); k = next.fetch_add(1))
          reports[k] = verify_theorem_with(H, sol, specs[k]);
      };
      std::vector<std::future<void>> pool;
      for (int j = 1; j < jobs; ++j) pool.push_back(std::async(std::launch::async, worker));
      worker();
      for (auto& f : pool) f.get();

      std::printf("E_CC(%s) = %.12f hartree; sweeping %zu sub-algebras\n", opt.model.c_str(),
                  sol.e_total, specs.size());
      std::printf("%-26s %5s  %-16s %-10s %-10s\n", "SES", "dim", "E(h)", "|dE|", "resid");
      std::vector<std::string> offenders;
      Document table = Document::array();
      for (const auto& rep : reports) {
        const double diff = std::abs(rep.e_h - rep.e_cc);
        std::printf("%-26s %5zu  %-16.9f %-10.3e %-10.3e%s\n", rep.spec.str().c_str(),
                    rep.internal_dim, rep.e_h, diff, rep.eigvec_residual,
                    diff <= tol ? "" : "  FAIL");
        if (diff > tol) offenders.push_back(rep.spec.str());
        table.push_back(downfold_json(rep));
      }
      Document doc = base_document(sys, opt);
      doc["cc"] = cc_json(sol, opt.model);
      doc["verify_all"] = std::move(table);
      doc["tolerance"] = tol;
      doc["failures"] = offenders;
      finish(doc, opt, t0);
      if (!offenders.empty()) {
        std::fprintf(stderr, "%zu sub-algebra(s) exceeded |dE| tolerance:\n", offenders.size());
        for (const auto& s : offenders) std::fprintf(stderr, "  %s\n", s.c_str());
        return kExitConvergence;
      }
      std::printf("all %zu sub-algebras reproduce E_CC within %.1e\n", specs.size(), tol);
      return kExitOk;
    }
  } catch (const ConvergenceError& e) {
    std::fprintf(stderr, "convergence failure: %s\n", e.what());
    return kExitConvergence;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  }
  return kExitInput;
}
