// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "ccfock/flow.hpp"
#include "ccfock/geometry.hpp"
#include "oracles.hpp"

using namespace ccfock;

namespace {

std::shared_ptr<const FockBasis> make_basis(int n_orb, int na, int nb) {
  return std::make_shared<const FockBasis>(FockBasis::enumerate(n_orb, na, nb));
}

AmplitudeSet random_internal(const SesSpec& spec, int n_orb, int n_occ, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-0.4, 0.4);
  AmplitudeSet t;
  for (const auto& ex : internal_excitations(spec, n_orb, n_occ)) t[ex] = dist(rng);
  return t;
}

}  // namespace

TEST_CASE("cluster_analysis") {
  const auto basis = make_basis(4, 2, 2);
  const auto spec = ses_orbital({2}, {3, 4});
  const auto space = internal_space(spec, basis);

  SUBCASE("reference-only vector gives no amplitudes") {
    Eigen::VectorXd civec = Eigen::VectorXd::Zero(space.size());
    civec[0] = 1.0;
    CHECK(cluster_analysis(civec, space, spec).empty());
  }
  SUBCASE("exponential round trip recovers T_int to 1e-12") {
    for (std::uint32_t seed : {10u, 20u, 30u}) {
      const auto t = random_internal(spec, 4, 2, seed);
      const auto civec = subsystem_vector(t, space);
      const auto back = cluster_analysis(civec, space, spec);
      for (const auto& [ex, value] : t)
        CHECK(back.get(ex) == doctest::Approx(value).epsilon(1e-12));
      CHECK(back.size() == t.size());
    }
  }
  SUBCASE("re-exponentiation reproduces a random CI vector to 1e-10") {
    std::mt19937 rng(555);
    std::uniform_real_distribution<double> dist(-0.7, 0.7);
    Eigen::VectorXd civec(space.size());
    civec[0] = 1.0;
    for (std::size_t k = 1; k < space.size(); ++k) civec[k] = dist(rng);
    const auto t = cluster_analysis(civec, space, spec);
    const auto rebuilt = subsystem_vector(t, space);
    CHECK((rebuilt - civec).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("scaling the vector changes nothing (intermediate normalization)") {
    const auto t = random_internal(spec, 4, 2, 3);
    const Eigen::VectorXd civec = 2.75 * subsystem_vector(t, space);
    const auto back = cluster_analysis(civec, space, spec);
    for (const auto& [ex, value] : t) CHECK(back.get(ex) == doctest::Approx(value).epsilon(1e-12));
  }
  SUBCASE("vanishing reference coefficient fails intermediate normalization") {
    Eigen::VectorXd civec = Eigen::VectorXd::Ones(space.size());
    civec[0] = 0.0;
    CHECK_THROWS_AS((void)cluster_analysis(civec, space, spec), std::runtime_error);
  }
}

TEST_CASE("single-spec flow equals the downfolding theorem bit for bit") {
  const auto sys = mo_from_geometry(h4_model(0.500), "sto-3g");
  const auto spec = ses_orbital({2}, {3});

  FlowProblem problem{sys.mo, {spec}, {}};
  const auto flow = solve_flow(problem);
  CHECK(flow.converged);

  // the degenerate flow carries no external amplitudes, so its eigenproblem
  // equals verify_theorem over the internal excitation set
  const auto rep = verify_theorem(sys.mo, internal_excitations(spec, 4, 2), spec);
  CHECK(flow.energy == rep.e_h);  // bit-identical
}

TEST_CASE("two overlapping sub-algebras match the union-excitation CC solve") {
  const auto sys = mo_from_geometry(h4_model(0.500), "sto-3g");
  const auto h1 = ses_orbital({2}, {3, 4});
  const auto h2 = ses_orbital({1, 2}, {3});

  const auto union_set = internal_excitations(h1, 4, 2)
                             .merged_with(internal_excitations(h2, 4, 2));
  CHECK(union_set.size() == 13);  // 8 + 8 with 3 shared

  const auto union_cc = solve_cc(sys.mo, union_set);

  FlowProblem problem{sys.mo, {h1, h2}, {}};
  const auto flow = solve_flow(problem);
  CHECK(flow.converged);
  for (double e : flow.eigenvalues) CHECK(std::abs(e - union_cc.e_total) < 1e-7);

  SUBCASE("fixed point satisfies the union residual equations") {
    const auto basis = make_basis(4, 2, 2);
    const auto H = build_hamiltonian_matrix(sys.mo, basis);
    const auto r = cc_residuals(H, flow.amplitudes, union_set);
    CHECK(r.cwiseAbs().maxCoeff() < 10 * problem.cfg.flow_tol);
  }
  SUBCASE("sweep order does not move the fixed point") {
    FlowProblem reversed{sys.mo, {h2, h1}, {}};
    const auto back = solve_flow(reversed);
    CHECK(std::abs(back.energy - flow.energy) < problem.cfg.flow_tol);
  }
  SUBCASE("trace rows cover every sweep and spec") {
    CHECK(flow.trace.size() == static_cast<std::size_t>(2 * flow.sweeps));
    CHECK(flow.trace.front().sweep == 1);
    CHECK(flow.trace.back().sweep == flow.sweeps);
  }
}

TEST_CASE("strongly correlated H4 flow still agrees with the union solve") {
  const auto sys = mo_from_geometry(h4_model(0.005), "sto-3g");
  const auto h1 = ses_orbital({2}, {3});
  const auto h2 = ses_orbital({2}, {4});
  const auto union_set = internal_excitations(h1, 4, 2)
                             .merged_with(internal_excitations(h2, 4, 2));
  const auto union_cc = solve_cc(sys.mo, union_set);

  FlowProblem problem{sys.mo, {h1, h2}, {}};
  const auto flow = solve_flow(problem);
  CHECK(flow.converged);
  CHECK(std::abs(flow.energy - union_cc.e_total) < 1e-7);
}

TEST_CASE("non-interacting monomers: one localized sub-algebra each") {
  const auto monomer = h_chain(2, 1.4);
  Geometry far = monomer;
  for (auto& a : far.atoms) a.position[2] += 1000.0;

  const auto mono = mo_from_geometry(monomer, "sto-3g");
  const auto mono_cc = solve_cc(mono.mo, generate_excitation_set(2, 2, 1));

  const auto dimer = mo_direct_sum({monomer, far}, {2, 2}, "sto-3g");
  // sorted orbitals: occ = [gA, gB], virt = [uA, uB]
  FlowProblem problem{dimer.mo, {ses_orbital({1}, {3}), ses_orbital({2}, {4})}, {}};
  const auto flow = solve_flow(problem);
  CHECK(flow.converged);
  CHECK(std::abs(flow.energy - 2.0 * mono_cc.e_total) < 1e-8);
  for (double e : flow.eigenvalues) CHECK(std::abs(e - flow.energy) < problem.cfg.flow_tol);
}

TEST_CASE("flow error paths") {
  const auto sys = mo_from_geometry(h4_model(0.5), "sto-3g");
  SUBCASE("no specs") {
    FlowProblem empty{sys.mo, {}, {}};
    CHECK_THROWS_AS((void)solve_flow(empty), std::invalid_argument);
  }
  SUBCASE("sweep budget exhausted") {
    FlowProblem problem{sys.mo, {ses_orbital({2}, {3}), ses_orbital({1}, {3})}, {}};
    problem.cfg.max_sweeps = 1;
    CHECK_THROWS_AS((void)solve_flow(problem), ConvergenceError);
  }
}
