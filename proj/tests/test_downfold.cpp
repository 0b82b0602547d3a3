// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "ccfock/downfold.hpp"
#include "ccfock/geometry.hpp"
#include "oracles.hpp"

using namespace ccfock;

namespace {

std::shared_ptr<const FockBasis> make_basis(int n_orb, int na, int nb) {
  return std::make_shared<const FockBasis>(FockBasis::enumerate(n_orb, na, nb));
}

}  // namespace

TEST_CASE("eig_general") {
  SUBCASE("diagonal matrix returns its diagonal") {
    Eigen::MatrixXd d = Eigen::Vector3d(3.0, -1.0, 7.5).asDiagonal();
    const auto eigs = eig_general(d);
    std::vector<double> vals;
    for (int k = 0; k < 3; ++k) {
      CHECK(std::abs(eigs.values[k].imag()) < 1e-14);
      vals.push_back(eigs.values[k].real());
    }
    std::sort(vals.begin(), vals.end());
    CHECK(vals[0] == doctest::Approx(-1.0));
    CHECK(vals[1] == doctest::Approx(3.0));
    CHECK(vals[2] == doctest::Approx(7.5));
  }
  SUBCASE("symmetric matrix matches the symmetric solver to 1e-10") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> dist(-1, 1);
    Eigen::MatrixXd a(6, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = dist(rng);
    const auto eigs = eig_general(a);
    Eigen::VectorXd got(6);
    for (int k = 0; k < 6; ++k) {
      CHECK(std::abs(eigs.values[k].imag()) < 1e-12);
      got[k] = eigs.values[k].real();
    }
    std::sort(got.data(), got.data() + 6);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> sym(a);
    CHECK((got - sym.eigenvalues()).cwiseAbs().maxCoeff() < 1e-10);
  }
  SUBCASE("rotation generator gives the conjugate pair") {
    Eigen::MatrixXd r(2, 2);
    r << 0.0, -1.0, 1.0, 0.0;
    const auto eigs = eig_general(r);
    CHECK(std::abs(eigs.values[0].real()) < 1e-14);
    CHECK(std::abs(std::abs(eigs.values[0].imag()) - 1.0) < 1e-14);
    CHECK(std::abs(eigs.values[0] - std::conj(eigs.values[1])) < 1e-14);
  }
  SUBCASE("non-square input throws") {
    CHECK_THROWS_AS((void)eig_general(Eigen::MatrixXd::Zero(2, 3)), std::invalid_argument);
  }
}

TEST_CASE("build_heff") {
  const auto sys = mo_from_geometry(h4_model(0.500), "sto-3g");
  const auto basis = make_basis(4, 2, 2);
  const auto H = build_hamiltonian_matrix(sys.mo, basis);
  const auto exset = generate_excitation_set(2, 4, 2);
  const auto sol = solve_cc(sys.mo, exset);

  SUBCASE("trivial spec gives the 1x1 CC energy block") {
    const auto heff = build_heff(H, sol.amplitudes, SesSpec{});
    REQUIRE(heff.matrix.rows() == 1);
    CHECK(heff.matrix(0, 0) == doctest::Approx(sol.e_total).epsilon(1e-12));
  }
  SUBCASE("t_ext = 0 over the full active space returns H itself") {
    const auto heff = build_heff(H, {}, ses_orbital({1, 2}, {3, 4}));
    REQUIRE(heff.matrix.rows() == H.data().rows());
    // internal space enumerates the whole sector (order may differ)
    CHECK(heff.space.size() == basis->size());
    Eigen::MatrixXd perm = extract_subblock(H, heff.space);
    CHECK((heff.matrix - perm).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("1-in-1 orbital space is 4x4") {
    const auto parts = partition_amplitudes(sol.amplitudes, ses_orbital({2}, {3}));
    const auto heff = build_heff(H, parts.t_ext, ses_orbital({2}, {3}));
    CHECK(heff.matrix.rows() == 4);
  }
  SUBCASE("internal amplitude in t_ext violates the contract") {
    CHECK_THROWS_AS((void)build_heff(H, sol.amplitudes, ses_orbital({2}, {3})),
                    std::invalid_argument);
  }
  SUBCASE("columnwise chains match the full-matrix transform") {
    const auto spec = ses_orbital({2}, {3, 4});
    const auto parts = partition_amplitudes(sol.amplitudes, spec);
    const auto heff = build_heff(H, parts.t_ext, spec);
    const auto T = build_cluster_matrix(parts.t_ext, basis);
    const auto Hbar = similarity_transform(H, T);
    const auto block = extract_subblock(Hbar, heff.space);
    CHECK((heff.matrix - block).cwiseAbs().maxCoeff() < 1e-11);
  }
}

TEST_CASE("select_ses_root on the trivial space") {
  Eigen::MatrixXd one(1, 1);
  one << -2.5;
  const auto eigs = eig_general(one);
  DetSubset space{make_basis(4, 2, 2), {0}};
  const auto root = select_ses_root(eigs, {}, space);
  CHECK(root.eigenvalue.real() == doctest::Approx(-2.5));
  CHECK(root.overlap == doctest::Approx(1.0));
  CHECK_FALSE(root.ambiguous);
}

TEST_CASE("theorem on H6 r=2.0: five reference sub-algebras and the one-electron sub-system") {
  const auto sys = mo_from_geometry(h_chain(6, 2.0), "sto-3g");
  const auto exset = generate_excitation_set(2, 6, 3);
  const auto basis = make_basis(6, 3, 3);
  const auto H = build_hamiltonian_matrix(sys.mo, basis);
  const auto sol = solve_cc(H, sys.mo.orbital_energies, exset);
  CHECK(sol.e_total == doctest::Approx(-3.217277).epsilon(1e-6));

  std::vector<SesSpec> specs = {ses_orbital({3}, {4}), ses_orbital({2}, {4}),
                                ses_orbital({1}, {6}), ses_orbital({1}, {4, 5}),
                                ses_orbital({3}, {4, 5, 6})};
  for (const auto& spec : specs) {
    REQUIRE(validate_ses(spec, exset, 6, 3));
    const auto rep = verify_theorem_with(H, sol, spec);
    CAPTURE(spec.str());
    CHECK(std::abs(rep.e_h - rep.e_cc) < 1e-8);
    CHECK(rep.eigvec_residual < 1e-8);
    CHECK(rep.overlap > 0.999999);
    CHECK(std::abs(rep.e_h_imag) < 1e-10);
  }

  SUBCASE("spin-orbital algebra with a single correlated alpha electron") {
    const auto spec = ses_spin_orbital({{3, Spin::alpha}}, {{5, Spin::alpha}});
    const auto rep = verify_theorem_with(H, sol, spec);
    CHECK(rep.internal_dim == 2);
    CHECK(std::abs(rep.e_h - rep.e_cc) < 1e-8);
    CHECK(rep.e_h == doctest::Approx(-3.217277).epsilon(1e-6));
    // downfolding a single spin channel breaks hermiticity visibly
    CHECK(rep.max_asymmetry > 1e-8);
  }
}

TEST_CASE("theorem on the H4 model, weakly and strongly correlated") {
  for (const auto& [alpha, table_e] :
       std::vector<std::pair<double, double>>{{0.005, -1.946325}, {0.500, -2.151004}}) {
    const auto sys = mo_from_geometry(h4_model(alpha), "sto-3g");
    const auto exset = generate_excitation_set(2, 4, 2);
    const auto basis = make_basis(4, 2, 2);
    const auto H = build_hamiltonian_matrix(sys.mo, basis);
    const auto sol = solve_cc(H, sys.mo.orbital_energies, exset);
    CHECK(sol.e_total == doctest::Approx(table_e).epsilon(1e-6));

    const std::vector<SesSpec> specs = {ses_orbital({2}, {3}), ses_orbital({1}, {3}),
                                        ses_orbital({2}, {4}), ses_orbital({2}, {3, 4}),
                                        ses_orbital({1, 2}, {3})};
    for (const auto& spec : specs) {
      const auto rep = verify_theorem_with(H, sol, spec);
      CAPTURE(alpha);
      CAPTURE(spec.str());
      CHECK(std::abs(rep.e_h - rep.e_cc) < 1e-8);
      CHECK(rep.eigvec_residual < 1e-8);
      CHECK(rep.e_h == doctest::Approx(table_e).epsilon(1e-6));
    }
    // spin-orbital variant quoted alongside the same reference set
    const auto rep = verify_theorem_with(
        H, sol, ses_spin_orbital({{1, Spin::alpha}}, {{3, Spin::alpha}}));
    CHECK(std::abs(rep.e_h - rep.e_cc) < 1e-8);
  }
}

TEST_CASE("sweep of every valid CCSD sub-algebra gives one energy (H4)") {
  const auto sys = mo_from_geometry(h4_model(0.005), "sto-3g");
  const auto exset = generate_excitation_set(2, 4, 2);
  const auto basis = make_basis(4, 2, 2);
  const auto H = build_hamiltonian_matrix(sys.mo, basis);
  const auto sol = solve_cc(H, sys.mo.orbital_energies, exset);

  const auto specs = enumerate_valid_ses(2, 2, 2);
  CHECK(specs.size() == ses_census_ccsd(2, 2) - 4);
  double lo = 0.0, hi = -1e9;
  for (const auto& spec : specs) {
    const auto rep = verify_theorem_with(H, sol, spec);
    lo = std::min(lo, rep.e_h);
    hi = std::max(hi, rep.e_h);
    CHECK(std::abs(rep.e_h - rep.e_cc) < 1e-8);
  }
  CHECK(hi - lo < 1e-8);
}

TEST_CASE("sweep of every valid CCSD sub-algebra gives one energy (H6)") {
  const auto sys = mo_from_geometry(h_chain(6, 2.0), "sto-3g");
  const auto exset = generate_excitation_set(2, 6, 3);
  const auto basis = make_basis(6, 3, 3);
  const auto H = build_hamiltonian_matrix(sys.mo, basis);
  const auto sol = solve_cc(H, sys.mo.orbital_energies, exset);

  const auto specs = enumerate_valid_ses(3, 3, 2);
  CHECK(specs.size() == ses_census_ccsd(3, 3) - 9);
  for (const auto& spec : specs) {
    const auto rep = verify_theorem_with(H, sol, spec);
    CHECK(std::abs(rep.e_h - rep.e_cc) < 1e-8);
    CHECK(rep.eigvec_residual < 1e-8);
  }
}

TEST_CASE("CCSDTQ downfolding on H6, including CCSD-type sub-algebras") {
  const auto sys = mo_from_geometry(h_chain(6, 2.0), "sto-3g");
  const auto exset = generate_excitation_set(4, 6, 3);
  const auto basis = make_basis(6, 3, 3);
  const auto H = build_hamiltonian_matrix(sys.mo, basis);
  const auto sol = solve_cc(H, sys.mo.orbital_energies, exset);
  CHECK(sol.e_total == doctest::Approx(-3.217699).epsilon(1e-6));

  const std::vector<SesSpec> specs = {ses_orbital({2, 3}, {4, 5}), ses_orbital({1, 2}, {5, 6}),
                                      ses_orbital({3}, {4}), ses_orbital({3}, {4, 5})};
  for (const auto& spec : specs) {
    REQUIRE(validate_ses(spec, exset, 6, 3));
    const auto rep = verify_theorem_with(H, sol, spec);
    CAPTURE(spec.str());
    CHECK(std::abs(rep.e_h - rep.e_cc) < 1e-8);
    CHECK(rep.eigvec_residual < 1e-8);
    CHECK(rep.e_h == doctest::Approx(-3.217699).epsilon(1e-6));
  }

  // spin-orbital single-electron variant quoted for the rank-4 model
  const auto rep = verify_theorem_with(
      H, sol, ses_spin_orbital({{2, Spin::alpha}}, {{4, Spin::alpha}}));
  CHECK(std::abs(rep.e_h - rep.e_cc) < 1e-8);
}

TEST_CASE("rank-3 model: theorem holds for its rank-2 sub-algebras") {
  const auto sys = mo_from_geometry(h4_model(0.005), "sto-3g");
  const auto exset = generate_excitation_set(3, 4, 2);
  const auto basis = make_basis(4, 2, 2);
  const auto H = build_hamiltonian_matrix(sys.mo, basis);
  const auto sol = solve_cc(H, sys.mo.orbital_energies, exset);

  for (const auto& spec : {ses_orbital({2}, {3}), ses_orbital({1}, {3, 4})}) {
    REQUIRE(validate_ses(spec, exset, 4, 2));
    const auto rep = verify_theorem_with(H, sol, spec);
    CHECK(std::abs(rep.e_h - rep.e_cc) < 1e-8);
    CHECK(rep.eigvec_residual < 1e-8);
  }
  // a rank-4 algebra is not embedded in the rank-3 model
  CHECK_FALSE(validate_ses(ses_orbital({1, 2}, {3, 4}), exset, 4, 2));
}

TEST_CASE("verify_theorem rejects non-embedding specs") {
  const auto sys = mo_from_geometry(h4_model(0.5), "sto-3g");
  const auto exset = generate_excitation_set(2, 4, 2);
  CHECK_THROWS_AS((void)verify_theorem(sys.mo, exset, ses_orbital({1, 2}, {3, 4})),
                  std::invalid_argument);
}

TEST_CASE("excited-dominated active space still selects the theorem root") {
  // R={1},S={6} pairs the deepest orbital with the highest virtual; the
  // sub-system root is not the lowest eigenvalue of H^eff in general, the
  // overlap criterion must find it anyway
  const auto sys = mo_from_geometry(h_chain(6, 2.0), "sto-3g");
  const auto exset = generate_excitation_set(2, 6, 3);
  const auto rep = verify_theorem(sys.mo, exset, ses_orbital({1}, {6}));
  CHECK(std::abs(rep.e_h - rep.e_cc) < 1e-8);
}
