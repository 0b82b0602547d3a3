// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>
#include <sstream>

#include "ccfock/cc.hpp"
#include "ccfock/excitations.hpp"
#include "ccfock/opmatrix.hpp"
#include "oracles.hpp"

using namespace ccfock;

namespace {

std::shared_ptr<const FockBasis> make_basis(int n_orb, int na, int nb) {
  return std::make_shared<const FockBasis>(FockBasis::enumerate(n_orb, na, nb));
}

AmplitudeSet random_amplitudes(const ExcitationSet& exset, std::uint32_t seed, double scale) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-scale, scale);
  AmplitudeSet t;
  for (const auto& ex : exset) t[ex] = dist(rng);
  return t;
}

}  // namespace

TEST_CASE("hamiltonian matrix equals the string-expansion oracle") {
  SUBCASE("random 3-orbital integrals") {
    const auto mo = oracle::random_mo(3, 4, 123);
    const auto basis = make_basis(3, 2, 2);
    const auto H = build_hamiltonian_matrix(mo, basis);
    const auto want = oracle::hamiltonian_string_expansion(mo, *basis);
    CHECK((H.data() - want).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("random 4-orbital integrals, asymmetric sector") {
    const auto mo = oracle::random_mo(4, 4, 77);
    const auto basis = make_basis(4, 3, 1);
    const auto H = build_hamiltonian_matrix(mo, basis);
    const auto want = oracle::hamiltonian_string_expansion(mo, *basis);
    CHECK((H.data() - want).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("H2/STO-3G physical integrals") {
    const auto sys = mo_from_geometry(h_chain(2, 1.4), "sto-3g");
    const auto basis = make_basis(2, 1, 1);
    const auto H = build_hamiltonian_matrix(sys.mo, basis);
    const auto want = oracle::hamiltonian_string_expansion(sys.mo, *basis);
    CHECK((H.data() - want).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("hamiltonian matrix basics on H2") {
  const auto sys = mo_from_geometry(h_chain(2, 1.4), "sto-3g");
  const auto basis = make_basis(2, 1, 1);
  const auto H = build_hamiltonian_matrix(sys.mo, basis);

  SUBCASE("symmetric to 1e-12") {
    CHECK((H.data() - H.data().transpose()).cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("reference diagonal is the RHF energy") {
    CHECK(H.data()(0, 0) == doctest::Approx(sys.scf.e_rhf).epsilon(1e-10));
  }
  SUBCASE("lowest eigenvalue is the FCI ground energy") {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H.data());
    // H2 minimal basis: FCI = 2x2 in the sigma_g^2 / sigma_u^2 block
    const double e_fci = es.eigenvalues()[0];
    CHECK(e_fci < sys.scf.e_rhf);
    CHECK(e_fci == doctest::Approx(-1.137275943617).epsilon(1e-9));
  }
  SUBCASE("sector mismatch throws") {
    CHECK_THROWS_AS((void)build_hamiltonian_matrix(sys.mo, make_basis(2, 2, 2)),
                    std::invalid_argument);
  }
}

TEST_CASE("cluster matrix scatter") {
  const auto basis = make_basis(2, 1, 1);

  SUBCASE("empty amplitude set gives the zero matrix") {
    const auto T = build_cluster_matrix({}, basis);
    CHECK(T.data().cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("single amplitude populates the expected column entries") {
    AmplitudeSet t;
    const Excitation ex({{0, Spin::alpha}}, {{1, Spin::alpha}});
    t[ex] = 0.37;
    const auto T = build_cluster_matrix(t, basis);
    const auto img = apply_excitation(basis->reference(), ex);
    CHECK(T.data()(basis->index_of(img->first), 0) ==
          doctest::Approx(0.37 * img->second).epsilon(1e-15));
    // column sums: one entry per determinant the excitation applies to
    int nonzeros = 0;
    for (Eigen::Index c = 0; c < T.dim(); ++c)
      for (Eigen::Index r = 0; r < T.dim(); ++r)
        if (T.data()(r, c) != 0.0) ++nonzeros;
    CHECK(nonzeros == 2);  // applies to |ref> and to the beta-excited det
  }
}

TEST_CASE("cluster matrices are structurally nilpotent") {
  const auto basis = make_basis(4, 2, 2);
  const auto exset = generate_excitation_set(2, 4, 2);
  const auto t = random_amplitudes(exset, 99, 0.8);
  const auto T = build_cluster_matrix(t, basis);

  Eigen::MatrixXd power = T.data();
  int k = 1;
  while (!(power.array() == 0.0).all()) {
    power = power * T.data();
    ++k;
    REQUIRE(k <= 5);
  }
  CHECK(k <= basis->n_elec() + 1);
}

TEST_CASE("exp_nilpotent") {
  const auto basis = make_basis(4, 2, 2);

  SUBCASE("exp(0) = I") {
    const auto E = exp_nilpotent(build_cluster_matrix({}, basis));
    CHECK((E.data() - Eigen::MatrixXd::Identity(E.dim(), E.dim())).cwiseAbs().maxCoeff() ==
          0.0);
  }
  SUBCASE("exp(T) exp(-T) = I to 1e-12, seeded random amplitudes") {
    for (std::uint32_t seed : {1u, 2u, 3u}) {
      const auto exset = generate_excitation_set(2, 4, 2);
      const auto t = random_amplitudes(exset, seed, 0.5);
      const auto T = build_cluster_matrix(t, basis);
      const auto P = exp_nilpotent(T);
      OperatorMatrix minus(Eigen::MatrixXd(-T.data()), basis);
      const auto M = exp_nilpotent(minus);
      const Eigen::MatrixXd prod = P.data() * M.data();
      CHECK((prod - Eigen::MatrixXd::Identity(P.dim(), P.dim())).cwiseAbs().maxCoeff() <
            1e-12);
    }
  }
  SUBCASE("full-rank T terminates within n_elec powers") {
    const auto exset = generate_excitation_set(4, 4, 2);
    const auto t = random_amplitudes(exset, 11, 0.3);
    const auto T = build_cluster_matrix(t, basis);
    CHECK_NOTHROW((void)exp_nilpotent(T));
  }
  SUBCASE("non-nilpotent input is an invariant violation") {
    OperatorMatrix bogus(Eigen::MatrixXd::Identity(basis->size(), basis->size()), basis);
    CHECK_THROWS_AS((void)exp_nilpotent(bogus), std::logic_error);
  }
}

TEST_CASE("similarity transform") {
  const auto sys = mo_from_geometry(h_chain(4, 2.0), "sto-3g");
  const auto basis = make_basis(4, 2, 2);
  const auto H = build_hamiltonian_matrix(sys.mo, basis);
  const auto exset = generate_excitation_set(2, 4, 2);
  const auto t = random_amplitudes(exset, 5, 0.1);
  const auto T = build_cluster_matrix(t, basis);

  SUBCASE("T = 0 leaves H unchanged") {
    const auto Hbar = similarity_transform(H, build_cluster_matrix({}, basis));
    CHECK((Hbar.data() - H.data()).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("spectrum is preserved to 1e-9") {
    const auto Hbar = similarity_transform(H, T);
    Eigen::EigenSolver<Eigen::MatrixXd> a(H.data()), b(Hbar.data());
    Eigen::VectorXd ea = a.eigenvalues().real(), eb = b.eigenvalues().real();
    std::sort(ea.data(), ea.data() + ea.size());
    std::sort(eb.data(), eb.data() + eb.size());
    CHECK((ea - eb).cwiseAbs().maxCoeff() < 1e-9);
    CHECK(a.eigenvalues().imag().cwiseAbs().maxCoeff() < 1e-12);
  }
  SUBCASE("columnwise chain application matches the full transform") {
    const auto Hbar = similarity_transform(H, T);
    const Eigen::VectorXd col0 = hbar_reference_column(H, T.data());
    CHECK((Hbar.data().col(0) - col0).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("extract_subblock") {
  const auto sys = mo_from_geometry(h_chain(2, 1.4), "sto-3g");
  const auto basis = make_basis(2, 1, 1);
  const auto H = build_hamiltonian_matrix(sys.mo, basis);

  SUBCASE("full subset reproduces the matrix") {
    DetSubset all{basis, {0, 1, 2, 3}};
    CHECK((extract_subblock(H, all) - H.data()).cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("subset entries match element lookups") {
    DetSubset sub{basis, {0, 3}};
    const auto block = extract_subblock(H, sub);
    CHECK(block(0, 0) == H.data()(0, 0));
    CHECK(block(0, 1) == H.data()(0, 3));
    CHECK(block(1, 0) == H.data()(3, 0));
    CHECK(block(1, 1) == H.data()(3, 3));
  }
  SUBCASE("foreign index throws") {
    DetSubset bad{basis, {0, 99}};
    CHECK_THROWS_AS((void)extract_subblock(H, bad), std::out_of_range);
  }
}

TEST_CASE("triplet dump is parseable") {
  const auto basis = make_basis(2, 1, 1);
  AmplitudeSet t;
  t[Excitation({{0, Spin::alpha}}, {{1, Spin::alpha}})] = 0.25;
  const auto T = build_cluster_matrix(t, basis);
  std::ostringstream ss;
  T.write_triplets(ss);
  int r, c;
  double v;
  std::istringstream in(ss.str());
  int rows = 0;
  while (in >> r >> c >> v) {
    CHECK(T.data()(r, c) == v);
    ++rows;
  }
  CHECK(rows == 2);
}
