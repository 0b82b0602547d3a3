// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include "ccfock/cc.hpp"
#include "ccfock/geometry.hpp"
#include "ccfock/ses.hpp"
#include "oracles.hpp"

using namespace ccfock;

TEST_CASE("ses spec parsing") {
  SUBCASE("orbital mode") {
    const auto spec = parse_ses_spec("R=2;S=3,4");
    CHECK(spec.mode == SesMode::orbital);
    REQUIRE(spec.r.size() == 1);
    CHECK(spec.r[0].spatial == 1);
    REQUIRE(spec.s.size() == 2);
    CHECK(spec.s[0].spatial == 2);
    CHECK(spec.s[1].spatial == 3);
    CHECK(spec.str() == "R={2}, S={3,4}");
  }
  SUBCASE("spin-orbital mode") {
    const auto spec = parse_ses_spec("R=1a;S=3a");
    CHECK(spec.mode == SesMode::spin_orbital);
    CHECK(spec.r[0] == SpinOrbital{0, Spin::alpha});
    CHECK(spec.s[0] == SpinOrbital{2, Spin::alpha});
    CHECK(spec.str() == "R={1a}, S={3a}");
  }
  SUBCASE("mixed tokens are rejected") {
    CHECK_THROWS_AS((void)parse_ses_spec("R=1a;S=3"), std::invalid_argument);
  }
  SUBCASE("whitespace tolerated, 0 rejected") {
    CHECK(parse_ses_spec(" R=2 ; S=3 ").str() == "R={2}, S={3}");
    CHECK_THROWS_AS((void)parse_ses_spec("R=0;S=3"), std::invalid_argument);
  }
}

TEST_CASE("internal excitations") {
  SUBCASE("orbital 1-in-1: two singles plus the paired double") {
    const auto exset = internal_excitations(ses_orbital({2}, {3}), 4, 2);
    CHECK(exset.size() == 3);
  }
  SUBCASE("spin-orbital single-electron algebra has exactly one excitation") {
    const auto exset =
        internal_excitations(ses_spin_orbital({{1, Spin::alpha}}, {{3, Spin::alpha}}), 4, 2);
    CHECK(exset.size() == 1);
    CHECK(exset.excitations()[0].rank() == 1);
  }
  SUBCASE("trivial spec has none") {
    CHECK(internal_excitations(SesSpec{}, 4, 2).size() == 0);
  }
  SUBCASE("range violations throw") {
    CHECK_THROWS_AS((void)internal_excitations(ses_orbital({3}, {4}), 4, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS((void)internal_excitations(ses_orbital({1}, {2}), 4, 2),
                    std::invalid_argument);
  }
}

TEST_CASE("validate_ses") {
  const auto ccsd_h4 = generate_excitation_set(2, 4, 2);
  CHECK(validate_ses(ses_orbital({2}, {3, 4}), ccsd_h4, 4, 2));
  CHECK(validate_ses(ses_orbital({1, 2}, {3}), ccsd_h4, 4, 2));
  CHECK_FALSE(validate_ses(ses_orbital({1, 2}, {3, 4}), ccsd_h4, 4, 2));  // needs quadruples

  const auto ccsdtq_h6 = generate_excitation_set(4, 6, 3);
  CHECK(validate_ses(ses_orbital({2, 3}, {4, 5}), ccsdtq_h6, 6, 3));
  CHECK(validate_ses(ses_orbital({3}, {4}), ccsdtq_h6, 6, 3));  // CCSD SES inside CCSDTQ

  // trivial sub-algebra is always embedded
  CHECK(validate_ses(SesSpec{}, ccsd_h4, 4, 2));
}

TEST_CASE("partition_amplitudes") {
  const auto sys = mo_from_geometry(h4_model(0.005), "sto-3g");
  const auto exset = generate_excitation_set(2, 4, 2);
  const auto sol = solve_cc(sys.mo, exset);

  SUBCASE("spec covering every orbital leaves nothing external") {
    const auto p = partition_amplitudes(sol.amplitudes, ses_orbital({1, 2}, {3, 4}));
    CHECK(p.t_ext.empty());
    CHECK(p.t_int.size() == sol.amplitudes.size());
  }
  SUBCASE("trivial spec leaves everything external") {
    const auto p = partition_amplitudes(sol.amplitudes, SesSpec{});
    CHECK(p.t_int.empty());
    CHECK(p.t_ext.size() == sol.amplitudes.size());
  }
  SUBCASE("R={2},S={3} keeps exactly three internal amplitudes") {
    const auto p = partition_amplitudes(sol.amplitudes, ses_orbital({2}, {3}));
    CHECK(p.t_int.size() == 3);
    CHECK(p.t_int.size() + p.t_ext.size() == sol.amplitudes.size());
    // supports are disjoint and exhaustive
    for (const auto& [ex, v] : p.t_int) {
      (void)v;
      CHECK(!p.t_ext.contains(ex));
      CHECK(sol.amplitudes.contains(ex));
    }
  }
}

TEST_CASE("internal_space") {
  const auto basis = std::make_shared<const FockBasis>(FockBasis::enumerate(4, 2, 2));

  SUBCASE("orbital 1-in-1 spans reference, two singles, one double") {
    const auto space = internal_space(ses_orbital({2}, {3}), basis);
    CHECK(space.size() == 4);
    CHECK(space.indices[0] == 0);
  }
  SUBCASE("spin-orbital 1-in-1 spans reference plus one single") {
    const auto space =
        internal_space(ses_spin_orbital({{2, Spin::alpha}}, {{3, Spin::alpha}}), basis);
    CHECK(space.size() == 2);
  }
  SUBCASE("trivial spec spans the reference only") {
    const auto space = internal_space(SesSpec{}, basis);
    CHECK(space.size() == 1);
    CHECK(space.indices[0] == 0);
  }
  SUBCASE("valid SES spans the full sector-constrained CAS") {
    // orbital mode: 2|R| electrons in |R|+|S| orbitals at S_z = 0
    for (const auto& spec : {ses_orbital({2}, {3}), ses_orbital({2}, {3, 4}),
                             ses_orbital({1, 2}, {3}), ses_orbital({1, 2}, {3, 4})}) {
      const auto space = internal_space(spec, basis);
      const auto n_act = spec.r.size() + spec.s.size();
      const auto cas = oracle::binomial(static_cast<int>(n_act), static_cast<int>(spec.r.size()));
      CHECK(space.size() == cas * cas);
    }
  }
}

TEST_CASE("census formula vs exhaustive enumeration, both conventions") {
  // own enumeration over subset bitmasks; validity from the CAS rank rule
  for (int n_o = 1; n_o <= 6; ++n_o)
    for (int n_v = 1; n_v <= 6; ++n_v) {
      std::uint64_t per_branch = 0, dedup = 0;
      for (std::uint32_t rm = 1; rm < (1u << n_o); ++rm)
        for (std::uint32_t sm = 1; sm < (1u << n_v); ++sm) {
          const int nr = std::popcount(rm), ns = std::popcount(sm);
          if (std::min(nr, ns) != 1) continue;  // CCSD: max internal rank 2
          dedup += 1;
          per_branch += (nr == 1) + (ns == 1);
        }
      CHECK(ses_census_ccsd(n_o, n_v) == per_branch);
      CHECK(ses_census_ccsd(n_o, n_v) ==
            dedup + static_cast<std::uint64_t>(n_o) * n_v);  // singleton overlap
    }
  CHECK(ses_census_ccsd(1, 1) == 2);
  CHECK(ses_census_ccsd(2, 2) == 12);
  CHECK(ses_census_ccsd(3, 3) == 42);
}

TEST_CASE("enumerate_valid_ses agrees with the census") {
  const auto specs = enumerate_valid_ses(3, 3, 2);
  CHECK(specs.size() == ses_census_ccsd(3, 3) - 9);
  const auto exset = generate_excitation_set(2, 6, 3);
  for (const auto& spec : specs) CHECK(validate_ses(spec, exset, 6, 3));

  // every CCSD SES remains an SES of the rank-4 model
  const auto exset4 = generate_excitation_set(4, 6, 3);
  for (const auto& spec : specs) CHECK(validate_ses(spec, exset4, 6, 3));
}
