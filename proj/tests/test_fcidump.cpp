// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "ccfock/fcidump.hpp"
#include "ccfock/geometry.hpp"

using namespace ccfock;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/ccfock_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("write -> read round trip is exact") {
  const auto sys = mo_from_geometry(h_chain(4, 2.0), "sto-3g");
  TempFile f("roundtrip.fcidump");
  write_fcidump(sys.mo, f.path);
  const auto back = read_fcidump(f.path);

  CHECK(back.n_orb == sys.mo.n_orb);
  CHECK(back.n_elec == sys.mo.n_elec);
  CHECK(back.e_nuc == doctest::Approx(sys.mo.e_nuc).epsilon(1e-12));
  CHECK((back.h - sys.mo.h).cwiseAbs().maxCoeff() < 1e-12);
  const int n = back.n_orb;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          CHECK(std::abs(back.g(p, q, r, s) - sys.mo.g(p, q, r, s)) < 1e-12);
  // canonical dump: reconstructed orbital energies match the SCF ones
  CHECK((back.orbital_energies - sys.mo.orbital_energies).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("core-energy record") {
  TempFile f("core.fcidump");
  {
    std::ofstream out(f.path);
    out << "&FCI NORB=1,NELEC=2,MS2=0,\n ORBSYM=1,\n ISYM=1,\n&END\n";
    out << " 0.75 1 1 1 1\n";
    out << " -1.25 1 1 0 0\n";
    out << " 0.5 0 0 0 0\n";
  }
  const auto mo = read_fcidump(f.path);
  CHECK(mo.e_nuc == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(mo.h(0, 0) == doctest::Approx(-1.25).epsilon(1e-15));
  CHECK(mo.g(0, 0, 0, 0) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("fortran D exponents and orbital-energy records are tolerated") {
  TempFile f("fortran.fcidump");
  {
    std::ofstream out(f.path);
    out << "&FCI NORB= 2, NELEC= 2, MS2=0,\n ORBSYM=1,1,\n ISYM=1,\n&END\n";
    out << " 1.0D-01 1 1 1 1\n";
    out << " 2.5d0 2 1 0 0\n";
    out << " -0.5 1 0 0 0\n";  // orbital energy record, ignored
    out << " 1.0 0 0 0 0\n";
  }
  const auto mo = read_fcidump(f.path);
  CHECK(mo.g(0, 0, 0, 0) == doctest::Approx(0.1).epsilon(1e-15));
  CHECK(mo.h(1, 0) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(mo.h(0, 1) == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(mo.e_nuc == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("parse errors carry line numbers; header errors are caught") {
  TempFile f("bad.fcidump");
  SUBCASE("malformed record") {
    {
      std::ofstream out(f.path);
      out << "&FCI NORB=1,NELEC=2,MS2=0,\n&END\n 0.75 1 1\n";
    }
    CHECK_THROWS_WITH_AS((void)read_fcidump(f.path), doctest::Contains(":3"), FcidumpError);
  }
  SUBCASE("index out of range") {
    {
      std::ofstream out(f.path);
      out << "&FCI NORB=1,NELEC=2,MS2=0,\n&END\n 0.75 1 1 1 2\n";
    }
    CHECK_THROWS_AS((void)read_fcidump(f.path), FcidumpError);
  }
  SUBCASE("missing NORB") {
    {
      std::ofstream out(f.path);
      out << "&FCI NELEC=2,MS2=0,\n&END\n";
    }
    CHECK_THROWS_WITH_AS((void)read_fcidump(f.path), doctest::Contains("NORB"), FcidumpError);
  }
  SUBCASE("open shell rejected") {
    {
      std::ofstream out(f.path);
      out << "&FCI NORB=2,NELEC=3,MS2=1,\n&END\n";
    }
    CHECK_THROWS_AS((void)read_fcidump(f.path), FcidumpError);
  }
  SUBCASE("NORB beyond determinant capacity rejected") {
    {
      std::ofstream out(f.path);
      out << "&FCI NORB=40,NELEC=2,MS2=0,\n&END\n";
    }
    CHECK_THROWS_AS((void)read_fcidump(f.path), FcidumpError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS((void)read_fcidump("/nonexistent/x.fcidump"), FcidumpError);
  }
}

TEST_CASE("symmetry is restored from unique records") {
  TempFile f("sym.fcidump");
  {
    std::ofstream out(f.path);
    out << "&FCI NORB=2,NELEC=2,MS2=0,\n&END\n";
    out << " 0.3 2 1 2 2\n";  // (21|22) only
    out << " 1.0 0 0 0 0\n";
  }
  const auto mo = read_fcidump(f.path);
  for (double v : {mo.g(1, 0, 1, 1), mo.g(0, 1, 1, 1), mo.g(1, 1, 1, 0), mo.g(1, 1, 0, 1)})
    CHECK(v == doctest::Approx(0.3).epsilon(1e-15));
}
