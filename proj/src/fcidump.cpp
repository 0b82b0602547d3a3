// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccfock/fcidump.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace ccfock {

namespace {

// Pull "KEY=value" integers out of the namelist header, tolerant of spacing
// and commas.
bool header_int(const std::string& header, const std::string& key, long& out) {
  std::string up = header;
  std::transform(up.begin(), up.end(), up.begin(), [](unsigned char c) { return std::toupper(c); });
  auto pos = up.find(key + "=");
  if (pos == std::string::npos) return false;
  pos += key.size() + 1;
  while (pos < up.size() && std::isspace(static_cast<unsigned char>(up[pos]))) ++pos;
  std::size_t end = pos;
  while (end < up.size() && (std::isdigit(static_cast<unsigned char>(up[end])) ||
                             up[end] == '-' || up[end] == '+'))
    ++end;
  if (end == pos) return false;
  out = std::stol(up.substr(pos, end - pos));
  return true;
}

void set_with_symmetry(EriTensor& g, int p, int q, int r, int s, double v) {
  g(p, q, r, s) = v;
  g(q, p, r, s) = v;
  g(p, q, s, r) = v;
  g(q, p, s, r) = v;
  g(r, s, p, q) = v;
  g(s, r, p, q) = v;
  g(r, s, q, p) = v;
  g(s, r, q, p) = v;
}

}  // namespace

Eigen::VectorXd fock_diagonal(const MOIntegrals& mo) {
  Eigen::VectorXd eps(mo.n_orb);
  for (int p = 0; p < mo.n_orb; ++p) {
    double e = mo.h(p, p);
    for (int i = 0; i < mo.n_occ(); ++i) e += 2.0 * mo.g(p, p, i, i) - mo.g(p, i, i, p);
    eps[p] = e;
  }
  return eps;
}

MOIntegrals read_fcidump(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FcidumpError("cannot open FCIDUMP file: " + path);

  // Collect the namelist header up to &END or /.
  std::string header, line;
  int lineno = 0;
  bool header_done = false;
  while (!header_done && std::getline(in, line)) {
    ++lineno;
    header += " " + line;
    std::string up = line;
    std::transform(up.begin(), up.end(), up.begin(),
                   [](unsigned char c) { return std::toupper(c); });
    if (up.find("&END") != std::string::npos || up.find('/') != std::string::npos)
      header_done = true;
  }
  if (!header_done) throw FcidumpError(path + ": unterminated namelist header");

  long norb = 0, nelec = 0, ms2 = 0;
  if (!header_int(header, "NORB", norb))
    throw FcidumpError(path + ": header lacks NORB");
  if (!header_int(header, "NELEC", nelec))
    throw FcidumpError(path + ": header lacks NELEC");
  header_int(header, "MS2", ms2);  // optional, defaults to 0
  if (norb < 1 || norb > 32)
    throw FcidumpError(path + ": NORB=" + std::to_string(norb) + " outside supported [1,32]");
  if (ms2 != 0)
    throw FcidumpError(path + ": only closed-shell (MS2=0) dumps are supported");
  if (nelec < 0 || nelec % 2 != 0 || nelec / 2 > norb)
    throw FcidumpError(path + ": inconsistent NELEC=" + std::to_string(nelec));

  MOIntegrals mo;
  mo.n_orb = static_cast<int>(norb);
  mo.n_elec = static_cast<int>(nelec);
  mo.h = Eigen::MatrixXd::Zero(norb, norb);
  mo.g = EriTensor(static_cast<int>(norb));

  while (std::getline(in, line)) {
    ++lineno;
    // Fortran dumps may use D exponents.
    std::replace(line.begin(), line.end(), 'D', 'E');
    std::replace(line.begin(), line.end(), 'd', 'e');
    std::stringstream ss(line);
    double v;
    long p, q, r, s;
    if (!(ss >> v)) continue;  // blank line
    if (!(ss >> p >> q >> r >> s))
      throw FcidumpError(path + ":" + std::to_string(lineno) + ": malformed record");
    if (p < 0 || q < 0 || r < 0 || s < 0 || p > norb || q > norb || r > norb || s > norb)
      throw FcidumpError(path + ":" + std::to_string(lineno) + ": orbital index out of range");

    if (p == 0 && q == 0 && r == 0 && s == 0) {
      mo.e_nuc = v;
    } else if (q == 0 && r == 0 && s == 0) {
      // orbital-energy record emitted by some codes; superseded by the
      // Fock-diagonal reconstruction below
    } else if (r == 0 && s == 0) {
      if (p == 0 || q == 0)
        throw FcidumpError(path + ":" + std::to_string(lineno) + ": bad one-electron record");
      mo.h(p - 1, q - 1) = v;
      mo.h(q - 1, p - 1) = v;
    } else if (p != 0 && q != 0 && r != 0 && s != 0) {
      set_with_symmetry(mo.g, static_cast<int>(p - 1), static_cast<int>(q - 1),
                        static_cast<int>(r - 1), static_cast<int>(s - 1), v);
    } else {
      throw FcidumpError(path + ":" + std::to_string(lineno) + ": bad index pattern");
    }
  }

  mo.orbital_energies = fock_diagonal(mo);
  return mo;
}

void write_fcidump(const MOIntegrals& mo, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FcidumpError("cannot open for writing: " + path);
  const int n = mo.n_orb;

  out << "&FCI NORB=" << n << ",NELEC=" << mo.n_elec << ",MS2=0,\n ORBSYM=";
  for (int i = 0; i < n; ++i) out << "1,";
  out << "\n ISYM=1,\n&END\n";

  out << std::scientific << std::setprecision(16);
  const auto emit = [&](double v, int p, int q, int r, int s) {
    out << std::setw(24) << v << ' ' << std::setw(3) << p << ' ' << std::setw(3) << q << ' '
        << std::setw(3) << r << ' ' << std::setw(3) << s << '\n';
  };

  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= (r == p ? q : r); ++s)
          if (mo.g(p, q, r, s) != 0.0) emit(mo.g(p, q, r, s), p + 1, q + 1, r + 1, s + 1);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      if (mo.h(p, q) != 0.0) emit(mo.h(p, q), p + 1, q + 1, 0, 0);
  emit(mo.e_nuc, 0, 0, 0, 0);
}

}  // namespace ccfock
