// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccfock/mo_integrals.hpp"

#include <algorithm>
#include <cstring>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ccfock {

namespace {

void fnv1a(std::uint64_t& h, const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ULL;
  }
}

}  // namespace

std::uint64_t MOIntegrals::fingerprint() const {
  std::uint64_t fp = 0xcbf29ce484222325ULL;
  fnv1a(fp, &n_orb, sizeof(n_orb));
  fnv1a(fp, &n_elec, sizeof(n_elec));
  fnv1a(fp, &e_nuc, sizeof(e_nuc));
  fnv1a(fp, h.data(), sizeof(double) * h.size());
  fnv1a(fp, g.raw().data(), sizeof(double) * g.raw().size());
  return fp;
}

std::string MOIntegrals::fingerprint_hex() const {
  std::ostringstream ss;
  ss << std::hex << fingerprint();
  return ss.str();
}

MOIntegrals transform_to_mo(const AOIntegrals& ao, const Eigen::MatrixXd& C,
                            const Eigen::VectorXd& orbital_energies, int n_elec) {
  const int n = ao.n();
  if (C.rows() != n || C.cols() != n)
    throw std::invalid_argument("transform_to_mo: coefficient matrix dimension mismatch");

  MOIntegrals mo;
  mo.n_orb = n;
  mo.n_elec = n_elec;
  mo.e_nuc = ao.e_nuc;
  mo.orbital_energies = orbital_energies;
  mo.h = C.transpose() * (ao.T + ao.V) * C;

  // quarter transforms, O(n^5)
  EriTensor t1(n), t2(n), t3(n);
  mo.g = EriTensor(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double acc = 0.0;
          for (int m = 0; m < n; ++m) acc += C(m, p) * ao.eri(m, q, r, s);
          t1(p, q, r, s) = acc;
        }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double acc = 0.0;
          for (int m = 0; m < n; ++m) acc += C(m, q) * t1(p, m, r, s);
          t2(p, q, r, s) = acc;
        }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double acc = 0.0;
          for (int m = 0; m < n; ++m) acc += C(m, r) * t2(p, q, m, s);
          t3(p, q, r, s) = acc;
        }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          double acc = 0.0;
          for (int m = 0; m < n; ++m) acc += C(m, s) * t3(p, q, r, m);
          mo.g(p, q, r, s) = acc;
        }
  return mo;
}

MoFromScf mo_from_geometry(const Geometry& geometry, const std::string& basis_name,
                           const ScfConfig& cfg) {
  const auto basis = build_basis(geometry, basis_name);
  const auto ao = compute_ao_integrals(geometry, basis);
  MoFromScf out;
  out.scf = solve_rhf(ao, geometry.n_electrons_neutral(), cfg);
  out.mo = transform_to_mo(ao, out.scf.C, out.scf.orbital_energies,
                           geometry.n_electrons_neutral());
  return out;
}

MoFromScf mo_direct_sum(const std::vector<Geometry>& fragments,
                        const std::vector<int>& fragment_electrons,
                        const std::string& basis_name, const ScfConfig& cfg) {
  if (fragments.empty() || fragments.size() != fragment_electrons.size())
    throw std::invalid_argument("mo_direct_sum: fragment lists are inconsistent");

  // per-fragment RHF
  std::vector<ScfResult> frag_scf;
  std::vector<int> frag_n;
  Geometry total;
  int n_elec = 0;
  for (std::size_t f = 0; f < fragments.size(); ++f) {
    const auto basis = build_basis(fragments[f], basis_name);
    const auto ao = compute_ao_integrals(fragments[f], basis);
    frag_scf.push_back(solve_rhf(ao, fragment_electrons[f], cfg));
    frag_n.push_back(basis.size());
    total.atoms.insert(total.atoms.end(), fragments[f].atoms.begin(), fragments[f].atoms.end());
    n_elec += fragment_electrons[f];
  }

  const auto basis = build_basis(total, basis_name);
  const auto ao = compute_ao_integrals(total, basis);
  const int n = basis.size();

  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd eps(n);
  std::vector<int> occ_flag(n, 0);
  int off = 0, col = 0;
  for (std::size_t f = 0; f < fragments.size(); ++f) {
    const int nf = frag_n[f];
    for (int k = 0; k < nf; ++k, ++col) {
      C.block(off, col, nf, 1) = frag_scf[f].C.col(k);
      eps[col] = frag_scf[f].orbital_energies[k];
      occ_flag[col] = k < fragment_electrons[f] / 2 ? 1 : 0;
    }
    off += nf;
  }

  // stable sort: occupied block first, then by energy; near-degenerate
  // levels (fragment copies differing by integral roundoff) keep assembly
  // order instead of tie-breaking on noise
  constexpr double degeneracy_tol = 1e-8;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (occ_flag[a] != occ_flag[b]) return occ_flag[a] > occ_flag[b];
    return eps[a] < eps[b] - degeneracy_tol;
  });

  Eigen::MatrixXd Cs(n, n);
  Eigen::VectorXd es(n);
  for (int k = 0; k < n; ++k) {
    Cs.col(k) = C.col(order[k]);
    es[k] = eps[order[k]];
  }

  MoFromScf out;
  out.scf.C = Cs;
  out.scf.orbital_energies = es;
  out.scf.converged = true;
  out.mo = transform_to_mo(ao, Cs, es, n_elec);
  // RHF energy of the assembled determinant
  const int n_occ = n_elec / 2;
  double e = ao.e_nuc;
  for (int i = 0; i < n_occ; ++i) e += 2.0 * out.mo.h(i, i);
  for (int i = 0; i < n_occ; ++i)
    for (int j = 0; j < n_occ; ++j)
      e += 2.0 * out.mo.g(i, i, j, j) - out.mo.g(i, j, j, i);
  out.scf.e_rhf = e;
  return out;
}

}  // namespace ccfock
