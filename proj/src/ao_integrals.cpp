// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccfock/ao_integrals.hpp"

#include <cmath>
#include <numbers>

namespace ccfock {

namespace {

constexpr double kPi = std::numbers::pi;

double dist2(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return dx * dx + dy * dy + dz * dz;
}

std::array<double, 3> gaussian_center(double a, const std::array<double, 3>& A, double b,
                                      const std::array<double, 3>& B) {
  const double p = a + b;
  return {(a * A[0] + b * B[0]) / p, (a * A[1] + b * B[1]) / p, (a * A[2] + b * B[2]) / p};
}

// Primitive s-s building blocks. K_ab = exp(-a b/(a+b) |A-B|^2).
double prim_overlap(double a, const std::array<double, 3>& A, double b,
                    const std::array<double, 3>& B) {
  const double p = a + b;
  return std::pow(kPi / p, 1.5) * std::exp(-a * b / p * dist2(A, B));
}

double prim_kinetic(double a, const std::array<double, 3>& A, double b,
                    const std::array<double, 3>& B) {
  const double p = a + b;
  const double mu = a * b / p;
  return mu * (3.0 - 2.0 * mu * dist2(A, B)) * prim_overlap(a, A, b, B);
}

double prim_nuclear(double a, const std::array<double, 3>& A, double b,
                    const std::array<double, 3>& B, const std::array<double, 3>& C) {
  const double p = a + b;
  const auto P = gaussian_center(a, A, b, B);
  return -2.0 * kPi / p * std::exp(-a * b / p * dist2(A, B)) * boys_f0(p * dist2(P, C));
}

double prim_eri(double a, const std::array<double, 3>& A, double b,
                const std::array<double, 3>& B, double c, const std::array<double, 3>& C,
                double d, const std::array<double, 3>& D) {
  const double p = a + b;
  const double q = c + d;
  const auto P = gaussian_center(a, A, b, B);
  const auto Q = gaussian_center(c, C, d, D);
  const double kab = std::exp(-a * b / p * dist2(A, B));
  const double kcd = std::exp(-c * d / q * dist2(C, D));
  return 2.0 * std::pow(kPi, 2.5) / (p * q * std::sqrt(p + q)) * kab * kcd *
         boys_f0(p * q / (p + q) * dist2(P, Q));
}

template <typename F>
double contract2(const ContractedS& x, const ContractedS& y, F prim) {
  double v = 0.0;
  for (std::size_t i = 0; i < x.exponents.size(); ++i)
    for (std::size_t j = 0; j < y.exponents.size(); ++j)
      v += x.coefficients[i] * y.coefficients[j] *
           prim(x.exponents[i], x.center, y.exponents[j], y.center);
  return v;
}

}  // namespace

double boys_f0(double x) {
  // Series near zero avoids the 0/0 in the erf form.
  if (x < 1e-12) return 1.0 - x / 3.0;
  const double sx = std::sqrt(x);
  return 0.5 * std::sqrt(kPi / x) * std::erf(sx);
}

AOIntegrals compute_ao_integrals(const Geometry& geometry, const GaussianBasis& basis) {
  const int n = basis.size();
  AOIntegrals ao;
  ao.S = Eigen::MatrixXd::Zero(n, n);
  ao.T = Eigen::MatrixXd::Zero(n, n);
  ao.V = Eigen::MatrixXd::Zero(n, n);
  ao.eri = EriTensor(n);
  ao.e_nuc = geometry.nuclear_repulsion();

  for (int p = 0; p < n; ++p) {
    for (int q = 0; q <= p; ++q) {
      const auto& bp = basis.shells[p];
      const auto& bq = basis.shells[q];
      const double s = contract2(bp, bq, prim_overlap);
      const double t = contract2(bp, bq, prim_kinetic);
      double v = 0.0;
      for (const auto& atom : geometry.atoms) {
        v += atom.charge * contract2(bp, bq,
                                     [&atom](double a, const std::array<double, 3>& A, double b,
                                             const std::array<double, 3>& B) {
                                       return prim_nuclear(a, A, b, B, atom.position);
                                     });
      }
      ao.S(p, q) = ao.S(q, p) = s;
      ao.T(p, q) = ao.T(q, p) = t;
      ao.V(p, q) = ao.V(q, p) = v;
    }
  }

  // (pq|rs) over unique index quadruples, scattered to all 8 images.
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r <= p; ++r)
        for (int s = 0; s <= (r == p ? q : r); ++s) {
          const auto& bp = basis.shells[p];
          const auto& bq = basis.shells[q];
          const auto& br = basis.shells[r];
          const auto& bs = basis.shells[s];
          double v = 0.0;
          for (std::size_t i = 0; i < bp.exponents.size(); ++i)
            for (std::size_t j = 0; j < bq.exponents.size(); ++j)
              for (std::size_t k = 0; k < br.exponents.size(); ++k)
                for (std::size_t l = 0; l < bs.exponents.size(); ++l)
                  v += bp.coefficients[i] * bq.coefficients[j] * br.coefficients[k] *
                       bs.coefficients[l] *
                       prim_eri(bp.exponents[i], bp.center, bq.exponents[j], bq.center,
                                br.exponents[k], br.center, bs.exponents[l], bs.center);
          ao.eri(p, q, r, s) = v;
          ao.eri(q, p, r, s) = v;
          ao.eri(p, q, s, r) = v;
          ao.eri(q, p, s, r) = v;
          ao.eri(r, s, p, q) = v;
          ao.eri(s, r, p, q) = v;
          ao.eri(r, s, q, p) = v;
          ao.eri(s, r, q, p) = v;
        }

  return ao;
}

}  // namespace ccfock
