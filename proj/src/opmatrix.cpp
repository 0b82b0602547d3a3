// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccfock/opmatrix.hpp"

#include <ostream>
#include <stdexcept>

namespace ccfock {

namespace {

// Spin-orbital Slater-Condon elements over spatial chemist integrals.

double diagonal_element(const MOIntegrals& mo, const std::vector<SpinOrbital>& occ) {
  double e = mo.e_nuc;
  for (auto i : occ) e += mo.h(i.spatial, i.spatial);
  for (auto i : occ)
    for (auto j : occ) {
      e += 0.5 * mo.g(i.spatial, i.spatial, j.spatial, j.spatial);
      if (i.spin == j.spin) e -= 0.5 * mo.g(i.spatial, j.spatial, j.spatial, i.spatial);
    }
  return e;
}

double single_element(const MOIntegrals& mo, const std::vector<SpinOrbital>& occ, SpinOrbital i,
                      SpinOrbital a) {
  double e = mo.h(a.spatial, i.spatial);
  for (auto k : occ) {
    e += mo.g(a.spatial, i.spatial, k.spatial, k.spatial);
    if (k.spin == i.spin) e -= mo.g(a.spatial, k.spatial, k.spatial, i.spatial);
  }
  return e;
}

double double_element(const MOIntegrals& mo, SpinOrbital h1, SpinOrbital h2, SpinOrbital p1,
                      SpinOrbital p2) {
  double e = 0.0;
  if (p1.spin == h1.spin && p2.spin == h2.spin)
    e += mo.g(p1.spatial, h1.spatial, p2.spatial, h2.spatial);
  if (p1.spin == h2.spin && p2.spin == h1.spin)
    e -= mo.g(p1.spatial, h2.spatial, p2.spatial, h1.spatial);
  return e;
}

}  // namespace

OperatorMatrix::OperatorMatrix(Eigen::MatrixXd data, std::shared_ptr<const FockBasis> basis)
    : data_(std::move(data)), basis_(std::move(basis)) {
  if (!basis_) throw std::invalid_argument("OperatorMatrix: null basis");
  if (data_.rows() != data_.cols() ||
      static_cast<std::size_t>(data_.rows()) != basis_->size())
    throw std::invalid_argument("OperatorMatrix: dimension does not match basis size");
}

void OperatorMatrix::write_triplets(std::ostream& out, double threshold) const {
  out.precision(17);
  for (Eigen::Index c = 0; c < data_.cols(); ++c)
    for (Eigen::Index r = 0; r < data_.rows(); ++r)
      if (std::abs(data_(r, c)) > threshold) out << r << ' ' << c << ' ' << data_(r, c) << '\n';
}

OperatorMatrix build_hamiltonian_matrix(const MOIntegrals& mo,
                                        std::shared_ptr<const FockBasis> basis) {
  if (basis->n_elec() != mo.n_elec)
    throw std::invalid_argument("build_hamiltonian_matrix: basis sector does not match n_elec");
  if (basis->n_orb() != mo.n_orb)
    throw std::invalid_argument("build_hamiltonian_matrix: basis n_orb does not match integrals");

  const auto& dets = basis->determinants();
  const std::size_t dim = basis->size();
  Eigen::MatrixXd H = Eigen::MatrixXd::Zero(dim, dim);
  const int n_orb = basis->n_orb();

  for (std::size_t c = 0; c < dim; ++c) {
    const Determinant& d = dets[c];
    const auto occ = d.occupied_list(n_orb);
    std::vector<SpinOrbital> virt;
    virt.reserve(2 * n_orb - occ.size());
    for (int p = 0; p < n_orb; ++p) {
      if (!d.occupied({p, Spin::alpha})) virt.push_back({p, Spin::alpha});
      if (!d.occupied({p, Spin::beta})) virt.push_back({p, Spin::beta});
    }

    H(c, c) = diagonal_element(mo, occ);

    // singles i -> a, spin conserved
    for (auto i : occ)
      for (auto a : virt) {
        if (a.spin != i.spin) continue;
        const auto img = apply_excitation(d, Excitation({i}, {a}));
        H(basis->index_of(img->first), c) = img->second * single_element(mo, occ, i, a);
      }

    // doubles (i<j) -> (a<b), S_z conserved
    for (std::size_t x = 0; x < occ.size(); ++x)
      for (std::size_t y = x + 1; y < occ.size(); ++y) {
        const auto i = occ[x], j = occ[y];
        const int hz = (i.spin == Spin::alpha) + (j.spin == Spin::alpha);
        for (std::size_t u = 0; u < virt.size(); ++u)
          for (std::size_t w = u + 1; w < virt.size(); ++w) {
            const auto a = virt[u], b = virt[w];
            if ((a.spin == Spin::alpha) + (b.spin == Spin::alpha) != hz) continue;
            const double val = double_element(mo, i, j, a, b);
            if (val == 0.0) continue;
            const auto img = apply_excitation(d, Excitation({i, j}, {a, b}));
            H(basis->index_of(img->first), c) = img->second * val;
          }
      }
  }
  return {std::move(H), std::move(basis)};
}

void fill_cluster_matrix(const AmplitudeSet& t, const FockBasis& basis, Eigen::MatrixXd& out) {
  const std::size_t dim = basis.size();
  if (out.rows() != static_cast<Eigen::Index>(dim) || out.cols() != static_cast<Eigen::Index>(dim))
    out.resize(dim, dim);
  out.setZero();
  const auto& dets = basis.determinants();
  for (const auto& [ex, coeff] : t) {
    if (coeff == 0.0) continue;
    for (std::size_t c = 0; c < dim; ++c) {
      const auto img = apply_excitation(dets[c], ex);
      if (!img) continue;
      out(basis.index_of(img->first), c) += coeff * img->second;
    }
  }
}

OperatorMatrix build_cluster_matrix(const AmplitudeSet& t,
                                    std::shared_ptr<const FockBasis> basis) {
  Eigen::MatrixXd T;
  fill_cluster_matrix(t, *basis, T);
  return {std::move(T), std::move(basis)};
}

OperatorMatrix exp_nilpotent(const OperatorMatrix& T) {
  const int n_elec = T.basis().n_elec();
  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(T.dim(), T.dim());
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(T.dim(), T.dim());
  for (int k = 1;; ++k) {
    power = (power * T.data()) / static_cast<double>(k);
    if ((power.array() == 0.0).all()) break;
    if (k > n_elec)
      throw std::logic_error("exp_nilpotent: series did not terminate within n_elec powers; "
                             "operator is not a pure excitation");
    result += power;
  }
  return {std::move(result), T.basis_ptr()};
}

OperatorMatrix similarity_transform(const OperatorMatrix& H, const OperatorMatrix& T) {
  if (H.dim() != T.dim())
    throw std::invalid_argument("similarity_transform: basis mismatch");
  OperatorMatrix minus_t(Eigen::MatrixXd(-T.data()), T.basis_ptr());
  const OperatorMatrix left = exp_nilpotent(minus_t);
  const OperatorMatrix right = exp_nilpotent(T);
  Eigen::MatrixXd out = left.data() * H.data() * right.data();
  return {std::move(out), H.basis_ptr()};
}

Eigen::MatrixXd extract_subblock(const OperatorMatrix& M, const DetSubset& rows,
                                 const DetSubset& cols) {
  for (const auto k : rows.indices)
    if (k >= M.basis().size()) throw std::out_of_range("extract_subblock: row outside basis");
  for (const auto k : cols.indices)
    if (k >= M.basis().size()) throw std::out_of_range("extract_subblock: column outside basis");
  Eigen::MatrixXd out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out(i, j) = M.data()(rows.indices[i], cols.indices[j]);
  return out;
}

Eigen::MatrixXd extract_subblock(const OperatorMatrix& M, const DetSubset& subset) {
  return extract_subblock(M, subset, subset);
}

Eigen::VectorXd apply_exp_nilpotent(const Eigen::MatrixXd& T, const Eigen::VectorXd& v,
                                    double sign, int n_elec) {
  Eigen::VectorXd result = v;
  Eigen::VectorXd term = v;
  for (int k = 1;; ++k) {
    term = sign * (T * term) / static_cast<double>(k);
    if ((term.array() == 0.0).all()) break;
    if (k > n_elec)
      throw std::logic_error("apply_exp_nilpotent: series did not terminate");
    result += term;
  }
  return result;
}

}  // namespace ccfock
