// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "ccfock/excitations.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccfock {

ExcitationSet::ExcitationSet(std::vector<Excitation> excitations, std::string descriptor)
    : list_(std::move(excitations)), descriptor_(std::move(descriptor)) {
  std::sort(list_.begin(), list_.end());
  const auto dup = std::adjacent_find(list_.begin(), list_.end());
  if (dup != list_.end())
    throw std::invalid_argument("ExcitationSet: duplicate excitation " + dup->str());
}

bool ExcitationSet::contains(const Excitation& ex) const {
  return std::binary_search(list_.begin(), list_.end(), ex);
}

ExcitationSet ExcitationSet::merged_with(const ExcitationSet& other,
                                         std::string descriptor) const {
  std::vector<Excitation> merged;
  merged.reserve(list_.size() + other.list_.size());
  std::set_union(list_.begin(), list_.end(), other.list_.begin(), other.list_.end(),
                 std::back_inserter(merged));
  ExcitationSet out;
  out.list_ = std::move(merged);
  out.descriptor_ = std::move(descriptor);
  return out;
}

namespace {

int sz_twice(const std::vector<SpinOrbital>& sos) {
  int z = 0;
  for (auto so : sos) z += so.spin == Spin::alpha ? 1 : -1;
  return z;
}

}  // namespace

ExcitationSet generate_excitation_set(int max_rank, int n_orb, int n_occ_spatial) {
  const int n_elec = 2 * n_occ_spatial;
  if (max_rank < 1 || max_rank > n_elec)
    throw std::invalid_argument("generate_excitation_set: rank must be in [1, n_elec]");
  if (n_occ_spatial > n_orb)
    throw std::invalid_argument("generate_excitation_set: n_occ exceeds n_orb");

  std::vector<SpinOrbital> occ, virt;
  for (int p = 0; p < n_occ_spatial; ++p) {
    occ.push_back({p, Spin::alpha});
    occ.push_back({p, Spin::beta});
  }
  for (int p = n_occ_spatial; p < n_orb; ++p) {
    virt.push_back({p, Spin::alpha});
    virt.push_back({p, Spin::beta});
  }

  std::vector<Excitation> list;
  for (int k = 1; k <= max_rank; ++k) {
    detail::for_each_k_subset(occ, k, [&](const std::vector<SpinOrbital>& holes) {
      const int hz = sz_twice(holes);
      detail::for_each_k_subset(virt, k, [&](const std::vector<SpinOrbital>& particles) {
        if (sz_twice(particles) == hz) list.emplace_back(holes, particles);
      });
    });
  }

  std::string desc = max_rank == n_elec ? "rank=" + std::to_string(max_rank) + " (fci)"
                                        : "rank=" + std::to_string(max_rank);
  return ExcitationSet(std::move(list), std::move(desc));
}

}  // namespace ccfock
