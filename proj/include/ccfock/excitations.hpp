// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "ccfock/fock.hpp"

namespace ccfock {

/// Ordered, duplicate-free collection of excitations defining a CC model.
/// Arbitrary subsets are allowed; rank-M truncations and SES-internal unions
/// are just particular generators.
class ExcitationSet {
 public:
  ExcitationSet() = default;
  explicit ExcitationSet(std::vector<Excitation> excitations, std::string descriptor = "custom");

  [[nodiscard]] const std::vector<Excitation>& excitations() const noexcept { return list_; }
  [[nodiscard]] std::size_t size() const noexcept { return list_.size(); }
  [[nodiscard]] bool contains(const Excitation& ex) const;
  [[nodiscard]] const std::string& descriptor() const noexcept { return descriptor_; }

  [[nodiscard]] auto begin() const { return list_.begin(); }
  [[nodiscard]] auto end() const { return list_.end(); }

  /// Set union, keeping canonical order.
  [[nodiscard]] ExcitationSet merged_with(const ExcitationSet& other,
                                          std::string descriptor = "union") const;

 private:
  std::vector<Excitation> list_;  // sorted canonical order
  std::string descriptor_;
};

/// All S_z-conserving spin-orbital excitations of rank 1..M from the aufbau
/// reference of the (n_orb, n_occ_spatial) closed-shell sector. M=2 is CCSD,
/// M=3 CCSDT, M=4 CCSDTQ, M=n_elec the FCI-equivalent set.
[[nodiscard]] ExcitationSet generate_excitation_set(int max_rank, int n_orb, int n_occ_spatial);

namespace detail {

/// Visit every k-subset of pool in lexicographic order, elements ascending.
template <typename T, typename Fn>
void for_each_k_subset(const std::vector<T>& pool, int k, Fn&& sink) {
  const int n = static_cast<int>(pool.size());
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  std::vector<T> pick(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    for (int i = 0; i < k; ++i) pick[i] = pool[idx[i]];
    sink(static_cast<const std::vector<T>&>(pick));
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace detail

}  // namespace ccfock
