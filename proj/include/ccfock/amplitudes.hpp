// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "ccfock/fock.hpp"

namespace ccfock {

/// Cluster amplitudes: excitation -> coefficient. Absent keys mean zero.
/// Ordered map so every iteration over amplitudes is deterministic.
class AmplitudeSet {
 public:
  using Map = std::map<Excitation, double>;

  AmplitudeSet() = default;

  double& operator[](const Excitation& ex) { return entries_[ex]; }
  [[nodiscard]] double get(const Excitation& ex) const {
    const auto it = entries_.find(ex);
    return it == entries_.end() ? 0.0 : it->second;
  }
  [[nodiscard]] bool contains(const Excitation& ex) const { return entries_.count(ex) > 0; }
  void erase(const Excitation& ex) { entries_.erase(ex); }
  void clear() { entries_.clear(); }

  [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
  [[nodiscard]] bool empty() const noexcept { return entries_.empty(); }
  [[nodiscard]] const Map& entries() const noexcept { return entries_; }

  [[nodiscard]] auto begin() const { return entries_.begin(); }
  [[nodiscard]] auto end() const { return entries_.end(); }

  friend bool operator==(const AmplitudeSet&, const AmplitudeSet&) = default;

 private:
  Map entries_;
};

/// Text persistence: header with a system fingerprint, then one record per
/// excitation as "<holes> -> <particles>  <value>" in 1-based a/b notation.
void write_amplitudes(std::ostream& out, const AmplitudeSet& t, const std::string& fingerprint);
void write_amplitudes_file(const std::string& path, const AmplitudeSet& t,
                           const std::string& fingerprint);

struct AmplitudeFile {
  AmplitudeSet amplitudes;
  std::string fingerprint;
};
[[nodiscard]] AmplitudeFile read_amplitudes(std::istream& in);
[[nodiscard]] AmplitudeFile read_amplitudes_file(const std::string& path);

/// Parse "2a 3b -> 5a 6b" (1-based spatial index + spin letter).
[[nodiscard]] Excitation parse_excitation(const std::string& text);

}  // namespace ccfock
