// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <compare>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ccfock {

enum class Spin : std::uint8_t { alpha = 0, beta = 1 };

/// One spin-orbital, addressed either as (spatial, spin) or by the linear
/// index 2*spatial + spin. Spatial indices are 0-based and follow ascending
/// RHF orbital energy.
struct SpinOrbital {
  int spatial = 0;
  Spin spin = Spin::alpha;

  constexpr SpinOrbital() = default;
  constexpr SpinOrbital(int spatial_, Spin spin_) : spatial(spatial_), spin(spin_) {}

  [[nodiscard]] constexpr int linear() const noexcept {
    return 2 * spatial + (spin == Spin::beta ? 1 : 0);
  }
  [[nodiscard]] static constexpr SpinOrbital from_linear(int l) noexcept {
    return {l / 2, (l % 2) ? Spin::beta : Spin::alpha};
  }

  friend constexpr bool operator==(SpinOrbital a, SpinOrbital b) noexcept {
    return a.linear() == b.linear();
  }
  friend constexpr auto operator<=>(SpinOrbital a, SpinOrbital b) noexcept {
    return a.linear() <=> b.linear();
  }

  [[nodiscard]] std::string str() const;  // e.g. "3a" (1-based, user-facing)
};

/// Slater determinant as alpha/beta occupation bitmasks, bit p = spatial
/// orbital p. Capacity is 32 spatial orbitals per spin string.
struct Determinant {
  std::uint64_t alpha_bits = 0;
  std::uint64_t beta_bits = 0;

  friend constexpr bool operator==(const Determinant&, const Determinant&) = default;
  // Lexicographic on (alpha_bits, beta_bits); total and deterministic.
  friend constexpr auto operator<=>(const Determinant&, const Determinant&) = default;

  [[nodiscard]] bool occupied(SpinOrbital so) const noexcept {
    const std::uint64_t bits = (so.spin == Spin::alpha) ? alpha_bits : beta_bits;
    return (bits >> so.spatial) & 1u;
  }
  [[nodiscard]] int n_alpha() const noexcept;
  [[nodiscard]] int n_beta() const noexcept;

  /// Occupied spin-orbitals in ascending linear order.
  [[nodiscard]] std::vector<SpinOrbital> occupied_list(int n_orb) const;

  [[nodiscard]] std::string str(int n_orb) const;  // "220a" style occupation string
};

struct DeterminantHash {
  std::size_t operator()(const Determinant& d) const noexcept {
    const std::size_t ha = std::hash<std::uint64_t>{}(d.alpha_bits);
    const std::size_t hb = std::hash<std::uint64_t>{}(d.beta_bits);
    return ha ^ (hb + 0x9e3779b97f4a7c15ULL + (ha << 6) + (ha >> 2));
  }
};

/// Particle-conserving excitation E^{a1..ak}_{i1..ik} =
/// a+_{a1} ... a+_{ak} a_{ik} ... a_{i1} with i1 < ... < ik and a1 < ... < ak.
/// Holes must be occupied in the reference, particles unoccupied; the
/// canonical ascending ordering fixes the operator sign convention.
struct Excitation {
  std::vector<SpinOrbital> holes;
  std::vector<SpinOrbital> particles;

  Excitation() = default;
  Excitation(std::vector<SpinOrbital> holes_, std::vector<SpinOrbital> particles_);

  [[nodiscard]] int rank() const noexcept { return static_cast<int>(holes.size()); }
  [[nodiscard]] bool conserves_sz() const noexcept;
  /// Excitation with holes and particles swapped (the de-excitation indices).
  [[nodiscard]] Excitation inverse() const;

  friend bool operator==(const Excitation&, const Excitation&) = default;
  friend std::strong_ordering operator<=>(const Excitation& a, const Excitation& b);

  [[nodiscard]] std::string str() const;  // "1a 1b -> 3a 3b"
};

/// All determinants of the fixed (n_alpha, n_beta) sector over n_orb spatial
/// orbitals, reference (aufbau) determinant first, deterministic order.
class FockBasis {
 public:
  static FockBasis enumerate(int n_orb, int n_alpha, int n_beta);

  [[nodiscard]] int n_orb() const noexcept { return n_orb_; }
  [[nodiscard]] int n_alpha() const noexcept { return n_alpha_; }
  [[nodiscard]] int n_beta() const noexcept { return n_beta_; }
  [[nodiscard]] int n_elec() const noexcept { return n_alpha_ + n_beta_; }
  [[nodiscard]] std::size_t size() const noexcept { return dets_.size(); }

  [[nodiscard]] const std::vector<Determinant>& determinants() const noexcept { return dets_; }
  [[nodiscard]] const Determinant& operator[](std::size_t k) const noexcept { return dets_[k]; }
  [[nodiscard]] const Determinant& reference() const noexcept { return dets_.front(); }

  /// Position of det in the basis; throws std::out_of_range for foreign determinants.
  [[nodiscard]] std::size_t index_of(const Determinant& det) const;
  [[nodiscard]] std::optional<std::size_t> find(const Determinant& det) const noexcept;

 private:
  FockBasis() = default;
  int n_orb_ = 0, n_alpha_ = 0, n_beta_ = 0;
  std::vector<Determinant> dets_;
  std::unordered_map<Determinant, std::size_t, DeterminantHash> index_;
};

/// Aufbau determinant: the n_alpha/n_beta lowest spatial orbitals filled.
[[nodiscard]] Determinant reference_determinant(int n_orb, int n_alpha, int n_beta);

/// Apply E to det per the operator ordering above (annihilations first,
/// right to left). Returns nullopt when Pauli-blocked, otherwise the image
/// determinant and the fermionic phase from anticommutation.
[[nodiscard]] std::optional<std::pair<Determinant, int>> apply_excitation(
    const Determinant& det, const Excitation& ex);

}  // namespace ccfock
