// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ccfock/amplitudes.hpp"
#include "ccfock/excitations.hpp"
#include "ccfock/opmatrix.hpp"

namespace ccfock {

enum class SesMode { orbital, spin_orbital };

/// Sub-system embedding sub-algebra g(R,S): active occupied set R and active
/// virtual set S, resolved at the orbital or spin-orbital level. Orbital-mode
/// entries are spatial indices; spin-orbital-mode entries carry a spin each.
/// Empty R and S is the trivial sub-algebra (no excitations).
struct SesSpec {
  SesMode mode = SesMode::orbital;
  std::vector<SpinOrbital> r;  // in orbital mode only .spatial is meaningful
  std::vector<SpinOrbital> s;

  [[nodiscard]] bool trivial() const noexcept { return r.empty() && s.empty(); }

  /// Active occupied/virtual spin-orbitals after mode expansion, ascending.
  [[nodiscard]] std::vector<SpinOrbital> active_occupied() const;
  [[nodiscard]] std::vector<SpinOrbital> active_virtual() const;

  /// Largest excitation rank present in the internal algebra.
  [[nodiscard]] int max_internal_rank() const;

  /// "R={2}, S={3,4}" or "R={1a}, S={3a}", 1-based as in user-facing text.
  [[nodiscard]] std::string str() const;

  /// Range check against a sector; throws std::invalid_argument on failure.
  void validate_ranges(int n_orb, int n_occ_spatial) const;
};

/// Parse the CLI syntax "R=2;S=3,4" (orbital) or "R=1a;S=3a" (spin-orbital),
/// 1-based orbital numbering.
[[nodiscard]] SesSpec parse_ses_spec(const std::string& text);

/// Orbital-mode spec from 1-based index lists, convenience for tables.
[[nodiscard]] SesSpec ses_orbital(std::vector<int> r_1based, std::vector<int> s_1based);
[[nodiscard]] SesSpec ses_spin_orbital(std::vector<std::pair<int, Spin>> r_1based,
                                       std::vector<std::pair<int, Spin>> s_1based);

/// All S_z-conserving excitations with holes in R and particles in S, every
/// rank the algebra supports.
[[nodiscard]] ExcitationSet internal_excitations(const SesSpec& spec, int n_orb,
                                                 int n_occ_spatial);

/// True iff ex moves electrons R -> S only.
[[nodiscard]] bool is_internal(const SesSpec& spec, const Excitation& ex);

/// True iff the model excitation set contains every internal excitation, so
/// that T_int generates the full CAS from the reference.
[[nodiscard]] bool validate_ses(const SesSpec& spec, const ExcitationSet& exset, int n_orb,
                                int n_occ_spatial);

struct Partition {
  AmplitudeSet t_int;
  AmplitudeSet t_ext;
};

/// Split amplitudes by membership of the excitation in the sub-algebra.
[[nodiscard]] Partition partition_amplitudes(const AmplitudeSet& t, const SesSpec& spec);

/// Reference plus all determinants generated by the internal excitations,
/// deduplicated, reference first.
[[nodiscard]] DetSubset internal_space(const SesSpec& spec,
                                       std::shared_ptr<const FockBasis> basis);

/// Number of CCSD SESs over n_o occupied and n_v virtual orbitals,
/// n_o(2^{n_v}-1) + n_v(2^{n_o}-1). Counts |R|=|S|=1 pairs once per branch;
/// de-duplicated pair enumeration equals this minus n_o*n_v.
[[nodiscard]] std::uint64_t ses_census_ccsd(int n_o, int n_v);

/// Every distinct valid orbital-mode (R,S) pair for a rank-M model, in
/// deterministic order. For M=2 this has census - n_o*n_v entries.
[[nodiscard]] std::vector<SesSpec> enumerate_valid_ses(int n_o, int n_v, int max_rank);

}  // namespace ccfock
