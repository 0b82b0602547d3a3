// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

#include "ccfock/mo_integrals.hpp"

namespace ccfock {

class FcidumpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Read an FCIDUMP file: "&FCI NORB=..,NELEC=..,MS2=.." namelist header
/// terminated by &END (or /), then "value p q r s" records in chemist
/// notation with 1-based indices; "value p q 0 0" are one-electron elements
/// and "value 0 0 0 0" the core energy. The 8-fold permutational symmetry is
/// restored on read. Orbital energies are reconstructed from the diagonal of
/// the closed-shell MO Fock matrix.
[[nodiscard]] MOIntegrals read_fcidump(const std::string& path);

/// Write the unique (p>=q, r>=s, pq>=rs) nonzero integrals; exact round trip.
void write_fcidump(const MOIntegrals& mo, const std::string& path);

/// Fock-diagonal orbital energies eps_p = h_pp + sum_i [2(pp|ii) - (pi|ip)].
[[nodiscard]] Eigen::VectorXd fock_diagonal(const MOIntegrals& mo);

}  // namespace ccfock
