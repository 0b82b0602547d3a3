// Copyright 2026 The ccfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "ccfock/cc.hpp"
#include "ccfock/downfold.hpp"
#include "ccfock/flow.hpp"
#include "ccfock/scf.hpp"

namespace ccfock {

// Stable-key-order documents; identical inputs give byte-identical output
// except under the "timings" keys and per-entry "wall_ms".
using Document = nlohmann::ordered_json;

[[nodiscard]] Document system_json(const MOIntegrals& mo, const std::string& source);
[[nodiscard]] Document scf_json(const ScfResult& scf);
[[nodiscard]] Document cc_json(const CCSolution& sol, const std::string& model);
[[nodiscard]] Document downfold_json(const DownfoldReport& report);
[[nodiscard]] Document flow_json(const FlowSolution& sol);
[[nodiscard]] Document versions_json();

/// Serialize with 2-space indentation and trailing newline.
void write_document(const Document& doc, const std::string& path);

}  // namespace ccfock
