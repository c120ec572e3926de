#pragma once

#include <optional>

#include "fairnet/sources.hpp"

namespace fairnet {

// Brute-force ground-truth solvers for the source problems. Each is guarded
// by a hard size limit (PreconditionError beyond it), returns a canonical
// (sorted, first-found in a fixed order) certificate, and re-verifies the
// certificate before returning it.

// Lexicographically first k-clique. Guard: n <= 20.
std::optional<CliqueCertificate> oracle_clique(const CliqueInstance&);

// First proper 3-coloring found assigning colors 1 < 2 < 3 to vertices in
// index order. Guard: n <= 15.
std::optional<ColoringCertificate> oracle_3coloring(const ColoringInstance&);

// Exhaustive truth table, assignments ordered with variable 1 as the least
// significant bit, all-false first. Guard: n <= 20. Validates structure.
std::optional<LsatAssignment> oracle_lsat(const LsatFormula&);

// Enumerates candidate parts X in lexicographic order; the minimal
// separator for X is its neighborhood boundary. Guard: n <= 15.
std::optional<CuttingCertificate> oracle_cutting(const CuttingInstance&);

// Confirms the coupled-pair sharing pattern and isolated-clause
// disjointness; throws ValidationError otherwise.
void validate_lsat_structure(const LsatFormula&);

}  // namespace fairnet
