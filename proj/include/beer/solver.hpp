#pragma once

#include <cstdint>
#include <vector>

#include "beer/ecc_code.hpp"
#include "beer/profile.hpp"

namespace beer {

struct SolveStats {
    std::uint64_t nodes = 0; // assignments explored
    double wall_ms = 0.0;
};

struct SolveOutcome {
    std::vector<EccCode> solutions; // canonical forms, ordered deterministically
    bool exhausted = true;          // false only when stopped at solution_limit
    SolveStats stats;
};

// Recovers every systematic single-error-correcting code (up to parity-row
// permutation) whose miscorrection profile matches `profile` exactly: for
// each entry, a non-charged data bit must be miscorrectable if and only if
// the entry lists it. The parity width is the minimum for k data bits.
//
// The search assigns parity-part columns one data position at a time,
// propagating two constraint families:
//   - 1-CHARGED entries pin support containment between columns;
//   - wider entries require column membership in the GF(2) span of the
//     pattern's charged-cell columns (data columns plus the identity columns
//     of parity cells charged by P*d), checked the moment the charged set is
//     fully assigned.
// Row-permutation symmetry is broken exactly: at each node, candidate values
// that differ only by a permutation of interchangeable parity rows collapse
// to one representative, so each equivalence class is visited once.
//
// solution_limit = 0 searches exhaustively; otherwise the search stops after
// that many solutions (exhausted = false when it stops early).
SolveOutcome solve(const MiscorrectionProfile& profile, std::size_t k,
                   std::size_t solution_limit = 0);

enum class Uniqueness { none, unique, multiple };

struct UniquenessResult {
    Uniqueness kind = Uniqueness::none;
    std::vector<EccCode> codes; // 1 for unique, first 2 found for multiple
};

// Classifies the solution count of `profile`: exhausts the space when at most
// one solution exists, stops at the second otherwise.
UniquenessResult check_uniqueness(const MiscorrectionProfile& profile, std::size_t k);

// Deterministic ordering of canonical codes (used to sort solution sets).
bool code_less(const EccCode& a, const EccCode& b);

} // namespace beer
