#pragma once

#include <cstdint>
#include <optional>

#include "eaqecc/code.hpp"

namespace eaqecc {

/// Result of a set-difference distance search. `empty` marks A \ B = {} —
/// an explicit outcome, never a sentinel integer; callers pick the edge
/// convention.
struct DistanceOutcome {
    bool empty = false;
    int value = 0;

    static DistanceOutcome infinite() { return {true, 0}; }
    static DistanceOutcome finite(int v) { return {false, v}; }

    friend bool operator==(const DistanceOutcome&, const DistanceOutcome&) = default;
};

struct DistanceOptions {
    std::uint64_t budget = std::uint64_t{1} << 26;  // enumerated codewords cap
    bool parallel = true;
};

/// min{ wt(v) : v in A, v not in B }, by exhaustive Gray-code enumeration of
/// the q^{dim A} codewords. Throws BudgetExceeded when the message space
/// exceeds the budget. The parallel kernel splits on the leading message
/// symbol with a deterministic min-reduction; the serial kernel is the
/// reference implementation.
DistanceOutcome relative_distance(const LinearCode& A, const Subspace& B,
                                  WeightKind kind, const DistanceOptions& opts = {});

DistanceOutcome relative_distance_serial(const LinearCode& A, const Subspace& B,
                                         WeightKind kind, const DistanceOptions& opts = {});

/// Ordinary minimum distance: relative_distance against the zero subspace.
DistanceOutcome min_distance(const LinearCode& A, WeightKind kind,
                             const DistanceOptions& opts = {});

}  // namespace eaqecc
