#pragma once

#include <map>
#include <string>

#include "eaqecc/entanglement.hpp"

namespace eaqecc {

enum class PunctureFlavor { SymplecticPairs, Plain };

/// Projection onto the leading coordinates: keeps {1..n-c} (in both halves
/// for symplectic-pair flavor, removing 2c coordinates total).
LinearCode puncture(const LinearCode& C, long c, PunctureFlavor flavor);

/// Codewords vanishing on all removed coordinates, then projected.
/// shorten(C) is always contained in puncture(C).
LinearCode shorten(const LinearCode& C, long c, PunctureFlavor flavor);

/// Checks P(C)^{perp_s} = S(C^{perp_s}) and, when C is self-orthogonal,
/// P(C) cap P(C)^{perp_s} = S(C). A false return is a reportable finding.
struct DualityIdentity {
    bool punctured_dual_is_shortened_dual = false;
    bool hull_of_punctured_is_shortened = false;  // needs C self-orthogonal
    bool self_orthogonal_input = false;
};

DualityIdentity duality_identity_check(const LinearCode& C, long c);

/// Verified dimension claims attached to an emitted construction.
using CheckReport = std::map<std::string, bool>;

struct PuncturedResult {
    EAParams params;
    CheckReport checks;
};

/// [[n-c, k+c, >= d_s(C^{perp_s} \ C); c]]_q from a symplectic
/// self-orthogonal code. Dimension conclusions are verified before emission;
/// a failed claim raises DimensionClaimFailed carrying both dimensions.
PuncturedResult ea_from_punctured_symplectic(const LinearCode& C, long c,
                                             DistancePolicy policy = DistancePolicy::Compute,
                                             const DistanceOptions& opts = {});

PuncturedResult ea_from_punctured_hermitian(const LinearCode& C, long c,
                                            DistancePolicy policy = DistancePolicy::Compute,
                                            const DistanceOptions& opts = {});

/// CSS route: stabilizer P_h(C2) x P_h(C1^perp) with C2 nested in C1.
PuncturedResult ea_from_punctured_css(const LinearCode& C1, const LinearCode& C2, long c,
                                      DistancePolicy policy = DistancePolicy::Compute,
                                      const DistanceOptions& opts = {});

}  // namespace eaqecc
