#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "eaqecc/code.hpp"
#include "eaqecc/distance.hpp"

namespace eaqecc {

/// Parameters [[n, k+c, d; c]]_q of an entanglement-assisted code.
struct EAParams {
    std::uint64_t q = 0;
    long n = 0;
    long logical = 0;
    long c = 0;
    std::optional<long> d;        // empty when the distance was skipped
    bool d_is_bound = false;      // d is only a lower bound
    bool d_edge_convention = false;  // empty set difference, d taken from C itself
    std::string mode;
};

enum class DistancePolicy { Compute, Skip };

/// Entanglement count from the rank formula 2c = rank(Hx Hz^T - Hz Hx^T),
/// cross-checked against dim C - dim hull_s(C). The agreement of the two
/// routes is asserted on every call.
long c_symplectic(const LinearCode& C);

/// c = rank(H H*), cross-checked against dim C - dim hull_h(C).
long c_hermitian(const LinearCode& C);

EAParams ea_symplectic(const LinearCode& C, DistancePolicy policy = DistancePolicy::Compute,
                       const DistanceOptions& opts = {});

EAParams ea_hermitian(const LinearCode& C, DistancePolicy policy = DistancePolicy::Compute,
                      const DistanceOptions& opts = {});

/// Parity-check route: H generates the Hermitian dual of D; the resulting
/// parameters are [[n, 2k - n + c, d; c]]_q.
EAParams ea_from_parity_check_hermitian(const LinearCode& D,
                                        DistancePolicy policy = DistancePolicy::Compute,
                                        const DistanceOptions& opts = {});

/// CSS construction from two plain codes of the same length; the reported
/// distance is a lower bound.
EAParams ea_css(const LinearCode& C1, const LinearCode& C2,
                DistancePolicy policy = DistancePolicy::Compute,
                const DistanceOptions& opts = {});

/// C_0 = (phi^E)^{-1}(C): the F_p-expansion of a symplectic F_q code, with
/// dim_{F_p} C_0 = m dim_{F_q} C and half-length mn.
LinearCode expand_symplectic(const ExpansionContext& ctx, const LinearCode& C);

/// Self-orthogonal extension C' of half-length n + c whose projection back
/// to the original coordinate pairs recovers C. All four postconditions
/// (length, dimension, self-orthogonality, projection) are asserted.
LinearCode extend_self_orthogonal(const LinearCode& C);

/// Projection of a symplectic code of half-length n onto the first
/// `keep` coordinate pairs of each half (used to verify extensions and by
/// the puncturing module).
LinearCode project_symplectic_pairs(const LinearCode& C, std::size_t keep);

}  // namespace eaqecc
