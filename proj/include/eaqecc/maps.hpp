#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eaqecc/field.hpp"

namespace eaqecc {

/// Coordinate machinery for the field-expansion map between F_q^{2n} and
/// F_p^{2mn}. The a-half is written in the trace-orthogonal basis B, the
/// b-half in the rescaled basis B' = {omega_i gamma_i}, so the symplectic
/// form over F_p matches the trace-symplectic form over F_q.
struct ExpansionContext {
    FieldPtr base;  // F_p
    FieldPtr ext;   // F_q = F_p^m
    TraceOrthogonalBasis tob;

    static ExpansionContext make(const FieldPtr& ext);

    /// Coordinates of x in basis B (a-half convention).
    std::vector<std::uint32_t> coords_in_basis(std::uint32_t x) const;
    /// Coordinates of y in basis B' (b-half convention).
    std::vector<std::uint32_t> coords_in_rescaled_basis(std::uint32_t y) const;

    /// (phi^E)^{-1}: symplectic vector over F_q (length 2n) to F_p (length 2mn).
    std::vector<std::uint32_t> expand_vector(std::span<const std::uint32_t> v) const;
    /// phi^E: symplectic vector over F_p (length 2mn) back to F_q (length 2n).
    std::vector<std::uint32_t> contract_vector(std::span<const std::uint32_t> v) const;
};

/// phi(a|b) = w a + w^q b, mapping F_q^{2n} (symplectic layout) onto
/// GF(q^2)^n. Bijective and weight-preserving: swt(a|b) = wt_H(phi(a|b)).
std::vector<std::uint32_t> hermitian_pack(const SubfieldEmbedding& tower,
                                          const NormalPair& pair,
                                          std::span<const std::uint32_t> v);

/// phi^{-1}: GF(q^2)^n back to F_q^{2n}.
std::vector<std::uint32_t> hermitian_unpack(const SubfieldEmbedding& tower,
                                            const NormalPair& pair,
                                            std::span<const std::uint32_t> v);

}  // namespace eaqecc
