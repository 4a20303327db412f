#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "eaqecc/linalg.hpp"
#include "eaqecc/maps.hpp"

namespace eaqecc {

enum class Layout { Plain, Symplectic };

enum class DualityMode {
    Euclidean,
    Hermitian,
    Symplectic,
    TraceSymplectic,
    TraceAlternating,
};

enum class WeightKind { Hamming, Symplectic };

std::string to_string(DualityMode mode);
std::optional<DualityMode> duality_mode_from_string(const std::string& s);

/// Linear code over GF(q) with a canonical row-space basis. Symplectic
/// layout means total length 2n in the (a|b) two-block arrangement with
/// recorded half-length n.
struct LinearCode {
    Subspace gens;
    Layout layout = Layout::Plain;
    std::size_t half = 0;  // n, when layout == Symplectic

    std::size_t length() const { return gens.ambient(); }
    std::size_t dim() const { return gens.dim(); }
    const FieldPtr& spec() const { return gens.spec(); }

    static LinearCode plain(Subspace s);
    static LinearCode symplectic(Subspace s, std::size_t half);
};

/// Evaluates the chosen form on two vectors. Trace-valued modes return a
/// prime-field scalar; the others return a field value. The trace-alternating
/// form uses the deterministic normal pair of the quadratic extension unless
/// one is supplied.
std::uint32_t form(DualityMode mode, const FieldPtr& spec, Layout layout,
                   std::span<const std::uint32_t> u, std::span<const std::uint32_t> v,
                   const NormalPair* pair = nullptr);

/// Dual of C under the chosen mode. Trace-symplectic and trace-alternating
/// duals are computed by expanding to F_p coordinates, dualizing there, and
/// contracting back.
LinearCode dual(const LinearCode& C, DualityMode mode);

/// hull(C) = C intersect dual(C).
LinearCode hull(const LinearCode& C, DualityMode mode);

int weight(std::span<const std::uint32_t> v, WeightKind kind, std::size_t half = 0);

}  // namespace eaqecc
