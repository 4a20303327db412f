#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "eaqecc/code.hpp"

namespace eaqecc {

enum class GeomBlockKind { Hyperbolic, NonSingular, Elliptic };

struct GeomBlock {
    GeomBlockKind kind;
    std::size_t start;       // first basis index of the block (0-based)
    std::uint32_t g = 0;     // diagonal value for NonSingular blocks

    std::size_t size() const { return kind == GeomBlockKind::NonSingular ? 1 : 2; }
};

enum class GeomMode { Euclidean, Hermitian };

/// Validated geometric decomposition of F_q^n: basis V whose Gram matrix is
/// block diagonal with hyperbolic blocks first, then non-singular lines,
/// then at most one trailing elliptic block (characteristic 2 only).
struct GramProfile {
    Matrix basis;
    std::vector<GeomBlock> blocks;
    GeomMode mode = GeomMode::Euclidean;

    std::size_t n() const { return basis.rows; }
    bool has_elliptic() const;
    /// 0-based index of the second elliptic generator, or npos.
    std::size_t elliptic_second_index() const;
};

using IndexSet = std::set<std::size_t>;  // 1-based indices, matching the CLI

/// Checks that V is square, full rank, and that its Gram matrix under the
/// chosen inner product has exactly the prescribed contiguous block shape.
GramProfile validate_decomposition(const Matrix& V, GeomMode mode);

/// The code spanned by {v_i : i in I}.
LinearCode code_from_indices(const GramProfile& profile, const IndexSet& I);

/// I^perp = {1..n} \ I', with i' given by the per-block pairing rule.
/// Throws UndefinedPrime if I contains the second elliptic generator.
IndexSet index_dual(const GramProfile& profile, const IndexSet& I);

struct RadicalSplit {
    IndexSet radical;  // I_R: spans hull(code(I))
    IndexSet left;     // I_L: card(I_L) = c
};

RadicalSplit radical_split(const GramProfile& profile, const IndexSet& I);

/// c = card(I_L) = card(I) - card(I_R).
long c_from_indices(const GramProfile& profile, const IndexSet& I);

/// Duality mode matching the profile (Euclidean or Hermitian), for
/// cross-checks against the exact linear algebra route.
DualityMode geom_duality(const GramProfile& profile);

}  // namespace eaqecc
