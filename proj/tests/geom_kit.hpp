#pragma once

// Block-kit generator for geometric decomposition tests: assembles a
// block-diagonal basis from brute-force-found 2x2 hyperbolic gadgets, 1x1
// non-singular lines, and (characteristic 2 only) one elliptic gadget.

#include <optional>
#include <random>
#include <vector>

#include "eaqecc/geom.hpp"

namespace testutil {

using namespace eaqecc;
using u32 = std::uint32_t;

inline u32 geom_inner(const FieldPtr& F, GeomMode mode, std::span<const u32> u,
                      std::span<const u32> v) {
    const u32 s = mode == GeomMode::Hermitian ? F->m() / 2 : 0;
    u32 acc = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        acc = F->add(acc, F->mul(mode == GeomMode::Hermitian ? F->frobenius(u[i], s) : u[i],
                                 v[i]));
    }
    return acc;
}

// rows (u, v) with Gram [[0,1],[1,0]] in a 2-dim ambient block, if one exists
inline std::optional<std::vector<std::vector<u32>>> hyperbolic_gadget(const FieldPtr& F,
                                                                      GeomMode mode) {
    const u32 q = F->q();
    for (u32 a = 0; a < q * q; ++a) {
        std::vector<u32> u{a % q, a / q};
        if ((u[0] | u[1]) == 0) continue;
        if (geom_inner(F, mode, u, u) != 0) continue;
        for (u32 b = 0; b < q * q; ++b) {
            std::vector<u32> v{b % q, b / q};
            if ((v[0] | v[1]) == 0) continue;
            if (geom_inner(F, mode, v, v) != 0) continue;
            if (geom_inner(F, mode, u, v) != 1) continue;
            if (geom_inner(F, mode, v, u) != 1) continue;
            return std::vector<std::vector<u32>>{u, v};
        }
    }
    return std::nullopt;
}

// rows (u, v) with Gram [[0,1],[1,1]]; only sensible in characteristic 2
inline std::optional<std::vector<std::vector<u32>>> elliptic_gadget(const FieldPtr& F,
                                                                    GeomMode mode) {
    if (F->p() != 2) return std::nullopt;
    const u32 q = F->q();
    for (u32 a = 0; a < q * q; ++a) {
        std::vector<u32> u{a % q, a / q};
        if ((u[0] | u[1]) == 0) continue;
        if (geom_inner(F, mode, u, u) != 0) continue;
        for (u32 b = 0; b < q * q; ++b) {
            std::vector<u32> v{b % q, b / q};
            if (geom_inner(F, mode, v, v) != 1) continue;
            if (geom_inner(F, mode, u, v) != 1) continue;
            if (geom_inner(F, mode, v, u) != 1) continue;
            return std::vector<std::vector<u32>>{u, v};
        }
    }
    return std::nullopt;
}

// a 1-dim row (x) with nonzero self-inner-product
inline std::vector<u32> line_gadget(const FieldPtr& F, GeomMode mode, std::mt19937& rng) {
    std::uniform_int_distribution<u32> d(1, F->q() - 1);
    while (true) {
        std::vector<u32> v{d(rng)};
        if (geom_inner(F, mode, v, v) != 0) return v;
    }
}

// Block-diagonal basis: n_h hyperbolic blocks, n_l lines, optional elliptic.
// Returns nullopt when the field/mode lacks the requested gadgets.
inline std::optional<Matrix> kit_basis(const FieldPtr& F, GeomMode mode, std::size_t n_h,
                                       std::size_t n_l, bool elliptic, std::mt19937& rng) {
    std::optional<std::vector<std::vector<u32>>> hyper, ellip;
    if (n_h) {
        hyper = hyperbolic_gadget(F, mode);
        if (!hyper) return std::nullopt;
    }
    if (elliptic) {
        ellip = elliptic_gadget(F, mode);
        if (!ellip) return std::nullopt;
    }
    const std::size_t n = 2 * n_h + n_l + (elliptic ? 2 : 0);
    if (n == 0) return std::nullopt;
    Matrix V(F, n, n);
    std::size_t pos = 0;
    for (std::size_t h = 0; h < n_h; ++h, pos += 2) {
        for (std::size_t r = 0; r < 2; ++r) {
            V.at(pos + r, pos) = (*hyper)[r][0];
            V.at(pos + r, pos + 1) = (*hyper)[r][1];
        }
    }
    for (std::size_t l = 0; l < n_l; ++l, ++pos) {
        V.at(pos, pos) = line_gadget(F, mode, rng)[0];
    }
    if (elliptic) {
        for (std::size_t r = 0; r < 2; ++r) {
            V.at(pos + r, pos) = (*ellip)[r][0];
            V.at(pos + r, pos + 1) = (*ellip)[r][1];
        }
    }
    return V;
}

// random 1-based index set avoiding the second elliptic generator
inline IndexSet random_index_set(const GramProfile& profile, std::mt19937& rng) {
    const std::size_t banned = profile.elliptic_second_index();
    std::bernoulli_distribution pick(0.5);
    IndexSet I;
    for (std::size_t i = 0; i < profile.n(); ++i) {
        if (i == banned) continue;
        if (pick(rng)) I.insert(i + 1);
    }
    return I;
}

}  // namespace testutil
