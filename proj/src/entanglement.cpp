#include "eaqecc/entanglement.hpp"

#include <algorithm>
#include <vector>

namespace eaqecc {

namespace {
using u32 = std::uint32_t;

Matrix half_block(const LinearCode& C, bool second) {
    const std::size_t n = C.half;
    Matrix M(C.spec(), C.dim(), n);
    for (std::size_t i = 0; i < C.dim(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            M.at(i, j) = C.gens.basis.at(i, (second ? n : 0) + j);
        }
    }
    return M;
}

// d over dual \ hull; on an empty difference falls back to the minimum
// weight of C itself and raises the edge flag
void attach_distance(EAParams& P, const LinearCode& dual_code, const Subspace& hull_space,
                     WeightKind kind, const LinearCode& C, DistancePolicy policy,
                     const DistanceOptions& opts) {
    if (policy == DistancePolicy::Skip) return;
    DistanceOutcome out = relative_distance(dual_code, hull_space, kind, opts);
    if (!out.empty) {
        P.d = out.value;
        return;
    }
    P.d_edge_convention = true;
    DistanceOutcome own = min_distance(C, kind, opts);
    if (!own.empty) P.d = own.value;
}

}  // namespace

long c_symplectic(const LinearCode& C) {
    if (C.layout != Layout::Symplectic) throw LayoutMismatch("c_symplectic needs symplectic layout");
    Matrix hx = half_block(C, false);
    Matrix hz = half_block(C, true);
    Matrix comm = subtract(matmul(hx, transpose(hz)), matmul(hz, transpose(hx)));
    const std::size_t r = rank(comm);
    if (r % 2 != 0) throw InternalInconsistency("commutation matrix has odd rank");
    const std::size_t h = hull(C, DualityMode::Symplectic).dim();
    if (r != C.dim() - h) {
        throw InternalInconsistency("rank formula and hull dimension disagree on 2c");
    }
    return static_cast<long>(r / 2);
}

long c_hermitian(const LinearCode& C) {
    if (C.layout != Layout::Plain) throw LayoutMismatch("c_hermitian needs plain layout");
    const auto& F = *C.spec();
    if (F.m() % 2 != 0) throw NoSubfieldRegistered();
    const Matrix& H = C.gens.basis;
    Matrix Hstar = transpose(entrywise_frobenius(H, F.m() / 2));
    const std::size_t r = rank(matmul(H, Hstar));
    const std::size_t h = hull(C, DualityMode::Hermitian).dim();
    if (r != C.dim() - h) {
        throw InternalInconsistency("rank formula and hull dimension disagree on c");
    }
    return static_cast<long>(r);
}

EAParams ea_symplectic(const LinearCode& C, DistancePolicy policy, const DistanceOptions& opts) {
    if (C.layout != Layout::Symplectic) throw LayoutMismatch("ea_symplectic needs symplectic layout");
    const std::size_t n = C.half;
    if (C.dim() > n) throw DimTooLarge("dim C exceeds the half-length n");
    const long c = c_symplectic(C);
    const long k = static_cast<long>(n) - static_cast<long>(C.dim());

    EAParams P;
    P.q = C.spec()->q();
    P.n = static_cast<long>(n);
    P.c = c;
    P.logical = k + c;
    P.mode = "symplectic";

    LinearCode D = dual(C, DualityMode::Symplectic);
    Subspace H = intersect(C.gens, D.gens);
    attach_distance(P, D, H, WeightKind::Symplectic, C, policy, opts);
    return P;
}

EAParams ea_hermitian(const LinearCode& C, DistancePolicy policy, const DistanceOptions& opts) {
    if (C.layout != Layout::Plain) throw LayoutMismatch("ea_hermitian needs plain layout");
    const auto& F = *C.spec();
    if (F.m() % 2 != 0) throw NoSubfieldRegistered();
    const std::size_t n = C.length();
    if (2 * C.dim() > n) throw DimTooLarge("dim C exceeds n/2");
    const long c = c_hermitian(C);
    const long k = static_cast<long>(n) - 2 * static_cast<long>(C.dim());

    EAParams P;
    // the EA code lives over the index-2 subfield
    std::uint64_t q_sub = 1;
    for (u32 i = 0; i < F.m() / 2; ++i) q_sub *= F.p();
    P.q = q_sub;
    P.n = static_cast<long>(n);
    P.c = c;
    P.logical = k + c;
    P.mode = "hermitian";

    LinearCode D = dual(C, DualityMode::Hermitian);
    Subspace H = intersect(C.gens, D.gens);
    attach_distance(P, D, H, WeightKind::Hamming, C, policy, opts);
    return P;
}

EAParams ea_from_parity_check_hermitian(const LinearCode& D, DistancePolicy policy,
                                        const DistanceOptions& opts) {
    if (D.layout != Layout::Plain) throw LayoutMismatch("parity-check route needs plain layout");
    LinearCode C = dual(D, DualityMode::Hermitian);
    EAParams P = ea_hermitian(C, policy, opts);
    P.mode = "hermitian_parity_check";
    return P;
}

EAParams ea_css(const LinearCode& C1, const LinearCode& C2, DistancePolicy policy,
                const DistanceOptions& opts) {
    if (C1.layout != Layout::Plain || C2.layout != Layout::Plain) {
        throw LayoutMismatch("ea_css needs plain layout");
    }
    if (!C1.spec()->same_as(*C2.spec())) throw SpecMismatch("CSS codes over different fields");
    if (C1.length() != C2.length()) throw ShapeMismatch("CSS codes of different lengths");
    const std::size_t n = C1.length();

    Matrix G12 = matmul(C1.gens.basis, transpose(C2.gens.basis));
    const std::size_t c = rank(G12);
    if (rank(matmul(C2.gens.basis, transpose(C1.gens.basis))) != c) {
        throw InternalInconsistency("rank(H1 H2^T) != rank(H2 H1^T)");
    }

    LinearCode D1 = dual(C1, DualityMode::Euclidean);
    LinearCode D2 = dual(C2, DualityMode::Euclidean);
    const std::size_t c_a = C1.dim() - intersect(C1.gens, D2.gens).dim();
    const std::size_t c_b = C2.dim() - intersect(C2.gens, D1.gens).dim();
    if (c_a != c || c_b + c_a != 2 * c) {
        throw InternalInconsistency("CSS 2c chain fails to close");
    }

    EAParams P;
    P.q = C1.spec()->q();
    P.n = static_cast<long>(n);
    P.c = static_cast<long>(c);
    P.logical = static_cast<long>(n) - static_cast<long>(C1.dim()) -
                static_cast<long>(C2.dim()) + static_cast<long>(c);
    P.mode = "css";
    P.d_is_bound = true;
    if (policy == DistancePolicy::Skip) return P;

    // d = min over both sides of d_H(Ci^perp \ (Cj cap Ci^perp))
    std::optional<long> best;
    bool edge = false;
    auto side = [&](const LinearCode& Dual, const LinearCode& Other) {
        Subspace meet = intersect(Other.gens, Dual.gens);
        DistanceOutcome out = relative_distance(Dual, meet, WeightKind::Hamming, opts);
        if (out.empty) {
            edge = true;
            out = min_distance(Dual, WeightKind::Hamming, opts);
            if (out.empty) return;  // dual is the zero space
        }
        if (!best || out.value < *best) best = out.value;
    };
    side(D1, C2);
    side(D2, C1);
    P.d = best;
    P.d_edge_convention = edge && best.has_value();
    return P;
}

LinearCode expand_symplectic(const ExpansionContext& ctx, const LinearCode& C) {
    if (C.layout != Layout::Symplectic) throw LayoutMismatch("expand_symplectic needs symplectic layout");
    if (!ctx.ext || !ctx.ext->same_as(*C.spec())) {
        throw SpecMismatch("expansion context belongs to a different field");
    }
    const auto& F = *C.spec();
    const std::size_t m = F.m();
    std::vector<std::vector<u32>> rows;
    rows.reserve(C.dim() * m);
    for (std::size_t i = 0; i < C.dim(); ++i) {
        auto g = C.gens.basis.row(i);
        for (u32 gamma : ctx.tob.gamma) {
            std::vector<u32> scaled(g.size());
            for (std::size_t j = 0; j < g.size(); ++j) scaled[j] = F.mul(gamma, g[j]);
            rows.push_back(ctx.expand_vector(scaled));
        }
    }
    Subspace s = rows.empty() ? Subspace::zero(ctx.base, 2 * m * C.half)
                              : Subspace::from_rows(Matrix::from_rows(ctx.base, rows));
    if (s.dim() != m * C.dim()) {
        throw InternalInconsistency("expansion changed the F_p dimension");
    }
    // round-trip: every expanded basis vector must contract back into C
    for (std::size_t i = 0; i < s.dim(); ++i) {
        if (!C.gens.contains(ctx.contract_vector(s.basis.row(i)))) {
            throw InternalInconsistency("expansion round-trip left the code");
        }
    }
    return LinearCode::symplectic(std::move(s), m * C.half);
}

LinearCode project_symplectic_pairs(const LinearCode& C, std::size_t keep) {
    if (C.layout != Layout::Symplectic) throw LayoutMismatch("projection needs symplectic layout");
    if (keep > C.half) throw RangeViolation("cannot keep more pairs than exist");
    const std::size_t n = C.half;
    std::vector<std::vector<u32>> rows;
    rows.reserve(C.dim());
    for (std::size_t i = 0; i < C.dim(); ++i) {
        auto g = C.gens.basis.row(i);
        std::vector<u32> r(2 * keep);
        for (std::size_t j = 0; j < keep; ++j) {
            r[j] = g[j];
            r[keep + j] = g[n + j];
        }
        rows.push_back(std::move(r));
    }
    Subspace s = rows.empty() ? Subspace::zero(C.spec(), 2 * keep)
                              : Subspace::from_rows(Matrix::from_rows(C.spec(), rows));
    return LinearCode::symplectic(std::move(s), keep);
}

LinearCode extend_self_orthogonal(const LinearCode& C) {
    if (C.layout != Layout::Symplectic) throw LayoutMismatch("extension needs symplectic layout");
    const auto& F = *C.spec();
    const std::size_t n = C.half;
    Subspace H = hull(C, DualityMode::Symplectic).gens;

    // hull complement inside C, taken greedily in RREF row order
    std::vector<std::vector<u32>> comp;
    {
        Subspace span = H;
        for (std::size_t i = 0; i < C.dim(); ++i) {
            auto g = C.gens.basis.row(i);
            if (span.contains(g)) continue;
            comp.emplace_back(g.begin(), g.end());
            Matrix one = Matrix::from_rows(C.spec(), {comp.back()});
            span = subspace_sum(span, Subspace::from_rows(one));
        }
    }
    if (comp.size() % 2 != 0) throw InternalInconsistency("hull complement has odd dimension");
    const std::size_t c = comp.size() / 2;

    auto sform = [&](std::span<const u32> u, std::span<const u32> v) {
        return form(DualityMode::Symplectic, C.spec(), Layout::Symplectic, u, v);
    };

    // symplectic Gram-Schmidt: peel hyperbolic pairs off the complement
    std::vector<std::pair<std::vector<u32>, std::vector<u32>>> pairs;
    std::vector<u32> pair_values;
    std::vector<std::vector<u32>> work = std::move(comp);
    while (!work.empty()) {
        std::vector<u32> u = std::move(work.front());
        work.erase(work.begin());
        std::size_t mate = work.size();
        u32 s = 0;
        for (std::size_t i = 0; i < work.size(); ++i) {
            s = sform(u, work[i]);
            if (s) { mate = i; break; }
        }
        if (mate == work.size()) {
            throw InternalInconsistency("form degenerate on the hull complement");
        }
        std::vector<u32> v = std::move(work[mate]);
        work.erase(work.begin() + static_cast<long>(mate));
        const u32 s_inv = F.inv(s);
        for (auto& w : work) {
            const u32 cu = F.mul(sform(u, w), s_inv);
            const u32 cv = F.mul(sform(v, w), s_inv);
            for (std::size_t j = 0; j < w.size(); ++j) {
                w[j] = F.add(F.sub(w[j], F.mul(cu, v[j])), F.mul(cv, u[j]));
            }
        }
        pairs.emplace_back(std::move(u), std::move(v));
        pair_values.push_back(s);
    }

    // assemble C' of half-length n + c: hull rows padded with zeros, pair
    // (u, v) with <u,v> = s gets a-tail e_i on u and b-tail -s e_i on v
    const std::size_t n2 = n + c;
    auto widen = [&](std::span<const u32> g) {
        std::vector<u32> r(2 * n2, 0);
        for (std::size_t j = 0; j < n; ++j) {
            r[j] = g[j];
            r[n2 + j] = g[n + j];
        }
        return r;
    };
    std::vector<std::vector<u32>> rows;
    rows.reserve(C.dim());
    for (std::size_t i = 0; i < H.dim(); ++i) rows.push_back(widen(H.basis.row(i)));
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        auto ru = widen(pairs[i].first);
        ru[n + i] = 1;
        rows.push_back(std::move(ru));
        auto rv = widen(pairs[i].second);
        rv[n2 + n + i] = F.neg(pair_values[i]);
        rows.push_back(std::move(rv));
    }
    Subspace s2 = rows.empty() ? Subspace::zero(C.spec(), 2 * n2)
                               : Subspace::from_rows(Matrix::from_rows(C.spec(), rows));
    LinearCode Cp = LinearCode::symplectic(std::move(s2), n2);

    // postconditions: half-length, dimension, self-orthogonality, projection
    if (Cp.half != n + static_cast<std::size_t>(c_symplectic(C))) {
        throw InternalInconsistency("extension has the wrong half-length");
    }
    if (Cp.dim() != C.dim()) throw InternalInconsistency("extension changed the dimension");
    for (std::size_t i = 0; i < Cp.dim(); ++i) {
        for (std::size_t j = i; j < Cp.dim(); ++j) {
            if (form(DualityMode::Symplectic, C.spec(), Layout::Symplectic, Cp.gens.basis.row(i),
                     Cp.gens.basis.row(j)) != 0) {
                throw InternalInconsistency("extension is not self-orthogonal");
            }
        }
    }
    LinearCode proj = project_symplectic_pairs(Cp, n);
    if (proj.dim() != C.dim() || !C.gens.contains(proj.gens)) {
        throw InternalInconsistency("extension does not project back onto C");
    }
    return Cp;
}

}  // namespace eaqecc
