#include "eaqecc/code.hpp"

#include <algorithm>

namespace eaqecc {

namespace {
using u32 = std::uint32_t;

void check_vectors(std::span<const u32> u, std::span<const u32> v) {
    if (u.size() != v.size()) throw LayoutMismatch("form: vector lengths disagree");
}

// Symplectic value a.b' - a'.b over F_q.
u32 symplectic_value(const FieldSpec& F, std::span<const u32> u, std::span<const u32> v) {
    if (u.size() % 2 != 0) throw LayoutMismatch("symplectic form needs even length");
    const std::size_t n = u.size() / 2;
    u32 acc = 0;
    for (std::size_t i = 0; i < n; ++i) {
        acc = F.add(acc, F.mul(u[i], v[n + i]));
        acc = F.sub(acc, F.mul(v[i], u[n + i]));
    }
    return acc;
}

// GF(q) base spec for a quadratic extension, via the Conway default.
FieldPtr subfield_spec(const FieldPtr& ext) {
    if (ext->m() % 2 != 0) throw NoSubfieldRegistered();
    try {
        return FieldSpec::make(ext->p(), ext->m() / 2);
    } catch (const InvariantViolation&) {
        throw NoSubfieldRegistered();
    }
}

// trace from the subfield F_q (sitting inside GF(q^2)) down to F_p; the
// argument must be fixed by the q-power Frobenius.
u32 trace_subfield_to_prime(const FieldSpec& ext, u32 z, u32 half_m) {
    u32 acc = 0, t = z;
    for (u32 i = 0; i < half_m; ++i) {
        acc = ext.add(acc, t);
        t = ext.pow(t, ext.p());
    }
    return acc % ext.p();
}

}  // namespace

std::string to_string(DualityMode mode) {
    switch (mode) {
        case DualityMode::Euclidean: return "euclidean";
        case DualityMode::Hermitian: return "hermitian";
        case DualityMode::Symplectic: return "symplectic";
        case DualityMode::TraceSymplectic: return "trace_symplectic";
        case DualityMode::TraceAlternating: return "trace_alternating";
    }
    return "?";
}

std::optional<DualityMode> duality_mode_from_string(const std::string& s) {
    if (s == "euclidean") return DualityMode::Euclidean;
    if (s == "hermitian") return DualityMode::Hermitian;
    if (s == "symplectic") return DualityMode::Symplectic;
    if (s == "trace_symplectic" || s == "trace-symplectic") return DualityMode::TraceSymplectic;
    if (s == "trace_alternating" || s == "trace-alternating") return DualityMode::TraceAlternating;
    return std::nullopt;
}

LinearCode LinearCode::plain(Subspace s) {
    LinearCode c;
    c.gens = std::move(s);
    c.layout = Layout::Plain;
    return c;
}

LinearCode LinearCode::symplectic(Subspace s, std::size_t half) {
    if (s.ambient() != 2 * half) {
        throw LayoutMismatch("symplectic layout requires length 2n");
    }
    LinearCode c;
    c.gens = std::move(s);
    c.layout = Layout::Symplectic;
    c.half = half;
    return c;
}

u32 form(DualityMode mode, const FieldPtr& spec, Layout layout, std::span<const u32> u,
         std::span<const u32> v, const NormalPair* pair) {
    check_vectors(u, v);
    const auto& F = *spec;
    switch (mode) {
        case DualityMode::Euclidean: {
            u32 acc = 0;
            for (std::size_t i = 0; i < u.size(); ++i) acc = F.add(acc, F.mul(u[i], v[i]));
            return acc;
        }
        case DualityMode::Hermitian: {
            if (F.m() % 2 != 0) throw NoSubfieldRegistered();
            const u32 half_m = F.m() / 2;
            u32 acc = 0;
            for (std::size_t i = 0; i < u.size(); ++i) {
                acc = F.add(acc, F.mul(F.frobenius(u[i], half_m), v[i]));
            }
            return acc;
        }
        case DualityMode::Symplectic: {
            if (layout != Layout::Symplectic) throw LayoutMismatch("symplectic form needs symplectic layout");
            return symplectic_value(F, u, v);
        }
        case DualityMode::TraceSymplectic: {
            if (layout != Layout::Symplectic) throw LayoutMismatch("trace-symplectic form needs symplectic layout");
            return F.trace_to_prime(symplectic_value(F, u, v));
        }
        case DualityMode::TraceAlternating: {
            if (F.m() % 2 != 0) throw NoSubfieldRegistered();
            const u32 half_m = F.m() / 2;
            NormalPair local;
            if (!pair) {
                SubfieldEmbedding tower(subfield_spec(spec), spec);
                local = find_normal_pair(tower);
                pair = &local;
            }
            u32 num = 0;
            for (std::size_t i = 0; i < u.size(); ++i) {
                num = F.add(num, F.mul(F.frobenius(u[i], half_m), v[i]));
                num = F.sub(num, F.mul(u[i], F.frobenius(v[i], half_m)));
            }
            const u32 z = F.div(num, pair->lambda);
            return trace_subfield_to_prime(F, z, half_m);
        }
    }
    throw InvariantViolation("unknown duality mode");
}

namespace {

// F_q-bilinear duals reduce to one Euclidean kernel.
Subspace bilinear_dual(const LinearCode& C, DualityMode mode) {
    const auto& F = *C.spec();
    switch (mode) {
        case DualityMode::Euclidean:
            return kernel(C.gens.basis);
        case DualityMode::Hermitian: {
            if (F.m() % 2 != 0) throw NoSubfieldRegistered();
            return kernel(entrywise_frobenius(C.gens.basis, F.m() / 2));
        }
        case DualityMode::Symplectic: {
            if (C.layout != Layout::Symplectic) {
                throw LayoutMismatch("symplectic dual needs symplectic layout");
            }
            // row (a|b) constrains via the Euclidean row (-b|a)
            const std::size_t n = C.half;
            Matrix M(C.spec(), C.dim(), 2 * n);
            for (std::size_t i = 0; i < C.dim(); ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    M.at(i, j) = F.neg(C.gens.basis.at(i, n + j));
                    M.at(i, n + j) = C.gens.basis.at(i, j);
                }
            }
            return kernel(M);
        }
        default:
            throw InvariantViolation("not a bilinear mode");
    }
}

// Expansion of an F_q-linear symplectic code to F_p coordinates.
Subspace expand_to_prime(const ExpansionContext& ctx, const LinearCode& C) {
    const auto& F = *C.spec();
    std::vector<std::vector<u32>> rows;
    rows.reserve(C.dim() * F.m());
    for (std::size_t i = 0; i < C.dim(); ++i) {
        auto g = C.gens.basis.row(i);
        for (u32 gamma : ctx.tob.gamma) {
            std::vector<u32> scaled(g.size());
            for (std::size_t j = 0; j < g.size(); ++j) scaled[j] = F.mul(gamma, g[j]);
            rows.push_back(ctx.expand_vector(scaled));
        }
    }
    if (rows.empty()) {
        return Subspace::zero(ctx.base, 2 * F.m() * C.half);
    }
    return Subspace::from_rows(Matrix::from_rows(ctx.base, rows));
}

LinearCode trace_symplectic_dual(const LinearCode& C) {
    if (C.layout != Layout::Symplectic) {
        throw LayoutMismatch("trace-symplectic dual needs symplectic layout");
    }
    auto ctx = ExpansionContext::make(C.spec());
    auto expanded = LinearCode::symplectic(expand_to_prime(ctx, C), ctx.ext->m() * C.half);
    Subspace dual_p = bilinear_dual(expanded, DualityMode::Symplectic);
    std::vector<std::vector<u32>> rows;
    rows.reserve(dual_p.dim());
    for (std::size_t i = 0; i < dual_p.dim(); ++i) {
        rows.push_back(ctx.contract_vector(dual_p.basis.row(i)));
    }
    Subspace out = rows.empty() ? Subspace::zero(C.spec(), 2 * C.half)
                                : Subspace::from_rows(Matrix::from_rows(C.spec(), rows));
    if (out.dim() != 2 * C.half - C.dim()) {
        throw InternalInconsistency("trace-symplectic dual has unexpected dimension");
    }
    return LinearCode::symplectic(std::move(out), C.half);
}

LinearCode trace_alternating_dual(const LinearCode& C) {
    if (C.layout != Layout::Plain) {
        throw LayoutMismatch("trace-alternating dual needs plain layout");
    }
    const auto& E = C.spec();
    SubfieldEmbedding tower(subfield_spec(E), E);
    NormalPair pair = find_normal_pair(tower);
    const auto& F = *E;

    // pull the F_{q^2}-code back to F_q^{2n}: each generator g contributes
    // phi^{-1}(g) and phi^{-1}(w g)
    std::vector<std::vector<u32>> rows;
    rows.reserve(2 * C.dim());
    for (std::size_t i = 0; i < C.dim(); ++i) {
        auto g = C.gens.basis.row(i);
        rows.push_back(hermitian_unpack(tower, pair, g));
        std::vector<u32> wg(g.size());
        for (std::size_t j = 0; j < g.size(); ++j) wg[j] = F.mul(pair.w, g[j]);
        rows.push_back(hermitian_unpack(tower, pair, wg));
    }
    Subspace pulled = rows.empty() ? Subspace::zero(tower.base(), 2 * C.length())
                                   : Subspace::from_rows(Matrix::from_rows(tower.base(), rows));
    auto D = LinearCode::symplectic(std::move(pulled), C.length());
    LinearCode Dd = trace_symplectic_dual(D);

    std::vector<std::vector<u32>> out_rows;
    out_rows.reserve(Dd.dim());
    for (std::size_t i = 0; i < Dd.dim(); ++i) {
        out_rows.push_back(hermitian_pack(tower, pair, Dd.gens.basis.row(i)));
    }
    Subspace out = out_rows.empty() ? Subspace::zero(E, C.length())
                                    : Subspace::from_rows(Matrix::from_rows(E, out_rows));
    if (out.dim() != C.length() - C.dim()) {
        throw InternalInconsistency("trace-alternating dual has unexpected dimension");
    }
    return LinearCode::plain(std::move(out));
}

}  // namespace

LinearCode dual(const LinearCode& C, DualityMode mode) {
    switch (mode) {
        case DualityMode::Euclidean:
        case DualityMode::Hermitian: {
            if (C.layout != Layout::Plain) {
                throw LayoutMismatch("plain layout required for this duality");
            }
            return LinearCode::plain(bilinear_dual(C, mode));
        }
        case DualityMode::Symplectic:
            return LinearCode::symplectic(bilinear_dual(C, mode), C.half);
        case DualityMode::TraceSymplectic:
            return trace_symplectic_dual(C);
        case DualityMode::TraceAlternating:
            return trace_alternating_dual(C);
    }
    throw InvariantViolation("unknown duality mode");
}

LinearCode hull(const LinearCode& C, DualityMode mode) {
    LinearCode d = dual(C, mode);
    Subspace h = intersect(C.gens, d.gens);
    if (C.layout == Layout::Symplectic) return LinearCode::symplectic(std::move(h), C.half);
    return LinearCode::plain(std::move(h));
}

int weight(std::span<const u32> v, WeightKind kind, std::size_t half) {
    if (kind == WeightKind::Hamming) {
        return static_cast<int>(std::count_if(v.begin(), v.end(), [](u32 x) { return x != 0; }));
    }
    if (half == 0 || v.size() != 2 * half) {
        throw LayoutMismatch("symplectic weight needs the recorded half-length");
    }
    int w = 0;
    for (std::size_t i = 0; i < half; ++i) {
        if (v[i] != 0 || v[half + i] != 0) ++w;
    }
    return w;
}

}  // namespace eaqecc
