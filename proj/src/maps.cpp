#include "eaqecc/maps.hpp"

namespace eaqecc {

namespace {
using u32 = std::uint32_t;
}

ExpansionContext ExpansionContext::make(const FieldPtr& ext) {
    ExpansionContext ctx;
    ctx.ext = ext;
    ctx.base = FieldSpec::make(ext->p(), 1);
    ctx.tob = find_trace_orthogonal_basis(ext);
    return ctx;
}

std::vector<u32> ExpansionContext::coords_in_basis(u32 x) const {
    // solve x = sum c_i gamma_i using the trace Gram structure:
    // tr(x gamma_j) = c_j tr(gamma_j^2)  =>  c_j = omega_j tr(x gamma_j)
    const auto& F = *ext;
    const u32 p = F.p();
    std::vector<u32> c(F.m());
    for (std::size_t j = 0; j < tob.gamma.size(); ++j) {
        const u32 t = F.trace_to_prime(F.mul(x, tob.gamma[j]));
        c[j] = static_cast<u32>((static_cast<std::uint64_t>(t) * tob.omega[j]) % p);
    }
    return c;
}

std::vector<u32> ExpansionContext::coords_in_rescaled_basis(u32 y) const {
    // y = sum y_i (omega_i gamma_i)  =>  y_i = coords_in_basis(y)_i / omega_i
    const auto& F = *ext;
    const u32 p = F.p();
    auto c = coords_in_basis(y);
    for (std::size_t i = 0; i < c.size(); ++i) {
        // divide by omega_i in F_p
        u32 inv = 1, b = tob.omega[i], e = p - 2;
        while (e) {
            if (e & 1) inv = static_cast<u32>((static_cast<std::uint64_t>(inv) * b) % p);
            b = static_cast<u32>((static_cast<std::uint64_t>(b) * b) % p);
            e >>= 1;
        }
        c[i] = static_cast<u32>((static_cast<std::uint64_t>(c[i]) * inv) % p);
    }
    return c;
}

std::vector<u32> ExpansionContext::expand_vector(std::span<const u32> v) const {
    if (v.size() % 2 != 0) throw LayoutMismatch("symplectic vector has odd length");
    const std::size_t n = v.size() / 2;
    const std::size_t m = ext->m();
    std::vector<u32> out(2 * m * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        auto ca = coords_in_basis(v[i]);
        auto cb = coords_in_rescaled_basis(v[n + i]);
        for (std::size_t j = 0; j < m; ++j) {
            out[i * m + j] = ca[j];
            out[m * n + i * m + j] = cb[j];
        }
    }
    return out;
}

std::vector<u32> ExpansionContext::contract_vector(std::span<const u32> v) const {
    const std::size_t m = ext->m();
    if (v.size() % (2 * m) != 0) throw LayoutMismatch("length is not a multiple of 2m");
    const std::size_t n = v.size() / (2 * m);
    const auto& F = *ext;
    std::vector<u32> out(2 * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        u32 a = 0, b = 0;
        for (std::size_t j = 0; j < m; ++j) {
            a = F.add(a, F.mul(v[i * m + j], tob.gamma[j]));
            const u32 scaled = static_cast<u32>(
                (static_cast<std::uint64_t>(v[m * n + i * m + j]) * tob.omega[j]) % F.p());
            b = F.add(b, F.mul(scaled, tob.gamma[j]));
        }
        out[i] = a;
        out[n + i] = b;
    }
    return out;
}

std::vector<u32> hermitian_pack(const SubfieldEmbedding& tower, const NormalPair& pair,
                                std::span<const u32> v) {
    if (v.size() % 2 != 0) throw LayoutMismatch("symplectic vector has odd length");
    if (!pair.ext || !pair.ext->same_as(*tower.ext())) {
        throw SpecMismatch("normal pair belongs to a different extension");
    }
    const std::size_t n = v.size() / 2;
    const auto& E = *tower.ext();
    std::vector<u32> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const u32 a = tower.embed(v[i]);
        const u32 b = tower.embed(v[n + i]);
        out[i] = E.add(E.mul(pair.w, a), E.mul(pair.w_q, b));
    }
    return out;
}

std::vector<u32> hermitian_unpack(const SubfieldEmbedding& tower, const NormalPair& pair,
                                  std::span<const u32> v) {
    const auto& E = *tower.ext();
    const std::size_t n = v.size();
    std::vector<u32> out(2 * n, 0);
    // solve w a + w^q b = x, with a, b in the subfield; conjugating gives
    // w^q a + w b = x^q, so a = (w x - w^q x^q) / (w^2 - w^{2q})
    const u32 det = E.sub(E.mul(pair.w, pair.w), E.mul(pair.w_q, pair.w_q));  // -lambda
    const u32 det_inv = E.inv(det);
    for (std::size_t i = 0; i < n; ++i) {
        const u32 x = v[i];
        const u32 xq = tower.conj(x);
        const u32 a = E.mul(E.sub(E.mul(pair.w, x), E.mul(pair.w_q, xq)), det_inv);
        const u32 b = E.mul(E.sub(E.mul(pair.w, xq), E.mul(pair.w_q, x)), det_inv);
        out[i] = tower.retract(a);
        out[n + i] = tower.retract(b);
    }
    return out;
}

}  // namespace eaqecc
