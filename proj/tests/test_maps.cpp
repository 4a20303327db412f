#include <doctest.h>

#include <random>
#include <vector>

#include "eaqecc/code.hpp"
#include "eaqecc/maps.hpp"

using namespace eaqecc;
using u32 = std::uint32_t;

namespace {

std::vector<u32> random_vec(std::size_t len, u32 q, std::mt19937& rng) {
    std::uniform_int_distribution<u32> d(0, q - 1);
    std::vector<u32> v(len);
    for (auto& x : v) x = d(rng);
    return v;
}

}  // namespace

TEST_CASE("expansion coordinates reconstruct the element") {
    for (auto [p, m] : {std::pair<u32, u32>{2, 2}, {3, 2}, {2, 3}, {5, 2}}) {
        auto ext = FieldSpec::make(p, m);
        auto ctx = ExpansionContext::make(ext);
        for (u32 x = 0; x < ext->q(); ++x) {
            auto ca = ctx.coords_in_basis(x);
            auto cb = ctx.coords_in_rescaled_basis(x);
            REQUIRE(ca.size() == m);
            u32 xa = 0, xb = 0;
            for (u32 i = 0; i < m; ++i) {
                xa = ext->add(xa, ext->mul(ca[i], ctx.tob.gamma[i]));
                xb = ext->add(xb, ext->mul(cb[i], ext->mul(ctx.tob.omega[i], ctx.tob.gamma[i])));
            }
            CHECK(xa == x);
            CHECK(xb == x);
        }
    }
}

TEST_CASE("expand/contract round-trip on random symplectic vectors") {
    std::mt19937 rng(101);
    for (auto [p, m] : {std::pair<u32, u32>{2, 2}, {3, 2}, {2, 3}}) {
        auto ext = FieldSpec::make(p, m);
        auto ctx = ExpansionContext::make(ext);
        const std::size_t n = 4;
        for (int t = 0; t < 200; ++t) {
            auto v = random_vec(2 * n, ext->q(), rng);
            auto e = ctx.expand_vector(v);
            CHECK(e.size() == 2 * m * n);
            CHECK(ctx.contract_vector(e) == v);
        }
        // linearity over F_p of the expansion
        for (int t = 0; t < 100; ++t) {
            auto u = random_vec(2 * n, ext->q(), rng);
            auto v = random_vec(2 * n, ext->q(), rng);
            std::vector<u32> sum(2 * n);
            for (std::size_t i = 0; i < 2 * n; ++i) sum[i] = ext->add(u[i], v[i]);
            auto eu = ctx.expand_vector(u), ev = ctx.expand_vector(v);
            auto es = ctx.expand_vector(sum);
            for (std::size_t i = 0; i < es.size(); ++i) {
                CHECK(es[i] == (eu[i] + ev[i]) % p);
            }
        }
    }
}

TEST_CASE("trace identity: tr(xy) equals the paired coordinate dot product") {
    std::mt19937 rng(103);
    for (auto [p, m] : {std::pair<u32, u32>{2, 2}, {3, 2}, {2, 3}, {5, 2}}) {
        auto ext = FieldSpec::make(p, m);
        auto ctx = ExpansionContext::make(ext);
        std::uniform_int_distribution<u32> d(0, ext->q() - 1);
        for (int t = 0; t < 1000; ++t) {
            const u32 x = d(rng), y = d(rng);
            auto cx = ctx.coords_in_basis(x);
            auto cy = ctx.coords_in_rescaled_basis(y);
            u32 dot = 0;
            for (u32 i = 0; i < m; ++i) dot = (dot + cx[i] * cy[i]) % p;
            CHECK(dot == ext->trace_to_prime(ext->mul(x, y)));
        }
    }
}

TEST_CASE("trace-symplectic form equals symplectic form of the expansions") {
    std::mt19937 rng(107);
    for (auto [p, m] : {std::pair<u32, u32>{2, 2}, {3, 2}}) {
        auto ext = FieldSpec::make(p, m);
        auto base = FieldSpec::make(p, 1);
        auto ctx = ExpansionContext::make(ext);
        const std::size_t n = 3;
        for (int t = 0; t < 1000; ++t) {
            auto u = random_vec(2 * n, ext->q(), rng);
            auto v = random_vec(2 * n, ext->q(), rng);
            const u32 ts = form(DualityMode::TraceSymplectic, ext, Layout::Symplectic, u, v);
            auto eu = ctx.expand_vector(u), ev = ctx.expand_vector(v);
            const u32 s = form(DualityMode::Symplectic, base, Layout::Symplectic, eu, ev);
            CHECK(ts == s);
        }
    }
}

TEST_CASE("hermitian packing GF(2) -> GF(4) frozen values") {
    auto base = FieldSpec::make(2, 1);
    auto ext = FieldSpec::make(2, 2);
    SubfieldEmbedding tower(base, ext);
    NormalPair pair{ext, 2, 3, 1};  // w = omega, w^2 = omega^2, lambda = w^4 - w^2

    std::vector<u32> v{1, 0, 0, 1};  // (1,0 | 0,1), n = 2
    auto packed = hermitian_pack(tower, pair, v);
    REQUIRE(packed.size() == 2);
    CHECK(packed[0] == 2);  // omega
    CHECK(packed[1] == 3);  // omega^2
    CHECK(hermitian_unpack(tower, pair, packed) == v);

    std::vector<u32> zero{0, 0, 0, 0};
    auto pz = hermitian_pack(tower, pair, zero);
    CHECK(pz == std::vector<u32>{0, 0});
}

TEST_CASE("packing is a weight-preserving bijection with form correspondence") {
    std::mt19937 rng(109);
    for (u32 p : {2u, 3u, 5u}) {
        auto base = FieldSpec::make(p, 1);
        auto ext = FieldSpec::make(p, 2);
        SubfieldEmbedding tower(base, ext);
        auto pair = find_normal_pair(tower);
        const std::size_t n = 4;
        std::uniform_int_distribution<u32> d(0, p - 1);
        for (int t = 0; t < 1000; ++t) {
            std::vector<u32> u(2 * n), v(2 * n);
            for (auto& x : u) x = d(rng);
            for (auto& x : v) x = d(rng);
            auto pu = hermitian_pack(tower, pair, u);
            auto pv = hermitian_pack(tower, pair, v);
            CHECK(hermitian_unpack(tower, pair, pu) == u);
            CHECK(weight(u, WeightKind::Symplectic, n) == weight(pu, WeightKind::Hamming));
            const u32 ts = form(DualityMode::TraceSymplectic, base, Layout::Symplectic, u, v);
            const u32 ta =
                form(DualityMode::TraceAlternating, ext, Layout::Plain, pu, pv, &pair);
            CHECK(ts == ta);
        }
    }
}
