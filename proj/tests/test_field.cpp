#include <doctest.h>

#include <random>
#include <vector>

#include "eaqecc/conway.hpp"
#include "eaqecc/field.hpp"

using namespace eaqecc;
using u32 = std::uint32_t;

namespace {

// naive residue-polynomial product used as the multiplication oracle
u32 naive_mul(const FieldSpec& F, u32 x, u32 y) {
    const u32 p = F.p(), m = F.m();
    std::vector<u32> a(m, 0), b(m, 0);
    for (u32 i = 0; i < m; ++i, x /= p) a[i] = x % p;
    for (u32 i = 0; i < m; ++i, y /= p) b[i] = y % p;
    std::vector<u32> prod(2 * m - 1, 0);
    for (u32 i = 0; i < m; ++i) {
        for (u32 j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
    }
    const auto& mod = F.modulus();
    for (int d = static_cast<int>(prod.size()) - 1; d >= static_cast<int>(m); --d) {
        const u32 lead = prod[d];
        if (!lead) continue;
        for (u32 i = 0; i <= m; ++i) {
            const u32 sub = (lead * mod[i]) % p;
            prod[d - m + i] = (prod[d - m + i] + p - sub) % p;
        }
    }
    u32 out = 0;
    for (int i = static_cast<int>(m) - 1; i >= 0; --i) out = out * p + prod[i];
    return out;
}

}  // namespace

TEST_CASE("conway table spot values") {
    CHECK(conway_poly(2, 1) == 3);         // x + 1
    CHECK(conway_poly(2, 2) == 7);         // x^2 + x + 1
    CHECK(conway_poly(2, 3) == 11);        // x^3 + x + 1
    CHECK(conway_poly(3, 2) == 17);        // x^2 + 2x + 2
    CHECK(conway_poly(5, 2) == 47);        // x^2 + 4x + 2
    CHECK(!conway_poly(17, 2).has_value());
}

TEST_CASE("primality") {
    CHECK(is_prime_u32(2));
    CHECK(is_prime_u32(13));
    CHECK(is_prime_u32(65521));
    CHECK(!is_prime_u32(1));
    CHECK(!is_prime_u32(91));
    CHECK(!is_prime_u32(65535));
}

TEST_CASE("construction rejects bad parameters") {
    CHECK_THROWS_AS(FieldSpec::make(4, 1), InvariantViolation);
    // x^2 + 1 is reducible over F_2
    CHECK_THROWS_AS(FieldSpec::make(2, 2, 5), InvariantViolation);
    CHECK_THROWS_AS(FieldSpec::make(2, 40), InvariantViolation);
}

TEST_CASE("GF(4) arithmetic matches the modulus reduction") {
    auto F = FieldSpec::make(2, 2);
    CHECK(F->q() == 4);
    CHECK(F->mul(2, 2) == 3);  // w^2 = w + 1
    CHECK(F->frobenius(2, 1) == F->mul(2, 2));
    CHECK(F->trace_to_prime(2) == 1);
    for (u32 x = 0; x < 4; ++x) CHECK(F->add(x, F->neg(x)) == 0);
    CHECK_THROWS_AS(F->inv(0), DivisionByZero);
}

TEST_CASE("GF(9) with modulus x^2+1") {
    auto F = FieldSpec::make(3, 2, 10);  // 1 + 0*3 + 1*9
    const u32 alpha = 3;
    CHECK(F->mul(alpha, alpha) == 2);               // alpha^2 = -1
    CHECK(F->frobenius(alpha, 1) == F->mul(2, alpha));  // alpha^3 = -alpha
    CHECK(F->trace_to_prime(alpha) == 0);

    auto tob = find_trace_orthogonal_basis(F);
    REQUIRE(tob.gamma.size() == 2);
    CHECK(tob.gamma[0] == 1);
    CHECK(tob.gamma[1] == alpha);
    CHECK(tob.omega[0] == 2);
    CHECK(tob.omega[1] == 1);
}

TEST_CASE("multiplication against the naive oracle") {
    std::mt19937 rng(7);
    for (auto [p, m] : {std::pair<u32, u32>{2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
        auto F = FieldSpec::make(p, m);
        std::uniform_int_distribution<u32> d(0, F->q() - 1);
        for (int i = 0; i < 200; ++i) {
            const u32 x = d(rng), y = d(rng);
            CHECK(F->mul(x, y) == naive_mul(*F, x, y));
        }
    }
}

TEST_CASE("field axioms and frobenius automorphism on random elements") {
    std::mt19937 rng(11);
    for (auto [p, m] : {std::pair<u32, u32>{2, 2}, {2, 4}, {3, 2}, {5, 2}, {13, 2}}) {
        auto F = FieldSpec::make(p, m);
        std::uniform_int_distribution<u32> d(0, F->q() - 1);
        for (int i = 0; i < 300; ++i) {
            const u32 x = d(rng), y = d(rng), z = d(rng);
            CHECK(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
            CHECK(F->frobenius(F->mul(x, y), 1) == F->mul(F->frobenius(x, 1), F->frobenius(y, 1)));
            CHECK(F->frobenius(x, F->m()) == x);
            if (x) CHECK(F->mul(x, F->inv(x)) == 1);
            CHECK((F->trace_to_prime(F->add(x, y))) ==
                  (F->trace_to_prime(x) + F->trace_to_prime(y)) % F->p());
        }
    }
}

TEST_CASE("trace-orthogonal basis invariants") {
    for (auto [p, m] : {std::pair<u32, u32>{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3},
                        {5, 2}, {7, 2}}) {
        auto F = FieldSpec::make(p, m);
        auto tob = find_trace_orthogonal_basis(F);
        REQUIRE(tob.gamma.size() == m);
        for (u32 i = 0; i < m; ++i) {
            for (u32 j = 0; j < m; ++j) {
                const u32 t = F->trace_to_prime(F->mul(tob.gamma[i], tob.gamma[j]));
                if (i != j) {
                    CHECK(t == 0);
                } else {
                    CHECK(t != 0);
                    CHECK((t * tob.omega[i]) % p == 1);  // Omega = M^{-1}
                }
            }
        }
    }
    auto F4 = FieldSpec::make(2, 2);
    auto tob4 = find_trace_orthogonal_basis(F4);
    // self-dual basis {w, w^2} with identity Gram
    CHECK(tob4.gamma == std::vector<u32>{2, 3});
    CHECK(tob4.omega == std::vector<u32>{1, 1});
}

TEST_CASE("subfield embedding GF(2) -> GF(4) and GF(3) -> GF(9)") {
    for (auto [p, m] : {std::pair<u32, u32>{2, 1}, {3, 1}}) {
        auto base = FieldSpec::make(p, m);
        auto ext = FieldSpec::make(p, 2 * m);
        SubfieldEmbedding tower(base, ext);
        std::size_t fixed = 0;
        for (u32 x = 0; x < ext->q(); ++x) {
            if (tower.in_subfield(x)) {
                ++fixed;
                CHECK(tower.embed(tower.retract(x)) == x);
            }
        }
        CHECK(fixed == base->q());
        for (u32 a = 0; a < base->q(); ++a) {
            for (u32 b = 0; b < base->q(); ++b) {
                CHECK(tower.embed(base->mul(a, b)) == ext->mul(tower.embed(a), tower.embed(b)));
                CHECK(tower.embed(base->add(a, b)) == ext->add(tower.embed(a), tower.embed(b)));
            }
        }
        // trace_relative lands in the base field and is Frobenius-fixed
        for (u32 x = 0; x < ext->q(); ++x) {
            const u32 t = tower.trace_relative(x);
            CHECK(tower.embed(t) == ext->add(x, tower.conj(x)));
        }
    }
    auto F4 = FieldSpec::make(2, 2);
    SubfieldEmbedding t4(FieldSpec::make(2, 1), F4);
    CHECK(t4.trace_relative(2) == 1);  // w + w^2 = 1
}

TEST_CASE("normal pair") {
    for (u32 p : {2u, 3u, 5u}) {
        auto base = FieldSpec::make(p, 1);
        auto ext = FieldSpec::make(p, 2);
        SubfieldEmbedding tower(base, ext);
        auto pair = find_normal_pair(tower);
        CHECK(pair.w != 1);
        CHECK(pair.w_q == ext->frobenius(pair.w, 1));
        CHECK(pair.lambda ==
              ext->sub(ext->mul(pair.w_q, pair.w_q), ext->mul(pair.w, pair.w)));
        CHECK(pair.lambda != 0);
        // {w, w^q} independent over F_q: w^q / w outside the subfield
        CHECK(!tower.in_subfield(ext->div(pair.w_q, pair.w)));
    }
    auto F4 = FieldSpec::make(2, 2);
    SubfieldEmbedding t4(FieldSpec::make(2, 1), F4);
    CHECK(find_normal_pair(t4).w == 2);  // w = omega
}
