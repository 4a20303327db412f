#pragma once

// shared test utilities: random code generators and brute-force oracles kept
// deliberately naive so they cannot share bugs with the library routines

#include <random>
#include <vector>

#include "eaqecc/code.hpp"
#include "eaqecc/distance.hpp"

namespace testutil {

using namespace eaqecc;
using u32 = std::uint32_t;

inline Subspace random_subspace(const FieldPtr& spec, std::size_t len, std::size_t max_rows,
                                std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> rdist(0, max_rows);
    std::uniform_int_distribution<u32> edist(0, spec->q() - 1);
    Matrix M(spec, rdist(rng), len);
    for (auto& v : M.a) v = edist(rng);
    return Subspace::from_rows(M);
}

inline LinearCode random_symplectic(const FieldPtr& spec, std::size_t half, std::size_t max_rows,
                                    std::mt19937& rng) {
    return LinearCode::symplectic(random_subspace(spec, 2 * half, max_rows, rng), half);
}

inline LinearCode random_plain(const FieldPtr& spec, std::size_t len, std::size_t max_rows,
                               std::mt19937& rng) {
    return LinearCode::plain(random_subspace(spec, len, max_rows, rng));
}

// odometer step through F_q^len; returns false after wrapping back to zero
inline bool next_vector(std::vector<u32>& v, u32 q) {
    for (auto& x : v) {
        if (++x < q) return true;
        x = 0;
    }
    return false;
}

// dual by checking every ambient vector against every codeword; the
// trace-valued forms are linear only over a subfield, so checking the
// generators alone would accept too much
inline Subspace enum_dual(const LinearCode& C, DualityMode mode) {
    const auto& F = *C.spec();
    std::vector<std::vector<u32>> words;
    std::vector<u32> coeff(C.dim(), 0);
    do {
        std::vector<u32> word(C.length(), 0);
        for (std::size_t i = 0; i < C.dim(); ++i) {
            for (std::size_t j = 0; j < C.length(); ++j) {
                word[j] = F.add(word[j], F.mul(coeff[i], C.gens.basis.at(i, j)));
            }
        }
        words.push_back(std::move(word));
    } while (next_vector(coeff, F.q()));
    std::vector<std::vector<u32>> rows;
    std::vector<u32> v(C.length(), 0);
    do {
        bool ortho = true;
        for (const auto& w : words) {
            if (form(mode, C.spec(), C.layout, w, v) != 0) {
                ortho = false;
                break;
            }
        }
        if (ortho) rows.push_back(v);
    } while (next_vector(v, F.q()));
    return Subspace::from_rows(Matrix::from_rows(C.spec(), rows));
}

// minimum weight over span(A) \ B by plain coefficient enumeration; -1 when
// the difference is empty
inline int brute_distance(const LinearCode& A, const Subspace& B, WeightKind kind) {
    const auto& F = *A.spec();
    std::vector<u32> coeff(A.dim(), 0);
    int best = -1;
    while (next_vector(coeff, F.q())) {
        std::vector<u32> word(A.length(), 0);
        for (std::size_t i = 0; i < A.dim(); ++i) {
            for (std::size_t j = 0; j < A.length(); ++j) {
                word[j] = F.add(word[j], F.mul(coeff[i], A.gens.basis.at(i, j)));
            }
        }
        if (B.contains(word)) continue;
        const int w = weight(word, kind, A.half);
        if (best < 0 || w < best) best = w;
    }
    return best;
}

inline bool same_space(const Subspace& a, const Subspace& b) {
    return a.ambient() == b.ambient() && a.dim() == b.dim() && a.contains(b);
}

}  // namespace testutil
