#include "eaqecc/distance.hpp"

#include <algorithm>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace eaqecc {

namespace {
using u32 = std::uint32_t;

struct MembershipChecker {
    const Matrix* basis;  // RREF
    std::vector<std::size_t> leads;

    explicit MembershipChecker(const Subspace& B) : basis(&B.basis) {
        leads.reserve(B.dim());
        for (std::size_t i = 0; i < B.dim(); ++i) {
            std::size_t lead = 0;
            while (lead < basis->cols && basis->at(i, lead) == 0) ++lead;
            leads.push_back(lead);
        }
    }

    bool contains(std::span<const u32> v, std::vector<u32>& scratch) const {
        const auto& F = *basis->spec;
        scratch.assign(v.begin(), v.end());
        for (std::size_t i = 0; i < basis->rows; ++i) {
            const u32 f = scratch[leads[i]];
            if (!f) continue;
            for (std::size_t j = leads[i]; j < basis->cols; ++j) {
                scratch[j] = F.sub(scratch[j], F.mul(f, basis->at(i, j)));
            }
        }
        return std::all_of(scratch.begin(), scratch.end(), [](u32 x) { return x == 0; });
    }
};

int weight_of(std::span<const u32> v, WeightKind kind, std::size_t half) {
    return weight(v, kind, half);
}

// Reflected mixed-radix Gray walk over q^k messages: exactly one digit
// changes by +-1 per step, so each codeword update is one scalar-row add.
struct GrayWalk {
    u32 q;
    std::vector<u32> digit;
    std::vector<std::size_t> focus;
    std::vector<int> dir;

    explicit GrayWalk(std::size_t k, u32 radix) : q(radix), digit(k, 0), dir(k, 1) {
        focus.resize(k + 1);
        for (std::size_t i = 0; i <= k; ++i) focus[i] = i;
    }

    // advances to the next message; returns the changed digit index and the
    // old/new values, or false when the walk is exhausted
    bool step(std::size_t& idx, u32& oldv, u32& newv) {
        const std::size_t j = focus[0];
        focus[0] = 0;
        if (j == digit.size()) return false;
        oldv = digit[j];
        digit[j] = static_cast<u32>(static_cast<int>(digit[j]) + dir[j]);
        newv = digit[j];
        if (digit[j] == 0 || digit[j] == q - 1) {
            dir[j] = -dir[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
        idx = j;
        return true;
    }
};

struct SearchSetup {
    std::size_t len;
    std::size_t k;
    WeightKind kind;
    std::size_t half;
    const Matrix* rows;  // generator basis of A
    const MembershipChecker* member;
};

// scans all messages with a fixed leading digit; returns the best weight
// found (or len + 1 when none qualifies)
int scan_branch(const SearchSetup& s, u32 lead_value) {
    const auto& F = *s.rows->spec;
    std::vector<u32> word(s.len, 0);
    if (lead_value) {
        for (std::size_t c = 0; c < s.len; ++c) word[c] = F.mul(lead_value, s.rows->at(0, c));
    }
    std::vector<u32> scratch;
    int best = static_cast<int>(s.len) + 1;

    auto consider = [&]() {
        const int w = weight_of(word, s.kind, s.half);
        if (w == 0 || w >= best) return;
        if (!s.member->contains(word, scratch)) best = w;
    };

    consider();
    if (s.k <= 1) return best;

    GrayWalk walk(s.k - 1, F.q());
    std::size_t idx;
    u32 oldv, newv;
    while (walk.step(idx, oldv, newv)) {
        const u32 delta = F.sub(newv, oldv);
        const std::size_t r = idx + 1;  // suffix digit idx maps to generator row idx+1
        for (std::size_t c = 0; c < s.len; ++c) {
            word[c] = F.add(word[c], F.mul(delta, s.rows->at(r, c)));
        }
        consider();
    }
    return best;
}

SearchSetup make_setup(const LinearCode& A, const Subspace& B, WeightKind kind,
                       const MembershipChecker& member, const DistanceOptions& opts) {
    if (B.ambient() != A.length()) throw AmbientMismatch();
    if (kind == WeightKind::Symplectic && A.layout != Layout::Symplectic) {
        throw LayoutMismatch("symplectic weight needs symplectic layout");
    }
    const auto& F = *A.spec();
    // budget check on q^k
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < A.dim(); ++i) {
        if (count > opts.budget / F.q() + 1) {
            throw BudgetExceeded("enumeration of q^" + std::to_string(A.dim()) +
                                 " codewords exceeds the budget; lower n or skip the distance");
        }
        count *= F.q();
    }
    if (count > opts.budget) {
        throw BudgetExceeded("enumeration of q^" + std::to_string(A.dim()) +
                             " codewords exceeds the budget; lower n or skip the distance");
    }
    return SearchSetup{A.length(), A.dim(), kind, A.half, &A.gens.basis, &member};
}

}  // namespace

DistanceOutcome relative_distance_serial(const LinearCode& A, const Subspace& B, WeightKind kind,
                                         const DistanceOptions& opts) {
    MembershipChecker member(B);
    auto setup = make_setup(A, B, kind, member, opts);
    if (B.contains(A.gens)) return DistanceOutcome::infinite();

    int best = static_cast<int>(A.length()) + 1;
    for (u32 v = 0; v < A.spec()->q(); ++v) {
        best = std::min(best, scan_branch(setup, v));
        if (A.dim() == 0) break;
    }
    return DistanceOutcome::finite(best);
}

DistanceOutcome relative_distance(const LinearCode& A, const Subspace& B, WeightKind kind,
                                  const DistanceOptions& opts) {
    if (!opts.parallel) return relative_distance_serial(A, B, kind, opts);
    MembershipChecker member(B);
    auto setup = make_setup(A, B, kind, member, opts);
    if (B.contains(A.gens)) return DistanceOutcome::infinite();
    if (A.dim() == 0) {
        // only the zero word; excluded, but A not in B was ruled out above
        return DistanceOutcome::infinite();
    }

    const u32 q = A.spec()->q();
    int best = static_cast<int>(A.length()) + 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(min : best)
#endif
    for (long long v = 0; v < static_cast<long long>(q); ++v) {
        const int w = scan_branch(setup, static_cast<u32>(v));
        if (w < best) best = w;
    }
    return DistanceOutcome::finite(best);
}

DistanceOutcome min_distance(const LinearCode& A, WeightKind kind, const DistanceOptions& opts) {
    return relative_distance(A, Subspace::zero(A.spec(), A.length()), kind, opts);
}

}  // namespace eaqecc
