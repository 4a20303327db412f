#include "eaqecc/puncture.hpp"

#include <vector>

namespace eaqecc {

namespace {
using u32 = std::uint32_t;

std::size_t coordinate_count(const LinearCode& C, PunctureFlavor flavor) {
    if (flavor == PunctureFlavor::SymplecticPairs) {
        if (C.layout != Layout::Symplectic) {
            throw LayoutMismatch("pair puncturing needs symplectic layout");
        }
        return C.half;
    }
    if (C.layout != Layout::Plain) throw LayoutMismatch("plain puncturing needs plain layout");
    return C.length();
}

void check_c(std::size_t n, long c) {
    if (c <= 0 || static_cast<std::size_t>(c) >= n) {
        throw BadRange("c must satisfy 0 < c < n");
    }
}

std::vector<u32> project_row(std::span<const u32> g, std::size_t n, std::size_t keep,
                             PunctureFlavor flavor) {
    if (flavor == PunctureFlavor::Plain) return std::vector<u32>(g.begin(), g.begin() + keep);
    std::vector<u32> r(2 * keep);
    for (std::size_t j = 0; j < keep; ++j) {
        r[j] = g[j];
        r[keep + j] = g[n + j];
    }
    return r;
}

LinearCode rows_to_code(const LinearCode& like, std::size_t keep, PunctureFlavor flavor,
                        std::vector<std::vector<u32>> rows) {
    const std::size_t len = flavor == PunctureFlavor::Plain ? keep : 2 * keep;
    Subspace s = rows.empty() ? Subspace::zero(like.spec(), len)
                              : Subspace::from_rows(Matrix::from_rows(like.spec(), rows));
    if (flavor == PunctureFlavor::Plain) return LinearCode::plain(std::move(s));
    return LinearCode::symplectic(std::move(s), keep);
}

bool same_subspace(const Subspace& a, const Subspace& b) {
    return a.ambient() == b.ambient() && a.dim() == b.dim() && a.contains(b);
}

}  // namespace

LinearCode puncture(const LinearCode& C, long c, PunctureFlavor flavor) {
    const std::size_t n = coordinate_count(C, flavor);
    check_c(n, c);
    const std::size_t keep = n - static_cast<std::size_t>(c);
    std::vector<std::vector<u32>> rows;
    rows.reserve(C.dim());
    for (std::size_t i = 0; i < C.dim(); ++i) {
        rows.push_back(project_row(C.gens.basis.row(i), n, keep, flavor));
    }
    return rows_to_code(C, keep, flavor, std::move(rows));
}

LinearCode shorten(const LinearCode& C, long c, PunctureFlavor flavor) {
    const std::size_t n = coordinate_count(C, flavor);
    check_c(n, c);
    const std::size_t keep = n - static_cast<std::size_t>(c);
    const auto& F = *C.spec();

    // removed-coordinate columns of the generator basis; codeword x.B
    // vanishes there iff x kills all of them
    std::vector<std::size_t> removed;
    for (std::size_t j = keep; j < n; ++j) {
        removed.push_back(j);
        if (flavor == PunctureFlavor::SymplecticPairs) removed.push_back(n + j);
    }
    Matrix cols(C.spec(), removed.size(), C.dim());
    for (std::size_t r = 0; r < removed.size(); ++r) {
        for (std::size_t i = 0; i < C.dim(); ++i) {
            cols.at(r, i) = C.gens.basis.at(i, removed[r]);
        }
    }
    Subspace coeff = kernel(cols);

    std::vector<std::vector<u32>> rows;
    rows.reserve(coeff.dim());
    for (std::size_t i = 0; i < coeff.dim(); ++i) {
        std::vector<u32> word(C.length(), 0);
        for (std::size_t r = 0; r < C.dim(); ++r) {
            const u32 x = coeff.basis.at(i, r);
            if (!x) continue;
            for (std::size_t j = 0; j < C.length(); ++j) {
                word[j] = F.add(word[j], F.mul(x, C.gens.basis.at(r, j)));
            }
        }
        rows.push_back(project_row(word, n, keep, flavor));
    }
    return rows_to_code(C, keep, flavor, std::move(rows));
}

DualityIdentity duality_identity_check(const LinearCode& C, long c) {
    DualityIdentity out;
    LinearCode D = dual(C, DualityMode::Symplectic);
    LinearCode P = puncture(C, c, PunctureFlavor::SymplecticPairs);
    LinearCode Pd = dual(P, DualityMode::Symplectic);
    LinearCode Sd = shorten(D, c, PunctureFlavor::SymplecticPairs);
    out.punctured_dual_is_shortened_dual = same_subspace(Pd.gens, Sd.gens);

    out.self_orthogonal_input = D.gens.contains(C.gens);
    if (out.self_orthogonal_input) {
        Subspace hull_p = intersect(P.gens, Pd.gens);
        LinearCode Sc = shorten(C, c, PunctureFlavor::SymplecticPairs);
        out.hull_of_punctured_is_shortened = same_subspace(hull_p, Sc.gens);
    }
    return out;
}

namespace {

// exact minimum Hamming weight of C \ {0}; empty when C = {0}
DistanceOutcome min_hamming(const LinearCode& C, const DistanceOptions& opts) {
    return min_distance(C, WeightKind::Hamming, opts);
}

void attach_bound(EAParams& P, const LinearCode& A, const Subspace& B, WeightKind kind,
                  const LinearCode& C, DistancePolicy policy, const DistanceOptions& opts) {
    P.d_is_bound = true;
    if (policy == DistancePolicy::Skip) return;
    DistanceOutcome out = relative_distance(A, B, kind, opts);
    if (!out.empty) {
        P.d = out.value;
        return;
    }
    P.d_edge_convention = true;
    DistanceOutcome own = min_distance(C, kind, opts);
    if (!own.empty) P.d = own.value;
}

}  // namespace

PuncturedResult ea_from_punctured_symplectic(const LinearCode& C, long c, DistancePolicy policy,
                                             const DistanceOptions& opts) {
    if (C.layout != Layout::Symplectic) throw LayoutMismatch("needs symplectic layout");
    const std::size_t n = C.half;
    check_c(n, c);

    LinearCode D = dual(C, DualityMode::Symplectic);
    if (!D.gens.contains(C.gens)) throw PreconditionViolated("C is not symplectic self-orthogonal");
    DistanceOutcome dh = min_hamming(C, opts);
    if (dh.empty || 2 * c > dh.value - 1) {
        throw PreconditionViolated("2c <= d_H(C \\ {0}) - 1 fails");
    }

    LinearCode P = puncture(C, c, PunctureFlavor::SymplecticPairs);
    PuncturedResult res;
    if (P.dim() != C.dim()) {
        throw DimensionClaimFailed("dim P(C) != dim C", static_cast<long>(C.dim()),
                                   static_cast<long>(P.dim()));
    }
    res.checks["dim_punctured_equals_dim_C"] = true;
    const long hull_dim = static_cast<long>(hull(P, DualityMode::Symplectic).dim());
    const long expected_hull = static_cast<long>(C.dim()) - 2 * c;
    if (hull_dim != expected_hull) {
        throw DimensionClaimFailed("dim hull(P(C)) != dim C - 2c", expected_hull, hull_dim);
    }
    res.checks["hull_dim_equals_dim_C_minus_2c"] = true;

    EAParams& params = res.params;
    params.q = C.spec()->q();
    params.n = static_cast<long>(n) - c;
    params.c = c;
    params.logical = static_cast<long>(n) - static_cast<long>(C.dim()) + c;
    params.mode = "punctured_symplectic";
    attach_bound(params, D, C.gens, WeightKind::Symplectic, C, policy, opts);
    return res;
}

PuncturedResult ea_from_punctured_hermitian(const LinearCode& C, long c, DistancePolicy policy,
                                            const DistanceOptions& opts) {
    if (C.layout != Layout::Plain) throw LayoutMismatch("needs plain layout");
    const auto& F = *C.spec();
    if (F.m() % 2 != 0) throw NoSubfieldRegistered();
    const std::size_t n = C.length();
    check_c(n, c);

    LinearCode D = dual(C, DualityMode::Hermitian);
    if (!D.gens.contains(C.gens)) throw PreconditionViolated("C is not Hermitian self-orthogonal");
    DistanceOutcome dh = min_hamming(C, opts);
    if (dh.empty || c > dh.value - 1) {
        throw PreconditionViolated("c <= d_H(C \\ {0}) - 1 fails");
    }

    LinearCode P = puncture(C, c, PunctureFlavor::Plain);
    PuncturedResult res;
    if (P.dim() != C.dim()) {
        throw DimensionClaimFailed("dim P_h(C) != dim C", static_cast<long>(C.dim()),
                                   static_cast<long>(P.dim()));
    }
    res.checks["dim_punctured_equals_dim_C"] = true;
    const long hull_dim = static_cast<long>(hull(P, DualityMode::Hermitian).dim());
    const long expected_hull = static_cast<long>(C.dim()) - c;
    if (hull_dim != expected_hull) {
        throw DimensionClaimFailed("dim hull(P_h(C)) != dim C - c", expected_hull, hull_dim);
    }
    res.checks["hull_dim_equals_dim_C_minus_c"] = true;

    EAParams& params = res.params;
    std::uint64_t q_sub = 1;
    for (u32 i = 0; i < F.m() / 2; ++i) q_sub *= F.p();
    params.q = q_sub;
    params.n = static_cast<long>(n) - c;
    params.c = c;
    params.logical = static_cast<long>(n) - 2 * static_cast<long>(C.dim()) + c;
    params.mode = "punctured_hermitian";
    attach_bound(params, D, C.gens, WeightKind::Hamming, C, policy, opts);
    return res;
}

PuncturedResult ea_from_punctured_css(const LinearCode& C1, const LinearCode& C2, long c,
                                      DistancePolicy policy, const DistanceOptions& opts) {
    if (C1.layout != Layout::Plain || C2.layout != Layout::Plain) {
        throw LayoutMismatch("needs plain layout");
    }
    if (!C1.spec()->same_as(*C2.spec())) throw SpecMismatch("codes over different fields");
    if (C1.length() != C2.length()) throw ShapeMismatch("codes of different lengths");
    const std::size_t n = C1.length();
    check_c(n, c);
    if (!C1.gens.contains(C2.gens)) throw NotNested();

    LinearCode D1 = dual(C1, DualityMode::Euclidean);
    DistanceOutcome d2 = min_hamming(C2, opts);
    DistanceOutcome dd1 = min_hamming(D1, opts);
    if (d2.empty || dd1.empty || c > std::min(d2.value, dd1.value) - 1) {
        throw PreconditionViolated("c <= min{d_H(C2), d_H(C1^perp)} - 1 fails");
    }

    LinearCode P2 = puncture(C2, c, PunctureFlavor::Plain);
    LinearCode PD1 = puncture(D1, c, PunctureFlavor::Plain);
    PuncturedResult res;
    if (P2.dim() != C2.dim()) {
        throw DimensionClaimFailed("dim P(C2) != dim C2", static_cast<long>(C2.dim()),
                                   static_cast<long>(P2.dim()));
    }
    res.checks["dim_punctured_C2_preserved"] = true;
    if (PD1.dim() != D1.dim()) {
        throw DimensionClaimFailed("dim P(C1^perp) != dim C1^perp", static_cast<long>(D1.dim()),
                                   static_cast<long>(PD1.dim()));
    }
    res.checks["dim_punctured_C1_dual_preserved"] = true;

    // assemble the stabilizer P(C2) x P(C1^perp) in symplectic layout and
    // re-derive c through the rank/hull machinery
    const std::size_t keep = n - static_cast<std::size_t>(c);
    std::vector<std::vector<u32>> rows;
    for (std::size_t i = 0; i < P2.dim(); ++i) {
        std::vector<u32> r(2 * keep, 0);
        auto g = P2.gens.basis.row(i);
        std::copy(g.begin(), g.end(), r.begin());
        rows.push_back(std::move(r));
    }
    for (std::size_t i = 0; i < PD1.dim(); ++i) {
        std::vector<u32> r(2 * keep, 0);
        auto g = PD1.gens.basis.row(i);
        std::copy(g.begin(), g.end(), r.begin() + static_cast<long>(keep));
        rows.push_back(std::move(r));
    }
    Subspace s = rows.empty() ? Subspace::zero(C1.spec(), 2 * keep)
                              : Subspace::from_rows(Matrix::from_rows(C1.spec(), rows));
    LinearCode S = LinearCode::symplectic(std::move(s), keep);
    const long c_check = c_symplectic(S);
    if (c_check != c) {
        throw DimensionClaimFailed("stabilizer entanglement count != c", c, c_check);
    }
    res.checks["stabilizer_c_matches"] = true;

    EAParams& params = res.params;
    params.q = C1.spec()->q();
    params.n = static_cast<long>(keep);
    params.c = c;
    params.logical = static_cast<long>(C1.dim()) - static_cast<long>(C2.dim()) + c;
    params.mode = "punctured_css";
    params.d_is_bound = true;
    if (policy == DistancePolicy::Compute) {
        LinearCode D2 = dual(C2, DualityMode::Euclidean);
        std::optional<long> best;
        bool edge = false;
        auto side = [&](const LinearCode& A, const Subspace& B) {
            DistanceOutcome out = relative_distance(A, B, WeightKind::Hamming, opts);
            if (out.empty) {
                edge = true;
                out = min_hamming(A, opts);
                if (out.empty) return;
            }
            if (!best || out.value < *best) best = out.value;
        };
        side(C1, C2.gens);
        side(D2, D1.gens);
        params.d = best;
        params.d_edge_convention = edge && best.has_value();
    }
    return res;
}

}  // namespace eaqecc
