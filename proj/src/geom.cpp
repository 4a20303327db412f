#include "eaqecc/geom.hpp"

#include <limits>
#include <vector>

namespace eaqecc {

namespace {
using u32 = std::uint32_t;

u32 gram_entry(const Matrix& V, GeomMode mode, std::size_t i, std::size_t j) {
    const DualityMode m = mode == GeomMode::Euclidean ? DualityMode::Euclidean
                                                      : DualityMode::Hermitian;
    return form(m, V.spec, Layout::Plain, V.row(i), V.row(j));
}

}  // namespace

bool GramProfile::has_elliptic() const {
    return !blocks.empty() && blocks.back().kind == GeomBlockKind::Elliptic;
}

std::size_t GramProfile::elliptic_second_index() const {
    if (!has_elliptic()) return std::numeric_limits<std::size_t>::max();
    return blocks.back().start + 1;
}

GramProfile validate_decomposition(const Matrix& V, GeomMode mode) {
    if (V.rows != V.cols) throw NotADecomposition("basis matrix is not square");
    if (V.rows == 0) throw NotADecomposition("empty basis");
    if (mode == GeomMode::Hermitian && V.spec->m() % 2 != 0) throw NoSubfieldRegistered();
    if (rank(V) != V.rows) throw NotADecomposition("basis rows are not independent");

    const std::size_t n = V.rows;
    Matrix G(V.spec, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) G.at(i, j) = gram_entry(V, mode, i, j);
    }

    GramProfile profile;
    profile.basis = V;
    profile.mode = mode;

    // parse contiguous blocks: hyperbolic planes, then lines, then at most
    // one trailing elliptic plane
    int phase = 0;  // 0 = hyperbolic, 1 = lines
    std::size_t i = 0;
    while (i < n) {
        if (G.at(i, i) == 0) {
            if (i + 1 == n) throw NotADecomposition("isotropic generator without a partner");
            const u32 off = G.at(i, i + 1);
            const u32 off_t = G.at(i + 1, i);
            const u32 corner = G.at(i + 1, i + 1);
            if (off != 1 || off_t != 1) throw NotADecomposition("pair block is not unimodular");
            if (corner == 0) {
                if (phase != 0) throw NotADecomposition("hyperbolic block after a line block");
                profile.blocks.push_back({GeomBlockKind::Hyperbolic, i, 0});
            } else if (corner == 1) {
                if (i + 2 != n) throw NotADecomposition("elliptic block is not trailing");
                if (V.spec->p() != 2) throw EllipticOutsideChar2();
                profile.blocks.push_back({GeomBlockKind::Elliptic, i, 0});
            } else {
                throw NotADecomposition("pair block matches neither plane type");
            }
            i += 2;
        } else {
            phase = 1;
            profile.blocks.push_back({GeomBlockKind::NonSingular, i, G.at(i, i)});
            i += 1;
        }
    }

    // everything off the recognized blocks must vanish
    for (const auto& b : profile.blocks) {
        for (std::size_t r = b.start; r < b.start + b.size(); ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (c >= b.start && c < b.start + b.size()) continue;
                if (G.at(r, c) != 0) throw NotADecomposition("Gram matrix has off-block entries");
            }
        }
    }
    return profile;
}

namespace {

enum class Role { HyperbolicFirst, HyperbolicSecond, Line, EllipticFirst, EllipticSecond };

Role role_of(const GramProfile& profile, std::size_t idx0) {
    for (const auto& b : profile.blocks) {
        if (idx0 < b.start || idx0 >= b.start + b.size()) continue;
        switch (b.kind) {
            case GeomBlockKind::Hyperbolic:
                return idx0 == b.start ? Role::HyperbolicFirst : Role::HyperbolicSecond;
            case GeomBlockKind::NonSingular:
                return Role::Line;
            case GeomBlockKind::Elliptic:
                return idx0 == b.start ? Role::EllipticFirst : Role::EllipticSecond;
        }
    }
    throw RangeViolation("index outside the decomposition");
}

void check_index_set(const GramProfile& profile, const IndexSet& I) {
    for (std::size_t i : I) {
        if (i < 1 || i > profile.n()) throw RangeViolation("index outside 1..n");
        if (role_of(profile, i - 1) == Role::EllipticSecond) {
            throw UndefinedPrime("the second elliptic generator has no paired index");
        }
    }
}

}  // namespace

LinearCode code_from_indices(const GramProfile& profile, const IndexSet& I) {
    // any subset of basis rows spans a code; the elliptic-second restriction
    // only applies where a paired index i' is needed
    for (std::size_t i : I) {
        if (i < 1 || i > profile.n()) throw RangeViolation("index outside 1..n");
    }
    std::vector<std::vector<u32>> rows;
    rows.reserve(I.size());
    for (std::size_t i : I) {
        auto r = profile.basis.row(i - 1);
        rows.emplace_back(r.begin(), r.end());
    }
    Subspace s = rows.empty() ? Subspace::zero(profile.basis.spec, profile.n())
                              : Subspace::from_rows(Matrix::from_rows(profile.basis.spec, rows));
    return LinearCode::plain(std::move(s));
}

IndexSet index_dual(const GramProfile& profile, const IndexSet& I) {
    check_index_set(profile, I);
    IndexSet primed;
    for (std::size_t i : I) {
        switch (role_of(profile, i - 1)) {
            case Role::HyperbolicFirst:
            case Role::EllipticFirst:
                primed.insert(i + 1);
                break;
            case Role::HyperbolicSecond:
                primed.insert(i - 1);
                break;
            case Role::Line:
                primed.insert(i);
                break;
            case Role::EllipticSecond:
                throw UndefinedPrime("the second elliptic generator has no paired index");
        }
    }
    IndexSet dual_set;
    for (std::size_t i = 1; i <= profile.n(); ++i) {
        if (!primed.count(i)) dual_set.insert(i);
    }
    return dual_set;
}

RadicalSplit radical_split(const GramProfile& profile, const IndexSet& I) {
    check_index_set(profile, I);
    RadicalSplit split;
    for (std::size_t i : I) {
        bool radical = false;
        switch (role_of(profile, i - 1)) {
            case Role::HyperbolicFirst:
                radical = !I.count(i + 1);
                break;
            case Role::HyperbolicSecond:
                radical = !I.count(i - 1);
                break;
            case Role::EllipticFirst:
                radical = true;
                break;
            default:
                break;
        }
        (radical ? split.radical : split.left).insert(i);
    }
    return split;
}

long c_from_indices(const GramProfile& profile, const IndexSet& I) {
    RadicalSplit split = radical_split(profile, I);
    const long c = static_cast<long>(split.left.size());
    // the index calculus must reproduce the linear-algebra hull codimension
    LinearCode C = code_from_indices(profile, I);
    const long by_hull =
        static_cast<long>(C.dim()) - static_cast<long>(hull(C, geom_duality(profile)).dim());
    if (c != by_hull) {
        throw InternalInconsistency("index calculus disagrees with the hull dimension");
    }
    return c;
}

DualityMode geom_duality(const GramProfile& profile) {
    return profile.mode == GeomMode::Euclidean ? DualityMode::Euclidean : DualityMode::Hermitian;
}

}  // namespace eaqecc
