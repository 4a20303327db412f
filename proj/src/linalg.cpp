#include "eaqecc/linalg.hpp"

#include <algorithm>

namespace eaqecc {

namespace {

void check_same_spec(const Matrix& A, const Matrix& B) {
    if (!A.spec || !B.spec || !A.spec->same_as(*B.spec)) {
        throw SpecMismatch("matrices over different fields");
    }
}

}  // namespace

Matrix Matrix::identity(FieldPtr s, std::size_t n) {
    Matrix m(std::move(s), n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(FieldPtr s, const std::vector<std::vector<std::uint32_t>>& rows) {
    if (rows.empty()) return Matrix(std::move(s), 0, 0);
    Matrix m(std::move(s), rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols) throw ShapeMismatch("ragged row list");
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

Matrix matmul(const Matrix& A, const Matrix& B) {
    check_same_spec(A, B);
    if (A.cols != B.rows) throw ShapeMismatch("matmul: inner dimensions disagree");
    const auto& F = *A.spec;
    Matrix C(A.spec, A.rows, B.cols);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t k = 0; k < A.cols; ++k) {
            const std::uint32_t aik = A.at(i, k);
            if (!aik) continue;
            for (std::size_t j = 0; j < B.cols; ++j) {
                C.at(i, j) = F.add(C.at(i, j), F.mul(aik, B.at(k, j)));
            }
        }
    }
    return C;
}

Matrix transpose(const Matrix& A) {
    Matrix T(A.spec, A.cols, A.rows);
    for (std::size_t i = 0; i < A.rows; ++i) {
        for (std::size_t j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
    }
    return T;
}

Matrix entrywise_frobenius(const Matrix& A, std::uint32_t s) {
    Matrix B = A;
    for (auto& v : B.a) v = A.spec->frobenius(v, s);
    return B;
}

Matrix add(const Matrix& A, const Matrix& B) {
    check_same_spec(A, B);
    if (A.rows != B.rows || A.cols != B.cols) throw ShapeMismatch("add: shapes disagree");
    Matrix C = A;
    for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = A.spec->add(A.a[i], B.a[i]);
    return C;
}

Matrix subtract(const Matrix& A, const Matrix& B) {
    check_same_spec(A, B);
    if (A.rows != B.rows || A.cols != B.cols) throw ShapeMismatch("subtract: shapes disagree");
    Matrix C = A;
    for (std::size_t i = 0; i < C.a.size(); ++i) C.a[i] = A.spec->sub(A.a[i], B.a[i]);
    return C;
}

Matrix stack_rows(const Matrix& A, const Matrix& B) {
    if (A.rows == 0) return B;
    if (B.rows == 0) return A;
    check_same_spec(A, B);
    if (A.cols != B.cols) throw ShapeMismatch("stack_rows: widths disagree");
    Matrix C(A.spec, A.rows + B.rows, A.cols);
    std::copy(A.a.begin(), A.a.end(), C.a.begin());
    std::copy(B.a.begin(), B.a.end(), C.a.begin() + static_cast<long>(A.a.size()));
    return C;
}

RrefResult rref(const Matrix& A) {
    RrefResult res;
    res.reduced = A;
    Matrix& M = res.reduced;
    const auto& F = *A.spec;
    std::size_t r = 0;
    for (std::size_t c = 0; c < M.cols && r < M.rows; ++c) {
        std::size_t piv = r;
        while (piv < M.rows && M.at(piv, c) == 0) ++piv;
        if (piv == M.rows) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(r, j));
        }
        const std::uint32_t s = F.inv(M.at(r, c));
        if (s != 1) {
            for (std::size_t j = c; j < M.cols; ++j) M.at(r, j) = F.mul(M.at(r, j), s);
        }
        for (std::size_t i = 0; i < M.rows; ++i) {
            if (i == r) continue;
            const std::uint32_t f = M.at(i, c);
            if (!f) continue;
            for (std::size_t j = c; j < M.cols; ++j) {
                M.at(i, j) = F.sub(M.at(i, j), F.mul(f, M.at(r, j)));
            }
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

std::size_t rank(const Matrix& A) { return rref(A).rank; }

Subspace Subspace::from_rows(const Matrix& rows) {
    auto r = rref(rows);
    Subspace s;
    s.basis = Matrix(rows.spec, r.rank, rows.cols);
    std::copy(r.reduced.a.begin(), r.reduced.a.begin() + static_cast<long>(r.rank * rows.cols),
              s.basis.a.begin());
    return s;
}

Subspace Subspace::zero(FieldPtr s, std::size_t ambient) {
    Subspace sub;
    sub.basis = Matrix(std::move(s), 0, ambient);
    return sub;
}

Subspace Subspace::full(FieldPtr s, std::size_t ambient) {
    Subspace sub;
    sub.basis = Matrix::identity(std::move(s), ambient);
    return sub;
}

bool Subspace::contains(std::span<const std::uint32_t> v) const {
    if (v.size() != ambient()) throw AmbientMismatch();
    const auto& F = *spec();
    std::vector<std::uint32_t> w(v.begin(), v.end());
    // reduce against the RREF basis; pivot of row i is its leading column
    for (std::size_t i = 0; i < basis.rows; ++i) {
        std::size_t lead = 0;
        while (lead < basis.cols && basis.at(i, lead) == 0) ++lead;
        if (lead == basis.cols) continue;
        const std::uint32_t f = w[lead];
        if (!f) continue;
        for (std::size_t j = lead; j < basis.cols; ++j) {
            w[j] = F.sub(w[j], F.mul(f, basis.at(i, j)));
        }
    }
    return std::all_of(w.begin(), w.end(), [](std::uint32_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient() != ambient()) throw AmbientMismatch();
    for (std::size_t i = 0; i < other.basis.rows; ++i) {
        if (!contains(other.basis.row(i))) return false;
    }
    return true;
}

Subspace kernel(const Matrix& A) {
    auto r = rref(A);
    std::vector<bool> is_pivot(A.cols, false);
    for (auto c : r.pivots) is_pivot[c] = true;
    const auto& F = *A.spec;

    Matrix basis(A.spec, A.cols - r.rank, A.cols);
    std::size_t row = 0;
    for (std::size_t f = 0; f < A.cols; ++f) {
        if (is_pivot[f]) continue;
        basis.at(row, f) = 1;
        for (std::size_t i = 0; i < r.rank; ++i) {
            const std::uint32_t e = r.reduced.at(i, f);
            if (e) basis.at(row, r.pivots[i]) = F.neg(e);
        }
        ++row;
    }
    return Subspace::from_rows(basis);
}

Subspace intersect(const Subspace& U, const Subspace& V) {
    if (U.ambient() != V.ambient()) throw AmbientMismatch();
    // U cap V = kernel of the stacked Euclidean duals
    Subspace Ud = kernel(U.basis);
    Subspace Vd = kernel(V.basis);
    return kernel(stack_rows(Ud.basis, Vd.basis));
}

Subspace subspace_sum(const Subspace& U, const Subspace& V) {
    if (U.ambient() != V.ambient()) throw AmbientMismatch();
    return Subspace::from_rows(stack_rows(U.basis, V.basis));
}

}  // namespace eaqecc
