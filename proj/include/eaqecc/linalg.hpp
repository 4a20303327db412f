#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "eaqecc/field.hpp"

namespace eaqecc {

/// Dense exact matrix over a FieldSpec, row-major raw element values.
struct Matrix {
    FieldPtr spec;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint32_t> a;

    Matrix() = default;
    Matrix(FieldPtr s, std::size_t r, std::size_t c)
        : spec(std::move(s)), rows(r), cols(c), a(r * c, 0) {}

    std::uint32_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    std::uint32_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    std::span<const std::uint32_t> row(std::size_t i) const {
        return std::span<const std::uint32_t>(a).subspan(i * cols, cols);
    }
    std::span<std::uint32_t> row(std::size_t i) {
        return std::span<std::uint32_t>(a).subspan(i * cols, cols);
    }

    static Matrix identity(FieldPtr s, std::size_t n);
    static Matrix from_rows(FieldPtr s, const std::vector<std::vector<std::uint32_t>>& rows);

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a &&
               (!x.spec || !y.spec || x.spec->same_as(*y.spec));
    }
};

Matrix matmul(const Matrix& A, const Matrix& B);
Matrix transpose(const Matrix& A);
Matrix entrywise_frobenius(const Matrix& A, std::uint32_t s);
Matrix add(const Matrix& A, const Matrix& B);
Matrix subtract(const Matrix& A, const Matrix& B);
Matrix stack_rows(const Matrix& A, const Matrix& B);

struct RrefResult {
    Matrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Gauss-Jordan canonical form: unit pivots, zeros above and below,
/// pivot columns strictly increasing. Deterministic.
RrefResult rref(const Matrix& A);

std::size_t rank(const Matrix& A);

/// Row space in canonical form. Two Subspaces are equal iff their basis
/// matrices are identical.
struct Subspace {
    Matrix basis;  // RREF, no zero rows

    std::size_t ambient() const { return basis.cols; }
    std::size_t dim() const { return basis.rows; }
    const FieldPtr& spec() const { return basis.spec; }

    static Subspace from_rows(const Matrix& rows);
    static Subspace zero(FieldPtr s, std::size_t ambient);
    static Subspace full(FieldPtr s, std::size_t ambient);

    bool contains(std::span<const std::uint32_t> v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& x, const Subspace& y) {
        return x.basis == y.basis;
    }
};

/// Right null space {v : v A^T = 0}; dim = cols - rank.
Subspace kernel(const Matrix& A);

/// Kernel-of-stacked-duals intersection; AmbientMismatch on different lengths.
Subspace intersect(const Subspace& U, const Subspace& V);

Subspace subspace_sum(const Subspace& U, const Subspace& V);

}  // namespace eaqecc
