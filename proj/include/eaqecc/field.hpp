#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "eaqecc/errors.hpp"

namespace eaqecc {

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

/// Exact arithmetic in GF(p^m). Elements are canonical integers in [0, q):
/// the base-p digits of a value, constant term first, are the coefficients
/// of the residue polynomial modulo the (monic, irreducible) defining modulus.
///
/// Immutable after construction; all operations are pure and safe to share
/// across threads. Multiplication uses log/antilog tables for q <= 2^16 and
/// schoolbook polynomial reduction above.
class FieldSpec {
public:
    /// Builds GF(p^m). When no modulus is given, the Conway polynomial
    /// default is used (available for p <= 13, m <= 6). The modulus is
    /// verified monic and irreducible; p is checked prime; q must fit
    /// in 31 bits.
    static FieldPtr make(std::uint32_t p, std::uint32_t m,
                         std::optional<std::uint64_t> poly_encoded = std::nullopt);

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }

    /// Modulus coefficients over F_p, constant term first, length m+1, monic.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    std::uint64_t modulus_encoded() const;

    bool same_as(const FieldSpec& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

    // Raw-value arithmetic. Values must lie in [0, q).
    std::uint32_t add(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t sub(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t neg(std::uint32_t x) const;
    std::uint32_t mul(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t inv(std::uint32_t x) const;
    std::uint32_t div(std::uint32_t x, std::uint32_t y) const;
    std::uint32_t pow(std::uint32_t x, long long e) const;

    /// x^(p^s). s is reduced modulo m, so frobenius(x, m) is the identity.
    std::uint32_t frobenius(std::uint32_t x, std::uint32_t s) const;

    /// tr_{q/p}(x) = x + x^p + ... + x^(p^(m-1)), a prime-field scalar.
    std::uint32_t trace_to_prime(std::uint32_t x) const;

    bool has_tables() const { return !log_.empty(); }

private:
    FieldSpec() = default;

    std::uint32_t p_ = 0;
    std::uint32_t m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;

    // log/antilog tables (q <= 2^16); log_[0] unused.
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> exp_;

    std::uint32_t mul_schoolbook(std::uint32_t x, std::uint32_t y) const;
    void build_tables();
};

/// An element together with its owning spec. Binary operations require
/// identical specs. This is the API-level carrier; hot loops work on raw
/// values through FieldSpec directly.
struct FieldElement {
    std::uint32_t value = 0;
    FieldPtr spec;

    FieldElement() = default;
    FieldElement(std::uint32_t v, FieldPtr s) : value(v), spec(std::move(s)) {}

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.spec->add(a.value, b.value), a.spec};
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.spec->sub(a.value, b.value), a.spec};
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.spec->mul(a.value, b.value), a.spec};
    }
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return {a.spec->div(a.value, b.value), a.spec};
    }
    FieldElement operator-() const { return {spec->neg(value), spec}; }
    FieldElement pow(long long e) const { return {spec->pow(value, e), spec}; }
    FieldElement frobenius(std::uint32_t s) const { return {spec->frobenius(value, s), spec}; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        check(a, b);
        return a.value == b.value;
    }

private:
    static void check(const FieldElement& a, const FieldElement& b) {
        if (!a.spec || !b.spec || !a.spec->same_as(*b.spec)) throw SpecMismatch();
    }
};

/// Basis B = {gamma_1, ..., gamma_m} of F_q over F_p whose trace Gram matrix
/// M = (tr(gamma_i gamma_j)) is diagonal and invertible; omega is the
/// diagonal of M^{-1}.
struct TraceOrthogonalBasis {
    FieldPtr spec;
    std::vector<std::uint32_t> gamma;
    std::vector<std::uint32_t> omega;  // prime-field scalars, all nonzero
};

/// Deterministic for a fixed spec. For p = 2 the result is self-dual
/// (M = identity); for odd p the trace form is diagonalized from the
/// power basis.
TraceOrthogonalBasis find_trace_orthogonal_basis(const FieldPtr& spec);

/// Embedding of GF(q) into GF(q^2), computed from the smallest root of the
/// base modulus inside the extension. Required by every operation that works
/// over a quadratic extension with a registered subfield.
class SubfieldEmbedding {
public:
    SubfieldEmbedding(FieldPtr base, FieldPtr ext);

    const FieldPtr& base() const { return base_; }
    const FieldPtr& ext() const { return ext_; }

    std::uint32_t embed(std::uint32_t base_value) const;
    bool in_subfield(std::uint32_t ext_value) const;
    /// Inverse of embed; throws InvariantViolation if the value is outside
    /// the subfield image.
    std::uint32_t retract(std::uint32_t ext_value) const;

    /// x^q, the conjugation of the quadratic extension.
    std::uint32_t conj(std::uint32_t x) const { return ext_->frobenius(x, base_->m()); }

    /// tr_{q^2/q}(x) = x + x^q, returned as a base-field value.
    std::uint32_t trace_relative(std::uint32_t x) const;

private:
    FieldPtr base_;
    FieldPtr ext_;
    std::uint32_t root_ = 0;  // image of the base-field generator
    // F_p-linear retraction data: for each ext power basis coordinate, the
    // base-field coordinates (empty row => coordinate outside the image is
    // detected via in_subfield).
    std::vector<std::vector<std::uint32_t>> retract_matrix_;  // m_base x m_ext over F_p
    std::vector<std::vector<std::uint32_t>> embed_matrix_;    // m_ext x m_base over F_p
};

/// Normal pair {w, w^q} of GF(q^2) over GF(q): linearly independent over
/// F_q with lambda = w^{2q} - w^2 nonzero.
struct NormalPair {
    FieldPtr ext;       // GF(q^2)
    std::uint32_t w = 0;
    std::uint32_t w_q = 0;
    std::uint32_t lambda = 0;
};

/// Smallest w in encoding order such that {w, w^q} is F_q-independent.
NormalPair find_normal_pair(const SubfieldEmbedding& tower);

/// Deterministic Miller-Rabin, exact for 32-bit inputs.
bool is_prime_u32(std::uint32_t n);

}  // namespace eaqecc
