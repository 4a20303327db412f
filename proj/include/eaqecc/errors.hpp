#pragma once

#include <stdexcept>
#include <string>

namespace eaqecc {

// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero field element") {}
};

struct SpecMismatch : Error {
    SpecMismatch() : Error("operands belong to different field specs") {}
    explicit SpecMismatch(const std::string& what) : Error(what) {}
};

struct ShapeMismatch : Error {
    explicit ShapeMismatch(const std::string& what) : Error(what) {}
};

struct AmbientMismatch : Error {
    AmbientMismatch() : Error("subspaces live in different ambient dimensions") {}
};

struct LayoutMismatch : Error {
    explicit LayoutMismatch(const std::string& what) : Error(what) {}
};

struct NoSubfieldRegistered : Error {
    NoSubfieldRegistered() : Error("operation requires a registered subfield embedding") {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& what) : Error(what) {}
};

struct InternalInconsistency : Error {
    explicit InternalInconsistency(const std::string& what) : Error(what) {}
};

struct SearchExhausted : Error {
    explicit SearchExhausted(const std::string& what) : Error(what) {}
};

struct DimTooLarge : Error {
    explicit DimTooLarge(const std::string& what) : Error(what) {}
};

struct NotADecomposition : Error {
    explicit NotADecomposition(const std::string& what) : Error(what) {}
};

struct EllipticOutsideChar2 : Error {
    EllipticOutsideChar2() : Error("elliptic block is only admissible in characteristic 2") {}
};

struct UndefinedPrime : Error {
    explicit UndefinedPrime(const std::string& what) : Error(what) {}
};

struct InvariantViolation : Error {
    explicit InvariantViolation(const std::string& what) : Error(what) {}
};

struct RangeViolation : Error {
    explicit RangeViolation(const std::string& what) : Error(what) {}
};

struct BadRange : Error {
    explicit BadRange(const std::string& what) : Error(what) {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error(what) {}
};

struct NotNested : Error {
    NotNested() : Error("C2 is not contained in C1") {}
};

// Carries both computed dimensions so a failed claim surfaces as data.
struct DimensionClaimFailed : Error {
    long expected_dim;
    long actual_dim;
    DimensionClaimFailed(const std::string& what, long expected, long actual)
        : Error(what + " (expected " + std::to_string(expected) + ", got " +
                std::to_string(actual) + ")"),
          expected_dim(expected),
          actual_dim(actual) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace eaqecc
