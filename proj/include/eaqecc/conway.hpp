#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

namespace eaqecc {

struct ConwayEntry {
    std::uint32_t p;
    std::uint32_t m;
    std::uint64_t poly;  // sum c_i p^i, constant term first, monic
};

extern const ConwayEntry kConwayTable[];
extern const std::size_t kConwayTableSize;

// Default modulus for GF(p^m), available for p <= 13, m <= 6.
std::optional<std::uint64_t> conway_poly(std::uint32_t p, std::uint32_t m);

}  // namespace eaqecc
