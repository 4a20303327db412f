#include "eaqecc/conway.hpp"

namespace eaqecc {

std::optional<std::uint64_t> conway_poly(std::uint32_t p, std::uint32_t m) {
    for (std::size_t i = 0; i < kConwayTableSize; ++i) {
        if (kConwayTable[i].p == p && kConwayTable[i].m == m) return kConwayTable[i].poly;
    }
    return std::nullopt;
}

}  // namespace eaqecc
