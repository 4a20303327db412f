#pragma once

#include <json.hpp>

#include "eaqecc/entanglement.hpp"
#include "eaqecc/puncture.hpp"

namespace eaqecc {

/// Fixed-order JSON form {"q","n","logical","d","d_is_bound",
/// "d_edge_convention","c","mode"}; d is null when skipped or undefined.
nlohmann::ordered_json params_json(const EAParams& p);

nlohmann::ordered_json punctured_json(const PuncturedResult& r);

}  // namespace eaqecc
