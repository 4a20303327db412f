#include "eaqecc/report.hpp"

namespace eaqecc {

nlohmann::ordered_json params_json(const EAParams& p) {
    nlohmann::ordered_json j;
    j["q"] = p.q;
    j["n"] = p.n;
    j["logical"] = p.logical;
    if (p.d) {
        j["d"] = *p.d;
    } else {
        j["d"] = nullptr;
    }
    j["d_is_bound"] = p.d_is_bound;
    j["d_edge_convention"] = p.d_edge_convention;
    j["c"] = p.c;
    j["mode"] = p.mode;
    return j;
}

nlohmann::ordered_json punctured_json(const PuncturedResult& r) {
    nlohmann::ordered_json j = params_json(r.params);
    nlohmann::ordered_json checks;
    for (const auto& [name, ok] : r.checks) checks[name] = ok;
    j["checks"] = checks;
    return j;
}

}  // namespace eaqecc
