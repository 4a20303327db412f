#include <cstdlib>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "eaqecc/codefile.hpp"
#include "eaqecc/entanglement.hpp"
#include "eaqecc/geom.hpp"
#include "eaqecc/gv.hpp"
#include "eaqecc/puncture.hpp"
#include "eaqecc/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using nlohmann::ordered_json;
using namespace eaqecc;

namespace {

enum class OutFormat { Json, Csv, Text };

struct Common {
    OutFormat format = OutFormat::Json;
    std::uint64_t budget = DistanceOptions{}.budget;
    std::string distance = "compute";

    DistanceOptions opts() const {
        DistanceOptions o;
        o.budget = budget;
        return o;
    }
    DistancePolicy policy() const {
        return distance == "skip" ? DistancePolicy::Skip : DistancePolicy::Compute;
    }
};

void add_format_flags(CLI::App* sub, Common& common) {
    sub->add_flag_callback("--json", [&common] { common.format = OutFormat::Json; },
                           "JSON output (default)");
    sub->add_flag_callback("--csv", [&common] { common.format = OutFormat::Csv; }, "CSV output");
    sub->add_flag_callback("--text", [&common] { common.format = OutFormat::Text; },
                           "human-readable output");
}

void add_distance_flags(CLI::App* sub, Common& common) {
    sub->add_option("--distance", common.distance, "compute|skip")
        ->check(CLI::IsMember({"compute", "skip"}));
    sub->add_option("--budget", common.budget, "codeword enumeration budget");
}

std::string csv_scalar(const ordered_json& v) {
    if (v.is_null()) return "";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

// one header line + one row of the top-level scalar fields
void emit_flat_csv(const ordered_json& j) {
    std::string head, row;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it.value().is_object() || it.value().is_array()) continue;
        if (!head.empty()) {
            head += ',';
            row += ',';
        }
        head += it.key();
        row += csv_scalar(it.value());
    }
    std::cout << head << "\n" << row << "\n";
}

std::string params_text(const EAParams& p) {
    std::ostringstream out;
    out << "[[" << p.n << ", " << p.logical << ", ";
    if (p.d) {
        if (p.d_is_bound) out << ">=";
        out << *p.d;
    } else {
        out << "?";
    }
    out << "; " << p.c << "]]_" << p.q << "  mode=" << p.mode;
    if (p.d_edge_convention) out << "  (d from the empty-difference convention)";
    return out.str();
}

void emit_params(const EAParams& p, const Common& common) {
    switch (common.format) {
        case OutFormat::Json: std::cout << params_json(p).dump() << "\n"; break;
        case OutFormat::Csv: emit_flat_csv(params_json(p)); break;
        case OutFormat::Text: std::cout << params_text(p) << "\n"; break;
    }
}

void emit_code_report(ordered_json j, const std::string& code_text, const Common& common) {
    if (common.format == OutFormat::Json) {
        j["code"] = code_text;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << code_text;
    }
}

WeightKind default_kind(const LinearCode& c) {
    return c.layout == Layout::Symplectic ? WeightKind::Symplectic : WeightKind::Hamming;
}

IndexSet parse_index_list(const std::string& s) {
    IndexSet out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.empty()) continue;
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(tok, &used);
            if (used != tok.size()) throw ParseError("bad index '" + tok + "'");
            out.insert(v);
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad index '" + tok + "'");
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// selftest: quick embedded property suites

Subspace random_subspace(const FieldPtr& spec, std::size_t len, std::size_t max_rows,
                         std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> rdist(0, max_rows);
    std::uniform_int_distribution<std::uint32_t> edist(0, spec->q() - 1);
    const std::size_t r = rdist(rng);
    Matrix M(spec, r, len);
    for (auto& v : M.a) v = edist(rng);
    return Subspace::from_rows(M);
}

int run_selftest() {
    std::mt19937 rng(20240817);
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok   " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    {
        bool ok = true;
        for (auto [p, m] : {std::pair<int, int>{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 2}}) {
            auto F = FieldSpec::make(p, m);
            std::uniform_int_distribution<std::uint32_t> d(0, F->q() - 1);
            for (int i = 0; i < 200 && ok; ++i) {
                const std::uint32_t a = d(rng), b = d(rng), c = d(rng);
                ok = F->mul(a, F->add(b, c)) == F->add(F->mul(a, b), F->mul(a, c));
                if (ok && a) ok = F->mul(a, F->inv(a)) == 1;
            }
        }
        report("field axioms", ok);
    }

    {
        bool ok = true;
        try {
            for (int p : {2, 3}) {
                auto F = FieldSpec::make(p, 1);
                for (int i = 0; i < 50; ++i) {
                    auto C = LinearCode::symplectic(random_subspace(F, 8, 4, rng), 4);
                    c_symplectic(C);  // asserts rank formula == hull codimension
                }
            }
        } catch (const Error&) {
            ok = false;
        }
        report("symplectic rank-hull identity", ok);
    }

    {
        bool ok = true;
        auto F = FieldSpec::make(2, 2);
        for (int i = 0; i < 20 && ok; ++i) {
            auto C = LinearCode::symplectic(random_subspace(F, 6, 3, rng), 3);
            auto a = dual(C, DualityMode::Symplectic);
            auto b = dual(C, DualityMode::TraceSymplectic);
            ok = a.gens.dim() == b.gens.dim() && a.gens.contains(b.gens);
        }
        report("trace-symplectic dual coincidence", ok);
    }

    {
        bool ok = true;
        for (int p : {2, 3}) {
            auto base = FieldSpec::make(p, 1);
            auto ext = FieldSpec::make(p, 2);
            SubfieldEmbedding tower(base, ext);
            NormalPair pair = find_normal_pair(tower);
            std::uniform_int_distribution<std::uint32_t> d(0, base->q() - 1);
            for (int i = 0; i < 200 && ok; ++i) {
                std::vector<std::uint32_t> v(6);
                for (auto& x : v) x = d(rng);
                auto img = hermitian_pack(tower, pair, v);
                ok = weight(v, WeightKind::Symplectic, 3) ==
                     weight(img, WeightKind::Hamming, 0);
            }
        }
        report("hermitian packing isometry", ok);
    }

    {
        bool ok = true;
        auto F = FieldSpec::make(2, 1);
        for (int i = 0; i < 30 && ok; ++i) {
            auto C = LinearCode::symplectic(random_subspace(F, 8, 4, rng), 4);
            ok = duality_identity_check(C, 1).punctured_dual_is_shortened_dual;
        }
        report("puncture/shorten duality", ok);
    }

    {
        const mpq_class v = gv_lhs({2, 10, 2, 2, 1});
        report("gv spot value", to_fraction_string(v) == "120960/1048575");
    }

    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
#ifdef _OPENMP
    if (const char* env = std::getenv("EAQECC_THREADS")) {
        const int t = std::atoi(env);
        if (t > 0) omp_set_num_threads(t);
    }
#endif

    CLI::App app{"entanglement-assisted code parameters from classical codes over GF(q)"};
    app.require_subcommand(1);
    Common common;

    // params
    std::string mode, code_path, code2_path;
    auto* params = app.add_subcommand("params", "EA parameters of a construction");
    params->add_option("--mode", mode, "symplectic|hermitian|hermitian-check|css")
        ->required()
        ->check(CLI::IsMember({"symplectic", "hermitian", "hermitian-check", "css"}));
    params->add_option("--code", code_path, "code file")->required();
    params->add_option("--code2", code2_path, "second code file (css)");
    add_distance_flags(params, common);
    add_format_flags(params, common);
    params->callback([&] {
        LinearCode C = read_code_file(code_path);
        EAParams p;
        if (mode == "symplectic") {
            p = ea_symplectic(C, common.policy(), common.opts());
        } else if (mode == "hermitian") {
            p = ea_hermitian(C, common.policy(), common.opts());
        } else if (mode == "hermitian-check") {
            p = ea_from_parity_check_hermitian(C, common.policy(), common.opts());
        } else {
            if (code2_path.empty()) throw ParseError("css mode needs --code2");
            p = ea_css(C, read_code_file(code2_path), common.policy(), common.opts());
        }
        emit_params(p, common);
    });

    // dual / hull
    std::string duality_name;
    for (const char* name : {"dual", "hull"}) {
        auto* sub = app.add_subcommand(name, std::string(name) + " of a code");
        sub->add_option("--mode", duality_name, "duality mode")->required();
        sub->add_option("--code", code_path, "code file")->required();
        add_format_flags(sub, common);
        const bool is_hull = std::string(name) == "hull";
        sub->callback([&, is_hull] {
            auto m = duality_mode_from_string(duality_name);
            if (!m) throw ParseError("unknown duality mode '" + duality_name + "'");
            LinearCode C = read_code_file(code_path);
            LinearCode out = is_hull ? hull(C, *m) : dual(C, *m);
            ordered_json j;
            j["mode"] = to_string(*m);
            j["dim"] = out.dim();
            emit_code_report(std::move(j), format_code(out), common);
        });
    }

    // distance
    std::string kind_name = "auto", rel_path;
    bool serial = false;
    auto* dist = app.add_subcommand("distance", "exhaustive (relative) minimum distance");
    dist->add_option("--code", code_path, "code file")->required();
    dist->add_option("--kind", kind_name, "hamming|symplectic|auto")
        ->check(CLI::IsMember({"hamming", "symplectic", "auto"}));
    dist->add_option("--relative-to", rel_path, "exclude words of this code");
    dist->add_flag("--serial", serial, "use the serial reference kernel");
    dist->add_option("--budget", common.budget, "codeword enumeration budget");
    add_format_flags(dist, common);
    dist->callback([&] {
        LinearCode C = read_code_file(code_path);
        WeightKind kind = kind_name == "hamming"      ? WeightKind::Hamming
                          : kind_name == "symplectic" ? WeightKind::Symplectic
                                                      : default_kind(C);
        DistanceOptions opts = common.opts();
        opts.parallel = !serial;
        Subspace B = Subspace::zero(C.spec(), C.length());
        if (!rel_path.empty()) B = read_code_file(rel_path).gens;
        DistanceOutcome out = relative_distance(C, B, kind, opts);
        ordered_json j;
        j["d"] = out.empty ? ordered_json(nullptr) : ordered_json(out.value);
        j["empty_difference"] = out.empty;
        if (common.format == OutFormat::Text) {
            std::cout << (out.empty ? std::string("empty difference")
                                    : "d = " + std::to_string(out.value))
                      << "\n";
        } else if (common.format == OutFormat::Csv) {
            emit_flat_csv(j);
        } else {
            std::cout << j.dump() << "\n";
        }
    });

    // expand
    auto* expand = app.add_subcommand("expand", "prime-field expansion of a symplectic code");
    expand->add_option("--code", code_path, "code file")->required();
    add_format_flags(expand, common);
    expand->callback([&] {
        LinearCode C = read_code_file(code_path);
        auto ctx = ExpansionContext::make(C.spec());
        LinearCode out = expand_symplectic(ctx, C);
        ordered_json j;
        j["dim"] = out.dim();
        emit_code_report(std::move(j), format_code(out), common);
    });

    // pack
    auto* pack = app.add_subcommand("pack", "pack a symplectic F_q code into GF(q^2)");
    pack->add_option("--code", code_path, "code file")->required();
    add_format_flags(pack, common);
    pack->callback([&] {
        LinearCode C = read_code_file(code_path);
        if (C.layout != Layout::Symplectic) throw LayoutMismatch("pack needs symplectic layout");
        const auto& F = *C.spec();
        auto ext = FieldSpec::make(F.p(), 2 * F.m());
        SubfieldEmbedding tower(C.spec(), ext);
        NormalPair pair = find_normal_pair(tower);
        std::vector<std::vector<std::uint32_t>> rows;
        for (std::size_t i = 0; i < C.dim(); ++i) {
            rows.push_back(hermitian_pack(tower, pair, C.gens.basis.row(i)));
        }
        Subspace s = rows.empty() ? Subspace::zero(ext, C.half)
                                  : Subspace::from_rows(Matrix::from_rows(ext, rows));
        LinearCode out = LinearCode::plain(std::move(s));
        ordered_json j;
        j["dim"] = out.dim();
        emit_code_report(std::move(j), format_code(out), common);
    });

    // extend
    auto* extend = app.add_subcommand("extend", "self-orthogonal extension C'");
    extend->add_option("--code", code_path, "code file")->required();
    add_format_flags(extend, common);
    extend->callback([&] {
        LinearCode C = read_code_file(code_path);
        LinearCode out = extend_self_orthogonal(C);
        ordered_json j;
        j["c"] = out.half - C.half;
        emit_code_report(std::move(j), format_code(out), common);
    });

    // decomp
    std::string basis_path, geom_mode = "euclidean", index_list;
    auto* decomp = app.add_subcommand("decomp", "geometric-decomposition index calculus");
    decomp->add_option("--basis", basis_path, "basis matrix file")->required();
    decomp->add_option("--mode", geom_mode, "euclidean|hermitian")
        ->check(CLI::IsMember({"euclidean", "hermitian"}));
    decomp->add_option("--index", index_list, "comma-separated 1-based indices");
    add_format_flags(decomp, common);
    decomp->callback([&] {
        Matrix V = read_matrix_file(basis_path);
        GramProfile profile = validate_decomposition(
            V, geom_mode == "euclidean" ? GeomMode::Euclidean : GeomMode::Hermitian);
        IndexSet I = parse_index_list(index_list);
        RadicalSplit split = radical_split(profile, I);
        const long c = c_from_indices(profile, I);
        ordered_json blocks = ordered_json::array();
        for (const auto& b : profile.blocks) {
            ordered_json jb;
            jb["kind"] = b.kind == GeomBlockKind::Hyperbolic      ? "hyperbolic"
                         : b.kind == GeomBlockKind::NonSingular   ? "non_singular"
                                                                  : "elliptic";
            jb["start"] = b.start + 1;
            if (b.kind == GeomBlockKind::NonSingular) jb["g"] = b.g;
            blocks.push_back(jb);
        }
        ordered_json j;
        j["blocks"] = blocks;
        j["I_R"] = split.radical;
        j["I_L"] = split.left;
        j["c"] = c;
        if (common.format == OutFormat::Text) {
            std::cout << "c = " << c << "\n";
        } else {
            std::cout << j.dump() << "\n";
        }
    });

    // gv
    auto* gv = app.add_subcommand("gv", "Gilbert-Varshamov sufficient condition");
    gv->require_subcommand(1);
    GVQuery query;
    auto* gv_check = gv->add_subcommand("check", "evaluate one query");
    gv_check->add_option("--q", query.q)->required();
    gv_check->add_option("--n", query.n)->required();
    gv_check->add_option("--k", query.k)->required();
    gv_check->add_option("--delta", query.delta)->required();
    gv_check->add_option("--c", query.c)->required();
    add_format_flags(gv_check, common);
    gv_check->callback([&] {
        mpq_class lhs = gv_lhs(query);
        ordered_json j;
        j["feasible"] = gv_feasible(query);
        j["lhs"] = to_fraction_string(lhs);
        j["lhs_approx"] = lhs.get_d();
        if (common.format == OutFormat::Csv) {
            emit_flat_csv(j);
        } else if (common.format == OutFormat::Text) {
            std::cout << "feasible: " << (j["feasible"].get<bool>() ? "true" : "false")
                      << "  lhs = " << j["lhs"].get<std::string>() << "\n";
        } else {
            std::cout << j.dump() << "\n";
        }
    });

    std::uint64_t sq = 2;
    long n_min = 1, n_max = 0, k_max = -1, c_max = -1;
    auto* gv_search_cmd = gv->add_subcommand("search", "maximal feasible deltas over a range");
    gv_search_cmd->add_option("--q", sq)->required();
    gv_search_cmd->add_option("--n-min", n_min);
    gv_search_cmd->add_option("--n-max", n_max)->required();
    gv_search_cmd->add_option("--k-max", k_max);
    gv_search_cmd->add_option("--c-max", c_max);
    add_format_flags(gv_search_cmd, common);
    gv_search_cmd->callback([&] {
        auto table = gv_search(sq, n_min, n_max, k_max, c_max);
        if (common.format == OutFormat::Json) {
            ordered_json rows = ordered_json::array();
            for (const auto& r : table) {
                rows.push_back({{"n", r.n}, {"k", r.k}, {"c", r.c}, {"delta", r.delta}});
            }
            std::cout << ordered_json{{"rows", rows}}.dump() << "\n";
        } else {
            std::cout << "n,k,c,delta\n";
            for (const auto& r : table) {
                std::cout << r.n << ',' << r.k << ',' << r.c << ',' << r.delta << "\n";
            }
        }
    });

    double R = 0, eps = 0, lambda = 0, margin = 0;
    auto* gv_asym = gv->add_subcommand("asymptotic", "asymptotic inequality");
    gv_asym->add_option("--q", sq)->required();
    gv_asym->add_option("--r", R)->required();
    gv_asym->add_option("--eps", eps)->required();
    gv_asym->add_option("--lambda", lambda);
    gv_asym->add_option("--margin", margin);
    add_format_flags(gv_asym, common);
    gv_asym->callback([&] {
        const bool ok = gv_asymptotic(sq, R, eps, lambda, margin);
        if (common.format == OutFormat::Text) {
            std::cout << (ok ? "holds" : "fails") << "\n";
        } else {
            std::cout << ordered_json{{"holds", ok}}.dump() << "\n";
        }
    });

    // puncture
    long punct_c = 0;
    auto* punct = app.add_subcommand("puncture", "EA construction from a punctured code");
    punct->add_option("--mode", mode, "symplectic|hermitian|css")
        ->required()
        ->check(CLI::IsMember({"symplectic", "hermitian", "css"}));
    punct->add_option("--c", punct_c, "number of removed coordinates")->required();
    punct->add_option("--code", code_path, "code file")->required();
    punct->add_option("--code2", code2_path, "second code file (css)");
    add_distance_flags(punct, common);
    add_format_flags(punct, common);
    punct->callback([&] {
        LinearCode C = read_code_file(code_path);
        PuncturedResult res;
        LinearCode punctured = LinearCode::plain(Subspace::zero(C.spec(), 1));
        if (mode == "symplectic") {
            res = ea_from_punctured_symplectic(C, punct_c, common.policy(), common.opts());
            punctured = puncture(C, punct_c, PunctureFlavor::SymplecticPairs);
        } else if (mode == "hermitian") {
            res = ea_from_punctured_hermitian(C, punct_c, common.policy(), common.opts());
            punctured = puncture(C, punct_c, PunctureFlavor::Plain);
        } else {
            if (code2_path.empty()) throw ParseError("css mode needs --code2");
            LinearCode C2 = read_code_file(code2_path);
            res = ea_from_punctured_css(C, C2, punct_c, common.policy(), common.opts());
            punctured = puncture(C2, punct_c, PunctureFlavor::Plain);
        }
        if (common.format == OutFormat::Text) {
            std::cout << params_text(res.params) << "\n";
        } else if (common.format == OutFormat::Csv) {
            emit_flat_csv(params_json(res.params));
        } else {
            ordered_json j = punctured_json(res);
            j["code"] = format_code(punctured);
            std::cout << j.dump() << "\n";
        }
    });

    // selftest
    int selftest_rc = 0;
    auto* selftest = app.add_subcommand("selftest", "run the embedded property suites");
    selftest->callback([&] { selftest_rc = run_selftest(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const LayoutMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionClaimFailed& e) {
        ordered_json err{{"error", "DimensionClaimFailed"},
                         {"message", e.what()},
                         {"expected_dim", e.expected_dim},
                         {"actual_dim", e.actual_dim}};
        std::cerr << err.dump() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << ordered_json{{"error", "ComputationError"}, {"message", e.what()}}.dump()
                  << "\n";
        return 1;
    }
    return selftest_rc;
}
