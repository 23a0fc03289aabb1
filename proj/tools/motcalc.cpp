/**
 * @file motcalc.cpp
 * @brief Command-line surface: build a construction from a JSON config and
 *        print/emit diamonds, motive decompositions, verification reports,
 *        supersingular collapses, and certificate audits.
 *
 * Exit codes: 0 success, 1 computation/verification failure, 2 configuration
 * error.  JSON output is canonical: ordered keys, two-space indent, one
 * trailing newline; big integers are emitted as JSON numbers when they fit
 * in 64 bits and as decimal strings otherwise.
 */

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "motcalc/oracle.hpp"
#include "motcalc/pipeline.hpp"

using namespace motcalc;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Integer formatting

Json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<int64_t>::min() && v <= std::numeric_limits<int64_t>::max())
        return Json(static_cast<int64_t>(v));
    return Json(v.str());
}

// Human output only: decimal with thousands separators.
std::string pretty(const Int& v) {
    std::string s = v.str();
    bool neg = !s.empty() && s[0] == '-';
    std::string digits = neg ? s.substr(1) : s;
    std::string out;
    for (size_t i = 0; i < digits.size(); ++i) {
        if (i > 0 && (digits.size() - i) % 3 == 0) out += ',';
        out += digits[i];
    }
    return neg ? "-" + out : out;
}

// ---------------------------------------------------------------------------
// Config parsing

ConstructionSpec parse_spec(const Json& j) {
    if (!j.is_object()) throw ConfigError("config must be a JSON object");
    for (auto& [key, val] : j.items()) {
        (void)val;
        if (key != "construction" && key != "n" && key != "genera" && key != "c" &&
            key != "a" && key != "b" && key != "mode" && key != "caps")
            throw ConfigError("unknown config field: " + key);
    }
    ConstructionSpec spec;
    if (!j.contains("construction") || !j["construction"].is_string())
        throw ConfigError("missing or non-string field: construction");
    spec.construction = j["construction"].get<std::string>();
    if (spec.construction != "ch-z2" && spec.construction != "ch-z3" &&
        spec.construction != "schreieder")
        throw ConfigError("unknown construction: " + spec.construction);
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ConfigError("missing or non-integer field: n");
    spec.n = j["n"].get<long>();
    if (spec.n < 1) throw ConfigError("n must be >= 1");
    if (j.contains("genera")) {
        if (spec.construction != "ch-z2")
            throw ConfigError("genera is only accepted for ch-z2");
        if (!j["genera"].is_array()) throw ConfigError("genera must be an array");
        for (const auto& g : j["genera"]) {
            if (!g.is_number_integer() || g.get<long>() < 1)
                throw ConfigError("genera entries must be integers >= 1");
            spec.genera.push_back(g.get<long>());
        }
        if (spec.genera.size() != static_cast<size_t>(spec.n))
            throw ConfigError("genera must list exactly n entries");
    }
    if (spec.construction == "schreieder") {
        for (const char* f : {"c", "a", "b"})
            if (!j.contains(f) || !j[f].is_number_integer())
                throw ConfigError(std::string("schreieder requires integer field: ") + f);
        spec.c = j["c"].get<long>();
        spec.a = j["a"].get<long>();
        spec.b = j["b"].get<long>();
        if (spec.c < 1) throw ConfigError("c must be >= 1");
        if (spec.b < 0 || spec.a <= spec.b)
            throw ConfigError("schreieder requires a > b >= 0");
        if (spec.a + spec.b != spec.n) throw ConfigError("schreieder requires a + b = n");
    } else {
        for (const char* f : {"c", "a", "b"})
            if (j.contains(f))
                throw ConfigError(std::string(f) + " is only accepted for schreieder");
    }
    if (j.contains("mode")) {
        if (!j["mode"].is_string()) throw ConfigError("mode must be a string");
        spec.mode = j["mode"].get<std::string>();
        if (spec.mode != "complex" && spec.mode != "supersingular")
            throw ConfigError("mode must be \"complex\" or \"supersingular\"");
        if (spec.mode == "supersingular" && spec.construction == "schreieder")
            throw ConfigError("supersingular mode applies to ch constructions only");
        if (spec.mode == "supersingular" && spec.n % 2 != 0)
            throw ConfigError(
                "supersingular mode requires an even-dimensional construction");
    }
    return spec;
}

OracleCaps parse_caps(const Json& j, std::optional<long> cap_flag) {
    OracleCaps caps;
    if (j.contains("caps")) {
        const Json& c = j["caps"];
        if (!c.is_object()) throw ConfigError("caps must be an object");
        if (c.contains("group_cap")) caps.group_cap = c["group_cap"].get<long>();
        if (c.contains("assignment_cap"))
            caps.assignment_cap = c["assignment_cap"].get<long>();
    }
    if (cap_flag) {
        caps.group_cap = *cap_flag;
        caps.assignment_cap = *cap_flag;
    }
    return caps;
}

Json load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Serialization

Json diamond_to_json(const HodgeDiamond& D) {
    Json rows = Json::array();
    for (long p = 0; p <= D.dim; ++p) {
        Json row = Json::array();
        for (long q = 0; q <= D.dim; ++q) row.push_back(int_to_json(D.at(p, q)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json lefschetz_to_json(const LefschetzSum& L) {
    Json out = Json::object();
    for (const auto& [t, c] : L)
        if (c != 0) out[std::to_string(t)] = int_to_json(c);
    return out;
}

Json transcendental_to_json(const MotiveExpr& M) {
    Json out = Json::object();
    for (const auto& B : M.blocks) {
        for (const auto& [p, h] : block_hodge(B)) {
            Int total = h * B.multiplicity;
            if (total == 0) continue;
            std::string key = std::to_string(p + B.twist) + "," +
                              std::to_string(static_cast<long>(B.weight()) - p + B.twist);
            out[key] = int_to_json(total);
        }
    }
    return out;
}

Json block_to_json(const TranscendentalBlock& B) {
    Json jb = Json::object();
    jb["factor_count"] = static_cast<int64_t>(B.factors.size());
    Json factors = Json::array();
    for (const auto& C : B.factors) {
        Json f = Json::object();
        f["name"] = C.name;
        f["genus"] = static_cast<int64_t>(C.genus);
        f["modulus"] = static_cast<int64_t>(C.modulus);
        factors.push_back(std::move(f));
    }
    jb["factors"] = std::move(factors);
    jb["signs"] = B.signs;
    jb["modulus"] = static_cast<int64_t>(B.modulus);
    jb["multiplicity"] = int_to_json(B.multiplicity);
    jb["twist"] = static_cast<int64_t>(B.twist);
    Json hodge = Json::object();
    for (const auto& [p, h] : block_hodge(B))
        if (h != 0) hodge[std::to_string(p)] = int_to_json(h);
    jb["hodge"] = std::move(hodge);
    return jb;
}

void emit_json(const Json& j, const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// ASCII diamond

std::string render_diamond(const HodgeDiamond& D) {
    std::vector<std::string> rows;
    size_t width = 0;
    for (long r = 0; r <= 2 * D.dim; ++r) {
        std::string row;
        for (long p = std::min(r, D.dim); p >= std::max(0L, r - D.dim); --p) {
            if (!row.empty()) row += "  ";
            row += pretty(D.at(p, r - p));
        }
        width = std::max(width, row.size());
        rows.push_back(std::move(row));
    }
    std::string out;
    for (const auto& row : rows) {
        out.append((width - row.size()) / 2, ' ');
        out += row;
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_diamond(const EquivariantVariety& V, const std::string& json_path) {
    HodgeDiamond D = diamond(V.motive);
    std::cout << "Hodge diamond (dimension " << D.dim << "):\n"
              << render_diamond(D)
              << "Euler characteristic: " << pretty(euler_characteristic(V)) << "\n";
    Json out = Json::object();
    out["dim"] = static_cast<int64_t>(D.dim);
    out["diamond"] = diamond_to_json(D);
    out["lefschetz"] = lefschetz_to_json(V.motive.lefschetz);
    out["transcendental"] = transcendental_to_json(V.motive);
    out["euler"] = int_to_json(euler_characteristic(V));
    emit_json(out, json_path);
    return kExitOk;
}

int cmd_motive(const EquivariantVariety& V, const std::string& json_path) {
    std::cout << "Motive decomposition (dimension " << V.dim << "):\n";
    std::cout << "  Lefschetz part:";
    bool first = true;
    for (const auto& [t, c] : V.motive.lefschetz) {
        if (c == 0) continue;
        std::cout << (first ? " " : " + ") << pretty(c) << "*L^" << t;
        first = false;
    }
    if (first) std::cout << " 0";
    std::cout << "\n";
    for (const auto& B : V.motive.blocks) {
        std::cout << "  Transcendental block: " << B.factors.size()
                  << " curve factors, modulus " << B.modulus << ", twist " << B.twist
                  << ", multiplicity " << pretty(B.multiplicity) << "\n"
                  << "    Hodge numbers:";
        for (const auto& [p, h] : block_hodge(B))
            if (h != 0)
                std::cout << "  h^{" << p << "," << (static_cast<long>(B.weight()) - p)
                          << "}=" << pretty(h);
        std::cout << "\n";
    }
    Json out = Json::object();
    out["dim"] = static_cast<int64_t>(V.dim);
    out["lefschetz"] = lefschetz_to_json(V.motive.lefschetz);
    Json blocks = Json::array();
    for (const auto& B : V.motive.blocks) blocks.push_back(block_to_json(B));
    out["blocks"] = std::move(blocks);
    emit_json(out, json_path);
    return kExitOk;
}

int cmd_verify(const ConstructionSpec& spec, const EquivariantVariety& V,
               const OracleCaps& caps, const std::string& json_path) {
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;
    auto add = [&checks](std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    };

    add("single transcendental block", V.motive.blocks.size() <= 1,
        "block count = " + std::to_string(V.motive.blocks.size()));

    bool lef_ok = true;
    for (const auto& [t, c] : V.motive.lefschetz)
        if (c < 0 || t < 0 || t > V.dim) lef_ok = false;
    add("Lefschetz part effective and within degree", lef_ok);

    HodgeDiamond D = diamond(V.motive);
    bool sym = true, serre = true;
    for (long p = 0; p <= D.dim; ++p)
        for (long q = 0; q <= D.dim; ++q) {
            if (D.at(p, q) != D.at(q, p)) sym = false;
            if (D.at(p, q) != D.at(D.dim - p, D.dim - q)) serre = false;
        }
    add("Hodge symmetry", sym);
    add("Serre duality", serre);
    add("h^{0,0} = 1", D.at(0, 0) == 1);

    CertificateReport cert = star_certificate(V);
    add("certificate audit", cert.valid, cert.valid ? "VALID" : "INVALID");

    // Independent orbifold-cohomology cross-check for the crepant builds.
    if ((spec.construction == "ch-z2" || spec.construction == "ch-z3") &&
        spec.mode == "complex" && spec.n <= 4 && !V.motive.blocks.empty()) {
        const TranscendentalBlock& B = V.motive.blocks[0];
        try {
            RelationSubgroup G = make_relation_subgroup(B.modulus, B.signs);
            HodgeDiamond O = chen_ruan_diamond(B.factors, G, caps);
            bool match = (O == D);
            std::string detail;
            if (!match)
                for (long p = 0; p <= D.dim && detail.empty(); ++p)
                    for (long q = 0; q <= D.dim && detail.empty(); ++q)
                        if (O.at(p, q) != D.at(p, q))
                            detail = "first divergence at (" + std::to_string(p) + "," +
                                     std::to_string(q) + "): expected " + O.at(p, q).str() +
                                     ", actual " + D.at(p, q).str();
            add("orbifold cohomology oracle", match, detail);
        } catch (const std::length_error& e) {
            add("orbifold cohomology oracle", false, std::string("cap exceeded: ") + e.what());
        }
    }

    bool all = true;
    Json jchecks = Json::array();
    for (const auto& c : checks) {
        all = all && c.pass;
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name;
        if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
        std::cout << "\n";
        Json jc = Json::object();
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["detail"] = c.detail;
        jchecks.push_back(std::move(jc));
    }
    std::cout << (all ? "VERIFY: PASS" : "VERIFY: FAIL") << "\n";
    Json out = Json::object();
    out["pass"] = all;
    out["checks"] = std::move(jchecks);
    emit_json(out, json_path);
    return all ? kExitOk : kExitFailure;
}

int cmd_supersingular(const ConstructionSpec& spec, const std::string& json_path) {
    if (spec.construction == "schreieder")
        throw ConfigError("supersingular mode applies to ch constructions only");
    if (spec.n % 2 != 0)
        throw ConfigError("supersingular mode requires an even-dimensional construction");
    ConstructionSpec ss = spec;
    ss.mode = "supersingular";
    EquivariantVariety V = build(ss);
    if (!V.motive.blocks.empty())
        throw std::runtime_error("collapse left transcendental blocks behind");
    std::cout << "Supersingular specialization: motive is a sum of Lefschetz twists.\n";
    for (const auto& [t, c] : V.motive.lefschetz)
        if (c != 0) std::cout << "  " << pretty(c) << "*L^" << t << "\n";
    std::cout << "Chow group ranks (dim CH^i = h^{2i}):\n";
    HodgeDiamond D = diamond(V.motive);
    for (long i = 0; i <= V.dim; ++i) {
        Int b2i = 0;
        for (long p = 0; p <= 2 * i; ++p)
            if (p <= D.dim && 2 * i - p <= D.dim) b2i += D.at(p, 2 * i - p);
        std::cout << "  dim CH^" << i << " = " << pretty(b2i) << "\n";
    }
    Json out = Json::object();
    out["dim"] = static_cast<int64_t>(V.dim);
    out["lefschetz"] = lefschetz_to_json(V.motive.lefschetz);
    Json chow = Json::array();
    for (long i = 0; i <= V.dim; ++i) {
        Int b2i = 0;
        for (long p = 0; p <= 2 * i; ++p)
            if (p <= D.dim && 2 * i - p <= D.dim) b2i += D.at(p, 2 * i - p);
        chow.push_back(int_to_json(b2i));
    }
    out["chow_ranks"] = std::move(chow);
    emit_json(out, json_path);
    return kExitOk;
}

int cmd_certificate(const EquivariantVariety& V, const std::string& json_path) {
    CertificateReport r = star_certificate(V);
    for (const auto& line : r.lines) std::cout << line << "\n";
    std::cout << "CERTIFICATE: " << (r.valid ? "VALID" : "INVALID") << "\n";
    Json out = Json::object();
    out["valid"] = r.valid;
    out["lines"] = r.lines;
    emit_json(out, json_path);
    return r.valid ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Hodge diamond and motive calculator for quotient constructions"};
    app.require_subcommand(1);

    std::string config_path, json_path;
    long cap_value = -1;

    std::vector<CLI::App*> subs;
    for (const char* name : {"diamond", "motive", "verify", "supersingular", "certificate"})
        subs.push_back(app.add_subcommand(name));
    for (CLI::App* sub : subs) {
        sub->add_option("--config", config_path, "Path to the JSON construction config")
            ->required();
        sub->add_option("--json", json_path, "Write a canonical JSON report to this path");
        sub->add_option("--cap", cap_value, "Override both oracle size caps");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        Json config = load_config(config_path);
        ConstructionSpec spec = parse_spec(config);
        OracleCaps caps =
            parse_caps(config, cap_value >= 0 ? std::optional<long>(cap_value) : std::nullopt);

        if (command == "supersingular") return cmd_supersingular(spec, json_path);

        EquivariantVariety V = build(spec);
        if (command == "diamond") return cmd_diamond(V, json_path);
        if (command == "motive") return cmd_motive(V, json_path);
        if (command == "verify") return cmd_verify(spec, V, caps, json_path);
        if (command == "certificate") return cmd_certificate(V, json_path);
        std::cerr << "error: unknown command " << command << "\n";
        return kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
}
