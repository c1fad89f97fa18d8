#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "vknot/catalog.hpp"
#include "vknot/cobordism.hpp"
#include "vknot/errors.hpp"
#include "vknot/families.hpp"
#include "vknot/gauss.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"
#include "vknot/obstructions.hpp"
#include "vknot/polynomial.hpp"
#include "vknot/random.hpp"
#include "vknot/satellite.hpp"

namespace {

using namespace vknot;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string exe_dir() {
    char buf[4096];
    const ssize_t len = ::readlink("/proc/self/exe", buf, sizeof buf - 1);
    if (len <= 0) return ".";
    buf[len] = '\0';
    const std::string p(buf);
    const auto slash = p.rfind('/');
    return slash == std::string::npos ? "." : p.substr(0, slash);
}

// VKNOT_CATALOG wins; otherwise the source-tree file, then the installed
// share/ copy. A missing default catalog just means no named diagrams.
std::vector<CatalogEntry> load_default_catalog() {
    if (const char* env = std::getenv("VKNOT_CATALOG"))
        return load_catalog(env);
    const std::string candidates[] = {
        VKNOT_SOURCE_CATALOG,
        exe_dir() + "/../share/vknot/catalog.tsv",
    };
    for (const std::string& path : candidates)
        if (std::filesystem::exists(path)) return load_catalog(path);
    return {};
}

// Inputs are catalog names, inline Gauss codes, or @file references.
GaussDiagram resolve_input(const std::string& raw,
                           const std::vector<CatalogEntry>& cat) {
    if (!raw.empty() && raw[0] == '@')
        return parse_gauss_code(read_file(raw.substr(1)));
    if (const CatalogEntry* entry = find_entry(cat, raw))
        return parse_gauss_code(entry->code);
    return parse_gauss_code(raw);
}

int run_parse(const GaussDiagram& d, bool json) {
    if (json) {
        nlohmann::json j;
        j["code"] = serialize(d);
        j["canonical"] = canonical_code(d);
        j["chords"] = d.chord_count();
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "code: " << serialize(d) << "\n";
    std::cout << "canonical: " << canonical_code(d) << "\n";
    std::cout << "chords: " << d.chord_count() << "\n";
    return 0;
}

int run_invariants(const GaussDiagram& d, bool json) {
    const auto table = index_table(d);
    const HTPolynomial w = ht_polynomial(d);
    const std::size_t circles = seifert_circle_count(d);
    const bool positive = is_positive(d);
    if (json) {
        nlohmann::json j;
        j["chords"] = d.chord_count();
        auto& signs = j["signs"] = nlohmann::json::object();
        for (const auto& [id, s] : d.signs()) signs[std::to_string(id)] = s;
        auto& index = j["index"] = nlohmann::json::object();
        for (const auto& [id, v] : table) index[std::to_string(id)] = v;
        j["w"] = w.to_string();
        j["seifert_circles"] = circles;
        j["positive"] = positive;
        if (positive) j["slice_genus"] = slice_genus_positive(d);
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "chords: " << d.chord_count() << "\n";
    std::cout << "signs:";
    for (const auto& [id, s] : d.signs())
        std::cout << " " << id << ":" << (s > 0 ? "+" : "-");
    std::cout << "\n";
    std::cout << "index:";
    for (const auto& [id, v] : table) std::cout << " " << id << ":" << v;
    std::cout << "\n";
    std::cout << "w: " << w.to_string() << "\n";
    std::cout << "seifert_circles: " << circles << "\n";
    std::cout << "positive: " << (positive ? "yes" : "no") << "\n";
    if (positive)
        std::cout << "slice_genus: " << slice_genus_positive(d) << "\n";
    return 0;
}

int run_cable(const GaussDiagram& d, const std::string& pattern_text,
              std::size_t gap, bool json) {
    const Pattern pat = parse_pattern(pattern_text);
    const GaussDiagram c = cable(d, pat, gap);
    const HTPolynomial w = ht_polynomial(c);
    const int r = winding(pat);
    const HTPolynomial expected =
        ht_polynomial(d).substituted(r).scaled(static_cast<std::int64_t>(r) * r);
    const bool ok = w == expected;
    if (json) {
        nlohmann::json j;
        j["chords"] = c.chord_count();
        j["code"] = serialize(c);
        j["w"] = w.to_string();
        j["winding"] = r;
        j["formula_check"] = ok;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "chords: " << c.chord_count() << "\n";
        std::cout << "code: " << serialize(c) << "\n";
        std::cout << "w: " << w.to_string() << "\n";
        std::cout << "winding: " << r << "\n";
        std::cout << "formula_check: " << (ok ? "ok" : "MISMATCH") << "\n";
    }
    return ok ? 0 : 1;
}

FamilySpec build_spec(int g, const std::string& pairs_text, int k) {
    FamilySpec spec;
    spec.g = g;
    spec.k = k;
    std::istringstream in(pairs_text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        if (colon == std::string::npos)
            throw ParseError("pair \"" + item + "\" is not p:q");
        try {
            spec.pairs.emplace_back(std::stoi(item.substr(0, colon)),
                                    std::stoi(item.substr(colon + 1)));
        } catch (const std::exception&) {
            throw ParseError("pair \"" + item + "\" is not p:q");
        }
    }
    return spec;
}

int run_family(const FamilySpec& spec, bool distinguish, int k_max, bool json) {
    if (distinguish) {
        const FamilyReport rep = family_distinguisher(spec, k_max);
        std::cout << (json ? rep.to_json() + "\n" : rep.to_string());
        return rep.ht_constant && rep.genus_steps && rep.nonsplit ? 0 : 1;
    }
    const GaussDiagram d = family_generator(spec);
    const HTPolynomial w = ht_polynomial(d);
    if (json) {
        nlohmann::json j;
        j["code"] = serialize(d);
        j["chords"] = d.chord_count();
        j["w"] = w.to_string();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "code: " << serialize(d) << "\n";
        std::cout << "chords: " << d.chord_count() << "\n";
        std::cout << "w: " << w.to_string() << "\n";
    }
    return 0;
}

int run_certify(const std::string& path, bool json) {
    const CobordismCertificate cert = parse_certificate(read_file(path));
    const CertificateReport rep = check_certificate(cert);
    std::optional<bool> endpoints;
    if (rep.valid && cert.claim == CobordismClaim::Concordance)
        endpoints = ht_endpoints_check(cert);
    if (json) {
        nlohmann::json j = nlohmann::json::parse(rep.to_json());
        if (endpoints) j["ht_endpoints"] = *endpoints;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << rep.to_string();
        if (endpoints)
            std::cout << "ht_endpoints: " << (*endpoints ? "equal" : "DIFFER")
                      << "\n";
    }
    if (!rep.valid) return 1;
    return endpoints && !*endpoints ? 1 : 0;
}

int run_obstruct(const std::string& kind, const std::vector<GaussDiagram>& ds,
                 int r, bool json) {
    ObstructionReport rep;
    if (kind == "sf") {
        rep = obstruct_sf_concordance(ds.at(0), ds.at(1));
    } else if (kind == "slice") {
        rep = obstruct_slice_disc(ds.at(0));
    } else if (kind == "ribbon") {
        rep = obstruct_ribbon_disc(ds.at(0));
    } else if (kind == "split") {
        rep = obstruct_split(ds.at(0));
    } else {
        rep = obstruct_satellite_injectivity(ds.at(0), ds.at(1), r);
    }
    std::cout << (json ? rep.to_json() + "\n" : rep.to_string());
    return rep.verdict == Verdict::Obstructed ? 1 : 0;
}

int run_fuzz(const std::optional<GaussDiagram>& base, std::uint64_t seed,
             int walks, int steps, std::size_t max_n, bool json) {
    Rng master(seed);
    const std::size_t start_cap = std::min<std::size_t>(max_n, 10);
    int failures = 0;
    std::vector<std::string> details;
    for (int walk = 0; walk < walks; ++walk) {
        GaussDiagram d = base ? *base : random_diagram(master, start_cap);
        const HTPolynomial w0 = ht_polynomial(d);
        for (int step = 0; step < steps; ++step) {
            d = random_walk(d, 1, master.fork(), max_n);
            const HTPolynomial w = ht_polynomial(d);
            if (!(w == w0)) {
                ++failures;
                details.push_back("walk " + std::to_string(walk) +
                                  ": w changed from " + w0.to_string() +
                                  " to " + w.to_string() + " at step " +
                                  std::to_string(step));
                break;
            }
        }
    }
    if (json) {
        nlohmann::json j;
        j["walks"] = walks;
        j["steps"] = steps;
        j["failures"] = failures;
        j["details"] = details;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "walks: " << walks << "\n";
        std::cout << "steps: " << steps << "\n";
        std::cout << "failures: " << failures << "\n";
        for (const std::string& line : details)
            std::cout << line << "\n";
    }
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gauss-diagram toolkit for virtual knots: the w invariant, "
                 "Reidemeister fuzzing, cables, cobordism certificates"};
    app.require_subcommand(1);

    bool json = false;
    std::optional<std::uint64_t> seed;
    std::size_t max_n = 32;
    app.add_flag("--json", json, "emit JSON instead of key: value text");
    app.add_option("--seed", seed, "rng seed (fuzz requires one)");
    app.add_option("--max-n", max_n, "chord cap for sampled moves")
        ->default_val(32);

    std::string input, input2, pattern_text, pairs_text, kind, cert_path;
    std::size_t gap = 0;
    int g = 1, k = 1, k_max = 2, r = -1, walks = 100, steps = 50;
    bool distinguish = false;

    auto* cmd_parse =
        app.add_subcommand("parse", "parse and canonicalize a diagram");
    cmd_parse->add_option("input", input, "code, @file, or catalog name")
        ->required();

    auto* cmd_invariants =
        app.add_subcommand("invariants", "index table, w, Seifert data");
    cmd_invariants->add_option("input", input, "code, @file, or catalog name")
        ->required();

    auto* cmd_cable = app.add_subcommand("cable", "classical satellite of a diagram");
    cmd_cable->add_option("input", input, "companion diagram")->required();
    cmd_cable->add_option("--pattern", pattern_text, "p=2 eps=++ tangle=1+")
        ->required();
    cmd_cable->add_option("--gap", gap, "companion insertion gap");

    auto* cmd_family =
        app.add_subcommand("family", "handle-clasp family members");
    cmd_family->add_option("--g", g, "handle count")->default_val(1);
    cmd_family->add_option("--pairs", pairs_text, "p1:q1,p2:q2,...")
        ->required();
    cmd_family->add_option("--k", k, "torus insert parameter")->default_val(1);
    cmd_family->add_flag("--distinguish", distinguish,
                         "tabulate k = 1..kmax and check the family splits");
    cmd_family->add_option("--kmax", k_max, "rows for --distinguish")
        ->default_val(2);

    auto* cmd_certify =
        app.add_subcommand("certify", "replay a cobordism certificate");
    cmd_certify->add_option("file", cert_path, "certificate file")->required();

    auto* cmd_obstruct =
        app.add_subcommand("obstruct", "one-sided concordance obstructions");
    cmd_obstruct
        ->add_option("--kind", kind, "sf|slice|ribbon|split|satellite")
        ->required()
        ->check(CLI::IsMember({"sf", "slice", "ribbon", "split", "satellite"}));
    cmd_obstruct->add_option("input", input, "first diagram")->required();
    cmd_obstruct->add_option("input2", input2, "second diagram (sf, satellite)");
    cmd_obstruct->add_option("--r", r, "pattern winding number (satellite)");

    auto* cmd_fuzz =
        app.add_subcommand("fuzz", "random-walk w-invariance fuzzing");
    cmd_fuzz->add_option("input", input, "fixed start diagram (default: random)");
    cmd_fuzz->add_option("--walks", walks, "walk count")->default_val(100);
    cmd_fuzz->add_option("--steps", steps, "moves per walk")->default_val(50);

    for (CLI::App* sub : app.get_subcommands({}))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const std::vector<CatalogEntry> cat = load_default_catalog();
        if (cmd_parse->parsed())
            return run_parse(resolve_input(input, cat), json);
        if (cmd_invariants->parsed())
            return run_invariants(resolve_input(input, cat), json);
        if (cmd_cable->parsed())
            return run_cable(resolve_input(input, cat), pattern_text, gap, json);
        if (cmd_family->parsed())
            return run_family(build_spec(g, pairs_text, k), distinguish, k_max,
                              json);
        if (cmd_certify->parsed()) return run_certify(cert_path, json);
        if (cmd_obstruct->parsed()) {
            const bool two = kind == "sf" || kind == "satellite";
            if (two && input2.empty()) {
                std::cerr << "obstruct --kind " << kind
                          << " needs two diagrams\n";
                return 2;
            }
            if (kind == "satellite" && r < 0) {
                std::cerr << "obstruct --kind satellite needs --r >= 0\n";
                return 2;
            }
            std::vector<GaussDiagram> ds;
            ds.push_back(resolve_input(input, cat));
            if (two) ds.push_back(resolve_input(input2, cat));
            return run_obstruct(kind, ds, r, json);
        }
        if (cmd_fuzz->parsed()) {
            if (!seed) {
                std::cerr << "fuzz needs --seed\n";
                return 2;
            }
            std::optional<GaussDiagram> base;
            if (!input.empty()) base = resolve_input(input, cat);
            return run_fuzz(base, *seed, walks, steps, max_n, json);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
