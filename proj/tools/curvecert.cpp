#include <chrono>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "curves/arrangements.hpp"
#include "curves/papercheck.hpp"
#include "curves/singularities.hpp"
#include "curves/syzygy.hpp"

using namespace curves;
using nlohmann::json;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void print_timing(bool enabled, const Timer& t) {
    if (enabled) std::printf("wall time: %.3fs\n", t.seconds());
}

// ----------------------------------------------------------------- catalog

int cmd_catalog(const std::string& curve, bool as_json, bool pairs, bool timing) {
    Timer timer;
    if (curve == "nodal") {
        const NodalCatalog& cat = nodal_catalog();
        if (as_json) {
            json j{{"command", "catalog"}, {"curve", "nodal"},
                   {"cubic", cat.cubic.str()}};
            for (int i = 0; i < 3; ++i) {
                j["sextactic"].push_back(cat.sextactic[i].str());
                j["conics"].push_back({{"id", "N.Q" + std::to_string(i + 1)},
                                       {"equation", cat.conics[i].str()},
                                       {"tangency", cat.sextactic[i].str()}});
            }
            std::cout << j.dump(2) << "\n";
        } else {
            std::printf("nodal cubic E = %s\n", cat.cubic.str().c_str());
            for (int i = 0; i < 3; ++i)
                std::printf("  s%d = %s\n  Q%d = %s\n", i + 1,
                            cat.sextactic[i].str().c_str(), i + 1,
                            cat.conics[i].str().c_str());
        }
        print_timing(timing, timer);
        return 0;
    }
    const FermatCatalog& cat = fermat_catalog();
    if (pairs) {
        auto orbits = pair_orbits();
        if (as_json) {
            json j{{"command", "catalog"}, {"curve", "fermat"}, {"pair_orbits", json::array()}};
            for (const auto& [a, b] : orbits)
                j["pair_orbits"].push_back({a.str(), b.str()});
            std::cout << j.dump(2) << "\n";
        } else {
            std::printf("%zu orbit representatives of unordered conic pairs:\n",
                        orbits.size());
            for (const auto& [a, b] : orbits)
                std::printf("  {%s, %s}%s\n", a.str().c_str(), b.str().c_str(),
                            a.set_index == b.set_index ? "  (same class)" : "");
        }
        print_timing(timing, timer);
        return 0;
    }
    if (as_json) {
        json j{{"command", "catalog"}, {"curve", "fermat"}, {"cubic", cat.cubic.str()}};
        for (int set = 1; set <= 9; ++set) {
            json grp{{"base_point", cat.base_points[set - 1].str()},
                     {"conics", json::array()}};
            for (int slot = 0; slot < 3; ++slot) {
                ConicId id{CurveKind::Fermat, set, slot};
                grp["conics"].push_back({{"id", id.str()},
                                         {"equation", cat.conics.at(id).str()},
                                         {"tangency", cat.tangency_point.at(id).str()}});
            }
            j["classes"].push_back(std::move(grp));
        }
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("fermat cubic F = %s\n", cat.cubic.str().c_str());
        std::printf("27 sextactic points, 27 conics in 9 classes of 3:\n");
        for (int set = 1; set <= 9; ++set) {
            std::printf("P%d at %s:\n", set, cat.base_points[set - 1].str().c_str());
            for (int slot = 0; slot < 3; ++slot) {
                ConicId id{CurveKind::Fermat, set, slot};
                std::printf("  %s = %s\n    tangent to F at %s\n", id.str().c_str(),
                            cat.conics.at(id).str().c_str(),
                            cat.tangency_point.at(id).str().c_str());
            }
        }
    }
    print_timing(timing, timer);
    return 0;
}

// ----------------------------------------------------------------- certify

/// Selection grammar: nodal conics by bare index "1".."3"; fermat conics as
/// "Pj:slot" with j in 1..9 and slot in 0..2.
bool parse_selection(const std::string& curve, const std::string& tok, ConicId& out) {
    if (curve == "nodal") {
        if (tok.size() != 1 || tok[0] < '1' || tok[0] > '3') return false;
        out = ConicId{CurveKind::Nodal, tok[0] - '0', 0};
        return true;
    }
    if (tok.size() != 4 || tok[0] != 'P' || tok[2] != ':') return false;
    if (tok[1] < '1' || tok[1] > '9' || tok[3] < '0' || tok[3] > '2') return false;
    out = ConicId{CurveKind::Fermat, tok[1] - '0', tok[3] - '0'};
    return true;
}

int cmd_certify(const std::string& curve, const std::vector<std::string>& selection,
                bool as_json, bool timing) {
    Timer timer;
    std::vector<HomPoly> components;
    std::vector<std::string> ids;
    components.push_back(curve == "nodal" ? nodal_catalog().cubic
                                          : fermat_catalog().cubic);
    std::set<ConicId> seen;
    for (const std::string& tok : selection) {
        ConicId id{CurveKind::Nodal, 0, 0};
        if (!parse_selection(curve, tok, id)) {
            std::fprintf(stderr, "invalid conic id '%s' for the %s catalog\n",
                         tok.c_str(), curve.c_str());
            return 2;
        }
        if (!seen.insert(id).second) {
            std::fprintf(stderr, "duplicate conic id '%s'\n", tok.c_str());
            return 2;
        }
        ids.push_back(id.str());
        components.push_back(curve == "nodal"
                                 ? nodal_catalog().conics[id.set_index - 1]
                                 : fermat_catalog().conics.at(id));
    }
    Arrangement arr = build(components);
    FreenessCertificate cert = certify(arr.product);
    SingularLocus loc = singular_points(arr.product);
    std::vector<SingularityReport> reports;
    for (const ProjPoint& p : loc.points) reports.push_back(classify(arr.product, p));

    if (as_json) {
        json j{{"command", "certify"},
               {"curve", curve},
               {"conics", ids},
               {"certificate", json::parse(cert.to_json())},
               {"census", json::array()},
               {"residual_degree", loc.residual_degree}};
        for (const SingularityReport& r : reports)
            j["census"].push_back(json::parse(r.to_json()));
        std::cout << j.dump(2) << "\n";
    } else {
        std::printf("curve: %s cubic", curve.c_str());
        for (const std::string& id : ids) std::printf(" + %s", id.c_str());
        std::printf("  (degree %d)\n", cert.degree);
        std::printf("verdict: %s\n", verdict_name(cert.verdict).c_str());
        std::printf("mdr: %d   tjurina: %d\n", cert.mdr, cert.tjurina);
        std::printf("exponents:");
        for (int e : cert.exponents) std::printf(" %d", e);
        std::printf("\ngenerator degrees:");
        for (int e : cert.generator_degrees) std::printf(" %d", e);
        std::printf("\nsingularities:\n");
        for (const SingularityReport& r : reports)
            std::printf("  %s at %s (tjurina %d)\n", r.type_str().c_str(),
                        r.point.str().c_str(), r.local_tjurina);
        if (loc.residual_degree > 0)
            std::printf("  plus a non-K-rational part of degree %d\n",
                        loc.residual_degree);
    }
    print_timing(timing, timer);
    return 0;
}

// -------------------------------------------------------------- paper-check

int cmd_paper_check(const std::string& only, bool slow, bool as_json, bool timing) {
    Timer timer;
    CheckOptions opts{only, slow};
    std::vector<CheckResult> results = run_paper_checks(opts);
    if (results.empty()) {
        std::fprintf(stderr, "no check matches '%s'\n", only.c_str());
        return 2;
    }
    bool all_pass = true;
    if (as_json) {
        json j{{"command", "paper-check"}, {"checks", json::array()}};
        for (const CheckResult& r : results) {
            all_pass = all_pass && r.pass;
            j["checks"].push_back({{"id", r.id},
                                   {"title", r.title},
                                   {"pass", r.pass},
                                   {"detail", r.detail}});
        }
        j["all_pass"] = all_pass;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const CheckResult& r : results) {
            all_pass = all_pass && r.pass;
            std::printf("[%s] %-13s %s\n       %s\n", r.pass ? "PASS" : "FAIL",
                        r.id.c_str(), r.title.c_str(), r.detail.c_str());
        }
        std::printf("%zu checks, %s\n", results.size(),
                    all_pass ? "all passed" : "FAILURES PRESENT");
    }
    print_timing(timing, timer);
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact certification of cubic-plus-conic curve arrangements"};
    app.require_subcommand(1);
    bool no_timing = false;
    app.add_flag("--no-timing", no_timing, "suppress wall-time output (deterministic)");

    std::string curve;
    bool cat_json = false, cat_pairs = false;
    CLI::App* cat = app.add_subcommand("catalog", "list curves, conics and orbits");
    cat->add_option("curve", curve, "nodal or fermat")
        ->required()
        ->check(CLI::IsMember({"nodal", "fermat"}));
    cat->add_flag("--json", cat_json, "machine-readable output");
    cat->add_flag("--pairs", cat_pairs, "list the conic pair orbit representatives");

    std::string cert_curve;
    std::vector<std::string> selection;
    bool cert_json = false;
    CLI::App* cert = app.add_subcommand("certify", "certify a cubic + conics arrangement");
    cert->add_option("curve", cert_curve, "nodal or fermat")
        ->required()
        ->check(CLI::IsMember({"nodal", "fermat"}));
    cert->add_option("conics", selection,
                     "conic ids: 1..3 for nodal, Pj:slot for fermat");
    cert->add_flag("--json", cert_json, "machine-readable output");

    std::string only;
    bool pc_json = false, pc_slow = false;
    CLI::App* pc = app.add_subcommand("paper-check", "run the full acceptance suite");
    pc->add_option("--only", only, "run only checks whose id contains this string");
    pc->add_flag("--json", pc_json, "machine-readable output");
    pc->add_flag("--slow", pc_slow, "widen spot checks to their full sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors map to exit code 2
    }

    try {
        if (cat->parsed()) return cmd_catalog(curve, cat_json, cat_pairs, !no_timing);
        if (cert->parsed())
            return cmd_certify(cert_curve, selection, cert_json, !no_timing);
        return cmd_paper_check(only, pc_slow, pc_json, !no_timing);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
