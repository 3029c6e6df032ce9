#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <set>
#include <sstream>

#include "caustic/catalog.hpp"
#include "caustic/critlab.hpp"
#include "caustic/enumerator.hpp"
#include "caustic/errors.hpp"
#include "caustic/json_io.hpp"
#include "caustic/looplab.hpp"
#include "caustic/report.hpp"

using namespace caustic;

namespace {

struct Config {
    std::string format = "auto";
    int workers = 0;
    std::size_t cap = 1000000;
    bool quiet = false;
};

std::string format_or(const Config& c, const std::string& fallback) { return c.format == "auto" ? fallback : c.format; }

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

FamilySpec load_family(const std::string& what, int member) {
    std::vector<FamilySpec> fams;
    if (std::filesystem::exists(what)) fams.push_back(family_from_json(read_json_file(what)));
    else fams = named_families(what);
    if (member < 0 || member >= static_cast<int>(fams.size()))
        throw Error(ErrorCode::InvalidFamily, what + " has " + std::to_string(fams.size()) + " member(s)");
    return fams[member];
}

int loop_parameter(const FamilySpec& f) {
    for (std::size_t i = 0; i < f.parameters.size(); ++i)
        if (f.parameters[i].loop) return static_cast<int>(i);
    return 0;
}

// Saddles exchanged by the monodromy; all real saddles when no transposition is found.
std::vector<int> exchanged_saddles(const TrackedPath& p) {
    auto s = real_strands(p, 1);
    std::vector<int> out;
    for (int i : s)
        for (int j : s)
            if (i < j && p.permutation.size() > static_cast<std::size_t>(j) && p.permutation[i] == j && p.permutation[j] == i)
                out = {i, j};
    return out.empty() ? s : out;
}

EnumerateOptions enumerate_options(const Config& c) {
    EnumerateOptions o;
    o.workers = c.workers;
    o.cap = c.cap;
    if (!c.quiet) o.progress = [](std::size_t n) { std::cerr << "  " << n << " states\n"; };
    return o;
}

int print_entries(const std::vector<TableEntry>& entries, const Config& c) {
    int bad = 0;
    for (auto& e : entries) bad += !e.ok;
    const std::string fmt = format_or(c, "text");
    if (fmt == "json") {
        auto arr = nlohmann::json::array();
        for (auto& e : entries) arr.push_back(to_json(e));
        print_json({{"entries", arr}, {"mismatches", bad}});
    } else if (fmt == "csv") {
        std::cout << "table,row,quantity,published,computed,ok\n";
        for (auto& e : entries)
            std::cout << e.table << ",\"" << e.row << "\"," << e.what << ",\"" << e.published.dump() << "\",\""
                      << e.computed.dump() << "\"," << (e.ok ? "yes" : "no") << "\n";
    } else {
        for (auto& e : entries)
            if (e.what != "columns")
                std::printf("Table %d  %-14s %-30s published %-8s computed %-8s %s\n", e.table, e.row.c_str(),
                            e.what.c_str(), e.published.dump().c_str(), e.computed.dump().c_str(),
                            e.ok ? "ok" : "MISMATCH");
        std::printf("%d mismatch(es)\n", bad);
    }
    return bad ? exit_code(ErrorCode::VerificationMismatch) : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Virtual morsifications, passports and loops in caustic complements"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--format", cfg.format, "json, csv, text or svg (default depends on the command)")
        ->check(CLI::IsMember({"auto", "json", "csv", "text", "svg"}));
    app.add_option("--workers", cfg.workers, "worker threads (default: CAUSTIC_WORKERS or all cores)")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--cap", cfg.cap, "state cap for enumerations");
    app.add_flag("--quiet", cfg.quiet, "no progress on standard error");

    std::string cls, poly, family, seed, tables = "1,2,3";
    int steps = 256, member = 0, grid = 0;
    double epsilon = 0, alpha = 1, kappa = 0.05;
    double morse_tol = 1e-8, real_tol = 1e-8;
    bool component_only = false, with_stats = false;

    auto* c_catalog = app.add_subcommand("catalog", "normal form, deformation and predicted counts");
    c_catalog->add_option("class", cls, "class name, e.g. E7, D6-, A3(+,-)")->required();

    auto* c_passport = app.add_subcommand("passport", "critical points of a polynomial");
    c_passport->add_option("--poly", poly, "polynomial in x, y (and z)")->required();
    c_passport->add_option("--morse-tol", morse_tol, "relative Hessian determinant threshold");
    c_passport->add_option("--real-tol", real_tol, "imaginary part threshold, relative to 1 + |Re|");

    auto* c_verify = app.add_subcommand("verify-recipes", "solve every recipe of a class");
    c_verify->add_option("class", cls)->required();

    auto* c_winding = app.add_subcommand("winding", "winding number of the saddle pair along a loop");
    auto* c_track = app.add_subcommand("track", "critical point trajectories along a loop");
    for (auto* s : {c_winding, c_track}) {
        s->add_option("--family", family, "built-in name (d4-basic, e7-fig8, e8-fig10) or JSON file")->required();
        s->add_option("--steps", steps)->check(CLI::PositiveNumber);
        s->add_option("--member", member, "index within a multi-member family");
    }

    auto* c_torus = app.add_subcommand("torus-j10", "two-parameter loop family of J10^3");
    c_torus->add_option("--epsilon", epsilon)->check(CLI::PositiveNumber);
    c_torus->add_option("--alpha", alpha)->check(CLI::PositiveNumber);
    c_torus->add_option("--grid", grid)->check(CLI::Range(4, 4096));

    auto* c_klein = app.add_subcommand("klein-p8", "Klein bottle family of P8^2");
    c_klein->add_option("--kappa", kappa)->check(CLI::PositiveNumber);
    c_klein->add_option("--epsilon", epsilon)->check(CLI::PositiveNumber);
    c_klein->add_option("--grid", grid)->check(CLI::Range(4, 4096));

    auto* c_enum = app.add_subcommand("enumerate", "all virtual morsifications reachable from a seed");
    c_enum->add_option("--seed", seed, "seed or divide JSON file, or a shipped class name")->required();
    c_enum->add_flag("--component-only", component_only, "do not cross the caustic");

    auto* c_comp = app.add_subcommand("components", "virtual components of a seed's class");
    c_comp->add_option("--seed", seed)->required();
    c_comp->add_flag("--stats", with_stats, "statistics by passport data");

    auto* c_report = app.add_subcommand("report", "compare computed values with the published tables");
    c_report->add_option("--tables", tables, "comma separated subset of 1,2,3");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int r = app.exit(e);
        return r == 0 ? 0 : 2;
    }

    try {
        if (c_catalog->parsed()) {
            print_json(catalog_json(parse_class(cls)));
            return 0;
        }
        if (c_passport->parsed()) {
            auto f = parse_polynomial(poly);
            CritOptions o;
            o.morse_tol = morse_tol;
            o.real_tol = real_tol;
            auto pts = critical_points(f, o);
            auto p = passport(pts, f.nvars());
            if (format_or(cfg, "text") == "json") print_json(critical_report(f, pts));
            else std::cout << passport_str(p) << "\n";
            return 0;
        }
        if (c_verify->parsed()) {
            auto rep = verify_recipes(parse_class(cls), true);
            print_json(to_json(rep));
            return rep.ok ? 0 : exit_code(ErrorCode::RecipeMismatch);
        }
        if (c_winding->parsed() || c_track->parsed()) {
            FamilySpec f = load_family(family, member);
            const int param = loop_parameter(f);
            TrackedPath p = track(f, param, steps);
            if (c_track->parsed()) {
                const std::string fmt = format_or(cfg, "json");
                if (fmt == "csv") std::cout << to_csv(p);
                else if (fmt == "svg") std::cout << to_svg(p);
                else print_json(to_json(p));
                return 0;
            }
            if (!p.loop) throw Error(ErrorCode::InvalidFamily, "family " + f.name + " has no loop parameter");
            auto pair = exchanged_saddles(p);
            int w = winding_number(configurations(p, pair));
            if (format_or(cfg, "text") == "json") {
                print_json({{"family", f.name},
                            {"steps", steps},
                            {"samples", p.samples.size()},
                            {"passport", passport_at(p, 0, f.base.nvars())},
                            {"strands", pair},
                            {"permutation", p.permutation},
                            {"winding", w}});
            } else {
                std::cout << w << "\n";
            }
            return 0;
        }
        if (c_torus->parsed()) {
            auto r = j10_torus(epsilon > 0 ? epsilon : 0.3, alpha, grid ? grid : 32);
            print_json(to_json(r));
            if (r.ok) return 0;
            return r.error.empty() ? exit_code(ErrorCode::VerificationMismatch) : exit_code(ErrorCode::CausticHit);
        }
        if (c_klein->parsed()) {
            auto r = p8_klein(kappa, epsilon > 0 ? epsilon : 0.05, grid ? grid : 64);
            print_json(to_json(r));
            if (r.ok) return 0;
            return r.error.empty() ? exit_code(ErrorCode::VerificationMismatch) : exit_code(ErrorCode::CausticHit);
        }
        if (c_enum->parsed() || c_comp->parsed()) {
            auto vm = load_seed(seed);
            auto o = enumerate_options(cfg);
            Enumeration e = component_only ? enumerate_component(vm, o) : enumerate_all(vm, o);
            auto j = to_json(e);
            if (c_comp->parsed() && !with_stats) j.erase("stats");
            const std::string fmt = format_or(cfg, "json");
            if (fmt == "csv") {
                std::cout << to_csv(e);
            } else if (fmt == "text") {
                std::cout << e.cls << ": " << e.components.size() << " components, total " << e.total() << "\n";
                for (auto& c : e.components)
                    std::cout << "  " << passport_str(c.passport) << " " << c.size << (c.all_real ? " all real" : "")
                              << "\n";
            } else {
                print_json(j);
            }
            return 0;
        }
        if (c_report->parsed()) {
            std::set<int> want;
            std::stringstream ss(tables);
            for (std::string t; std::getline(ss, t, ',');) {
                if (t != "1" && t != "2" && t != "3") throw Error(ErrorCode::ParseError, "unknown table '" + t + "'");
                want.insert(std::stoi(t));
            }
            auto o = enumerate_options(cfg);
            std::vector<TableEntry> entries;
            if (want.count(1)) entries = table1_entries(o);
            for (int t : {2, 3})
                if (want.count(t)) {
                    auto e = enumerate_all(load_seed(t == 2 ? "E7" : "E8"), o);
                    auto s = statistics_entries(t, e);
                    entries.insert(entries.end(), s.begin(), s.end());
                }
            return print_entries(entries, cfg);
        }
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    return 0;
}
