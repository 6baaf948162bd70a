#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "celestial/catalog.hpp"
#include "celestial/classifier.hpp"
#include "celestial/lattice.hpp"
#include "celestial/moebius.hpp"

using namespace celestial;

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::size_t compared_items(const std::string& which) {
    if (which == "g") return 96;
    if (which == "c1") return expected_tables().c1.size();
    if (which == "m4") return expected_tables().m4.size();
    if (which == "m4-classes") return expected_tables().m4_classes.size();
    if (which == "schicho") return expected_tables().schicho.size();
    return expected_tables().types.size();
}

SurfaceRecord resolve_surface(const std::string& name, const std::string& file) {
    if (!file.empty()) {
        SurfaceRecord rec = load_user_surface(file);
        for (const auto& n : catalog_names())
            if (n == rec.name) throw UsageError("'" + rec.name + "' names an embedded surface; choose another name");
        return rec;
    }
    if (name.empty()) throw UsageError("give a surface name or --file");
    return lookup(name);
}

LatticeSpec parse_lattice(const std::string& s) {
    if (s.size() >= 4 && s[1] == '(' && s.back() == ')') {
        int r = std::stoi(s.substr(2, s.size() - 3));
        if (s[0] == 'B' || s[0] == 'b') return LatticeSpec::b(r);
        if (s[0] == 'P' || s[0] == 'p') return LatticeSpec::p(r);
    }
    throw UsageError("lattice must look like B(5) or P(0)");
}

std::vector<std::string> split_names(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (c != ' ') {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

nlohmann::json names_json(const LatticeSpec& L, const std::vector<DivisorClass>& v) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : v) j.push_back(class_name(L, c));
    return j;
}

void print_names(const LatticeSpec& L, const std::vector<DivisorClass>& v) {
    for (const auto& c : v) std::cout << class_name(L, c) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Celestial surfaces: lattice tables, surface verification and Moebius maps"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string format = "text";
    int samples = 3;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--samples", samples, "Sample parameters for circle checks")->check(CLI::Range(1, 50));

    // tables
    auto* tables = app.add_subcommand("tables", "Regenerate classification tables");
    std::string which;
    bool diff = false;
    tables->add_option("which,--which", which, "c1, g, m4, m4-classes, schicho or types (default: all)")
        ->check(CLI::IsMember(table_names()));
    tables->add_flag("--diff", diff, "Compare with the printed tables");

    // surface
    auto* surface = app.add_subcommand("surface", "Catalog surfaces");
    surface->require_subcommand(1);
    std::string sname, sfile;
    bool no_round_trip = false;
    std::vector<CLI::App*> surface_cmds;
    for (const char* n : {"verify", "model", "info"}) {
        auto* c = surface->add_subcommand(n);
        c->add_option("name", sname, "Catalog name (\"all\" with verify)");
        c->add_option("--file", sfile, "Surface file");
        surface_cmds.push_back(c);
    }
    surface_cmds[0]->add_flag("--no-round-trip", no_round_trip, "Skip inverse-map checks of declared images");
    auto* list = surface->add_subcommand("list", "List catalog names");

    // map
    auto* map = app.add_subcommand("map", "Moebius maps");
    map->require_subcommand(1);
    std::string mname, mtarget, mfile;
    auto* map_apply = map->add_subcommand("apply", "Push a surface through a map");
    map_apply->add_option("--map", mname, "mu0..mu9 or a word such as f*b0*finv*t(-1,-1,0)")->required();
    map_apply->add_option("--surface", mtarget, "Catalog name");
    map_apply->add_option("--file", mfile, "Surface file");
    auto* map_show = map->add_subcommand("show", "Show a map");
    map_show->add_option("--map", mname, "mu0..mu9 or a word")->required();

    // lattice
    auto* lattice = app.add_subcommand("lattice", "Lattice queries");
    lattice->require_subcommand(1);
    std::string lname = "B(5)", config;
    int square = 0, degree = 2, ri = 0;
    auto* l_enum = lattice->add_subcommand("enumerate", "Classes with given square and anticanonical degree");
    l_enum->add_option("--square", square, "C^2")->required();
    l_enum->add_option("--degree", degree, "-K.C")->required();
    std::vector<CLI::App*> lcmds{l_enum};
    for (const char* n : {"orbit", "two-set", "one-set", "dynkin"}) {
        auto* c = lattice->add_subcommand(n);
        c->add_option("--config", config, "Comma separated classes, e.g. 12,1123");
        lcmds.push_back(c);
    }
    lcmds[2]->add_option("--ri", ri, "Keep classes fixed by this real structure (B(5))");
    for (auto* c : lcmds) {
        c->add_option("--lattice", lname, "B(r) or P(r)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    bool json = format == "json";

    try {
        if (*tables) {
            std::vector<std::string> names = which.empty() ? table_names() : std::vector<std::string>{which};
            nlohmann::json out = nlohmann::json::array();
            int status = 0;
            for (const auto& w : names) {
                if (diff) {
                    auto d = diff_table(w);
                    if (!d.empty()) status = 1;
                    if (json) {
                        out.push_back({{"table", w}, {"discrepancies", d}, {"compared", compared_items(w)}});
                    } else {
                        for (const auto& line : d) std::cout << w << ": " << line << "\n";
                        if (d.empty()) std::cout << w << ": " << compared_items(w) << " entries matched\n";
                        if (w == "schicho")
                            for (const auto& n : verify_schicho_rows().notes) std::cout << w << ": note: " << n << "\n";
                    }
                } else if (json) {
                    out.push_back(table_json(w));
                } else {
                    if (names.size() > 1) std::cout << "== " << w << "\n";
                    std::cout << table_text(w);
                }
            }
            if (json) std::cout << out.dump(2) << "\n";
            return status;
        }

        if (*surface) {
            if (*list) {
                for (const auto& n : catalog_names()) std::cout << n << "\n";
                return 0;
            }
            VerifyOptions opt;
            opt.samples = samples;
            opt.round_trip = !no_round_trip;
            if (*surface_cmds[0]) {
                std::vector<Report> reports;
                if (sname == "all" && sfile.empty()) reports = verify_catalog(opt);
                else reports.push_back(verify_surface(resolve_surface(sname, sfile), opt));
                bool ok = true;
                nlohmann::json out = nlohmann::json::array();
                for (const auto& r : reports) {
                    ok = ok && r.ok();
                    if (json) out.push_back(r.to_json());
                    else std::cout << r.str();
                }
                if (json) std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
                return ok ? 0 : 1;
            }
            SurfaceRecord rec = resolve_surface(sname, sfile);
            if (*surface_cmds[1]) {
                SphereSystem m = moebius_model(rec.surface(Domain::gaussian()));
                if (json) std::cout << nlohmann::json{{"name", rec.name}, {"sphere", m.sphere.str()}, {"model", m.model.str()}}.dump(2) << "\n";
                else std::cout << m.str() << "\n";
                return 0;
            }
            if (json) {
                std::cout << rec.to_json().dump(2) << "\n";
            } else {
                std::cout << rec.to_text();
                if (!rec.erratum.empty()) std::cerr << "erratum: " << rec.erratum << "\n";
            }
            return 0;
        }

        if (*map) {
            MoebiusMap m = MoebiusMap::parse(mname);
            if (*map_show) {
                if (json) {
                    nlohmann::json comps = nlohmann::json::array();
                    for (const auto& c : m.forward().components) comps.push_back(c.str());
                    std::cout << nlohmann::json{{"name", m.name()}, {"word", m.word_str()}, {"components", comps}}.dump(2) << "\n";
                } else {
                    std::cout << (m.name().empty() ? "" : m.name() + " = ") << m.word_str() << "\n";
                    const auto& f = m.forward();
                    for (std::size_t i = 0; i < f.components.size(); ++i)
                        std::cout << f.target[i] << " -> " << f.components[i].str() << "\n";
                }
                return 0;
            }
            SurfaceRecord rec = resolve_surface(mtarget, mfile);
            MultiPoly pushed = push_surface(m, rec.surface(Domain::gaussian()));
            SurfaceType t = surface_type(pushed);
            if (json)
                std::cout << nlohmann::json{{"map", mname}, {"surface", rec.name}, {"image", pushed.str()}, {"type", {t.d, t.c}}}.dump(2) << "\n";
            else
                std::cout << pushed.str() << "\n# type (" << t.d << "," << t.c << ")\n";
            return 0;
        }

        if (*lattice) {
            LatticeSpec L = parse_lattice(lname);
            Configuration c = parse_configuration(L, split_names(config));
            if (*lcmds[0]) {
                auto v = enumerate_classes(L, square, degree);
                if (json) std::cout << names_json(L, v).dump(2) << "\n";
                else print_names(L, v);
                return 0;
            }
            if (*lcmds[1]) {
                if (!(L == LatticeSpec::b(5))) throw UsageError("orbit queries need B(5)");
                int ci = canonical_configuration(c);
                Configuration canon = canonical_form(L, c);
                if (json)
                    std::cout << nlohmann::json{{"ci", ci}, {"canonical", configuration_str(L, canon)}, {"dynkin", dynkin_type(L, c).str()}}.dump(2) << "\n";
                else
                    std::cout << "CI " << ci << " " << dynkin_type(L, c).str() << ", least image " << configuration_str(L, canon) << "\n";
                return 0;
            }
            if (*lcmds[2] || *lcmds[3]) {
                validate_configuration(L, c);
                std::vector<DivisorClass> v;
                if (*lcmds[2] && ri != 0) {
                    if (!(L == LatticeSpec::b(5))) throw UsageError("--ri needs B(5)");
                    v = real_two_set(c, ri);
                } else {
                    v = *lcmds[2] ? two_set(L, c) : one_set(L, c);
                }
                if (json) std::cout << names_json(L, v).dump(2) << "\n";
                else print_names(L, v);
                return 0;
            }
            validate_configuration(L, c);
            DynkinType d = dynkin_type(L, c);
            if (json) std::cout << nlohmann::json{{"dynkin", d.str()}, {"components", d.components.size()}}.dump(2) << "\n";
            else std::cout << d.str() << "\n";
            return 0;
        }
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
