// Command-line front end: rank computation, tropical projection of
// membrane points, and matroid diagnostics.
//
// Exit codes: 0 success, 1 usage, 2 parse error, 3 validation error.

#include <CLI11.hpp>
#include <json.hpp>

#include "katz/io.hpp"
#include "katz/ranks.hpp"
#include "katz/tropical.hpp"
#include "katz/vmatroid.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;

bool verbose_logging() {
    const char* env = std::getenv("KATZ_LOG");
    return env != nullptr && std::string(env) != "" && std::string(env) != "0";
}

void log_note(const std::string& msg) {
    if (verbose_logging()) std::cerr << "[katz] " << msg << "\n";
}

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

katz::Rat parse_rat(const std::string& s) {
    katz::Rat r;
    if (r.set_str(s, 10) != 0) throw std::runtime_error("invalid rational: " + s);
    r.canonicalize();
    return r;
}

std::string point_str(const katz::TropicalPoint& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ", ";
        s += p[i].str();
    }
    return s + ")";
}

nlohmann::json point_json(const katz::TropicalPoint& p) {
    auto a = nlohmann::json::array();
    for (const auto& c : p) a.push_back(c.str());
    return a;
}

int cmd_ranks(const std::string& file, bool json) {
    katz::SystemMatrix s = katz::parse_document(read_input(file));
    log_note("system parsed, n=" + std::to_string(s.dim()));
    katz::RankReport r = katz::rank_report(s);
    if (json) {
        std::cout << katz::serialize_report(r) << "\n";
    } else {
        std::cout << "n=" << r.n << " active_columns=" << r.m_active << "\n"
                  << "poincare=" << r.poincare << " true=" << r.true_poincare
                  << " katz=" << katz::rat_str(r.katz) << "\n";
    }
    return 0;
}

int cmd_project(const std::string& file, const std::string& point_spec,
                const std::string& coords_spec, bool json) {
    katz::SystemMatrix s = katz::parse_document(read_input(file));
    katz::MembraneData md(s);
    katz::ValuatedMatroid p = katz::ValuatedMatroid::realize(md);

    katz::TropicalPoint x;
    if (!point_spec.empty()) {
        auto comma = point_spec.find(',');
        if (comma == std::string::npos)
            throw std::runtime_error("--point expects \"ell,k\" (k may be rational, e.g. 3/2)");
        std::size_t ell = std::stoul(point_spec.substr(0, comma));
        katz::Rat k = parse_rat(point_spec.substr(comma + 1));
        x = katz::membrane_point(md, ell, k).coords;
    } else {
        std::istringstream is(coords_spec);
        std::string tok;
        while (std::getline(is, tok, ',')) x.push_back(katz::Trop(parse_rat(tok)));
        if (x.size() != p.ground_size()) {
            std::ostringstream os;
            os << "expected " << p.ground_size() << " coordinates, got " << x.size();
            throw std::invalid_argument(os.str());
        }
    }

    katz::TropicalPoint w = katz::project(p, x);
    if (json) {
        nlohmann::json doc;
        doc["point"] = point_json(x);
        doc["projection"] = point_json(w);
        doc["in_linear_space"] = (w == x);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "point      " << point_str(x) << "\n"
                  << "projection " << point_str(w) << "\n";
    }
    return 0;
}

int cmd_matroid(const std::string& file, std::size_t bases_sample, std::size_t check_axiom,
                std::uint64_t seed) {
    katz::SystemMatrix s = katz::parse_document(read_input(file));
    katz::MembraneData md(s);
    katz::ValuatedMatroid p = katz::ValuatedMatroid::realize(md);
    std::cout << "ground_size=" << p.ground_size() << " rank=" << p.rank() << "\n";

    if (bases_sample > 0) {
        std::mt19937_64 rng(seed);
        std::cout << "sampled basis valuations:";
        for (std::size_t t = 0; t < bases_sample; ++t) {
            // random subsets, keeping the ones that are bases
            katz::Subset w;
            std::vector<std::size_t> all(p.ground_size());
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
            std::shuffle(all.begin(), all.end(), rng);
            w.assign(all.begin(), all.begin() + p.rank());
            std::sort(w.begin(), w.end());
            katz::Trop v = p.evaluate(w);
            if (!v.is_inf()) std::cout << " " << v.str();
        }
        std::cout << "\n";
    }
    if (check_axiom > 0) {
        katz::AxiomReport rep = p.check_exchange_axiom(check_axiom, seed);
        std::cout << "exchange axiom: " << rep.violations << " violations in " << rep.samples
                  << " samples\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poincare, true Poincare and Katz ranks of a meromorphic system at z=0"};
    app.require_subcommand(1);

    std::string file;
    bool json = false;

    auto* ranks = app.add_subcommand("ranks", "compute all three ranks");
    ranks->add_option("file", file, "input document ('-' for stdin)")->required();
    ranks->add_flag("--json", json, "machine-readable output");

    std::string point_spec, coords_spec;
    auto* project = app.add_subcommand("project", "project a membrane point");
    project->add_option("file", file, "input document ('-' for stdin)")->required();
    auto* opt_point =
        project->add_option("--point", point_spec, "membrane point \"ell,k\" (rational k allowed)");
    auto* opt_coords = project->add_option("--coords", coords_spec, "explicit coordinates c1,...,cm");
    opt_point->excludes(opt_coords);
    project->add_flag("--json", json, "machine-readable output");

    std::size_t bases_sample = 0, check_axiom = 0;
    std::uint64_t seed = 0;
    auto* matroid = app.add_subcommand("matroid", "matroid diagnostics");
    matroid->add_option("file", file, "input document ('-' for stdin)")->required();
    matroid->add_option("--bases-sample", bases_sample, "sample N random subsets");
    matroid->add_option("--check-axiom", check_axiom, "run N exchange-axiom samples");
    matroid->add_option("--seed", seed, "rng seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (app.got_subcommand(ranks)) return cmd_ranks(file, json);
        if (app.got_subcommand(project)) {
            if (point_spec.empty() && coords_spec.empty()) {
                std::cerr << "error: project needs --point or --coords\n";
                return kExitUsage;
            }
            return cmd_project(file, point_spec, coords_spec, json);
        }
        if (app.got_subcommand(matroid)) return cmd_matroid(file, bases_sample, check_axiom, seed);
    } catch (const katz::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitUsage;
}
