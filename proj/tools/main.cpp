// Command-line interface: invariants of germs and projective hypersurfaces,
// plus the corpus verification driver.  Exit codes: 0 all checks pass, 1 a
// check or computation failed, 2 usage/parse/precondition error, 3 reduction
// budget exceeded.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "milnor/classify.hpp"
#include "milnor/corpus.hpp"
#include "milnor/errors.hpp"
#include "milnor/local.hpp"
#include "milnor/parse.hpp"
#include "milnor/planecurve.hpp"
#include "milnor/projective.hpp"
#include "milnor/puiseux.hpp"
#include "milnor/verify.hpp"
#include "milnor/weighted.hpp"

namespace {

using nlohmann::json;
using namespace milnor;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// The polynomial argument of `mu` may name a file holding the expression
// (with '#' comments); anything that is not an existing file is parsed
// directly.
std::string expression_from(const std::string& arg) {
    std::error_code ec;
    if (!std::filesystem::is_regular_file(arg, ec)) return arg;
    std::ifstream in(arg);
    if (!in) throw PreconditionError("cannot read file " + arg);
    std::ostringstream text;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        text << line << ' ';
    }
    return text.str();
}

std::vector<long> parse_coord_list(const std::string& text) {
    std::vector<long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        long v = std::stol(item, &used);
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw PreconditionError("bad coordinate '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw PreconditionError("empty coordinate list");
    return out;
}

std::vector<ProjectivePoint> parse_point_list(const std::string& text) {
    std::vector<ProjectivePoint> out;
    std::stringstream ss(text);
    std::string tuple;
    while (std::getline(ss, tuple, ';')) {
        if (tuple.find_first_not_of(" \t") == std::string::npos) continue;
        out.push_back(ProjectivePoint::from_ints(parse_coord_list(tuple)));
    }
    return out;
}

std::string opt_int(const std::optional<std::int64_t>& v) {
    return v ? std::to_string(*v) : "infinite";
}

json seq_json(const std::vector<std::int64_t>& seq) {
    json a = json::array();
    for (auto v : seq) a.push_back(v);
    return a;
}

std::string seq_text(const std::vector<std::int64_t>& seq) {
    std::string s = "[";
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(seq[i]);
    }
    return s + "]";
}

// Shared state for one invocation.
struct Options {
    std::uint64_t seed = 42;
    std::int64_t budget = 1'000'000;
    int trials = 5;
    bool as_json = false;

    Budget make_budget() const {
        if (budget < 1) throw PreconditionError("--budget must be positive");
        return Budget{static_cast<std::uint64_t>(budget), 0};
    }
    json report(const json& input, const json& invariants, const json& checks, double secs) const {
        return json{{"input", input},
                    {"invariants", invariants},
                    {"checks", checks},
                    {"timings", json{{"total_s", secs}}},
                    {"seed", seed}};
    }
};

int cmd_mu(const Options& opt, const std::string& arg, const std::optional<std::string>& point) {
    auto t0 = std::chrono::steady_clock::now();
    std::string text = expression_from(arg);
    Budget budget = opt.make_budget();
    json input{{"polynomial", text}};
    json inv;
    std::optional<std::int64_t> mu, tau;
    if (point) {
        Hypersurface h(parse_polynomial(text));
        ProjectivePoint x = ProjectivePoint::from_ints(parse_coord_list(*point));
        Polynomial germ = germ_at(h, x);
        input["point"] = x.str();
        int m = multiplicity(h, x);
        mu = milnor_number(germ, budget);
        tau = tjurina_number(germ, budget);
        inv = {{"multiplicity", m}, {"mu", mu ? json(*mu) : json()}, {"tau", tau ? json(*tau) : json()}};
        if (!opt.as_json) {
            std::cout << "point = " << x.str() << "\nmultiplicity = " << m << "\nmu = " << opt_int(mu)
                      << "\ntau = " << opt_int(tau) << "\n";
        }
    } else {
        Polynomial f = parse_polynomial(text);
        mu = milnor_number(f, budget);
        tau = tjurina_number(f, budget);
        inv = {{"mu", mu ? json(*mu) : json()}, {"tau", tau ? json(*tau) : json()}};
        if (!opt.as_json)
            std::cout << "mu = " << opt_int(mu) << "\ntau = " << opt_int(tau) << "\n";
    }
    if (opt.as_json) std::cout << opt.report(input, inv, json::array(), seconds_since(t0)).dump(2) << "\n";
    return 0;
}

int cmd_sectional(const Options& opt, const std::string& expr, const std::string& point) {
    auto t0 = std::chrono::steady_clock::now();
    Hypersurface h(parse_polynomial(expr));
    ProjectivePoint x = ProjectivePoint::from_ints(parse_coord_list(point));
    Budget budget = opt.make_budget();
    auto seq = sectional_milnor_sequence(h, x, opt.seed, opt.trials, budget);
    if (opt.as_json) {
        std::cout << opt.report(json{{"polynomial", expr}, {"point", x.str()}},
                                json{{"mu_sequence", seq_json(seq)}}, json::array(), seconds_since(t0))
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "mu-sequence = " << seq_text(seq) << "\n";
    }
    return 0;
}

int cmd_polar(const Options& opt, const std::string& expr, const std::string& points) {
    auto t0 = std::chrono::steady_clock::now();
    Hypersurface h(parse_polynomial(expr));
    std::vector<ProjectivePoint> pts = parse_point_list(points);
    Budget budget = opt.make_budget();
    std::int64_t polar = polar_degree(h, pts, budget);
    if (opt.as_json) {
        json jp = json::array();
        for (const auto& p : pts) jp.push_back(p.str());
        std::cout << opt.report(json{{"polynomial", expr}, {"singular_points", jp}},
                                json{{"polar_degree", polar}}, json::array(), seconds_since(t0))
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "polar degree = " << polar << "\n";
    }
    return 0;
}

int cmd_cone(const Options& opt, const std::string& expr) {
    auto t0 = std::chrono::steady_clock::now();
    Hypersurface h(parse_polynomial(expr));
    ApexSpace apex = apex_space(h);
    json basis = json::array();
    for (const auto& v : apex.basis) {
        json row = json::array();
        for (const auto& z : v) row.push_back(z.get_str());
        basis.push_back(row);
    }
    if (opt.as_json) {
        std::cout << opt.report(json{{"polynomial", expr}},
                                json{{"is_cone", apex.is_cone()}, {"apex_dim", apex.dim()}, {"apex_basis", basis}},
                                json::array(), seconds_since(t0))
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "cone = " << (apex.is_cone() ? "yes" : "no") << "\napex dimension = " << apex.dim() << "\n";
        for (const auto& v : apex.basis) {
            std::cout << "apex direction =";
            for (const auto& z : v) std::cout << " " << z.get_str();
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_branches(const Options& opt, const std::string& expr) {
    auto t0 = std::chrono::steady_clock::now();
    Polynomial f = parse_polynomial(expr);
    Budget budget = opt.make_budget();
    std::int64_t r = branch_count(f, budget);
    if (opt.as_json) {
        std::cout << opt.report(json{{"polynomial", expr}}, json{{"branches", r}}, json::array(),
                                seconds_since(t0))
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "branches = " << r << "\n";
    }
    return 0;
}

int cmd_classify(const Options& opt, const std::string& expr, const std::optional<std::string>& point) {
    auto t0 = std::chrono::steady_clock::now();
    Budget budget = opt.make_budget();
    Classification c;
    json input{{"polynomial", expr}};
    if (point) {
        Hypersurface h(parse_polynomial(expr));
        ProjectivePoint x = ProjectivePoint::from_ints(parse_coord_list(*point));
        input["point"] = x.str();
        c = classify_point(h, x, opt.seed, opt.trials, budget);
    } else {
        c = classify_germ(parse_polynomial(expr), opt.seed, opt.trials, budget);
    }
    std::string label = to_string(c.cls);
    if (c.cls == CoarseClass::AType) label += "(" + std::to_string(c.k) + ")";
    if (opt.as_json) {
        std::cout << opt.report(input,
                                json{{"class", to_string(c.cls)},
                                     {"k", c.k},
                                     {"corank", c.corank},
                                     {"mu_sequence", seq_json(c.mu_sequence)}},
                                json::array(), seconds_since(t0))
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "class = " << label << "\ncorank = " << c.corank
                  << "\nmu-sequence = " << seq_text(c.mu_sequence) << "\n";
    }
    return 0;
}

int cmd_hessian(const Options& opt, const std::string& expr) {
    auto t0 = std::chrono::steady_clock::now();
    Hypersurface h(parse_polynomial(expr));
    HessianVerdict v = hessian_vanishes(h, opt.seed);
    if (opt.as_json) {
        std::cout << opt.report(json{{"polynomial", expr}},
                                json{{"vanishes", v.vanishes},
                                     {"certain", v.certain},
                                     {"samples", v.samples},
                                     {"failure_bound", to_string(v.failure_bound)}},
                                json::array(), seconds_since(t0))
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "det Hess vanishes = " << (v.vanishes ? "yes" : "no") << " ("
                  << (v.certain ? "certificate" : "probabilistic, failure bound " + to_string(v.failure_bound))
                  << ", " << v.samples << " samples)\n";
    }
    return 0;
}

int cmd_verify(const Options& opt, const std::optional<std::string>& record,
               const std::optional<std::string>& corpus_file, const std::optional<std::string>& dump_file,
               int jobs) {
    auto t0 = std::chrono::steady_clock::now();
    if (dump_file) {
        std::ofstream out(*dump_file);
        if (!out) throw PreconditionError("cannot write file " + *dump_file);
        out << to_text(builtin_corpus());
        std::cout << "wrote " << builtin_corpus().size() << " records to " << *dump_file << "\n";
        return 0;
    }
    std::vector<CorpusRecord> corpus;
    if (corpus_file) {
        std::ifstream in(*corpus_file);
        if (!in) throw PreconditionError("cannot read file " + *corpus_file);
        std::ostringstream text;
        text << in.rdbuf();
        corpus = parse_corpus(text.str());
    } else {
        corpus = builtin_corpus();
    }
    if (record) {
        std::vector<CorpusRecord> picked;
        for (const auto& r : corpus)
            if (r.name == *record) picked.push_back(r);
        if (picked.empty()) throw PreconditionError("no record named '" + *record + "'");
        corpus = std::move(picked);
    }

    VerificationReport report = verify_all(corpus, opt.seed, opt.budget, opt.trials, jobs);

    if (opt.as_json) {
        json checks = json::array();
        json timings;
        for (const auto& rec : report.records) {
            for (const auto& c : rec.checks)
                checks.push_back(json{{"name", rec.record + "/" + c.name},
                                      {"passed", c.passed},
                                      {"detail", c.detail}});
            timings[rec.record] = rec.seconds;
        }
        timings["total_s"] = seconds_since(t0);
        json input{{"corpus", corpus_file ? *corpus_file : std::string("builtin")},
                   {"record", record ? *record : std::string("all")}};
        json inv{{"records", report.records.size()},
                 {"checks", report.check_count()},
                 {"failures", report.failure_count()}};
        std::cout << json{{"input", input},
                          {"invariants", inv},
                          {"checks", checks},
                          {"timings", timings},
                          {"seed", opt.seed}}
                         .dump(2)
                  << "\n";
    } else {
        for (const auto& rec : report.records) {
            std::cout << (rec.all_passed() ? "ok   " : "FAIL ") << rec.record << "  ("
                      << rec.checks.size() << " checks, " << std::fixed << std::setprecision(2)
                      << rec.seconds << "s)\n";
            for (const auto& c : rec.checks)
                if (!c.passed) std::cout << "     " << c.name << ": " << c.detail << "\n";
        }
        std::cout << report.records.size() << " records, " << report.check_count() << " checks, "
                  << report.failure_count() << " failures\n";
    }
    return report.all_passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of isolated hypersurface singularities"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--seed", opt.seed, "seed for randomized checks")->capture_default_str();
    app.add_option("--budget", opt.budget, "reduction-step cap per standard-basis run")
        ->capture_default_str();
    app.add_option("--trials", opt.trials, "random slices per sectional step")->capture_default_str();
    app.add_flag("--json", opt.as_json, "emit one JSON object instead of text");

    std::string arg_poly, arg_points;
    std::optional<std::string> arg_point, arg_record, arg_corpus, arg_dump;
    int arg_jobs = 1;

    auto* mu = app.add_subcommand("mu", "Milnor and Tjurina number of a germ (or of a hypersurface germ at --point)");
    mu->add_option("poly", arg_poly, "polynomial expression or file")->required();
    mu->add_option("--point", arg_point, "projective point a,b,c on the hypersurface");

    auto* sec = app.add_subcommand("sectional", "sectional Milnor sequence at a singular point");
    sec->add_option("poly", arg_poly, "homogeneous polynomial")->required();
    sec->add_option("--point", arg_point, "projective point a,b,c")->required();

    auto* pol = app.add_subcommand("polar", "polar degree from the complete singular locus");
    pol->add_option("poly", arg_poly, "homogeneous polynomial")->required();
    pol->add_option("--points", arg_points, "singular points 'a,b,c;d,e,f' (empty when smooth)");

    auto* cone = app.add_subcommand("cone", "apex space and cone test");
    cone->add_option("poly", arg_poly, "homogeneous polynomial")->required();

    auto* bran = app.add_subcommand("branches", "branch count of a reduced plane germ");
    bran->add_option("poly", arg_poly, "two-variable germ vanishing at the origin")->required();

    auto* cls = app.add_subcommand("classify", "coarse class from the sectional sequence");
    cls->add_option("poly", arg_poly, "germ, or homogeneous polynomial with --point")->required();
    cls->add_option("--point", arg_point, "projective point a,b,c");

    auto* hes = app.add_subcommand("hessian", "does the Hessian determinant vanish identically?");
    hes->add_option("poly", arg_poly, "homogeneous polynomial")->required();

    auto* ver = app.add_subcommand("verify", "recompute and check corpus records");
    ver->add_option("--record", arg_record, "verify a single record by name");
    ver->add_option("--corpus", arg_corpus, "load records from a corpus text file instead of the builtin set");
    ver->add_option("--dump-corpus", arg_dump, "write the builtin corpus to a file and exit");
    ver->add_option("--jobs", arg_jobs, "verify records on this many threads")->capture_default_str();

    // global flags may be written after the subcommand, e.g. `verify --json`
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (mu->parsed()) return cmd_mu(opt, arg_poly, arg_point);
        if (sec->parsed()) return cmd_sectional(opt, arg_poly, *arg_point);
        if (pol->parsed()) return cmd_polar(opt, arg_poly, arg_points);
        if (cone->parsed()) return cmd_cone(opt, arg_poly);
        if (bran->parsed()) return cmd_branches(opt, arg_poly);
        if (cls->parsed()) return cmd_classify(opt, arg_poly, arg_point);
        if (hes->parsed()) return cmd_hessian(opt, arg_poly);
        if (ver->parsed()) return cmd_verify(opt, arg_record, arg_corpus, arg_dump, arg_jobs);
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonIsolatedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const NonReducedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
