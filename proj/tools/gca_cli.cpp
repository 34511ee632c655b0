// gca: plan, generate, verify and search Golay complementary arrays.
//
// Machine-readable JSON goes to stdout (or --out); human summaries go to
// stderr. Exit codes: 0 ok, 1 exhausted, 2 infeasible, 3 missing seed,
// 4 verification failed, 5 budget exceeded, 64 usage, 65 parse error.

#include <charconv>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gca/gca.hpp"

#ifndef GCA_DEFAULT_SEEDS
#define GCA_DEFAULT_SEEDS "data/seeds.json"
#endif

namespace {

using gca::io::json;

enum Exit : int {
    kOk = 0,
    kExhausted = 1,
    kInfeasible = 2,
    kMissingSeed = 3,
    kVerificationFailed = 4,
    kBudgetExceeded = 5,
    kUsage = 64,
    kParse = 65,
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string alphabet = "quaternary";
    std::string role = "pair";
    std::string shape;
    std::string seeds = GCA_DEFAULT_SEEDS;
    std::string in;
    std::string out;
    std::string recipe;
    std::string kind;
    std::uint64_t budget = 1'000'000'000ULL;
    std::size_t grid = 16;
    std::uint64_t limit = 1000;
    std::size_t m = 0;
};

gca::Shape parse_shape(const std::string& text) {
    std::vector<std::size_t> dims;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find('x', start), text.size());
        std::size_t value = 0;
        const char* first = text.data() + start;
        const char* last = text.data() + end;
        const auto [ptr, ec] = std::from_chars(first, last, value);
        if (first == last || ec != std::errc() || ptr != last || value == 0) {
            throw UsageError("shape must be positive integers joined by 'x', got '" + text + "'");
        }
        dims.push_back(value);
        start = end + 1;
    }
    return gca::Shape(std::move(dims));
}

gca::Alphabet parse_search_alphabet(const std::string& text) {
    if (text == "binary") return gca::Alphabet::Binary;
    if (text == "quaternary") return gca::Alphabet::Quaternary;
    throw UsageError("alphabet must be 'binary' or 'quaternary', got '" + text + "'");
}

gca::SetRole parse_plan_role(const std::string& text) {
    if (text == "pair") return gca::SetRole::Pair;
    if (text == "quad") return gca::SetRole::Quad;
    throw UsageError("role must be 'pair' or 'quad', got '" + text + "'");
}

void emit(const Options& opt, const json& j) {
    const std::string text = gca::io::dump(j);
    if (opt.out.empty()) {
        std::cout << text;
    } else {
        gca::io::write_file(opt.out, text);
    }
}

gca::SeedRegistry load_seeds(const Options& opt) {
    gca::LoadReport report;
    auto reg = gca::load_registry(opt.seeds, &report);
    for (const auto& msg : report.rejected) std::cerr << "seeds: rejected " << msg << "\n";
    return reg;
}

gca::FeasibilityReport make_plan(const Options& opt, const gca::SeedRegistry& reg) {
    const auto alphabet = parse_search_alphabet(opt.alphabet);
    const auto shape = parse_shape(opt.shape);
    return parse_plan_role(opt.role) == gca::SetRole::Pair ? gca::plan_pair(alphabet, shape)
                                                           : gca::plan_quad(alphabet, shape, reg);
}

int plan_exit(const gca::FeasibilityReport& r) {
    if (r.feasible()) return kOk;
    return r.status == gca::Feasibility::MissingSeed ? kMissingSeed : kInfeasible;
}

void summarize_plan(const Options& opt, const gca::FeasibilityReport& r) {
    std::cerr << opt.alphabet << " " << opt.role << " " << opt.shape << ": " << to_string(r.status);
    if (!r.reason.empty()) std::cerr << " (" << r.reason << ")";
    std::cerr << "\n";
}

int cmd_plan(const Options& opt) {
    const auto reg = load_seeds(opt);
    const auto report = make_plan(opt, reg);
    summarize_plan(opt, report);
    if (report.feasible()) {
        emit(opt, gca::recipe_to_json(*report.recipe));
    } else {
        json j = gca::report_to_json(report);
        j.erase("recipe");
        emit(opt, j);
    }
    return plan_exit(report);
}

int cmd_generate(const Options& opt) {
    const auto reg = load_seeds(opt);
    gca::Recipe recipe;
    if (!opt.recipe.empty()) {
        recipe = gca::recipe_from_json(gca::io::parse_text(gca::io::read_file(opt.recipe), opt.recipe));
    } else {
        if (opt.shape.empty()) throw UsageError("generate needs --recipe or --shape");
        const auto report = make_plan(opt, reg);
        summarize_plan(opt, report);
        if (!report.recipe) return plan_exit(report);
        recipe = *report.recipe;
    }
    const gca::GcaSet set = gca::execute(recipe, reg);
    const auto verdict = gca::is_gca_set(gca::pad_to_common_shape(set.arrays));
    std::cerr << "generated " << set.size() << " x " << set.shape().to_string() << " " << to_string(set.alphabet)
              << " " << to_string(set.role) << ": complementary, total weight " << verdict.total_weight << "\n";
    emit(opt, gca::io::set_to_json(set));
    return kOk;
}

int cmd_verify(const Options& opt) {
    const auto set = gca::io::set_from_json(gca::io::parse_text(gca::io::read_file(opt.in), opt.in));
    const auto padded = gca::pad_to_common_shape(set.arrays);
    const auto verdict = gca::is_gca_set(padded);
    const bool polynomial = gca::gca_check_polynomial(padded);
    const double deviation = gca::spectrum_flatness(padded, opt.grid);
    json structure = json::object();
    for (const auto& [key, claimed] : set.structure) {
        structure[key] = {{"claimed", claimed}, {"holds", gca::evaluate_relation(key, set.arrays)}};
    }
    emit(opt, json{{"complementary", verdict.is_complementary},
                   {"polynomial_check", polynomial},
                   {"total_weight", verdict.total_weight},
                   {"max_sidelobe_norm", verdict.max_sidelobe_norm},
                   {"spectrum_deviation", deviation},
                   {"grid", opt.grid},
                   {"arrays", set.size()},
                   {"shape", padded.front().shape().dims()},
                   {"alphabet", to_string(set.alphabet)},
                   {"structure", structure}});
    std::cerr << opt.in << ": " << (verdict.is_complementary ? "complementary" : "NOT complementary")
              << ", total weight " << verdict.total_weight << ", max sidelobe norm " << verdict.max_sidelobe_norm
              << ", spectrum deviation " << deviation << "\n";
    return verdict.is_complementary && polynomial ? kOk : kVerificationFailed;
}

int cmd_spectrum(const Options& opt) {
    const auto set = gca::io::set_from_json(gca::io::parse_text(gca::io::read_file(opt.in), opt.in));
    const double deviation = gca::spectrum_flatness(gca::pad_to_common_shape(set.arrays), opt.grid);
    emit(opt, json{{"grid", opt.grid}, {"spectrum_deviation", deviation}});
    std::cerr << opt.in << ": max relative deviation from a flat power spectrum " << deviation << " on a grid of "
              << opt.grid << "\n";
    return kOk;
}

int cmd_seed_search(const Options& opt) {
    const auto alphabet = parse_search_alphabet(opt.alphabet);
    gca::SearchOutcome outcome;
    std::string what;
    if (opt.kind == "base") {
        if (opt.m == 0) throw UsageError("seed search --kind base needs --m >= 1");
        outcome = gca::search_base_sequences(opt.m, opt.budget);
        what = "BS(" + std::to_string(opt.m + 1) + "," + std::to_string(opt.m) + ")";
    } else if (opt.kind == "pair") {
        const auto shape = parse_shape(opt.shape);
        if (shape.rank() > 2) throw UsageError("seed search handles 1-D and 2-D shapes");
        outcome = gca::search_golay_pair(alphabet, shape, opt.budget);
        what = opt.alphabet + " pair " + shape.to_string();
    } else {
        throw UsageError("seed search needs --kind pair or --kind base");
    }
    std::cerr << what << ": " << to_string(outcome.status) << " after " << outcome.nodes << " nodes\n";
    json j{{"status", to_string(outcome.status)}, {"nodes", outcome.nodes}};
    if (outcome.record) j["records"] = json::array({gca::seed_to_json(*outcome.record)});
    emit(opt, j);
    switch (outcome.status) {
    case gca::SearchStatus::Found: return kOk;
    case gca::SearchStatus::Exhausted: return kExhausted;
    case gca::SearchStatus::BudgetExceeded: return kBudgetExceeded;
    }
    return kOk;
}

int cmd_seed_check(const Options& opt) {
    gca::LoadReport report;
    const auto reg = gca::load_registry(opt.seeds, &report);
    json keys = json::array();
    for (const auto& [key, rec] : reg.records()) keys.push_back(key);
    emit(opt, json{{"loaded", report.loaded}, {"rejected", report.rejected}, {"keys", keys}});
    std::cerr << opt.seeds << ": " << report.loaded << " records verified, " << report.rejected.size()
              << " rejected\n";
    return report.rejected.empty() ? kOk : kVerificationFailed;
}

int cmd_coverage(const Options& opt) {
    const auto kind = gca::parse_coverage_kind(opt.kind.empty() ? "quad-sum-coverage" : opt.kind);
    const auto alphabet = parse_search_alphabet(opt.alphabet);
    if (opt.limit < 1) throw UsageError("--limit must be at least 1");
    const auto report = gca::coverage_scan(kind, opt.limit, alphabet);
    emit(opt, gca::coverage_to_json(report));
    std::cerr << to_string(kind) << " up to " << opt.limit << ": ";
    if (kind == gca::CoverageKind::GolayCount) {
        std::cerr << report.values.size() << " " << to_string(alphabet) << " Golay numbers\n";
    } else {
        std::cerr << report.values.size() << " uncovered {";
        for (std::size_t k = 0; k < report.values.size() && k < 20; ++k) {
            std::cerr << (k ? ", " : "") << report.values[k];
        }
        std::cerr << (report.values.size() > 20 ? ", ...}\n" : "}\n");
    }
    return kOk;
}

int exit_for(const gca::Error& e) {
    switch (e.kind()) {
    case gca::ErrorKind::ParseError:
    case gca::ErrorKind::EmptySet: return kParse;
    case gca::ErrorKind::MissingSeed:
    case gca::ErrorKind::NotFound: return kMissingSeed;
    default: return kVerificationFailed;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Golay complementary array toolkit"};
    app.require_subcommand(1);
    Options opt;

    const auto add_shape = [&](CLI::App* c) { c->add_option("--shape", opt.shape, "sizes joined by 'x', e.g. 9x10"); };
    const auto add_alphabet = [&](CLI::App* c) {
        c->add_option("--alphabet", opt.alphabet, "binary or quaternary")->capture_default_str();
    };
    const auto add_seeds = [&](CLI::App* c) {
        c->add_option("--seeds", opt.seeds, "seed registry file")->capture_default_str();
    };
    const auto add_out = [&](CLI::App* c) { c->add_option("--out", opt.out, "output file (default stdout)"); };

    auto* plan = app.add_subcommand("plan", "plan a pair or quad and write its recipe");
    add_alphabet(plan);
    plan->add_option("--role", opt.role, "pair or quad")->capture_default_str();
    add_shape(plan);
    plan->get_option("--shape")->required();
    add_seeds(plan);
    add_out(plan);

    auto* generate = app.add_subcommand("generate", "execute a recipe (or plan one) and write the set");
    generate->add_option("--recipe", opt.recipe, "gca-recipe/1 file");
    add_alphabet(generate);
    generate->add_option("--role", opt.role, "pair or quad")->capture_default_str();
    add_shape(generate);
    add_seeds(generate);
    add_out(generate);

    auto* verify = app.add_subcommand("verify", "check a gca-set/1 file");
    verify->add_option("--in", opt.in, "gca-set/1 file")->required();
    verify->add_option("--grid", opt.grid, "spectrum grid points per dimension")->capture_default_str();
    add_out(verify);

    auto* spectrum = app.add_subcommand("spectrum", "spectral flatness of a gca-set/1 file");
    spectrum->add_option("--in", opt.in, "gca-set/1 file")->required();
    spectrum->add_option("--grid", opt.grid, "grid points per dimension")->capture_default_str();
    add_out(spectrum);

    auto* seed = app.add_subcommand("seed", "seed search and registry checks");
    seed->require_subcommand(1);
    auto* search = seed->add_subcommand("search", "exhaustive search for a pair or base sequences");
    add_alphabet(search);
    search->add_option("--kind", opt.kind, "pair or base")->required();
    add_shape(search);
    search->add_option("--m", opt.m, "m for base sequences BS(m+1, m)");
    search->add_option("--budget", opt.budget, "node limit")->capture_default_str();
    add_out(search);
    auto* check = seed->add_subcommand("check", "load and re-verify a seed file");
    add_seeds(check);
    add_out(check);

    auto* coverage = app.add_subcommand("coverage", "coverage scans and Golay-number counts");
    coverage->add_option("--kind", opt.kind, "quad-sum-coverage, sequence-sum-coverage or golay-count");
    add_alphabet(coverage);
    coverage->add_option("--limit", opt.limit, "upper bound")->capture_default_str();
    add_out(coverage);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*plan) return cmd_plan(opt);
        if (*generate) return cmd_generate(opt);
        if (*verify) return cmd_verify(opt);
        if (*spectrum) return cmd_spectrum(opt);
        if (*search) return cmd_seed_search(opt);
        if (*check) return cmd_seed_check(opt);
        if (*coverage) return cmd_coverage(opt);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const gca::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_for(e);
    }
    return kUsage;
}
