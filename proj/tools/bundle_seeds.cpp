// Regenerates the bundled seed file: every seed that exhaustive search finds
// at desk scale, plus records read from extra seed files (e.g. the output of
// split_base_sequences). Every record is verified before it is written.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gca/seeds.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Build the bundled gca-seeds/1 file"};
    std::string out_path;
    std::vector<std::string> extra;
    std::size_t max_m = 8;
    app.add_option("--out", out_path, "output path")->required();
    app.add_option("--extra", extra, "additional seed files to merge");
    app.add_option("--max-m", max_m, "largest m for base sequences found by search");
    CLI11_PARSE(app, argc, argv);

    using namespace gca;
    constexpr std::uint64_t budget = 2'000'000'000ULL;
    SeedRegistry reg;
    const auto take = [&](const SearchOutcome& o, const std::string& what) {
        if (o.status != SearchStatus::Found) {
            std::cerr << what << ": " << to_string(o.status) << "\n";
            std::exit(1);
        }
        SeedRecord rec = *o.record;
        rec.provenance = "exhaustive search, first normalized solution in entry order 1, -1, i, -i (" +
                         std::to_string(o.nodes) + " nodes)";
        reg.add(std::move(rec));
        std::cerr << what << ": found\n";
    };
    for (std::size_t n : {2, 10, 26}) {
        take(search_golay_pair(Alphabet::Binary, Shape{n}, budget), "binary pair " + std::to_string(n));
    }
    for (std::size_t n : {3, 5, 11, 13}) {
        take(search_golay_pair(Alphabet::Quaternary, Shape{n}, budget), "quaternary pair " + std::to_string(n));
    }
    for (std::size_t m = 1; m <= max_m; ++m) {
        take(search_base_sequences(m, budget), "base sequences m=" + std::to_string(m));
    }
    for (const auto& path : extra) {
        LoadReport report;
        const auto more = load_registry(path, &report);
        for (const auto& msg : report.rejected) std::cerr << path << ": rejected " << msg << "\n";
        for (const auto& [key, rec] : more.records()) {
            reg.add(rec);
            std::cerr << path << ": merged " << key << "\n";
        }
    }
    io::write_file(out_path, seeds_to_text(reg));
    std::cerr << "wrote " << reg.size() << " records to " << out_path << "\n";
    return 0;
}
