// Acceptance run: one PASS/FAIL/SKIP line per criterion, exit 1 on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "identities.hpp"

using namespace gca;

namespace {

enum class Verdict { Pass, Fail, Skip };

struct Outcome {
    Verdict verdict = Verdict::Fail;
    std::string detail;
};

Outcome pass(std::string d) { return {Verdict::Pass, std::move(d)}; }
Outcome fail(std::string d) { return {Verdict::Fail, std::move(d)}; }

/// Both oracles, exactly; mixed shapes are zero-padded first.
bool dual_verified(const GcaSet& s) {
    const auto padded = pad_to_common_shape(s.arrays);
    return is_gca_set(padded).is_complementary && gca_check_polynomial(padded);
}

GcaSet oriented(const GcaSet& s, std::size_t rank, std::size_t dim) {
    std::vector<Tensor> out;
    for (const auto& t : s.arrays) out.push_back(orient(t, rank, dim));
    return make_set(std::move(out), s.lineage);
}

Outcome identities() {
    std::ostringstream d;
    bool ok = true;
    std::uint64_t seed = 1;
    for (const auto& c : test::identity_cases()) {
        const auto failures = test::identity_failures(c, 1000, seed++);
        d << c.name << " " << failures << "/1000 failures; ";
        ok = ok && failures == 0;
    }
    return {ok ? Verdict::Pass : Verdict::Fail, d.str()};
}

Outcome worked_example() {
    const GaussInt j = test::I;
    const auto r1 = autocorrelation(test::example_a1()).tensor;
    const auto r2 = autocorrelation(test::example_a2()).tensor;
    const auto e1 = Tensor::matrix({{-1, -1 + j, j, -1 - j, 1}, {0, 0, 6, 0, 0}, {1, -1 + j, -j, -1 - j, -1}});
    const auto e2 = Tensor::matrix({{1, 1 - j, -j, 1 + j, -1}, {0, 0, 6, 0, 0}, {-1, 1 - j, j, 1 + j, 1}});
    auto delta = std::vector<GaussInt>(15);
    delta[7] = 12;
    const bool ok = r1 == e1 && r2 == e2 && add(r1, r2) == Tensor(Shape{3, 5}, delta);
    return {ok ? Verdict::Pass : Verdict::Fail, "R_A1, R_A2 entry-for-entry; sum 12 at the zero shift only"};
}

Outcome golay_counts() {
    const auto b = enumerate_golay_numbers(Alphabet::Binary, 100).size();
    const auto q = enumerate_golay_numbers(Alphabet::Quaternary, 28).size();
    return {b == 14 && q == 17 ? Verdict::Pass : Verdict::Fail,
            "binary <= 100: " + std::to_string(b) + ", quaternary <= 28: " + std::to_string(q)};
}

/// Binary pairs built in the battery, reused by the symmetry criterion.
std::vector<GcaSet>& battery_binary_pairs() {
    static std::vector<GcaSet> pairs;
    return pairs;
}

Outcome construction_battery() {
    const auto& reg = test::bundled();
    std::vector<std::pair<std::string, GcaSet>> built;
    auto& binary = battery_binary_pairs();
    binary.clear();
    for (const Shape& s : {Shape{4}, Shape{8}, Shape{16}, Shape{20}, Shape{2, 10}, Shape{4, 26}}) {
        const auto r = plan_pair(Alphabet::Binary, s);
        if (!r.recipe) return fail("no binary plan for " + s.to_string());
        binary.push_back(execute(*r.recipe, reg));
        if (binary.back().alphabet != Alphabet::Binary) return fail("binary pair " + s.to_string() + " not binary");
        built.emplace_back("binary pair " + s.to_string(), binary.back());
    }
    const auto q3 = test::seed_pair(Alphabet::Quaternary, 3);
    built.emplace_back("rank1_pair 6x3", rank1_pair(q3, q3));
    const auto three_by_two = concat_pair(oriented(q3, 2, 0), trivial_pair(2), 1);
    built.emplace_back("concat_pair 3x2", three_by_two);
    built.emplace_back("concat_pair 9x8", concat_pair(three_by_two, three_by_two, 1));
    built.emplace_back("glue_pair 9x10", glue_pair(oriented(test::seed_pair(Alphabet::Binary, 10), 2, 1),
                                                   oriented(q3, 2, 0), oriented(q3, 2, 0)));
    built.emplace_back("cross_set 3x3", cross_set(oriented(q3, 2, 0), oriented(q3, 2, 1)));
    const auto three_by_six = execute(*plan_pair(Alphabet::Quaternary, Shape{3, 6}).recipe, reg);
    built.emplace_back("cross_set 9x36", cross_set(three_by_six, three_by_six));
    const auto plan_36x87 = plan_quad(Alphabet::Quaternary, Shape{36, 87}, reg);
    if (!plan_36x87.feasible() || plan_36x87.recipe->op != "compromise_quad") return fail("36x87 plan");
    built.emplace_back("compromise_quad 36x87", execute(*plan_36x87.recipe, reg));
    built.emplace_back("lagrange_quad binary 3x3",
                       lagrange_quad(interleave_quad(oriented(test::bs21(), 2, 0), 0),
                                     interleave_quad(oriented(test::bs21(), 2, 1), 1)));

    const std::vector<std::pair<std::string, Shape>> expected{
        {"binary pair [4]", Shape{4}},          {"binary pair [8]", Shape{8}},
        {"binary pair [16]", Shape{16}},        {"binary pair [20]", Shape{20}},
        {"binary pair [2x10]", Shape{2, 10}},   {"binary pair [4x26]", Shape{4, 26}},
        {"rank1_pair 6x3", Shape{6, 3}},        {"concat_pair 3x2", Shape{3, 2}},
        {"concat_pair 9x8", Shape{9, 8}},       {"glue_pair 9x10", Shape{9, 10}},
        {"cross_set 3x3", Shape{3, 3}},         {"cross_set 9x36", Shape{9, 36}},
        {"compromise_quad 36x87", Shape{36, 87}}, {"lagrange_quad binary 3x3", Shape{3, 3}},
    };
    if (built.size() != expected.size()) return fail("battery size mismatch");
    for (std::size_t k = 0; k < built.size(); ++k) {
        const auto& [name, set] = built[k];
        if (set.shape() != expected[k].second || !set.uniform()) return fail(name + ": wrong shape");
        if (!dual_verified(set)) return fail(name + ": oracle rejected");
        if (name.find("quad") != std::string::npos || name.find("cross_set") != std::string::npos) {
            if (set.size() != 4) return fail(name + ": not a quad");
        }
        if (set.alphabet == Alphabet::Polyphase4WithZeros || set.alphabet == Alphabet::General) {
            return fail(name + ": not polyphase");
        }
    }
    if (built.back().second.alphabet != Alphabet::Binary) return fail("3x3 Lagrange quad is not binary");
    return pass(std::to_string(built.size()) + " sets, each passing both oracles");
}

Outcome planner_negatives() {
    std::ostringstream d;
    const auto split = plan_pair(Alphabet::Quaternary, Shape{18, 5});
    const bool split_ok = !split.feasible() && split.reason.find("factor-10 split") != std::string::npos;
    d << "18x5 " << to_string(split.status) << (split_ok ? " (factor-10 split)" : "") << "; ";
    const auto small = search_golay_pair(Alphabet::Binary, Shape{2, 5}, 1'000'000'000);
    d << "binary 2x5 " << to_string(small.status) << " after " << small.nodes << " nodes; ";
    const auto fifteen = search_golay_pair(Alphabet::Quaternary, Shape{15}, 1'000'000'000);
    d << "quaternary 15 " << to_string(fifteen.status) << " after " << fifteen.nodes << " nodes";
    const bool ok = split_ok && small.status == SearchStatus::Exhausted && fifteen.status == SearchStatus::Exhausted;
    return {ok ? Verdict::Pass : Verdict::Fail, d.str()};
}

Outcome coverage() {
    const auto r = coverage_scan(CoverageKind::QuadSumCoverage, 1000);
    std::string list;
    for (auto v : r.values) list += (list.empty() ? "" : ", ") + std::to_string(v);
    const bool ok = r.values == std::vector<std::uint64_t>{799, 959};
    return {ok ? Verdict::Pass : Verdict::Fail, "uncovered {" + list + "}"};
}

Outcome recipe_959() {
    const auto& reg = test::bundled();
    const auto r = plan_quad(Alphabet::Quaternary, Shape{12, 959}, reg);
    if (!r.feasible()) return fail("12x959 plan: " + r.reason);
    if (r.witness.value("strategy", "") != "template-959") return fail("12x959 planned without the template");
    const auto q = execute(*r.recipe, reg);
    const bool ok = q.size() == 4 && q.uniform() && q.shape() == Shape{12, 959} && q.polyphase() && dual_verified(q);
    return {ok ? Verdict::Pass : Verdict::Fail,
            "12x959 " + std::string(to_string(q.alphabet)) + " quad (t1 = 3, BS(4,3), pairs 1x5 and 1x132)"};
}

Outcome recipe_799() {
    const auto& reg = test::bundled();
    const auto r = plan_quad(Alphabet::Quaternary, Shape{1, 799}, reg);
    if (r.status == Feasibility::MissingSeed) {
        std::string keys;
        for (const auto& k : r.missing_seeds) keys += " " + k;
        return {Verdict::Skip, "planner reports MissingSeed:" + keys};
    }
    if (!r.feasible()) return fail("1x799 plan: " + r.reason);
    const auto q = execute(*r.recipe, reg);
    const bool ok = q.size() == 4 && q.shape() == Shape{1, 799} && q.polyphase() && dual_verified(q);
    return {ok ? Verdict::Pass : Verdict::Fail, "1x799 quad from BS(9,8) and BS(24,23)"};
}

Outcome binary_quads() {
    std::vector<GcaSet> base;
    for (std::size_t k = 1; k <= 7; ++k) {
        const auto out = search_base_sequences(k, 1'000'000'000);
        if (out.status != SearchStatus::Found) return fail("BS(" + std::to_string(k + 1) + ") not found");
        base.push_back(out.record->as_set());
    }
    const auto quad = [&](std::size_t n, std::size_t dim) {
        if (n == 1) return trivial_weight_deficient_quad(2);
        return interleave_quad(oriented(base[(n - 1) / 2 - 1], 2, dim), dim);
    };
    std::size_t count = 0;
    for (std::size_t m = 1; m <= 15; m += 2) {
        for (std::size_t n = 1; n <= 15; n += 2) {
            const auto q = lagrange_quad(quad(m, 0), quad(n, 1));
            if (q.shape() != Shape{m, n} || q.alphabet != Alphabet::Binary || !dual_verified(q)) {
                return fail(std::to_string(m) + "x" + std::to_string(n) + " rejected");
            }
            ++count;
        }
    }
    return pass(std::to_string(count) + " binary quads m x n, m, n odd <= 15");
}

Outcome base_sequence_search() {
    std::ostringstream d;
    bool ok = true;
    std::uint64_t nodes = 0;
    for (std::size_t m = 1; m <= 8; ++m) {
        const auto out = search_base_sequences(m, 1'000'000'000);
        ok = ok && out.status == SearchStatus::Found && out.record && dual_verified(out.record->as_set());
        nodes += out.nodes;
    }
    d << "m = 1..8 found, " << nodes << " nodes in total";
    return {ok ? Verdict::Pass : Verdict::Fail, d.str()};
}

Outcome binary_symmetry() {
    const auto& pairs = battery_binary_pairs();
    if (pairs.empty()) return fail("battery produced no binary pairs");
    for (const auto& p : pairs) {
        if (!binary_pair_symmetry(p[0], p[1])) return fail("symmetry fails on " + p.shape().to_string());
    }
    return pass(std::to_string(pairs.size()) + " binary pairs from the battery");
}

Outcome reshape_to_sequences() {
    const auto pair = make_set({test::example_a1(), test::example_a2()}, "example");
    const auto seq = reshape_set(pair);
    const bool ok = seq.shape() == Shape{6} && dual_verified(seq) && is_gca_set(seq.arrays).total_weight == 12;
    return {ok ? Verdict::Pass : Verdict::Fail, "2x3 pair -> length-6 Golay pair"};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"ring identities", identities},
        {"worked example autocorrelations", worked_example},
        {"Golay-number counts", golay_counts},
        {"construction battery", construction_battery},
        {"planner negatives", planner_negatives},
        {"quad-sum coverage", coverage},
        {"959 recipe", recipe_959},
        {"799 recipe", recipe_799},
        {"binary quad coverage", binary_quads},
        {"base-sequence search", base_sequence_search},
        {"binary pair symmetry", binary_symmetry},
        {"reshape to sequences", reshape_to_sequences},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const char* tag = o.verdict == Verdict::Pass ? "PASS" : o.verdict == Verdict::Skip ? "SKIP" : "FAIL";
        char time[32];
        std::snprintf(time, sizeof time, "%.2f s", secs);
        std::cout << tag << " " << (k + 1) << " " << criteria[k].first << ": " << o.detail << " [" << time << "]"
                  << std::endl;
        failures += o.verdict == Verdict::Fail ? 1 : 0;
    }
    return failures == 0 ? 0 : 1;
}
