#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "golay_numbers.hpp"
#include "recipe.hpp"

namespace gca {

/// MissingSeed: a recipe exists but names seeds the registry lacks.
enum class Feasibility { Feasible, InfeasibleByMethod, KnownNonexistent, MissingSeed };

inline std::string_view to_string(Feasibility f) noexcept {
    switch (f) {
    case Feasibility::Feasible: return "feasible";
    case Feasibility::InfeasibleByMethod: return "infeasible-by-method";
    case Feasibility::KnownNonexistent: return "known-nonexistent";
    case Feasibility::MissingSeed: return "missing-seed";
    }
    return "unknown";
}

struct FeasibilityReport {
    Feasibility status = Feasibility::InfeasibleByMethod;
    /// Per-dimension factor assignment (pairs) or strategy parameters (quads).
    io::json witness = io::json::object();
    std::optional<Recipe> recipe;
    std::string reason;
    std::vector<std::string> missing_seeds;

    [[nodiscard]] bool feasible() const noexcept { return status == Feasibility::Feasible; }
};

inline io::json report_to_json(const FeasibilityReport& r) {
    io::json j{{"feasible", r.feasible()}, {"status", to_string(r.status)}, {"witness", r.witness}};
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (!r.missing_seeds.empty()) j["missing_seeds"] = r.missing_seeds;
    if (r.recipe) j["recipe"] = recipe_to_json(*r.recipe);
    return j;
}

namespace detail {

inline std::vector<std::size_t> divisors(std::size_t n) {
    std::vector<std::size_t> lo, hi;
    for (std::size_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        lo.push_back(d);
        if (d != n / d) hi.push_back(n / d);
    }
    lo.insert(lo.end(), hi.rbegin(), hi.rend());
    return lo;
}

inline std::vector<std::size_t> nontrivial_dims(const Shape& s) {
    std::vector<std::size_t> out;
    for (auto d : s.dims()) {
        if (d != 1) out.push_back(d);
    }
    return out;
}

/// Nonexistence facts established by exhaustive search elsewhere; a pair of
/// any shape reshapes to a sequence pair of length prod(shape).
inline std::optional<std::string> known_nonexistence(Alphabet alphabet, const Shape& shape) {
    const std::uint64_t n = shape.size();
    if (alphabet == Alphabet::Binary) {
        auto dims = nontrivial_dims(shape);
        std::sort(dims.begin(), dims.end());
        if (dims == std::vector<std::size_t>{2, 5} || dims == std::vector<std::size_t>{2, 13}) {
            return "no binary GCM pair of size 2x" + std::to_string(dims[1]) + " exists (exhaustive search)";
        }
        if (n <= 100 && !is_binary_golay_number(n)) {
            return "no binary Golay sequence pair of length " + std::to_string(n) +
                   " exists (exhaustive search up to 100), and a pair of this shape reshapes to one";
        }
        return std::nullopt;
    }
    if (n <= 28 && !is_quaternary_golay_number(n)) {
        return "no quaternary Golay sequence pair of length " + std::to_string(n) +
               " exists (exhaustive search up to 28), and a pair of this shape reshapes to one";
    }
    return std::nullopt;
}

struct Part {
    std::size_t value;
    std::size_t dim;
};

inline io::json parts_json(const std::vector<Part>& parts) {
    io::json j = io::json::array();
    for (const auto& p : parts) j.push_back({{"size", p.value}, {"dim", p.dim}});
    return j;
}

/// Left-deep chain of binary_turyn_pair over binary seeds; trivial when empty.
inline Recipe binary_chain(const std::vector<Part>& parts, std::size_t rank) {
    if (parts.empty()) return recipe::trivial(rank);
    Recipe cur = recipe::golay_pair(Alphabet::Binary, parts[0].value, rank, parts[0].dim);
    for (std::size_t k = 1; k < parts.size(); ++k) {
        cur = recipe::binary_turyn_pair(std::move(cur),
                                        recipe::golay_pair(Alphabet::Binary, parts[k].value, rank, parts[k].dim));
    }
    return cur;
}

inline FeasibilityReport infeasible(Alphabet alphabet, const Shape& shape, std::string reason, io::json witness = {}) {
    FeasibilityReport r;
    r.witness = witness.is_null() ? io::json::object() : std::move(witness);
    if (auto fact = known_nonexistence(alphabet, shape)) {
        r.status = Feasibility::KnownNonexistent;
        r.reason = std::move(reason) + "; " + *fact;
    } else {
        r.status = Feasibility::InfeasibleByMethod;
        r.reason = std::move(reason);
    }
    return r;
}

inline FeasibilityReport plan_binary_pair(const Shape& shape) {
    io::json dims = io::json::array();
    std::vector<Part> parts;
    for (std::size_t k = 0; k < shape.rank(); ++k) {
        const auto w = is_binary_golay_number(shape[k]);
        if (!w) {
            return infeasible(Alphabet::Binary, shape,
                              "size " + std::to_string(shape[k]) + " in dimension " + std::to_string(k) +
                                  " is not a binary Golay number 2^a 10^b 26^c");
        }
        dims.push_back({{"size", shape[k]}, {"a", w->a}, {"b", w->b}, {"c", w->c}});
        for (unsigned i = 0; i < w->a; ++i) parts.push_back({2, k});
        for (unsigned i = 0; i < w->b; ++i) parts.push_back({10, k});
        for (unsigned i = 0; i < w->c; ++i) parts.push_back({26, k});
    }
    FeasibilityReport r;
    r.status = Feasibility::Feasible;
    r.witness = {{"dims", std::move(dims)}, {"seeds", parts_json(parts)}};
    r.recipe = binary_chain(parts, shape.rank());
    return r;
}

inline std::string factor_split_reason(const Shape& shape) {
    std::uint64_t fives = 0, thirteens = 0;
    for (auto s : shape.dims()) {
        const auto f = factor_smooth(s);
        fives += f->five;
        thirteens += f->thirteen;
    }
    const std::string block = fives > 0 && thirteens > 0 ? "10 or 26" : fives > 0 ? "10" : "26";
    return "the product " + std::to_string(shape.size()) +
           " is a quaternary Golay number only if a factor " + block +
           " is split across dimensions (factor-" + (fives > 0 ? "10" : "26") +
           " split); each such factor must lie within a single dimension";
}

inline FeasibilityReport plan_quaternary_pair(const Shape& shape) {
    const std::size_t rank = shape.rank();
    io::json dims = io::json::array();
    std::vector<Part> seeds, blocks, twos;
    long slack = 0;
    for (std::size_t k = 0; k < rank; ++k) {
        const auto d = split_dimension(shape[k]);
        if (!d) {
            return infeasible(Alphabet::Quaternary, shape,
                              "size " + std::to_string(shape[k]) + " in dimension " + std::to_string(k) +
                                  " has a prime factor outside {2, 3, 5, 11, 13}");
        }
        slack += d->slack();
        const auto& f = d->factors;
        dims.push_back({{"size", shape[k]},
                        {"a", d->loose_twos()},
                        {"u", d->blocks()},
                        {"b", f.three},
                        {"c", f.five},
                        {"d", f.eleven},
                        {"e", f.thirteen},
                        {"slack", d->slack()}});
        for (unsigned i = 0; i < f.three; ++i) seeds.push_back({3, k});
        for (unsigned i = d->tens; i < f.five; ++i) seeds.push_back({5, k});
        for (unsigned i = 0; i < f.eleven; ++i) seeds.push_back({11, k});
        for (unsigned i = d->twenty_sixes; i < f.thirteen; ++i) seeds.push_back({13, k});
        for (unsigned i = 0; i < d->tens; ++i) blocks.push_back({10, k});
        for (unsigned i = 0; i < d->twenty_sixes; ++i) blocks.push_back({26, k});
        for (unsigned i = 0; i < d->loose_twos(); ++i) twos.push_back({2, k});
    }
    if (slack < -1) {
        std::string reason = is_quaternary_golay_number(shape.size())
                                 ? factor_split_reason(shape)
                                 : "the product " + std::to_string(shape.size()) +
                                       " is not a quaternary Golay number (too few binders for its seeds)";
        return infeasible(Alphabet::Quaternary, shape, std::move(reason), {{"dims", std::move(dims)}});
    }

    // Binders: 10/26 blocks first, then loose 2s. Q seeds need Q-1 binders to
    // join them; extra binders widen seeds before joining (round robin).
    std::vector<Part> binders = blocks;
    binders.insert(binders.end(), twos.begin(), twos.end());
    FeasibilityReport r;
    r.status = Feasibility::Feasible;
    r.witness = {{"dims", std::move(dims)}, {"seeds", parts_json(seeds)}, {"binders", parts_json(binders)}};
    if (seeds.empty()) {
        r.recipe = binary_chain(binders, rank);
        return r;
    }
    const auto binder_leaf = [rank](const Part& p) {
        return recipe::golay_pair(Alphabet::Binary, p.value, rank, p.dim);
    };
    const std::size_t joiners = seeds.size() - 1;
    std::vector<Recipe> built;
    for (const auto& s : seeds) built.push_back(recipe::golay_pair(Alphabet::Quaternary, s.value, rank, s.dim));
    for (std::size_t k = joiners; k < binders.size(); ++k) {
        Recipe& target = built[(k - joiners) % built.size()];
        const Part& b = binders[k];
        if (b.value == 2) {
            target = recipe::concat_pair(std::move(target), recipe::trivial(rank), b.dim);
        } else {
            target = recipe::glue_pair(binder_leaf(b), std::move(target), recipe::trivial(rank));
        }
    }
    Recipe cur = std::move(built[0]);
    for (std::size_t k = 1; k < built.size(); ++k) {
        const Part& b = binders[k - 1];
        if (b.value == 2) {
            cur = recipe::concat_pair(std::move(cur), std::move(built[k]), b.dim);
        } else {
            cur = recipe::glue_pair(binder_leaf(b), std::move(cur), std::move(built[k]));
        }
    }
    r.recipe = std::move(cur);
    return r;
}

} // namespace detail

/// Plans a binary or quaternary pair of the given shape. Infeasibility is a
/// report, never an error.
inline FeasibilityReport plan_pair(Alphabet alphabet, const Shape& shape) {
    if (alphabet == Alphabet::Binary) return detail::plan_binary_pair(shape);
    if (alphabet == Alphabet::Quaternary) return detail::plan_quaternary_pair(shape);
    FeasibilityReport r;
    r.reason = "pairs are planned over the binary and quaternary alphabets only";
    return r;
}

// ---------------------------------------------------------------------------
// Quads
// ---------------------------------------------------------------------------

struct QuadPlan {
    Recipe recipe;
    io::json witness;
};

namespace detail {

/// Tries, in order: cross_set of two pairs, compromise_quad, lagrange_quad
/// over weight-deficient quads, expand_quad by a binary pair, and the two
/// hard-coded templates. Results are memoized per shape.
class QuadPlanner {
  public:
    QuadPlanner(Alphabet alphabet, const SeedRegistry& registry) : alphabet_(alphabet), registry_(registry) {}

    std::optional<QuadPlan> plan(const Shape& shape) {
        if (auto it = memo_.find(shape); it != memo_.end()) return it->second;
        std::optional<QuadPlan> out = cross(shape);
        if (!out) out = compromise(shape);
        if (!out) out = lagrange(shape);
        if (!out) out = expand(shape);
        if (!out) out = special(shape);
        memo_.emplace(shape, out);
        return out;
    }

  private:
    [[nodiscard]] std::optional<Recipe> pair(const Shape& s) const {
        if (!pair_feasible(alphabet_, s)) return std::nullopt;
        return plan_pair(alphabet_, s).recipe;
    }

    [[nodiscard]] std::vector<Shape> factor_shapes(const Shape& s) const {
        std::vector<Shape> out;
        if (s.rank() == 1) {
            for (auto d : divisors(s[0])) out.push_back(Shape{d});
            return out;
        }
        for (auto d0 : divisors(s[0])) {
            for (auto d1 : divisors(s[1])) out.push_back(Shape{d0, d1});
        }
        return out;
    }

    static Shape quotient(const Shape& s, const Shape& x) {
        std::vector<std::size_t> d(s.rank());
        for (std::size_t k = 0; k < d.size(); ++k) d[k] = s[k] / x[k];
        return Shape(std::move(d));
    }

    /// Most balanced factorization first: minimize prod max(x,y)/min(x,y),
    /// ties broken by the smaller x.
    std::optional<QuadPlan> cross(const Shape& s) const {
        __extension__ using wide = unsigned __int128;
        std::optional<Shape> best;
        wide best_num = 0, best_den = 1;
        for (const auto& x : factor_shapes(s)) {
            const Shape y = quotient(s, x);
            if (!pair_feasible(alphabet_, x) || !pair_feasible(alphabet_, y)) continue;
            wide num = 1, den = 1;
            for (std::size_t k = 0; k < s.rank(); ++k) {
                num *= std::max(x[k], y[k]);
                den *= std::min(x[k], y[k]);
            }
            if (!best || num * best_den < best_num * den) {
                best = x;
                best_num = num;
                best_den = den;
            }
        }
        if (!best) return std::nullopt;
        const Shape y = quotient(s, *best);
        return QuadPlan{recipe::cross_set(*pair(*best), *pair(y)),
                        {{"strategy", "cross_set"}, {"pairs", {best->dims(), y.dims()}}}};
    }

    /// Pairs s1 x s2 and s1 x s3 side by side along the sum dimension, bound
    /// by a pair t1 x t2: size (s1 t1) x ((s2 + s3) t2).
    std::optional<QuadPlan> compromise(const Shape& s) const {
        const std::size_t rank = s.rank();
        const std::vector<std::size_t> sum_dims = rank == 1 ? std::vector<std::size_t>{0}
                                                            : std::vector<std::size_t>{1, 0};
        for (auto d : sum_dims) {
            const std::size_t o = 1 - d;
            for (auto t_sum : divisors(s[d])) {
                const std::size_t total = s[d] / t_sum;
                if (total < 2) continue;
                const std::vector<std::size_t> t_others = rank == 1 ? std::vector<std::size_t>{1} : divisors(s[o]);
                for (auto t_other : t_others) {
                    const std::size_t s1 = rank == 1 ? 1 : s[o] / t_other;
                    const auto make = [&](std::size_t along_sum, std::size_t along_other) {
                        if (rank == 1) return Shape{along_sum};
                        return Shape::along(2, d, along_sum).with(o, along_other);
                    };
                    const Shape binder = make(t_sum, t_other);
                    if (!pair_feasible(alphabet_, binder)) continue;
                    for (std::size_t s2 = 1; s2 < total; ++s2) {
                        const Shape p2 = make(s2, s1);
                        const Shape p3 = make(total - s2, s1);
                        if (!pair_feasible(alphabet_, p2) || !pair_feasible(alphabet_, p3)) continue;
                        return QuadPlan{recipe::compromise_quad(*pair(p2), *pair(p3), *pair(binder), d),
                                        {{"strategy", "compromise_quad"},
                                         {"dim", d},
                                         {"pairs", {p2.dims(), p3.dims()}},
                                         {"binder", binder.dims()}}};
                    }
                }
            }
        }
        return std::nullopt;
    }

    /// A weight-deficient quad of `size` along `dim`: trivial for 1, base
    /// sequences BS(m+1, m) for 2m+1, two pairs s, s' for 2(s + s').
    [[nodiscard]] std::optional<Recipe> weight_deficient(std::size_t rank, std::size_t dim, std::size_t size) const {
        if (size == 1) return recipe::trivial_quad(rank);
        if (size % 2 == 1) {
            const std::size_t m = (size - 1) / 2;
            const auto* rec = registry_.find(SeedKind::BaseSequences, alphabet_, std::to_string(m));
            if (!rec) return std::nullopt;
            Recipe leaf = recipe::seed(SeedKind::BaseSequences, rec->alphabet, m, rank, dim);
            return recipe::interleave_quad(std::move(leaf), dim);
        }
        const std::size_t half = size / 2;
        for (std::size_t a = 1; a < half; ++a) {
            auto p = pair(Shape::along(rank, dim, a));
            auto q = pair(Shape::along(rank, dim, half - a));
            if (p && q) return recipe::concat_zero_quad(std::move(*p), std::move(*q), dim);
        }
        return std::nullopt;
    }

    std::optional<QuadPlan> lagrange(const Shape& s) const {
        const std::size_t rank = s.rank();
        const auto attempt = [&](std::size_t dm, std::size_t x, std::size_t dn,
                                 std::size_t y) -> std::optional<QuadPlan> {
            auto m = weight_deficient(rank, dm, x);
            if (!m) return std::nullopt;
            auto n = weight_deficient(rank, dn, y);
            if (!n) return std::nullopt;
            return QuadPlan{recipe::lagrange_quad(std::move(*m), std::move(*n)),
                            {{"strategy", "lagrange_quad"},
                             {"first", {{"dim", dm}, {"size", x}}},
                             {"second", {{"dim", dn}, {"size", y}}}}};
        };
        if (rank == 2 && s[0] > 1 && s[1] > 1) return attempt(0, s[0], 1, s[1]);
        const std::size_t d = rank == 2 && s[0] > 1 ? 0 : rank - 1;
        for (auto x : divisors(s[d])) {
            if (auto plan = attempt(d, x, d, s[d] / x)) return plan;
        }
        return std::nullopt;
    }

    std::optional<QuadPlan> expand(const Shape& s) {
        std::vector<Shape> factors;
        for (const auto& g : factor_shapes(s)) {
            if (!g.trivial() && binary_pair_feasible(g)) factors.push_back(g);
        }
        std::stable_sort(factors.begin(), factors.end(),
                         [](const Shape& a, const Shape& b) { return a.size() < b.size(); });
        for (const auto& g : factors) {
            const Shape rest = quotient(s, g);
            auto inner = plan(rest);
            if (!inner) continue;
            Recipe binder = recipe::disjoint_from_pair(*plan_pair(Alphabet::Binary, g).recipe);
            return QuadPlan{recipe::expand_quad(inner->recipe, std::move(binder)),
                            {{"strategy", "expand_quad"}, {"binary_pair", g.dims()}, {"inner", inner->witness}}};
        }
        return std::nullopt;
    }

    [[nodiscard]] Recipe base_sequence_quad(std::size_t m, std::size_t rank, std::size_t dim) const {
        const auto* rec = registry_.find(SeedKind::BaseSequences, alphabet_, std::to_string(m));
        const Alphabet a = rec ? rec->alphabet : Alphabet::Binary;
        return recipe::interleave_quad(recipe::seed(SeedKind::BaseSequences, a, m, rank, dim), dim);
    }

    /// 799 = 17 x 47 from BS(9, 8) and BS(24, 23); (4 t1) x 959 with
    /// 959 = 7 x (5 + 132). Emitted whether or not the seeds are present, so
    /// execution reports the missing ones.
    std::optional<QuadPlan> special(const Shape& s) const {
        const std::size_t rank = s.rank();
        const bool is_799 = (rank == 1 && s[0] == 799) || (rank == 2 && s[0] == 1 && s[1] == 799);
        if (is_799) {
            const std::size_t d = rank - 1;
            return QuadPlan{recipe::lagrange_quad(base_sequence_quad(8, rank, d), base_sequence_quad(23, rank, d)),
                            {{"strategy", "template-799"}, {"base_sequences", {8, 23}}}};
        }
        if (alphabet_ == Alphabet::Quaternary && rank == 2 && s[1] == 959 && s[0] % 4 == 0) {
            const std::size_t t1 = s[0] / 4;
            const Shape binder{t1, 1};
            if (!quaternary_pair_feasible(binder)) return std::nullopt;
            Recipe q = recipe::compromise_quad(*pair(Shape{1, 5}), *pair(Shape{1, 132}), *pair(binder), 1);
            q = recipe::concat_zero_quad(std::move(q), 0);
            return QuadPlan{recipe::lagrange_quad(base_sequence_quad(3, 2, 1), std::move(q)),
                            {{"strategy", "template-959"}, {"t1", t1}, {"base_sequences", {3}}}};
        }
        return std::nullopt;
    }

    Alphabet alphabet_;
    const SeedRegistry& registry_;
    std::map<Shape, std::optional<QuadPlan>> memo_;
};

} // namespace detail

/// Plans a GCM quad (rank 1 or 2). Base-sequence availability is read from
/// `registry`; quads are never reported as nonexistent.
inline FeasibilityReport plan_quad(Alphabet alphabet, const Shape& shape, const SeedRegistry& registry) {
    FeasibilityReport r;
    if (alphabet != Alphabet::Binary && alphabet != Alphabet::Quaternary) {
        r.reason = "quads are planned over the binary and quaternary alphabets only";
        return r;
    }
    if (shape.rank() > 2) {
        r.reason = "quads are planned for rank 1 and rank 2 shapes only";
        return r;
    }
    detail::QuadPlanner planner(alphabet, registry);
    if (auto plan = planner.plan(shape)) {
        r.recipe = std::move(plan->recipe);
        r.witness = std::move(plan->witness);
        r.missing_seeds = missing_seeds(*r.recipe, registry);
        if (r.missing_seeds.empty()) {
            r.status = Feasibility::Feasible;
        } else {
            r.status = Feasibility::MissingSeed;
            r.reason = "MissingSeed:";
            for (const auto& k : r.missing_seeds) r.reason += " " + k;
        }
        return r;
    }
    r.reason = "no strategy (cross_set, compromise_quad, lagrange_quad, expand_quad, templates) reaches " +
               shape.to_string() + " with the available pairs and base sequences";
    return r;
}

// ---------------------------------------------------------------------------
// Coverage scans
// ---------------------------------------------------------------------------

enum class CoverageKind { QuadSumCoverage, SequenceSumCoverage, GolayCount };

inline std::string_view to_string(CoverageKind k) noexcept {
    switch (k) {
    case CoverageKind::QuadSumCoverage: return "quad-sum-coverage";
    case CoverageKind::SequenceSumCoverage: return "sequence-sum-coverage";
    case CoverageKind::GolayCount: return "golay-count";
    }
    return "unknown";
}

inline CoverageKind parse_coverage_kind(std::string_view s) {
    if (s == "quad-sum-coverage") return CoverageKind::QuadSumCoverage;
    if (s == "sequence-sum-coverage") return CoverageKind::SequenceSumCoverage;
    if (s == "golay-count") return CoverageKind::GolayCount;
    throw Error(ErrorKind::ParseError, "unknown coverage kind '" + std::string(s) + "'");
}

struct CoverageReport {
    CoverageKind kind = CoverageKind::GolayCount;
    Alphabet alphabet = Alphabet::Quaternary;
    std::uint64_t limit = 0;
    /// Uncovered integers (sum kinds) or the Golay numbers (golay-count).
    std::vector<std::uint64_t> values;
};

inline io::json coverage_to_json(const CoverageReport& r) {
    io::json j{{"kind", to_string(r.kind)}, {"limit", r.limit}, {"count", r.values.size()}};
    if (r.kind == CoverageKind::GolayCount) {
        j["alphabet"] = to_string(r.alphabet);
        j["golay_numbers"] = r.values;
    } else {
        j["uncovered"] = r.values;
    }
    return j;
}

/// Cap on the shared dimension s1 in quad-sum coverage.
inline constexpr std::uint64_t kSharedDimensionCap = 10'000'000;

/// Shapes s1 x s2 and s1 x s3 witnessing n = s2 + s3 for a quad.
struct SumWitness {
    std::uint64_t s1 = 1, s2 = 0, s3 = 0;
};

namespace detail {

/// Slack of every n <= limit (nullopt for non-smooth n).
inline std::vector<std::optional<long>> slack_table(std::uint64_t limit) {
    std::vector<std::optional<long>> t(limit + 1);
    for (auto n : smooth_numbers(limit)) t[n] = pair_slack(n);
    return t;
}

inline long best_shared_slack(std::uint64_t cap) {
    long best = 0;
    for (auto s1 : smooth_numbers(cap)) best = std::max(best, *pair_slack(s1));
    return best;
}

} // namespace detail

/// Smallest split n = s2 + s3 (s2 ascending) such that some s1 <= cap makes
/// both s1 x s2 and s1 x s3 quaternary-pair feasible; s1 is the smallest such.
inline std::optional<SumWitness> quad_sum_witness(std::uint64_t n, std::uint64_t cap = kSharedDimensionCap) {
    const auto shared = smooth_numbers(cap);
    for (std::uint64_t s2 = 1; s2 < n; ++s2) {
        const auto a = pair_slack(s2);
        const auto b = pair_slack(n - s2);
        if (!a || !b) continue;
        const long need = std::max(-1 - *a, -1 - *b);
        for (auto s1 : shared) {
            if (*pair_slack(s1) >= need) return SumWitness{s1, s2, n - s2};
        }
    }
    return std::nullopt;
}

/// quad-sum-coverage: n <= limit is covered when n = s2 + s3 with a shared s1
/// making s1 x s2 and s1 x s3 feasible quaternary pairs, or when n itself is a
/// quaternary Golay number. sequence-sum-coverage is the same with s1 = 1.
/// golay-count lists the Golay numbers of `alphabet` up to `limit`.
inline CoverageReport coverage_scan(CoverageKind kind, std::uint64_t limit, Alphabet alphabet = Alphabet::Quaternary,
                                    std::uint64_t cap = kSharedDimensionCap) {
    CoverageReport r;
    r.kind = kind;
    r.alphabet = alphabet;
    r.limit = limit;
    if (kind == CoverageKind::GolayCount) {
        r.values = enumerate_golay_numbers(alphabet, limit);
        return r;
    }
    const auto slack = detail::slack_table(limit);
    const long shared = kind == CoverageKind::QuadSumCoverage ? detail::best_shared_slack(cap) : 0;
    const auto ok = [&](std::uint64_t s) { return slack[s] && *slack[s] + shared >= -1; };
    for (std::uint64_t n = 1; n <= limit; ++n) {
        bool covered = slack[n] && *slack[n] >= -1;
        for (std::uint64_t s2 = 1; !covered && s2 <= n / 2; ++s2) covered = ok(s2) && ok(n - s2);
        if (!covered) r.values.push_back(n);
    }
    return r;
}

} // namespace gca
