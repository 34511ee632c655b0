#pragma once

#include <set>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "io.hpp"
#include "seeds.hpp"

namespace gca {

/// A construction tree. Leaves are "seed" nodes naming a registry key (or
/// "trivial" / "trivial-quad"); inner nodes name a construction and carry
/// the declared shape of their output's first member.
struct Recipe {
    std::string op;
    io::json params = io::json::object();
    std::vector<Recipe> children;
    std::string seed;
    Shape shape;

    [[nodiscard]] std::size_t dim() const { return params.at("dim").get<std::size_t>(); }
};

inline constexpr std::string_view kRecipeFormat = "gca-recipe/1";
inline constexpr std::string_view kTrivialPair = "trivial";
inline constexpr std::string_view kTrivialQuad = "trivial-quad";

namespace recipe {

inline Recipe node(std::string op, std::vector<Recipe> children, Shape shape, io::json params = io::json::object()) {
    Recipe r;
    r.op = std::move(op);
    r.children = std::move(children);
    r.shape = std::move(shape);
    r.params = std::move(params);
    return r;
}

/// A 1-D registry seed embedded along `dim` of a rank-`rank` tensor.
inline Recipe seed(SeedKind kind, Alphabet alphabet, std::size_t length, std::size_t rank, std::size_t dim) {
    Recipe r;
    r.op = "seed";
    r.seed = SeedRecord::seed_key(kind, alphabet, std::to_string(length));
    r.params = {{"rank", rank}, {"dim", dim}};
    r.shape = Shape::along(rank, dim, kind == SeedKind::BaseSequences ? length + 1 : length);
    return r;
}

inline Recipe golay_pair(Alphabet alphabet, std::size_t length, std::size_t rank, std::size_t dim) {
    return seed(SeedKind::GolayPair, alphabet, length, rank, dim);
}

inline Recipe base_sequences(std::size_t m, std::size_t rank, std::size_t dim) {
    return seed(SeedKind::BaseSequences, Alphabet::Binary, m, rank, dim);
}

inline Recipe trivial(std::size_t rank) {
    Recipe r;
    r.op = "seed";
    r.seed = std::string(kTrivialPair);
    r.params = {{"rank", rank}};
    r.shape = Shape::ones(rank);
    return r;
}

inline Recipe trivial_quad(std::size_t rank) {
    Recipe r = trivial(rank);
    r.seed = std::string(kTrivialQuad);
    return r;
}

inline Recipe binary_turyn_pair(Recipe ab, Recipe cd) {
    Shape s = ab.shape * cd.shape;
    return node("binary_turyn_pair", {std::move(ab), std::move(cd)}, std::move(s));
}

inline Recipe concat_pair(Recipe ab, Recipe cd, std::size_t dim) {
    Shape s = ab.shape * cd.shape;
    s = s.with(dim, 2 * s[dim]);
    return node("concat_pair", {std::move(ab), std::move(cd)}, std::move(s), {{"dim", dim}});
}

inline Recipe rank1_pair(Recipe ab, Recipe cd) {
    Shape s{2 * ab.shape[0], cd.shape[0]};
    return node("rank1_pair", {std::move(ab), std::move(cd)}, std::move(s));
}

inline Recipe glue_pair(Recipe binder, Recipe cd, Recipe ef) {
    Shape s = binder.shape * cd.shape * ef.shape;
    return node("glue_pair", {std::move(binder), std::move(cd), std::move(ef)}, std::move(s));
}

inline Recipe cross_set(Recipe a, Recipe b) {
    Shape s = a.shape * b.shape;
    return node("cross_set", {std::move(a), std::move(b)}, std::move(s));
}

/// Input is base sequences whose first member has size m+1 along `dim`.
inline Recipe interleave_quad(Recipe bs, std::size_t dim) {
    Shape s = bs.shape.with(dim, 2 * bs.shape[dim] - 1);
    return node("interleave_quad", {std::move(bs)}, std::move(s), {{"dim", dim}});
}

/// Two pairs of sizes s and s' along `dim` give size 2(s + s').
inline Recipe concat_zero_quad(Recipe ab, Recipe cd, std::size_t dim) {
    Shape s = ab.shape.with(dim, 2 * (ab.shape[dim] + cd.shape[dim]));
    return node("concat_zero_quad", {std::move(ab), std::move(cd)}, std::move(s), {{"dim", dim}});
}

/// A uniform quad of size s along `dim` gives size 4s.
inline Recipe concat_zero_quad(Recipe quad, std::size_t dim) {
    Shape s = quad.shape.with(dim, 4 * quad.shape[dim]);
    return node("concat_zero_quad", {std::move(quad)}, std::move(s), {{"dim", dim}});
}

inline Recipe lagrange_quad(Recipe q1, Recipe q2) {
    Shape s = q1.shape * q2.shape;
    return node("lagrange_quad", {std::move(q1), std::move(q2)}, std::move(s));
}

inline Recipe disjoint_from_pair(Recipe cd) {
    Shape s = cd.shape;
    return node("disjoint_from_pair", {std::move(cd)}, std::move(s));
}

inline Recipe expand_quad(Recipe quad, Recipe ij) {
    Shape s = quad.shape * ij.shape;
    return node("expand_quad", {std::move(quad), std::move(ij)}, std::move(s));
}

/// Pairs of sizes s and s' along `dim` and a binder pair: (s + s') along
/// `dim`, then multiplied by the binder's shape.
inline Recipe compromise_quad(Recipe ab, Recipe cd, Recipe ij, std::size_t dim) {
    Shape s = ab.shape.with(dim, ab.shape[dim] + cd.shape[dim]) * ij.shape;
    return node("compromise_quad", {std::move(ab), std::move(cd), std::move(ij)}, std::move(s), {{"dim", dim}});
}

/// A uniform quad of size s along `dim` (split into pairs) and a binder pair.
inline Recipe compromise_quad(Recipe quad, Recipe ij, std::size_t dim) {
    Shape s = quad.shape.with(dim, 2 * quad.shape[dim]) * ij.shape;
    return node("compromise_quad", {std::move(quad), std::move(ij)}, std::move(s), {{"dim", dim}});
}

inline Recipe reshape(Recipe set) {
    Shape s{set.shape.size()};
    return node("reshape", {std::move(set)}, std::move(s));
}

} // namespace recipe

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

inline io::json recipe_node_to_json(const Recipe& r) {
    io::json j{{"op", r.op}, {"params", r.params}, {"shape", r.shape.dims()}};
    io::json children = io::json::array();
    for (const auto& c : r.children) children.push_back(recipe_node_to_json(c));
    j["children"] = std::move(children);
    if (!r.seed.empty()) j["seed"] = r.seed;
    return j;
}

inline io::json recipe_to_json(const Recipe& r) {
    io::json j = recipe_node_to_json(r);
    j["format"] = kRecipeFormat;
    return j;
}

inline Recipe recipe_node_from_json(const io::json& j) {
    Recipe r;
    r.op = j.at("op").get<std::string>();
    if (j.contains("params")) r.params = j.at("params");
    if (!r.params.is_object()) throw Error(ErrorKind::ParseError, "recipe params must be an object");
    if (j.contains("seed")) r.seed = j.at("seed").get<std::string>();
    if (j.contains("children")) {
        for (const auto& c : j.at("children")) r.children.push_back(recipe_node_from_json(c));
    }
    r.shape = Shape(j.at("shape").get<std::vector<std::size_t>>());
    return r;
}

inline Recipe recipe_from_json(const io::json& j) {
    try {
        if (j.at("format").get<std::string>() != kRecipeFormat) {
            throw Error(ErrorKind::ParseError, "expected format " + std::string(kRecipeFormat));
        }
        return recipe_node_from_json(j);
    } catch (const io::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        throw Error(ErrorKind::ParseError, e.what());
    }
}

// ---------------------------------------------------------------------------
// Execution
// ---------------------------------------------------------------------------

namespace detail {

/// Registry lookup for a seed key, falling back to smaller alphabets.
inline const SeedRecord* resolve_seed(const SeedRegistry& reg, const std::string& key) {
    const auto first = key.find('/');
    const auto second = key.find('/', first + 1);
    if (first == std::string::npos || second == std::string::npos) return reg.find(key);
    try {
        const SeedKind kind = parse_seed_kind(key.substr(0, first));
        const Alphabet alphabet = parse_alphabet(key.substr(first + 1, second - first - 1));
        return reg.find(kind, alphabet, key.substr(second + 1));
    } catch (const Error&) {
        return nullptr;
    }
}

inline void collect_missing(const Recipe& r, const SeedRegistry& reg, std::set<std::string>& out) {
    if (r.op == "seed" && r.seed != kTrivialPair && r.seed != kTrivialQuad && !resolve_seed(reg, r.seed)) {
        out.insert(r.seed);
    }
    for (const auto& c : r.children) collect_missing(c, reg, out);
}

inline GcaSet execute_seed(const Recipe& r, const SeedRegistry& reg) {
    const std::size_t rank = r.params.value("rank", std::size_t{1});
    if (r.seed == kTrivialPair) return trivial_pair(rank);
    if (r.seed == kTrivialQuad) return trivial_weight_deficient_quad(rank);
    const SeedRecord* rec = resolve_seed(reg, r.seed);
    if (!rec) throw Error(ErrorKind::MissingSeed, r.seed);
    const std::size_t dim = r.params.value("dim", std::size_t{0});
    GcaSet set = rec->as_set();
    for (auto& t : set.arrays) {
        if (t.rank() == 1 && rank > 1) t = orient(t, rank, dim);
    }
    return set;
}

inline GcaSet execute_node(const Recipe& r, const SeedRegistry& reg, const std::string& path) {
    const auto arity = [&](std::size_t lo, std::size_t hi) {
        if (r.children.size() < lo || r.children.size() > hi) {
            throw Error(ErrorKind::ParseError, path + ": " + r.op + " has " + std::to_string(r.children.size()) +
                                                   " children");
        }
    };
    if (r.op == "seed") {
        arity(0, 0);
        return execute_seed(r, reg);
    }
    std::vector<GcaSet> in;
    for (std::size_t k = 0; k < r.children.size(); ++k) {
        in.push_back(execute_node(r.children[k], reg, path + "/" + std::to_string(k)));
    }
    try {
        GcaSet out;
        if (r.op == "binary_turyn_pair") {
            arity(2, 2);
            out = binary_turyn_pair(in[0], in[1]);
        } else if (r.op == "rank1_pair") {
            arity(2, 2);
            out = rank1_pair(in[0], in[1]);
        } else if (r.op == "concat_pair") {
            arity(2, 2);
            out = concat_pair(in[0], in[1], r.dim());
        } else if (r.op == "glue_pair") {
            arity(3, 3);
            out = glue_pair(in[0], in[1], in[2]);
        } else if (r.op == "cross_set") {
            arity(2, 2);
            out = cross_set(in[0], in[1]);
        } else if (r.op == "interleave_quad") {
            arity(1, 1);
            out = interleave_quad(in[0], r.dim());
        } else if (r.op == "concat_zero_quad") {
            arity(1, 2);
            out = in.size() == 1 ? concat_zero_quad(in[0], r.dim()) : concat_zero_quad(in[0], in[1], r.dim());
        } else if (r.op == "lagrange_quad") {
            arity(2, 2);
            out = lagrange_quad(in[0], in[1]);
        } else if (r.op == "expand_quad") {
            arity(2, 2);
            out = expand_quad(in[0], in[1]);
        } else if (r.op == "compromise_quad") {
            arity(2, 3);
            out = in.size() == 2 ? compromise_quad(in[0], r.dim(), in[1])
                                 : compromise_quad(in[0], in[1], r.dim(), in[2]);
        } else if (r.op == "disjoint_from_pair") {
            arity(1, 1);
            out = disjoint_from_pair(in[0]);
        } else if (r.op == "disjoint_mask_pair") {
            arity(1, 1);
            out = disjoint_mask_pair(in[0]);
        } else if (r.op == "reshape") {
            arity(1, 1);
            out = reshape_set(in[0]);
        } else {
            throw Error(ErrorKind::ParseError, "unknown recipe op '" + r.op + "'");
        }
        if (out.shape() != r.shape) {
            throw Error(ErrorKind::VerificationFailed, "output shape " + out.shape().to_string() +
                                                           " differs from declared " + r.shape.to_string());
        }
        return out;
    } catch (const Error& e) {
        if (e.message().rfind("at ", 0) == 0) throw;
        throw Error(e.kind(), "at " + path + " (" + r.op + "): " + e.message(), e.position());
    }
}

} // namespace detail

/// Seed keys in the recipe that the registry cannot resolve, sorted.
inline std::vector<std::string> missing_seeds(const Recipe& r, const SeedRegistry& reg) {
    std::set<std::string> out;
    detail::collect_missing(r, reg, out);
    return {out.begin(), out.end()};
}

/// Executes bottom-up. Throws MissingSeed before doing any work if a leaf is
/// unresolvable; construction errors are rethrown with the node path.
inline GcaSet execute(const Recipe& r, const SeedRegistry& reg) {
    if (const auto missing = missing_seeds(r, reg); !missing.empty()) {
        std::string list;
        for (const auto& k : missing) list += (list.empty() ? "" : ", ") + k;
        throw Error(ErrorKind::MissingSeed, list);
    }
    GcaSet out = detail::execute_node(r, reg, "root");
    verify_or_throw(out.arrays, "recipe output");
    return out;
}

} // namespace gca
