#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "complementarity.hpp"
#include "tensor.hpp"

namespace gca {

enum class SetRole { Pair, Quad, SetN };

inline std::string_view to_string(SetRole role) noexcept {
    switch (role) {
    case SetRole::Pair: return "pair";
    case SetRole::Quad: return "quad";
    case SetRole::SetN: return "set-n";
    }
    return "set-n";
}

inline SetRole role_for_size(std::size_t n) noexcept {
    return n == 2 ? SetRole::Pair : n == 4 ? SetRole::Quad : SetRole::SetN;
}

inline SetRole parse_role(std::string_view s) {
    if (s == "pair") return SetRole::Pair;
    if (s == "quad") return SetRole::Quad;
    if (s == "set-n") return SetRole::SetN;
    throw Error(ErrorKind::ParseError, "unknown role '" + std::string(s) + "'");
}

/// Zero-support relations among members, keyed like "disjoint(0,1)".
using StructureFlags = std::map<std::string, bool>;

inline std::string relation_key(std::string_view relation, std::size_t i, std::size_t j) {
    return std::string(relation) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

/// Arrays claimed to be autocorrelation complementary, plus bookkeeping.
struct GcaSet {
    std::vector<Tensor> arrays;
    Alphabet alphabet = Alphabet::General;
    SetRole role = SetRole::SetN;
    StructureFlags structure;
    std::string lineage;

    [[nodiscard]] std::size_t size() const noexcept { return arrays.size(); }
    [[nodiscard]] const Tensor& operator[](std::size_t k) const { return arrays.at(k); }
    [[nodiscard]] std::size_t rank() const { return arrays.at(0).rank(); }
    /// Shape of the first member; uniform sets share it.
    [[nodiscard]] const Shape& shape() const { return arrays.at(0).shape(); }
    [[nodiscard]] bool uniform() const {
        return std::all_of(arrays.begin(), arrays.end(),
                           [&](const Tensor& t) { return t.shape() == arrays.front().shape(); });
    }
    [[nodiscard]] bool polyphase() const {
        return std::none_of(arrays.begin(), arrays.end(), [](const Tensor& t) { return t.has_zero(); }) &&
               alphabet_within(alphabet, Alphabet::Quaternary);
    }
};

inline Alphabet set_alphabet(std::span<const Tensor> arrays) {
    Alphabet a = Alphabet::Binary;
    for (const auto& t : arrays) a = std::max(a, t.alphabet());
    return a;
}

/// Evaluates the relation named by a structure key on the set's members.
inline bool evaluate_relation(const std::string& key, std::span<const Tensor> arrays) {
    if (key == "quasi-symmetric") {
        return std::all_of(arrays.begin(), arrays.end(), [](const Tensor& t) { return quasi_symmetric(t); });
    }
    const auto open = key.find('(');
    const auto comma = key.find(',');
    if (open == std::string::npos || comma == std::string::npos || key.back() != ')') {
        throw Error(ErrorKind::ParseError, "malformed structure key '" + key + "'");
    }
    const std::string relation = key.substr(0, open);
    const std::size_t i = std::stoul(key.substr(open + 1, comma - open - 1));
    const std::size_t j = std::stoul(key.substr(comma + 1, key.size() - comma - 2));
    if (i >= arrays.size() || j >= arrays.size()) {
        throw Error(ErrorKind::ParseError, "structure key '" + key + "' names a missing member");
    }
    const auto s = structure(arrays[i], arrays[j]);
    if (relation == "disjoint") return s.disjoint;
    if (relation == "conjoint") return s.conjoint;
    throw Error(ErrorKind::ParseError, "unknown relation '" + relation + "'");
}

/// Structure of a weight-deficient quad ordered {E, F, G, H}: all quasi-symmetric,
/// E~G and F~H conjoint, E~F and G~H disjoint.
inline StructureFlags weight_deficient_quad_structure(std::span<const Tensor> arrays) {
    StructureFlags flags;
    for (const auto& key : {std::string("quasi-symmetric"), relation_key("conjoint", 0, 2),
                            relation_key("conjoint", 1, 3), relation_key("disjoint", 0, 1),
                            relation_key("disjoint", 2, 3)}) {
        flags[key] = evaluate_relation(key, arrays);
    }
    return flags;
}

/// True when every flag recorded on the set matches its tensors.
inline bool structure_consistent(const GcaSet& set) {
    return std::all_of(set.structure.begin(), set.structure.end(),
                       [&](const auto& kv) { return evaluate_relation(kv.first, set.arrays) == kv.second; });
}

/// Runs both complementarity oracles (after zero-padding mixed shapes).
/// Throws VerificationFailed if they reject the set or disagree.
inline GcaVerdict verify_or_throw(std::span<const Tensor> arrays, const std::string& what) {
    const auto padded = pad_to_common_shape(arrays);
    const auto verdict = is_gca_set(padded);
    const bool poly = gca_check_polynomial(padded);
    if (verdict.is_complementary != poly) {
        throw Error(ErrorKind::VerificationFailed, what + ": autocorrelation and polynomial checks disagree");
    }
    if (!verdict.is_complementary) {
        throw Error(ErrorKind::VerificationFailed,
                    what + ": not complementary (max sidelobe norm " + std::to_string(verdict.max_sidelobe_norm) + ")");
    }
    return verdict;
}

/// Builds a set from already-constructed arrays and enforces the postconditions:
/// both oracles pass and every recorded structure flag holds.
inline GcaSet make_verified_set(std::vector<Tensor> arrays, std::string lineage, StructureFlags flags = {}) {
    verify_or_throw(arrays, lineage);
    GcaSet set;
    set.alphabet = set_alphabet(arrays);
    set.role = role_for_size(arrays.size());
    set.arrays = std::move(arrays);
    set.structure = std::move(flags);
    set.lineage = std::move(lineage);
    if (!structure_consistent(set)) {
        throw Error(ErrorKind::StructureFailed, set.lineage + ": recorded structure does not hold");
    }
    return set;
}

} // namespace gca
