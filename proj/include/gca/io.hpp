#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gca_set.hpp"

namespace gca::io {

using json = nlohmann::json;

inline constexpr std::string_view kTensorFormat = "gca-tensor/1";
inline constexpr std::string_view kSetFormat = "gca-set/1";
inline constexpr std::string_view kRowMajor = "row-major-last-fastest";

inline json tensor_to_json(const Tensor& t) {
    json entries = json::array();
    for (const auto& g : t.entries()) entries.push_back(json::array({g.re, g.im}));
    return json{{"format", kTensorFormat},
                {"shape", t.shape().dims()},
                {"order", kRowMajor},
                {"entries", std::move(entries)},
                {"alphabet", to_string(t.alphabet())}};
}

/// Parses gca-tensor/1 and checks the alphabet claim against the entries.
inline Tensor tensor_from_json(const json& j) {
    try {
        if (j.at("format").get<std::string>() != kTensorFormat) {
            throw Error(ErrorKind::ParseError, "expected format " + std::string(kTensorFormat));
        }
        if (j.contains("order") && j.at("order").get<std::string>() != kRowMajor) {
            throw Error(ErrorKind::ParseError, "unsupported entry order '" + j.at("order").get<std::string>() + "'");
        }
        Shape shape(j.at("shape").get<std::vector<std::size_t>>());
        const auto& raw = j.at("entries");
        if (!raw.is_array() || raw.size() != shape.size()) {
            throw Error(ErrorKind::ParseError, "entries count does not match shape " + shape.to_string());
        }
        std::vector<GaussInt> entries;
        entries.reserve(raw.size());
        for (const auto& e : raw) {
            if (!e.is_array() || e.size() != 2) throw Error(ErrorKind::ParseError, "entry must be [re, im]");
            entries.emplace_back(e[0].get<std::int64_t>(), e[1].get<std::int64_t>());
        }
        Tensor t(std::move(shape), std::move(entries));
        if (j.contains("alphabet")) {
            const Alphabet claimed = parse_alphabet(j.at("alphabet").get<std::string>());
            if (!alphabet_within(t.alphabet(), claimed)) {
                throw Error(ErrorKind::ParseError, "entries violate claimed alphabet '" +
                                                       std::string(to_string(claimed)) + "'");
            }
        }
        return t;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        throw Error(ErrorKind::ParseError, e.what());
    }
}

inline json set_to_json(const GcaSet& s) {
    json arrays = json::array();
    for (const auto& t : s.arrays) arrays.push_back(tensor_to_json(t));
    json structure = json::object();
    for (const auto& [k, v] : s.structure) structure[k] = v;
    return json{{"format", kSetFormat},   {"role", to_string(s.role)},         {"alphabet", to_string(s.alphabet)},
                {"arrays", std::move(arrays)}, {"lineage", s.lineage}, {"structure", std::move(structure)}};
}

/// Parses gca-set/1 without judging complementarity; callers verify.
inline GcaSet set_from_json(const json& j) {
    try {
        if (j.at("format").get<std::string>() != kSetFormat) {
            throw Error(ErrorKind::ParseError, "expected format " + std::string(kSetFormat));
        }
        GcaSet s;
        for (const auto& t : j.at("arrays")) s.arrays.push_back(tensor_from_json(t));
        if (s.arrays.empty()) throw Error(ErrorKind::ParseError, "set has no arrays");
        s.alphabet = set_alphabet(s.arrays);
        if (j.contains("alphabet")) {
            const Alphabet claimed = parse_alphabet(j.at("alphabet").get<std::string>());
            if (!alphabet_within(s.alphabet, claimed)) {
                throw Error(ErrorKind::ParseError, "set entries violate claimed alphabet");
            }
            s.alphabet = claimed;
        }
        s.role = j.contains("role") ? parse_role(j.at("role").get<std::string>()) : role_for_size(s.arrays.size());
        if (j.contains("lineage") && j.at("lineage").is_string()) s.lineage = j.at("lineage").get<std::string>();
        if (j.contains("structure")) {
            for (const auto& [k, v] : j.at("structure").items()) s.structure[k] = v.get<bool>();
        }
        return s;
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline json parse_text(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw Error(ErrorKind::ParseError, origin + ": " + e.what());
    }
}

/// Serializes with the layout every writer in this project uses.
inline std::string dump(const json& j) { return j.dump(1) + "\n"; }

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path + "'");
    out << text;
}

} // namespace gca::io
