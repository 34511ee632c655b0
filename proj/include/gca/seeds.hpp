#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "constructions.hpp"
#include "io.hpp"

namespace gca {

enum class SeedKind { GolayPair, BaseSequences };

inline std::string_view to_string(SeedKind k) noexcept {
    return k == SeedKind::GolayPair ? "golay-pair" : "base-sequences";
}

inline SeedKind parse_seed_kind(std::string_view s) {
    if (s == "golay-pair" || s == "pair") return SeedKind::GolayPair;
    if (s == "base-sequences" || s == "base") return SeedKind::BaseSequences;
    throw Error(ErrorKind::ParseError, "unknown seed kind '" + std::string(s) + "'");
}

/// A Golay pair or a quad of base sequences BS(m+1, m).
struct SeedRecord {
    SeedKind kind = SeedKind::GolayPair;
    Alphabet alphabet = Alphabet::Binary;
    std::vector<Tensor> tensors;
    std::string provenance;

    [[nodiscard]] std::vector<Shape> shapes() const {
        std::vector<Shape> out;
        for (const auto& t : tensors) out.push_back(t.shape());
        return out;
    }
    /// Shape of a pair, or m for base sequences.
    [[nodiscard]] std::string signature() const {
        if (kind == SeedKind::BaseSequences) return std::to_string(tensors.at(2).size());
        return tensors.at(0).shape().to_string();
    }
    [[nodiscard]] std::string key() const {
        return seed_key(kind, alphabet, signature());
    }
    static std::string seed_key(SeedKind kind, Alphabet alphabet, const std::string& signature) {
        return std::string(to_string(kind)) + "/" + std::string(to_string(alphabet)) + "/" + signature;
    }

    [[nodiscard]] GcaSet as_set() const {
        GcaSet s;
        s.arrays = tensors;
        s.alphabet = set_alphabet(tensors);
        s.role = role_for_size(tensors.size());
        s.lineage = key();
        return s;
    }
};

/// Throws VerificationFailed (or ShapeMismatch) unless the record is what it claims.
inline void verify_seed(const SeedRecord& rec) {
    for (const auto& t : rec.tensors) {
        if (!alphabet_within(t.alphabet(), rec.alphabet)) {
            throw Error(ErrorKind::VerificationFailed, rec.provenance + ": entries outside claimed alphabet");
        }
        if (t.has_zero()) throw Error(ErrorKind::VerificationFailed, "seed entries must be unimodular");
    }
    if (rec.kind == SeedKind::GolayPair) {
        if (rec.tensors.size() != 2 || rec.tensors[0].shape() != rec.tensors[1].shape()) {
            throw Error(ErrorKind::VerificationFailed, "golay pair needs two equally shaped tensors");
        }
        verify_or_throw(rec.tensors, "seed " + rec.key());
        return;
    }
    if (rec.tensors.size() != 4) throw Error(ErrorKind::VerificationFailed, "base sequences need four tensors");
    for (const auto& t : rec.tensors) {
        if (t.rank() != 1) throw Error(ErrorKind::VerificationFailed, "base sequences are one-dimensional");
    }
    const std::size_t m = rec.tensors[2].size();
    if (rec.tensors[0].size() != m + 1 || rec.tensors[1].size() != m + 1 || rec.tensors[3].size() != m) {
        throw Error(ErrorKind::VerificationFailed, "base sequences need lengths m+1, m+1, m, m");
    }
    const auto v = verify_or_throw(rec.tensors, "seed " + rec.key());
    if (v.total_weight != static_cast<std::int64_t>(4 * m + 2)) {
        throw Error(ErrorKind::VerificationFailed, "base sequences weight differs from 4m+2");
    }
}

struct LoadReport {
    std::size_t loaded = 0;
    std::vector<std::string> rejected;
};

/// Oracle-verified seeds keyed by (kind, alphabet, shape signature).
class SeedRegistry {
  public:
    /// Verifies and stores a record, replacing any record under the same key.
    void add(SeedRecord rec) {
        verify_seed(rec);
        auto key = rec.key();
        records_.insert_or_assign(std::move(key), std::move(rec));
    }

    [[nodiscard]] std::size_t size() const noexcept { return records_.size(); }
    [[nodiscard]] bool empty() const noexcept { return records_.empty(); }
    [[nodiscard]] const std::map<std::string, SeedRecord>& records() const noexcept { return records_; }

    [[nodiscard]] const SeedRecord* find(const std::string& key) const {
        auto it = records_.find(key);
        return it == records_.end() ? nullptr : &it->second;
    }

    /// Looks up under `alphabet`, then under any smaller alphabet (a binary
    /// pair is also a quaternary pair).
    [[nodiscard]] const SeedRecord* find(SeedKind kind, Alphabet alphabet, const std::string& signature) const {
        for (auto a : {Alphabet::Binary, Alphabet::Quaternary, Alphabet::Polyphase4WithZeros, Alphabet::General}) {
            if (!alphabet_within(a, alphabet)) break;
            if (const auto* rec = find(SeedRecord::seed_key(kind, a, signature))) return rec;
        }
        return nullptr;
    }

  private:
    std::map<std::string, SeedRecord> records_;
};

inline io::json seed_to_json(const SeedRecord& rec) {
    io::json tensors = io::json::array();
    for (const auto& t : rec.tensors) tensors.push_back(io::tensor_to_json(t));
    return io::json{{"kind", to_string(rec.kind)},
                    {"alphabet", to_string(rec.alphabet)},
                    {"tensors", std::move(tensors)},
                    {"provenance", rec.provenance}};
}

inline SeedRecord seed_from_json(const io::json& j) {
    try {
        SeedRecord rec;
        rec.kind = parse_seed_kind(j.at("kind").get<std::string>());
        rec.alphabet = parse_alphabet(j.at("alphabet").get<std::string>());
        for (const auto& t : j.at("tensors")) rec.tensors.push_back(io::tensor_from_json(t));
        if (j.contains("provenance")) rec.provenance = j.at("provenance").get<std::string>();
        return rec;
    } catch (const io::json::exception& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

/// Seed file "gca-seeds/1": a JSON list of records.
inline std::string seeds_to_text(const SeedRegistry& reg) {
    io::json list = io::json::array();
    for (const auto& [key, rec] : reg.records()) list.push_back(seed_to_json(rec));
    return io::dump(list);
}

/// Loads every record that parses and passes verification. A malformed file
/// is a ParseError; a bad record is only reported in `report`.
inline SeedRegistry load_registry_text(const std::string& text, LoadReport* report = nullptr,
                                       const std::string& origin = "seeds") {
    SeedRegistry reg;
    LoadReport local;
    LoadReport& rep = report ? *report : local;
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) return reg;
    const auto doc = io::parse_text(text, origin);
    const io::json* list = &doc;
    if (doc.is_object() && doc.contains("records")) list = &doc.at("records");
    if (!list->is_array()) throw Error(ErrorKind::ParseError, origin + ": expected a list of seed records");
    std::size_t index = 0;
    for (const auto& item : *list) {
        try {
            reg.add(seed_from_json(item));
            ++rep.loaded;
        } catch (const Error& e) {
            rep.rejected.push_back("record " + std::to_string(index) + ": " + e.what());
        }
        ++index;
    }
    return reg;
}

inline SeedRegistry load_registry(const std::string& path, LoadReport* report = nullptr) {
    return load_registry_text(io::read_file(path), report, path);
}

inline const SeedRecord& get_golay_pair(const SeedRegistry& reg, Alphabet alphabet, const Shape& shape) {
    if (const auto* rec = reg.find(SeedKind::GolayPair, alphabet, shape.to_string())) return *rec;
    throw Error(ErrorKind::NotFound, "no " + std::string(to_string(alphabet)) + " Golay pair of size " +
                                         shape.to_string());
}

inline const SeedRecord& get_golay_pair(const SeedRegistry& reg, Alphabet alphabet, std::size_t length) {
    return get_golay_pair(reg, alphabet, Shape{length});
}

inline const SeedRecord& get_base_sequences(const SeedRegistry& reg, std::size_t m) {
    if (m >= 1) {
        if (const auto* rec = reg.find(SeedKind::BaseSequences, Alphabet::Quaternary, std::to_string(m))) return *rec;
    }
    throw Error(ErrorKind::NotFound, "no base sequences BS(" + std::to_string(m + 1) + "," + std::to_string(m) + ")");
}

// ---------------------------------------------------------------------------
// Exhaustive search
// ---------------------------------------------------------------------------

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

inline std::string_view to_string(SearchStatus s) noexcept {
    switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
    }
    return "unknown";
}

struct SearchOutcome {
    SearchStatus status = SearchStatus::Exhausted;
    std::optional<SeedRecord> record;
    std::uint64_t nodes = 0;
    /// Number of normalized solutions; only meaningful in counting mode.
    std::uint64_t solutions = 0;
};

namespace detail {

/// Depth-first search for K arrays over an alphabet of powers of i whose
/// autocorrelations sum to zero at every nonzero shift.
///
/// Entries fixed by symmetry (see is_normalized) are not branched on.
/// Positions are placed round-robin over the arrays, each array filled from
/// both ends inward, so the outermost shifts complete first. A shift's partial
/// sum S with `rem` unplaced unit terms is abandoned when |Re S| + |Im S| > rem
/// or when Re S + Im S + rem is odd (each term moves Re + Im by exactly one).
/// Values are tried in the order 1, -1, i, -i, so the first solution is the
/// smallest in that order over the placement sequence.
class ComplementarySearch {
  public:
    ComplementarySearch(std::vector<Shape> shapes, Alphabet alphabet) : shapes_(std::move(shapes)) {
        // Exponents of i in try order: 1, -1, i, -i.
        symbols_ = alphabet == Alphabet::Binary ? std::vector<int>{0, 2} : std::vector<int>{0, 2, 1, 3};
        build();
    }

    SearchOutcome run(std::uint64_t budget, bool count_all) {
        budget_ = budget;
        count_all_ = count_all;
        nodes_ = 0;
        solutions_ = 0;
        found_ = false;
        exceeded_ = false;
        std::fill(sum_re_.begin(), sum_re_.end(), 0);
        std::fill(sum_im_.begin(), sum_im_.end(), 0);
        rem_ = total_terms_;
        for (auto& v : values_) std::fill(v.begin(), v.end(), -1);
        for (std::size_t s = 0; s < rem_.size(); ++s) {
            if (rem_[s] % 2 != 0) return finish();
        }
        descend(0);
        return finish();
    }

    /// The current assignment as tensors (valid after a Found outcome).
    [[nodiscard]] std::vector<Tensor> solution() const { return best_; }

  private:
    struct Contribution {
        std::size_t other;  // flat position already placed in the same array
        std::size_t shift;  // index into the tracked-shift tables
        bool forward;       // term is x[p] conj(x[other]) when true, else x[other] conj(x[p])
    };
    struct Step {
        std::size_t array;
        std::size_t pos;
        std::vector<Contribution> terms;
        bool fixed_to_one;
    };

    static constexpr std::array<int, 4> kRe{1, 0, -1, 0};
    static constexpr std::array<int, 4> kIm{0, 1, 0, -1};

    void build() {
        const std::size_t rank = shapes_.front().rank();
        std::vector<std::size_t> max_dims(rank, 1);
        for (const auto& s : shapes_) {
            if (s.rank() != rank) throw Error(ErrorKind::RankMismatch, "search shapes differ in rank");
            for (std::size_t k = 0; k < rank; ++k) max_dims[k] = std::max(max_dims[k], s[k]);
        }
        std::vector<std::size_t> rdims(rank);
        for (std::size_t k = 0; k < rank; ++k) rdims[k] = 2 * max_dims[k] - 1;
        const Shape rshape(rdims);
        const std::size_t center = rshape.size() / 2;
        // Only shifts whose flat autocorrelation index exceeds the center are
        // tracked; the other half is the conjugate mirror.
        std::vector<std::size_t> shift_id(rshape.size(), SIZE_MAX);
        const auto shift_index = [&](const Index& p, const Index& q) {
            Index d(rank);
            for (std::size_t k = 0; k < rank; ++k) d[k] = p[k] + max_dims[k] - 1 - q[k];
            return rshape.flat(d);
        };

        std::vector<std::vector<std::size_t>> orders(shapes_.size());
        for (std::size_t a = 0; a < shapes_.size(); ++a) {
            const std::size_t n = shapes_[a].size();
            for (std::size_t lo = 0, hi = n; lo < hi;) {
                orders[a].push_back(lo++);
                if (lo < hi) orders[a].push_back(--hi);
            }
        }
        values_.assign(shapes_.size(), {});
        for (std::size_t a = 0; a < shapes_.size(); ++a) values_[a].assign(shapes_[a].size(), -1);

        std::vector<std::vector<bool>> placed(shapes_.size());
        for (std::size_t a = 0; a < shapes_.size(); ++a) placed[a].assign(shapes_[a].size(), false);
        std::size_t longest = 0;
        for (const auto& o : orders) longest = std::max(longest, o.size());
        for (std::size_t layer = 0; layer < longest; ++layer) {
            for (std::size_t a = 0; a < shapes_.size(); ++a) {
                if (layer >= orders[a].size()) continue;
                Step step{a, orders[a][layer], {}, is_normalized(a, orders[a][layer])};
                const Index p = shapes_[a].unflat(step.pos);
                for (std::size_t q = 0; q < shapes_[a].size(); ++q) {
                    if (!placed[a][q]) continue;
                    const Index qi = shapes_[a].unflat(q);
                    std::size_t f = shift_index(p, qi);
                    bool forward = true;
                    if (f < center) {
                        f = rshape.size() - 1 - f;
                        forward = false;
                    }
                    if (shift_id[f] == SIZE_MAX) {
                        shift_id[f] = total_terms_.size();
                        total_terms_.push_back(0);
                    }
                    step.terms.push_back({q, shift_id[f], forward});
                    total_terms_[shift_id[f]] += 1;
                }
                placed[a][step.pos] = true;
                steps_.push_back(std::move(step));
            }
        }
        sum_re_.assign(total_terms_.size(), 0);
        sum_im_.assign(total_terms_.size(), 0);
        rem_ = total_terms_;
    }

    /// Entries fixed to 1 by symmetry: the first entry of every array (each
    /// array may be multiplied by its own unit), and entry 1 of array 0 when
    /// the last axis is long enough (modulating every array by i^k or (-1)^k
    /// along that axis multiplies each shift's sum by a unit).
    bool is_normalized(std::size_t array, std::size_t pos) const {
        if (pos == 0) return true;
        return array == 0 && pos == 1 && shapes_[0][shapes_[0].rank() - 1] >= 2;
    }

    bool feasible(std::size_t s) const {
        const long re = sum_re_[s], im = sum_im_[s], rem = rem_[s];
        if (std::labs(re) + std::labs(im) > rem) return false;
        return ((re + im + rem) & 1L) == 0;
    }

    void apply(const Step& step, int value, int sign) {
        const auto& vals = values_[step.array];
        for (const auto& c : step.terms) {
            const int other = vals[c.other];
            const int e = ((c.forward ? value - other : other - value) % 4 + 4) % 4;
            sum_re_[c.shift] += sign * kRe[e];
            sum_im_[c.shift] += sign * kIm[e];
            rem_[c.shift] -= sign;
        }
    }

    void descend(std::size_t depth) {
        if (depth == steps_.size()) {
            ++solutions_;
            if (!found_) {
                found_ = true;
                capture();
            }
            return;
        }
        const Step& step = steps_[depth];
        for (int value : symbols_) {
            if (step.fixed_to_one && value != 0) continue;
            if (++nodes_ > budget_) {
                exceeded_ = true;
                return;
            }
            apply(step, value, +1);
            values_[step.array][step.pos] = value;
            bool ok = true;
            for (const auto& c : step.terms) {
                if (!feasible(c.shift)) {
                    ok = false;
                    break;
                }
            }
            if (ok) descend(depth + 1);
            values_[step.array][step.pos] = -1;
            apply(step, value, -1);
            if (exceeded_ || (found_ && !count_all_)) return;
        }
    }

    void capture() {
        best_.clear();
        for (std::size_t a = 0; a < shapes_.size(); ++a) {
            std::vector<GaussInt> entries(values_[a].size());
            for (std::size_t f = 0; f < entries.size(); ++f) {
                entries[f] = GaussInt(kRe[values_[a][f]], kIm[values_[a][f]]);
            }
            best_.emplace_back(shapes_[a], std::move(entries));
        }
    }

    SearchOutcome finish() const {
        SearchOutcome out;
        out.nodes = std::min(nodes_, budget_);
        out.solutions = solutions_;
        if (exceeded_) {
            out.status = SearchStatus::BudgetExceeded;
        } else if (found_ && !count_all_) {
            out.status = SearchStatus::Found;
        } else {
            out.status = SearchStatus::Exhausted;
        }
        return out;
    }

    std::vector<Shape> shapes_;
    std::vector<int> symbols_;
    std::vector<Step> steps_;
    std::vector<long> total_terms_;
    std::vector<long> sum_re_, sum_im_, rem_;
    std::vector<std::vector<int>> values_;
    std::vector<Tensor> best_;
    std::uint64_t budget_ = 0;
    std::uint64_t nodes_ = 0;
    std::uint64_t solutions_ = 0;
    bool count_all_ = false;
    bool found_ = false;
    bool exceeded_ = false;
};

inline SearchOutcome finish_search(ComplementarySearch& engine, SearchOutcome out, SeedKind kind, Alphabet alphabet,
                                   const std::string& provenance) {
    if (out.status == SearchStatus::Found) {
        SeedRecord rec;
        rec.kind = kind;
        rec.tensors = engine.solution();
        rec.alphabet = set_alphabet(rec.tensors) == Alphabet::Binary ? Alphabet::Binary : alphabet;
        rec.provenance = provenance;
        verify_seed(rec);
        out.record = std::move(rec);
    }
    return out;
}

} // namespace detail

/// Searches for a Golay pair of the given shape (rank 1 or 2) over the binary
/// or quaternary alphabet, with the first entry of the first array fixed to 1.
inline SearchOutcome search_golay_pair(Alphabet alphabet, const Shape& shape, std::uint64_t budget) {
    if (alphabet != Alphabet::Binary && alphabet != Alphabet::Quaternary) {
        throw Error(ErrorKind::InvalidShape, "search supports binary and quaternary alphabets");
    }
    detail::ComplementarySearch engine({shape, shape}, alphabet);
    auto out = engine.run(budget, false);
    return detail::finish_search(engine, out, SeedKind::GolayPair, alphabet,
                                 "search: " + std::string(to_string(alphabet)) + " pair " + shape.to_string());
}

/// Searches for binary base sequences BS(m+1, m).
inline SearchOutcome search_base_sequences(std::size_t m, std::uint64_t budget) {
    if (m == 0) throw Error(ErrorKind::InvalidShape, "base sequences need m >= 1");
    detail::ComplementarySearch engine({Shape{m + 1}, Shape{m + 1}, Shape{m}, Shape{m}}, Alphabet::Binary);
    auto out = engine.run(budget, false);
    return detail::finish_search(engine, out, SeedKind::BaseSequences, Alphabet::Binary,
                                 "search: BS(" + std::to_string(m + 1) + "," + std::to_string(m) + ")");
}

/// Counts Golay pairs of a shape up to the normalization symmetries; a
/// complete enumeration reports Exhausted.
inline SearchOutcome count_golay_pairs(Alphabet alphabet, const Shape& shape, std::uint64_t budget) {
    detail::ComplementarySearch engine({shape, shape}, alphabet);
    return engine.run(budget, true);
}

} // namespace gca
