#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tensor.hpp"

namespace gca {

/// Exponents of n over the primes {2, 3, 5, 11, 13}; empty when n has any
/// other prime factor.
struct SmoothFactors {
    unsigned two = 0, three = 0, five = 0, eleven = 0, thirteen = 0;
};

inline std::optional<SmoothFactors> factor_smooth(std::uint64_t n) {
    if (n == 0) return std::nullopt;
    SmoothFactors f;
    const auto strip = [&n](std::uint64_t p, unsigned& e) {
        while (n % p == 0) {
            n /= p;
            ++e;
        }
    };
    strip(2, f.two);
    strip(3, f.three);
    strip(5, f.five);
    strip(11, f.eleven);
    strip(13, f.thirteen);
    if (n != 1) return std::nullopt;
    return f;
}

/// All {2, 3, 5, 11, 13}-smooth numbers up to `limit`, ascending.
inline std::vector<std::uint64_t> smooth_numbers(std::uint64_t limit) {
    std::vector<std::uint64_t> out{1};
    for (std::uint64_t p : {2, 3, 5, 11, 13}) {
        const std::size_t existing = out.size();
        for (std::size_t k = 0; k < existing; ++k) {
            for (std::uint64_t v = out[k]; v <= limit / p;) {
                v *= p;
                out.push_back(v);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Binary:     n = 2^a 10^b 26^c.
/// Quaternary: n = 2^(a+u) 3^b 5^c 11^d 13^e with b+c+d+e <= a+2u+1, u <= c+e.
struct GolayWitness {
    Alphabet alphabet = Alphabet::Binary;
    unsigned a = 0, b = 0, c = 0, d = 0, e = 0, u = 0;

    [[nodiscard]] std::string to_string() const {
        const auto field = [](const char* name, unsigned v) { return std::string(name) + "=" + std::to_string(v); };
        if (alphabet == Alphabet::Binary) {
            return field("a", a) + "," + field("b", b) + "," + field("c", c);
        }
        return field("a", a) + "," + field("b", b) + "," + field("c", c) + "," + field("d", d) + "," + field("e", e) +
               "," + field("u", u);
    }
};

inline std::optional<GolayWitness> is_binary_golay_number(std::uint64_t n) {
    const auto f = factor_smooth(n);
    if (!f || f->three != 0 || f->eleven != 0) return std::nullopt;
    // Each 5 and each 13 needs a 2 to form a 10 or a 26.
    if (f->five + f->thirteen > f->two) return std::nullopt;
    GolayWitness w;
    w.alphabet = Alphabet::Binary;
    w.b = f->five;
    w.c = f->thirteen;
    w.a = f->two - f->five - f->thirteen;
    return w;
}

/// Feasibility is monotone in u, so the witness takes the largest u allowed.
inline std::optional<GolayWitness> is_quaternary_golay_number(std::uint64_t n) {
    const auto f = factor_smooth(n);
    if (!f) return std::nullopt;
    GolayWitness w;
    w.alphabet = Alphabet::Quaternary;
    w.u = std::min(f->two, f->five + f->thirteen);
    w.a = f->two - w.u;
    w.b = f->three;
    w.c = f->five;
    w.d = f->eleven;
    w.e = f->thirteen;
    if (w.b + w.c + w.d + w.e > w.a + 2 * w.u + 1) return std::nullopt;
    return w;
}

inline std::optional<GolayWitness> golay_witness(Alphabet alphabet, std::uint64_t n) {
    return alphabet == Alphabet::Binary ? is_binary_golay_number(n) : is_quaternary_golay_number(n);
}

inline std::vector<std::uint64_t> enumerate_golay_numbers(Alphabet alphabet, std::uint64_t limit) {
    std::vector<std::uint64_t> out;
    for (auto n : smooth_numbers(limit)) {
        if (golay_witness(alphabet, n)) out.push_back(n);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Per-dimension pair feasibility
// ---------------------------------------------------------------------------

/// How one dimension's size splits into quaternary seeds (3, 5, 11, 13) and
/// binary binders (2, and 10 or 26 kept whole inside this dimension).
struct DimensionSplit {
    std::size_t size = 1;
    SmoothFactors factors;
    unsigned tens = 0;
    unsigned twenty_sixes = 0;

    [[nodiscard]] unsigned blocks() const noexcept { return tens + twenty_sixes; }
    [[nodiscard]] unsigned loose_twos() const noexcept { return factors.two - blocks(); }
    [[nodiscard]] unsigned binders() const noexcept { return factors.two; }
    [[nodiscard]] unsigned seeds() const noexcept {
        return factors.three + factors.five + factors.eleven + factors.thirteen - blocks();
    }
    /// Binders minus seeds contributed by this dimension.
    [[nodiscard]] long slack() const noexcept { return static_cast<long>(binders()) - static_cast<long>(seeds()); }
};

/// Blocks are formed greedily (10s before 26s); the block count is what
/// matters for feasibility, and it is the largest possible.
inline std::optional<DimensionSplit> split_dimension(std::size_t size) {
    const auto f = factor_smooth(size);
    if (!f) return std::nullopt;
    DimensionSplit d;
    d.size = size;
    d.factors = *f;
    d.tens = std::min(f->two, f->five);
    d.twenty_sixes = std::min(f->two - d.tens, f->thirteen);
    return d;
}

/// Slack of a single dimension size, or nullopt when the size is not smooth.
inline std::optional<long> pair_slack(std::size_t size) {
    const auto d = split_dimension(size);
    if (!d) return std::nullopt;
    return d->slack();
}

/// A quaternary pair of this shape is constructible iff every dimension is
/// smooth and seeds do not outnumber binders by more than one overall.
inline bool quaternary_pair_feasible(const Shape& shape) {
    long total = 0;
    for (auto s : shape.dims()) {
        const auto slack = pair_slack(s);
        if (!slack) return false;
        total += *slack;
    }
    return total >= -1;
}

inline bool binary_pair_feasible(const Shape& shape) {
    return std::all_of(shape.dims().begin(), shape.dims().end(),
                       [](std::size_t s) { return is_binary_golay_number(s).has_value(); });
}

inline bool pair_feasible(Alphabet alphabet, const Shape& shape) {
    return alphabet == Alphabet::Binary ? binary_pair_feasible(shape) : quaternary_pair_feasible(shape);
}

} // namespace gca
