// Offline search for binary base sequences BS(m+1, m) where exhaustive search
// is out of reach. Samples the short pair (C, D) at random, keeps it when its
// power spectrum leaves room for (A, B) and the row sums can still square up to
// 4m+2, then runs an exact ends-inward search for (A, B) against the target
// N_A + N_B = -(N_C + N_D). Prints a gca-seeds/1 list; the loader re-verifies it.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gca/seeds.hpp"

namespace {

/// Exact search for a binary pair of length L with a prescribed summed
/// autocorrelation at shifts 1..L-1.
class PairCompletion {
  public:
    explicit PairCompletion(std::size_t length) : len_(length), sum_(length), rem_(length), target_(length) {
        for (auto& v : vals_) v.assign(length, 0);
        std::vector<std::size_t> order;
        for (std::size_t lo = 0, hi = length; lo < hi;) {
            order.push_back(lo++);
            if (lo < hi) order.push_back(--hi);
        }
        std::vector<std::size_t> placed;
        for (auto p : order) {
            for (int a = 0; a < 2; ++a) {
                Step s{a, p, {}};
                for (auto q : placed) s.terms.push_back({q, q > p ? q - p : p - q});
                steps_.push_back(std::move(s));
            }
            placed.push_back(p);
        }
    }

    /// True when a completion exists within `cap` nodes; `nodes` accumulates.
    bool solve(const std::vector<long>& target, std::uint64_t cap, std::uint64_t& nodes) {
        for (std::size_t j = 1; j < len_; ++j) {
            target_[j] = target[j];
            sum_[j] = 0;
            rem_[j] = 2 * static_cast<long>(len_ - j);
            // Each term moves the sum by one, so parity is settled up front.
            if (((target_[j] + rem_[j]) & 1) != 0 || std::labs(target_[j]) > rem_[j]) return false;
        }
        for (auto& v : vals_) std::fill(v.begin(), v.end(), 0);
        left_ = cap;
        const bool ok = descend(0);
        nodes += cap - left_;
        return ok;
    }

    [[nodiscard]] const std::vector<int>& values(int array) const { return vals_[array]; }

  private:
    struct Term {
        std::size_t other;
        std::size_t shift;
    };
    struct Step {
        int array;
        std::size_t pos;
        std::vector<Term> terms;
    };

    bool descend(std::size_t depth) {
        if (depth == steps_.size()) return true;
        const Step& s = steps_[depth];
        auto& v = vals_[s.array];
        for (int value : {1, -1}) {
            if (s.pos == 0 && value != 1) continue;
            if (left_ == 0) return false;
            --left_;
            bool ok = true;
            for (const auto& t : s.terms) {
                sum_[t.shift] += value * v[t.other];
                --rem_[t.shift];
                ok = ok && std::labs(target_[t.shift] - sum_[t.shift]) <= rem_[t.shift];
            }
            v[s.pos] = value;
            if (ok && descend(depth + 1)) return true;
            v[s.pos] = 0;
            for (const auto& t : s.terms) {
                sum_[t.shift] -= value * v[t.other];
                ++rem_[t.shift];
            }
        }
        return false;
    }

    std::size_t len_;
    std::vector<long> sum_, rem_, target_;
    std::vector<int> vals_[2];
    std::vector<Step> steps_;
    std::uint64_t left_ = 0;
};

/// r = x^2 + y^2 with x, y of the given parity.
bool two_squares(long r, long parity) {
    for (long x = parity; x * x <= r; x += 2) {
        const long y2 = r - x * x;
        const long y = std::lround(std::sqrt(static_cast<double>(y2)));
        if (y * y == y2 && (y & 1) == parity) return true;
    }
    return false;
}

gca::Tensor to_tensor(const std::vector<int>& x) {
    std::vector<gca::GaussInt> entries;
    for (int v : x) entries.emplace_back(v, 0);
    return gca::Tensor::vector(std::move(entries));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Split search for base sequences BS(m+1, m)"};
    std::size_t m = 0;
    std::uint64_t seed = 1;
    std::uint64_t inner_cap = 10'000'000;
    std::uint64_t max_nodes = 1'000'000'000'000ULL;
    std::size_t grid = 64;
    app.add_option("--m", m, "m in BS(m+1, m)")->required()->check(CLI::Range(std::size_t{2}, std::size_t{64}));
    app.add_option("--seed", seed, "random seed");
    app.add_option("--inner-cap", inner_cap, "node cap per (A, B) completion");
    app.add_option("--nodes", max_nodes, "total node limit");
    app.add_option("--grid", grid, "spectrum sample points on [0, pi]")->check(CLI::Range(std::size_t{2}, std::size_t{4096}));
    CLI11_PARSE(app, argc, argv);

    const std::size_t len = m + 1;
    const double weight = 4.0 * static_cast<double>(m) + 2.0;
    std::vector<double> cs(grid * m), sn(grid * m);
    for (std::size_t g = 0; g < grid; ++g) {
        for (std::size_t i = 0; i < m; ++i) {
            const double th = std::numbers::pi * static_cast<double>(g * i) / static_cast<double>(grid - 1);
            cs[g * m + i] = std::cos(th);
            sn[g * m + i] = std::sin(th);
        }
    }

    std::mt19937_64 rng(seed);
    PairCompletion completion(len);
    std::vector<int> c(m), d(m);
    std::vector<long> target(len, 0);
    std::uint64_t nodes = 0, sampled = 0, kept = 0;
    bool found = false;
    while (nodes < max_nodes) {
        ++sampled;
        // c[0] = d[0] = 1 by negation, c[1] = 1 by alternating-sign modulation.
        for (std::size_t i = 0; i < m; ++i) {
            c[i] = i < 2 || (rng() & 1) ? 1 : -1;
            d[i] = i == 0 || (rng() & 1) ? 1 : -1;
        }
        long sc = 0, sd = 0;
        for (std::size_t i = 0; i < m; ++i) {
            sc += c[i];
            sd += d[i];
        }
        const long rest = static_cast<long>(weight) - sc * sc - sd * sd;
        if (rest < 0 || !two_squares(rest, static_cast<long>(len & 1))) continue;
        bool room = true;
        for (std::size_t g = 0; g < grid && room; ++g) {
            double cr = 0, ci = 0, dr = 0, di = 0;
            for (std::size_t i = 0; i < m; ++i) {
                cr += c[i] * cs[g * m + i];
                ci += c[i] * sn[g * m + i];
                dr += d[i] * cs[g * m + i];
                di += d[i] * sn[g * m + i];
            }
            room = cr * cr + ci * ci + dr * dr + di * di <= weight + 1e-9;
        }
        if (!room) continue;
        ++kept;
        for (std::size_t j = 1; j < len; ++j) {
            long s = 0;
            for (std::size_t i = 0; i + j < m; ++i) s += c[i] * c[i + j] + d[i] * d[i + j];
            target[j] = -s;
        }
        if (completion.solve(target, inner_cap, nodes)) {
            found = true;
            break;
        }
    }
    if (!found) {
        std::cerr << "no solution within " << nodes << " nodes (" << kept << " of " << sampled << " samples kept)\n";
        return 1;
    }

    gca::SeedRecord rec;
    rec.kind = gca::SeedKind::BaseSequences;
    rec.alphabet = gca::Alphabet::Binary;
    rec.tensors = {to_tensor(completion.values(0)), to_tensor(completion.values(1)), to_tensor(c), to_tensor(d)};
    rec.provenance = "split search (tools/split_base_sequences, --seed " + std::to_string(seed) + ", " +
                     std::to_string(kept) + " of " + std::to_string(sampled) + " samples kept)";
    gca::verify_seed(rec);
    std::cout << gca::io::dump(gca::io::json::array({gca::seed_to_json(rec)}));
    return 0;
}
