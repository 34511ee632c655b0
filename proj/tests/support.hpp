#pragma once

#include <random>
#include <string>
#include <vector>

#include "gca/gca.hpp"

namespace gca::test {

inline constexpr GaussInt I{0, 1};

/// The 2x3 quaternary pair from the worked example.
inline Tensor example_a1() { return Tensor::matrix({{1, 1, -1}, {-1, -I, -1}}); }
inline Tensor example_a2() { return Tensor::matrix({{-1, -1, 1}, {-1, -I, -1}}); }

inline std::string seeds_path() { return std::string(GCA_DATA_DIR) + "/seeds.json"; }

inline const SeedRegistry& bundled() {
    static const SeedRegistry reg = load_registry(seeds_path());
    return reg;
}

inline GcaSet seed_pair(Alphabet alphabet, std::size_t length, std::size_t rank = 1, std::size_t dim = 0) {
    const auto rec = get_golay_pair(bundled(), alphabet, length);
    return make_set({orient(rec.tensors[0], rank, dim), orient(rec.tensors[1], rank, dim)}, rec.key());
}

inline GcaSet binary_two() { return make_set({Tensor::vector({1, 1}), Tensor::vector({1, -1})}, "binary-2"); }

/// BS(2,1) as a quad {A, B, C, D}.
inline GcaSet bs21() {
    return make_set({Tensor::vector({1, 1}), Tensor::vector({1, -1}), Tensor::vector({1}), Tensor::vector({1})},
                    "bs21");
}

inline Shape random_shape(std::mt19937_64& rng, std::size_t max_rank = 3, std::size_t max_dim = 4) {
    std::uniform_int_distribution<std::size_t> rank(1, max_rank), dim(1, max_dim);
    std::vector<std::size_t> dims(rank(rng));
    for (auto& d : dims) d = dim(rng);
    return Shape(dims);
}

inline Tensor random_tensor(std::mt19937_64& rng, const Shape& shape, std::int64_t bound = 2) {
    std::uniform_int_distribution<std::int64_t> v(-bound, bound);
    std::vector<GaussInt> e(shape.size());
    for (auto& g : e) g = GaussInt{v(rng), v(rng)};
    return Tensor(shape, std::move(e));
}

inline Tensor random_unimodular(std::mt19937_64& rng, const Shape& shape) {
    static constexpr GaussInt units[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    std::uniform_int_distribution<int> pick(0, 3);
    std::vector<GaussInt> e(shape.size());
    for (auto& g : e) g = units[pick(rng)];
    return Tensor(shape, std::move(e));
}

/// Autocorrelation straight from the definition, for cross-checking.
inline Tensor direct_autocorrelation(const Tensor& a) {
    const Shape& s = a.shape();
    std::vector<std::size_t> out_dims;
    for (auto d : s.dims()) out_dims.push_back(2 * d - 1);
    const Shape out(out_dims);
    std::vector<GaussInt> r(out.size());
    for (std::size_t fo = 0; fo < out.size(); ++fo) {
        const auto o = out.unflat(fo);
        GaussInt acc{};
        for (std::size_t fi = 0; fi < a.size(); ++fi) {
            const auto i = s.unflat(fi);
            Index j(i.size());
            bool inside = true;
            for (std::size_t k = 0; k < i.size() && inside; ++k) {
                const auto shifted = static_cast<std::int64_t>(i[k]) - (static_cast<std::int64_t>(o[k]) -
                                                                         static_cast<std::int64_t>(s[k] - 1));
                inside = shifted >= 0 && shifted < static_cast<std::int64_t>(s[k]);
                j[k] = static_cast<std::size_t>(shifted);
            }
            if (inside) acc = acc + a[fi] * a.at(j).conj();
        }
        r[fo] = acc;
    }
    return Tensor(out, std::move(r));
}

/// Plans and executes against the bundled registry.
inline GcaSet planned_pair(Alphabet alphabet, const Shape& shape) {
    const auto report = plan_pair(alphabet, shape);
    if (!report.recipe) throw Error(ErrorKind::NotFound, "no plan for " + shape.to_string() + ": " + report.reason);
    return execute(*report.recipe, bundled());
}

inline GcaSet planned_quad(Alphabet alphabet, const Shape& shape) {
    const auto report = plan_quad(alphabet, shape, bundled());
    if (!report.recipe) throw Error(ErrorKind::NotFound, "no plan for " + shape.to_string() + ": " + report.reason);
    return execute(*report.recipe, bundled());
}

} // namespace gca::test
