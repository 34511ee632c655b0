#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "tensor.hpp"

namespace gca {

/// Aperiodic autocorrelation of an array. `tensor` has shape (2s_k - 1) per
/// dimension; `center` is the index of the zero shift.
struct AutocorrResult {
    Tensor tensor;
    Index center;

    /// Value at a signed shift vector.
    [[nodiscard]] GaussInt at_shift(std::span<const std::int64_t> shift) const {
        Index idx(center.size());
        for (std::size_t k = 0; k < idx.size(); ++k) {
            idx[k] = static_cast<std::size_t>(static_cast<std::int64_t>(center[k]) + shift[k]);
        }
        return tensor.at(idx);
    }
};

struct GcaVerdict {
    bool is_complementary = false;
    std::int64_t total_weight = 0;
    /// max |sum of autocorrelations|^2 over nonzero shifts.
    std::int64_t max_sidelobe_norm = 0;
};

namespace detail {

/// Calls fn(i_offset, j_offset, run) for every contiguous run along the last
/// dimension of the overlap box of `a` with itself shifted by `shift`.
template <class Fn>
void for_each_overlap_run(const Shape& s, std::span<const std::int64_t> shift, Fn&& fn) {
    const std::size_t r = s.rank();
    std::vector<std::int64_t> lo(r), hi(r);
    for (std::size_t k = 0; k < r; ++k) {
        const auto sk = static_cast<std::int64_t>(s[k]);
        lo[k] = std::max<std::int64_t>(0, shift[k]);
        hi[k] = std::min<std::int64_t>(sk - 1, sk - 1 + shift[k]);
        if (lo[k] > hi[k]) return;
    }
    const auto strides = s.strides();
    std::vector<std::int64_t> i(lo.begin(), lo.end());
    const std::size_t run = static_cast<std::size_t>(hi[r - 1] - lo[r - 1] + 1);
    while (true) {
        std::size_t off_i = 0, off_j = 0;
        for (std::size_t k = 0; k < r; ++k) {
            off_i += static_cast<std::size_t>(i[k]) * strides[k];
            off_j += static_cast<std::size_t>(i[k] - shift[k]) * strides[k];
        }
        fn(off_i, off_j, run);
        std::size_t k = r - 1;
        while (k-- > 0) {
            if (++i[k] <= hi[k]) break;
            i[k] = lo[k];
        }
        if (k == static_cast<std::size_t>(-1)) return;
    }
}

inline Shape autocorr_shape(const Shape& s) {
    std::vector<std::size_t> d(s.rank());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = 2 * s[k] - 1;
    return Shape(std::move(d));
}

/// Accumulates R_a into `acc` (shape autocorr_shape(a.shape())).
inline void accumulate_autocorrelation(const Tensor& a, std::vector<GaussInt>& acc) {
    const Shape& s = a.shape();
    const Shape rs = autocorr_shape(s);
    const auto e = a.entries();
    std::vector<std::int64_t> shift(s.rank());
    Index d(s.rank(), 0);
    for (std::size_t f = 0; f < rs.size(); ++f) {
        for (std::size_t k = 0; k < d.size(); ++k) {
            shift[k] = static_cast<std::int64_t>(d[k]) - static_cast<std::int64_t>(s[k] - 1);
        }
        GaussInt sum;
        for_each_overlap_run(s, shift, [&](std::size_t oi, std::size_t oj, std::size_t run) {
            for (std::size_t t = 0; t < run; ++t) sum += e[oi + t] * e[oj + t].conj();
        });
        acc[f] += sum;
        for (std::size_t k = d.size(); k-- > 0;) {
            if (++d[k] < rs[k]) break;
            d[k] = 0;
        }
    }
}

inline void require_uniform(std::span<const Tensor> arrays, std::string_view op) {
    if (arrays.empty()) throw Error(ErrorKind::EmptySet, std::string(op) + " of an empty set");
    for (const auto& t : arrays) require_same_shape(arrays.front(), t, op);
}

} // namespace detail

/// R[delta] = sum_i A[i] * conj(A[i - delta]), entries outside the array are zero.
inline AutocorrResult autocorrelation(const Tensor& a) {
    const Shape rs = detail::autocorr_shape(a.shape());
    std::vector<GaussInt> acc(rs.size());
    detail::accumulate_autocorrelation(a, acc);
    Index center(a.rank());
    for (std::size_t k = 0; k < center.size(); ++k) center[k] = a.shape()[k] - 1;
    return {Tensor(rs, std::move(acc)), std::move(center)};
}

/// Sum of squared entry magnitudes.
inline std::int64_t weight(const Tensor& a) {
    std::int64_t w = 0;
    for (const auto& g : a.entries()) w += g.norm();
    return w;
}

inline std::int64_t total_weight(std::span<const Tensor> arrays) {
    std::int64_t w = 0;
    for (const auto& a : arrays) w += weight(a);
    return w;
}

/// Sums the aperiodic autocorrelations of equally shaped arrays and checks
/// they form a weighted unit pulse.
inline GcaVerdict is_gca_set(std::span<const Tensor> arrays) {
    detail::require_uniform(arrays, "is_gca_set");
    const Shape rs = detail::autocorr_shape(arrays.front().shape());
    std::vector<GaussInt> acc(rs.size());
    for (const auto& a : arrays) detail::accumulate_autocorrelation(a, acc);
    const std::size_t center = acc.size() / 2;

    GcaVerdict v;
    v.total_weight = total_weight(arrays);
    for (std::size_t f = 0; f < acc.size(); ++f) {
        if (f != center) v.max_sidelobe_norm = std::max(v.max_sidelobe_norm, acc[f].norm());
    }
    v.is_complementary = v.max_sidelobe_norm == 0 && acc[center] == GaussInt(v.total_weight);
    return v;
}

inline GcaVerdict is_gca_set(std::initializer_list<Tensor> arrays) {
    return is_gca_set(std::span<const Tensor>(arrays.begin(), arrays.size()));
}

/// Polynomial form: sum_i A_i(z) A_i^*(z) must equal total_weight * z^(s-1).
/// Computed through convolve/involute, independently of autocorrelation().
inline bool gca_check_polynomial(std::span<const Tensor> arrays) {
    detail::require_uniform(arrays, "gca_check_polynomial");
    Tensor sum = convolve(arrays.front(), involute(arrays.front()));
    for (std::size_t k = 1; k < arrays.size(); ++k) sum = add(sum, convolve(arrays[k], involute(arrays[k])));
    const std::int64_t w = total_weight(arrays);
    Index peak(arrays.front().rank());
    for (std::size_t k = 0; k < peak.size(); ++k) peak[k] = arrays.front().shape()[k] - 1;
    const std::size_t peak_flat = sum.shape().flat(peak);
    for (std::size_t f = 0; f < sum.size(); ++f) {
        const GaussInt expected = f == peak_flat ? GaussInt(w) : GaussInt();
        if (sum[f] != expected) return false;
    }
    return true;
}

inline bool gca_check_polynomial(std::initializer_list<Tensor> arrays) {
    return gca_check_polynomial(std::span<const Tensor>(arrays.begin(), arrays.size()));
}

/// Evaluates sum_i |A_i(z)|^2 on the grid z_k = exp(2 pi j m / grid) and returns
/// max |value - W| / W. Floating point; a numerical cross-check only.
inline double spectrum_flatness(std::span<const Tensor> arrays, std::size_t grid) {
    detail::require_uniform(arrays, "spectrum_flatness");
    if (grid < 2) throw Error(ErrorKind::InvalidShape, "spectrum grid must be at least 2");
    const Shape& s = arrays.front().shape();
    const std::size_t r = s.rank();
    std::vector<std::complex<double>> roots(grid);
    for (std::size_t m = 0; m < grid; ++m) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(grid);
        roots[m] = {std::cos(angle), std::sin(angle)};
    }
    const auto w = static_cast<double>(total_weight(arrays));

    std::size_t points = 1;
    for (std::size_t k = 0; k < r; ++k) points *= grid;
    std::vector<Index> idx(s.size());
    for (std::size_t f = 0; f < s.size(); ++f) idx[f] = s.unflat(f);

    double worst = 0.0;
    Index m(r, 0);
    for (std::size_t p = 0; p < points; ++p) {
        double power = 0.0;
        for (const auto& a : arrays) {
            std::complex<double> value = 0.0;
            for (std::size_t f = 0; f < a.size(); ++f) {
                if (a[f].is_zero()) continue;
                std::size_t phase = 0;
                for (std::size_t k = 0; k < r; ++k) phase += m[k] * idx[f][k];
                value += std::complex<double>(static_cast<double>(a[f].re), static_cast<double>(a[f].im)) *
                         roots[phase % grid];
            }
            power += std::norm(value);
        }
        const double dev = w > 0 ? std::abs(power - w) / w : std::abs(power);
        worst = std::max(worst, dev);
        for (std::size_t k = r; k-- > 0;) {
            if (++m[k] < grid) break;
            m[k] = 0;
        }
    }
    return worst;
}

/// Checks A[s-1-i] A[i] B[s-1-i] B[i] = -1 at every index of a nontrivial binary pair.
inline bool binary_pair_symmetry(const Tensor& a, const Tensor& b) {
    detail::require_same_shape(a, b, "binary_pair_symmetry");
    if (a.alphabet() != Alphabet::Binary || b.alphabet() != Alphabet::Binary) {
        throw Error(ErrorKind::NotBinary, "binary_pair_symmetry needs entries in {1,-1}");
    }
    if (a.shape().trivial()) throw Error(ErrorKind::Trivial, "binary_pair_symmetry needs a nontrivial pair");
    if (!is_gca_set({a, b}).is_complementary) {
        throw Error(ErrorKind::NotComplementary, "pair is not autocorrelation complementary");
    }
    const std::size_t n = a.size();
    for (std::size_t f = 0; f < n; ++f) {
        const GaussInt prod = a[n - 1 - f] * a[f] * b[n - 1 - f] * b[f];
        if (prod != GaussInt(-1)) return false;
    }
    return true;
}

/// Zero-pads every array at the high end to the elementwise maximum shape.
/// Autocorrelation sums are unchanged by this, so mixed-size sets (base
/// sequences) can be checked with the uniform-shape oracles.
inline std::vector<Tensor> pad_to_common_shape(std::span<const Tensor> arrays) {
    if (arrays.empty()) throw Error(ErrorKind::EmptySet, "pad_to_common_shape of an empty set");
    std::vector<std::size_t> dims = arrays.front().shape().dims();
    for (const auto& a : arrays) {
        if (a.rank() != dims.size()) throw Error(ErrorKind::RankMismatch, "mixed ranks in set");
        for (std::size_t k = 0; k < dims.size(); ++k) dims[k] = std::max(dims[k], a.shape()[k]);
    }
    const Shape common(std::move(dims));
    std::vector<Tensor> out;
    out.reserve(arrays.size());
    for (const auto& a : arrays) out.push_back(pad_to(a, common));
    return out;
}

} // namespace gca
