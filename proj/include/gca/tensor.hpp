#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "gauss_int.hpp"

namespace gca {

using Index = std::vector<std::size_t>;

inline std::string index_to_string(std::span<const std::size_t> idx) {
    std::string out = "[";
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(idx[k]);
    }
    return out + "]";
}

/// Dimensions s_1 x ... x s_r, rank >= 1, every dimension >= 1.
class Shape {
  public:
    Shape() : dims_{1} {}
    Shape(std::initializer_list<std::size_t> dims) : Shape(std::vector<std::size_t>(dims)) {}
    explicit Shape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
        if (dims_.empty()) throw Error(ErrorKind::InvalidShape, "rank must be at least 1");
        for (auto d : dims_) {
            if (d == 0) throw Error(ErrorKind::InvalidShape, "zero-sized dimension in " + to_string());
        }
    }

    /// Shape of the given rank, all ones except `size` along `dim`.
    static Shape along(std::size_t rank, std::size_t dim, std::size_t size) {
        std::vector<std::size_t> dims(rank, 1);
        dims.at(dim) = size;
        return Shape(std::move(dims));
    }
    static Shape ones(std::size_t rank) { return Shape(std::vector<std::size_t>(rank, 1)); }

    [[nodiscard]] std::size_t rank() const noexcept { return dims_.size(); }
    [[nodiscard]] std::size_t operator[](std::size_t k) const { return dims_[k]; }
    [[nodiscard]] const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    [[nodiscard]] std::size_t size() const noexcept {
        return std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
    }
    [[nodiscard]] bool trivial() const noexcept {
        return std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 1; });
    }

    /// Row-major strides, last dimension fastest.
    [[nodiscard]] std::vector<std::size_t> strides() const {
        std::vector<std::size_t> st(dims_.size(), 1);
        for (std::size_t k = dims_.size(); k-- > 1;) st[k - 1] = st[k] * dims_[k];
        return st;
    }
    [[nodiscard]] std::size_t flat(std::span<const std::size_t> idx) const {
        std::size_t f = 0;
        for (std::size_t k = 0; k < dims_.size(); ++k) f = f * dims_[k] + idx[k];
        return f;
    }
    [[nodiscard]] Index unflat(std::size_t f) const {
        Index idx(dims_.size());
        for (std::size_t k = dims_.size(); k-- > 0;) {
            idx[k] = f % dims_[k];
            f /= dims_[k];
        }
        return idx;
    }

    [[nodiscard]] Shape with(std::size_t dim, std::size_t size) const {
        auto d = dims_;
        d.at(dim) = size;
        return Shape(std::move(d));
    }

    [[nodiscard]] std::string to_string() const {
        std::string s;
        for (std::size_t k = 0; k < dims_.size(); ++k) {
            if (k) s += "x";
            s += std::to_string(dims_[k]);
        }
        return s;
    }

    friend bool operator==(const Shape&, const Shape&) = default;
    friend auto operator<=>(const Shape& a, const Shape& b) { return a.dims_ <=> b.dims_; }

  private:
    std::vector<std::size_t> dims_;
};

/// Elementwise product of two shapes of equal rank (the Kronecker size rule).
inline Shape operator*(const Shape& a, const Shape& b) {
    if (a.rank() != b.rank()) throw Error(ErrorKind::RankMismatch, a.to_string() + " vs " + b.to_string());
    std::vector<std::size_t> d(a.rank());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = a[k] * b[k];
    return Shape(std::move(d));
}

enum class Alphabet { Binary, Quaternary, Polyphase4WithZeros, General };

inline std::string_view to_string(Alphabet a) noexcept {
    switch (a) {
    case Alphabet::Binary: return "binary";
    case Alphabet::Quaternary: return "quaternary";
    case Alphabet::Polyphase4WithZeros: return "polyphase4-with-zeros";
    case Alphabet::General: return "general";
    }
    return "general";
}

inline Alphabet parse_alphabet(std::string_view s) {
    if (s == "binary") return Alphabet::Binary;
    if (s == "quaternary") return Alphabet::Quaternary;
    if (s == "polyphase4-with-zeros") return Alphabet::Polyphase4WithZeros;
    if (s == "general" || s == "general-gaussian") return Alphabet::General;
    throw Error(ErrorKind::ParseError, "unknown alphabet '" + std::string(s) + "'");
}

/// Smallest alphabet containing a single entry.
inline Alphabet entry_alphabet(const GaussInt& g) noexcept {
    if (g.im == 0 && (g.re == 1 || g.re == -1)) return Alphabet::Binary;
    if (g.is_unit()) return Alphabet::Quaternary;
    if (g.is_zero()) return Alphabet::Polyphase4WithZeros;
    return Alphabet::General;
}

/// True when every member of `inner` also belongs to `outer`.
inline bool alphabet_within(Alphabet inner, Alphabet outer) noexcept {
    return static_cast<int>(inner) <= static_cast<int>(outer);
}

/// Dense r-dimensional array of Gaussian integers, row-major with the last
/// dimension fastest. Immutable once constructed; every operation returns a
/// new value.
class Tensor {
  public:
    Tensor() : shape_(), entries_(1) {}
    Tensor(Shape shape, std::vector<GaussInt> entries) : shape_(std::move(shape)), entries_(std::move(entries)) {
        if (entries_.size() != shape_.size()) {
            throw Error(ErrorKind::ShapeMismatch, "entry count " + std::to_string(entries_.size()) +
                                                      " does not match shape " + shape_.to_string());
        }
    }

    static Tensor zeros(const Shape& shape) { return Tensor(shape, std::vector<GaussInt>(shape.size())); }
    static Tensor scalar(GaussInt value, std::size_t rank = 1) {
        return Tensor(Shape::ones(rank), std::vector<GaussInt>{value});
    }
    /// One-dimensional tensor from a list of entries.
    static Tensor vector(std::vector<GaussInt> entries) {
        Shape s{entries.size()};
        return Tensor(std::move(s), std::move(entries));
    }
    /// Rank-2 tensor from rows; all rows must share a length.
    static Tensor matrix(const std::vector<std::vector<GaussInt>>& rows) {
        if (rows.empty()) throw Error(ErrorKind::InvalidShape, "matrix needs at least one row");
        std::vector<GaussInt> flat;
        for (const auto& row : rows) {
            if (row.size() != rows.front().size()) throw Error(ErrorKind::ShapeMismatch, "ragged matrix rows");
            flat.insert(flat.end(), row.begin(), row.end());
        }
        return Tensor(Shape{rows.size(), rows.front().size()}, std::move(flat));
    }

    [[nodiscard]] const Shape& shape() const noexcept { return shape_; }
    [[nodiscard]] std::size_t rank() const noexcept { return shape_.rank(); }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] std::span<const GaussInt> entries() const noexcept { return entries_; }
    [[nodiscard]] const GaussInt& operator[](std::size_t flat) const { return entries_[flat]; }
    [[nodiscard]] const GaussInt& at(std::span<const std::size_t> idx) const { return entries_[shape_.flat(idx)]; }
    [[nodiscard]] const GaussInt& at(std::initializer_list<std::size_t> idx) const {
        return at(std::span<const std::size_t>(idx.begin(), idx.size()));
    }

    [[nodiscard]] Alphabet alphabet() const noexcept {
        Alphabet a = Alphabet::Binary;
        for (const auto& g : entries_) a = std::max(a, entry_alphabet(g));
        return a;
    }
    [[nodiscard]] bool has_zero() const noexcept {
        return std::any_of(entries_.begin(), entries_.end(), [](const GaussInt& g) { return g.is_zero(); });
    }

    friend bool operator==(const Tensor&, const Tensor&) = default;

  private:
    Shape shape_;
    std::vector<GaussInt> entries_;
};

namespace detail {

inline void require_same_shape(const Tensor& a, const Tensor& b, std::string_view op) {
    if (a.shape() != b.shape()) {
        throw Error(ErrorKind::ShapeMismatch,
                    std::string(op) + ": " + a.shape().to_string() + " vs " + b.shape().to_string());
    }
}

inline void require_same_rank(const Tensor& a, const Tensor& b, std::string_view op) {
    if (a.rank() != b.rank()) {
        throw Error(ErrorKind::RankMismatch, std::string(op) + ": rank " + std::to_string(a.rank()) + " vs " +
                                                 std::to_string(b.rank()));
    }
}

/// For every flat index of `src`, the flat offset in `dst` of the source
/// multi-index scaled per dimension by `scale` (pass all ones for identity).
inline std::vector<std::size_t> offset_table(const Shape& src, const Shape& dst,
                                             std::span<const std::size_t> scale) {
    const auto dst_strides = dst.strides();
    std::vector<std::size_t> table(src.size());
    Index idx(src.rank(), 0);
    for (std::size_t f = 0; f < table.size(); ++f) {
        std::size_t off = 0;
        for (std::size_t k = 0; k < idx.size(); ++k) off += idx[k] * scale[k] * dst_strides[k];
        table[f] = off;
        for (std::size_t k = idx.size(); k-- > 0;) {
            if (++idx[k] < src[k]) break;
            idx[k] = 0;
        }
    }
    return table;
}

template <class Fn>
Tensor map_entries(const Tensor& a, Fn&& fn) {
    std::vector<GaussInt> out(a.size());
    const auto in = a.entries();
    for (std::size_t f = 0; f < out.size(); ++f) out[f] = fn(in[f]);
    return Tensor(a.shape(), std::move(out));
}

/// Splits a shape around `dim` into (outer block count, dim size, inner block size).
struct Slab {
    std::size_t outer;
    std::size_t extent;
    std::size_t inner;
};

inline Slab slab(const Shape& s, std::size_t dim) {
    Slab sl{1, s[dim], 1};
    for (std::size_t k = 0; k < dim; ++k) sl.outer *= s[k];
    for (std::size_t k = dim + 1; k < s.rank(); ++k) sl.inner *= s[k];
    return sl;
}

inline void require_dim(const Tensor& a, std::size_t dim, std::string_view op) {
    if (dim >= a.rank()) {
        throw Error(ErrorKind::RankMismatch, std::string(op) + ": dimension " + std::to_string(dim) +
                                                 " out of range for rank " + std::to_string(a.rank()));
    }
}

inline bool shapes_equal_except(const Shape& a, const Shape& b, std::size_t dim) {
    if (a.rank() != b.rank()) return false;
    for (std::size_t k = 0; k < a.rank(); ++k) {
        if (k != dim && a[k] != b[k]) return false;
    }
    return true;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Ring operations
// ---------------------------------------------------------------------------

inline Tensor add(const Tensor& a, const Tensor& b) {
    detail::require_same_shape(a, b, "add");
    std::vector<GaussInt> out(a.size());
    for (std::size_t f = 0; f < out.size(); ++f) out[f] = a[f] + b[f];
    return Tensor(a.shape(), std::move(out));
}

inline Tensor subtract(const Tensor& a, const Tensor& b) {
    detail::require_same_shape(a, b, "subtract");
    std::vector<GaussInt> out(a.size());
    for (std::size_t f = 0; f < out.size(); ++f) out[f] = a[f] - b[f];
    return Tensor(a.shape(), std::move(out));
}

inline Tensor negate(const Tensor& a) {
    return detail::map_entries(a, [](const GaussInt& g) { return -g; });
}

inline Tensor scale(const Tensor& a, GaussInt factor) {
    return detail::map_entries(a, [factor](const GaussInt& g) { return g * factor; });
}

/// Entrywise exact division; `on_failure` names the error raised for odd remainders.
inline Tensor divide_exact(const Tensor& a, std::int64_t divisor, ErrorKind on_failure) {
    return detail::map_entries(a, [&](const GaussInt& g) { return g.divide_exact(divisor, on_failure); });
}

/// Flip every dimension and conjugate: result[i] = conj(a[s - 1 - i]).
/// Row-major layout makes the all-dimension flip a reversal of the flat array.
inline Tensor involute(const Tensor& a) {
    const auto in = a.entries();
    std::vector<GaussInt> out(in.size());
    for (std::size_t f = 0; f < in.size(); ++f) out[in.size() - 1 - f] = in[f].conj();
    return Tensor(a.shape(), std::move(out));
}

/// Full linear r-dimensional convolution (polynomial product).
inline Tensor convolve(const Tensor& a, const Tensor& b) {
    detail::require_same_rank(a, b, "convolve");
    std::vector<std::size_t> dims(a.rank());
    for (std::size_t k = 0; k < dims.size(); ++k) dims[k] = a.shape()[k] + b.shape()[k] - 1;
    const Shape out_shape(std::move(dims));
    const std::vector<std::size_t> unit(a.rank(), 1);
    const auto off_a = detail::offset_table(a.shape(), out_shape, unit);
    const auto off_b = detail::offset_table(b.shape(), out_shape, unit);
    std::vector<GaussInt> out(out_shape.size());
    for (std::size_t p = 0; p < a.size(); ++p) {
        const GaussInt x = a[p];
        if (x.is_zero()) continue;
        GaussInt* base = out.data() + off_a[p];
        for (std::size_t q = 0; q < b.size(); ++q) base[off_b[q]] += x * b[q];
    }
    return Tensor(out_shape, std::move(out));
}

/// Kronecker product: out[i*t + j] = a[i] * b[j] per dimension, size s_k * t_k.
inline Tensor kron(const Tensor& a, const Tensor& b) {
    detail::require_same_rank(a, b, "kron");
    const Shape out_shape = a.shape() * b.shape();
    const auto off_a = detail::offset_table(a.shape(), out_shape, b.shape().dims());
    const std::vector<std::size_t> unit(a.rank(), 1);
    const auto off_b = detail::offset_table(b.shape(), out_shape, unit);
    std::vector<GaussInt> out(out_shape.size());
    for (std::size_t p = 0; p < a.size(); ++p) {
        const GaussInt x = a[p];
        if (x.is_zero()) continue;
        GaussInt* base = out.data() + off_a[p];
        for (std::size_t q = 0; q < b.size(); ++q) base[off_b[q]] = x * b[q];
    }
    return Tensor(out_shape, std::move(out));
}

/// Inserts factor_k - 1 zeros between consecutive entries along each dimension k,
/// realizing A(z^t). Used to cross-check kron against convolve.
inline Tensor upsample(const Tensor& a, std::span<const std::size_t> factor) {
    std::vector<std::size_t> dims(a.rank());
    for (std::size_t k = 0; k < dims.size(); ++k) dims[k] = (a.shape()[k] - 1) * factor[k] + 1;
    const Shape out_shape(std::move(dims));
    const auto off = detail::offset_table(a.shape(), out_shape, factor);
    std::vector<GaussInt> out(out_shape.size());
    for (std::size_t p = 0; p < a.size(); ++p) out[off[p]] = a[p];
    return Tensor(out_shape, std::move(out));
}

// ---------------------------------------------------------------------------
// Structural operations
// ---------------------------------------------------------------------------

/// Concatenates along `dim`; `a` occupies the low indices.
inline Tensor concat(const Tensor& a, const Tensor& b, std::size_t dim) {
    detail::require_dim(a, dim, "concat");
    if (!detail::shapes_equal_except(a.shape(), b.shape(), dim)) {
        throw Error(ErrorKind::ShapeMismatch, "concat along " + std::to_string(dim) + ": " + a.shape().to_string() +
                                                  " vs " + b.shape().to_string());
    }
    const auto sa = detail::slab(a.shape(), dim);
    const auto sb = detail::slab(b.shape(), dim);
    const Shape out_shape = a.shape().with(dim, sa.extent + sb.extent);
    std::vector<GaussInt> out;
    out.reserve(out_shape.size());
    const auto ea = a.entries();
    const auto eb = b.entries();
    const std::size_t chunk_a = sa.extent * sa.inner;
    const std::size_t chunk_b = sb.extent * sb.inner;
    for (std::size_t o = 0; o < sa.outer; ++o) {
        out.insert(out.end(), ea.begin() + o * chunk_a, ea.begin() + (o + 1) * chunk_a);
        out.insert(out.end(), eb.begin() + o * chunk_b, eb.begin() + (o + 1) * chunk_b);
    }
    return Tensor(out_shape, std::move(out));
}

/// Concatenates several tensors along `dim`, left to right.
inline Tensor concat(std::span<const Tensor> parts, std::size_t dim) {
    if (parts.empty()) throw Error(ErrorKind::EmptySet, "concat of no tensors");
    Tensor out = parts.front();
    for (std::size_t k = 1; k < parts.size(); ++k) out = concat(out, parts[k], dim);
    return out;
}

/// `length` consecutive slices of `a` along `dim` starting at `begin`.
inline Tensor slice(const Tensor& a, std::size_t dim, std::size_t begin, std::size_t length) {
    detail::require_dim(a, dim, "slice");
    const auto sl = detail::slab(a.shape(), dim);
    if (length == 0 || begin + length > sl.extent) {
        throw Error(ErrorKind::ShapeMismatch, "slice [" + std::to_string(begin) + ", " +
                                                  std::to_string(begin + length) + ") outside dimension of size " +
                                                  std::to_string(sl.extent));
    }
    const Shape out_shape = a.shape().with(dim, length);
    std::vector<GaussInt> out;
    out.reserve(out_shape.size());
    const auto e = a.entries();
    for (std::size_t o = 0; o < sl.outer; ++o) {
        const auto start = e.begin() + (o * sl.extent + begin) * sl.inner;
        out.insert(out.end(), start, start + length * sl.inner);
    }
    return Tensor(out_shape, std::move(out));
}

/// Alternates slices along `dim`: a_0, b_0, a_1, b_1, ..., a_m. Requires a to
/// be one longer than b in that dimension.
inline Tensor interleave(const Tensor& a, const Tensor& b, std::size_t dim) {
    detail::require_dim(a, dim, "interleave");
    if (!detail::shapes_equal_except(a.shape(), b.shape(), dim) || a.shape()[dim] != b.shape()[dim] + 1) {
        throw Error(ErrorKind::ShapeMismatch, "interleave needs sizes m+1 and m along dimension " +
                                                  std::to_string(dim) + ", got " + a.shape().to_string() + " and " +
                                                  b.shape().to_string());
    }
    const auto sa = detail::slab(a.shape(), dim);
    const Shape out_shape = a.shape().with(dim, 2 * b.shape()[dim] + 1);
    std::vector<GaussInt> out;
    out.reserve(out_shape.size());
    const auto ea = a.entries();
    const auto eb = b.entries();
    const std::size_t mb = b.shape()[dim];
    for (std::size_t o = 0; o < sa.outer; ++o) {
        for (std::size_t k = 0; k < sa.extent; ++k) {
            auto pa = ea.begin() + (o * sa.extent + k) * sa.inner;
            out.insert(out.end(), pa, pa + sa.inner);
            if (k < mb) {
                auto pb = eb.begin() + (o * mb + k) * sa.inner;
                out.insert(out.end(), pb, pb + sa.inner);
            }
        }
    }
    return Tensor(out_shape, std::move(out));
}

/// Same entries, new shape with equal element count.
inline Tensor reshape(const Tensor& a, const Shape& shape) {
    if (shape.size() != a.size()) {
        throw Error(ErrorKind::ShapeMismatch, "cannot reshape " + a.shape().to_string() + " to " + shape.to_string());
    }
    return Tensor(shape, std::vector<GaussInt>(a.entries().begin(), a.entries().end()));
}

/// Embeds a one-dimensional tensor into rank `rank`, trivial in all but `dim`.
inline Tensor orient(const Tensor& seq, std::size_t rank, std::size_t dim) {
    if (seq.rank() != 1) throw Error(ErrorKind::RankMismatch, "orient expects a sequence");
    return reshape(seq, Shape::along(rank, dim, seq.size()));
}

/// Column-major read-out of a rank-2 tensor: out[i1 + i2*s1] = a[i1, i2],
/// the substitution z1 = z, z2 = z^s1.
inline Tensor reshape_to_sequence(const Tensor& a) {
    if (a.rank() != 2) throw Error(ErrorKind::RankMismatch, "reshape_to_sequence expects rank 2");
    const std::size_t s1 = a.shape()[0];
    const std::size_t s2 = a.shape()[1];
    std::vector<GaussInt> out(a.size());
    for (std::size_t i1 = 0; i1 < s1; ++i1) {
        for (std::size_t i2 = 0; i2 < s2; ++i2) out[i1 + i2 * s1] = a[i1 * s2 + i2];
    }
    return Tensor::vector(std::move(out));
}

/// Inverse of reshape_to_sequence given the recorded rank-2 shape.
inline Tensor reshape_from_sequence(const Tensor& seq, const Shape& shape) {
    if (seq.rank() != 1 || shape.rank() != 2 || shape.size() != seq.size()) {
        throw Error(ErrorKind::ShapeMismatch, "cannot fold sequence of length " + std::to_string(seq.size()) +
                                                  " into " + shape.to_string());
    }
    const std::size_t s1 = shape[0];
    const std::size_t s2 = shape[1];
    std::vector<GaussInt> out(seq.size());
    for (std::size_t i1 = 0; i1 < s1; ++i1) {
        for (std::size_t i2 = 0; i2 < s2; ++i2) out[i1 * s2 + i2] = seq[i1 + i2 * s1];
    }
    return Tensor(shape, std::move(out));
}

/// Elementwise sum that refuses to add two nonzero entries at one position.
inline Tensor checked_superpose(std::span<const Tensor> terms) {
    if (terms.empty()) throw Error(ErrorKind::EmptySet, "checked_superpose of no terms");
    const Shape& shape = terms.front().shape();
    for (const auto& t : terms) {
        if (t.shape() != shape) {
            throw Error(ErrorKind::ShapeMismatch, "checked_superpose: " + shape.to_string() + " vs " +
                                                      t.shape().to_string());
        }
    }
    std::vector<GaussInt> out(shape.size());
    std::vector<bool> taken(shape.size(), false);
    for (const auto& t : terms) {
        for (std::size_t f = 0; f < out.size(); ++f) {
            if (t[f].is_zero()) continue;
            if (taken[f]) {
                auto pos = shape.unflat(f);
                throw Error(ErrorKind::Collision, "two nonzero terms at " + index_to_string(pos), std::move(pos));
            }
            taken[f] = true;
            out[f] = t[f];
        }
    }
    return Tensor(shape, std::move(out));
}

inline Tensor checked_superpose(std::initializer_list<Tensor> terms) {
    return checked_superpose(std::span<const Tensor>(terms.begin(), terms.size()));
}

struct PairStructure {
    bool disjoint = false;
    bool conjoint = false;
};

/// Zero-support relations between two equally shaped tensors.
inline PairStructure structure(const Tensor& a, const Tensor& b) {
    detail::require_same_shape(a, b, "structure");
    PairStructure s{true, true};
    for (std::size_t f = 0; f < a.size(); ++f) {
        const bool za = a[f].is_zero();
        const bool zb = b[f].is_zero();
        if (!za && !zb) s.disjoint = false;
        if (za != zb) s.conjoint = false;
    }
    return s;
}

/// Support invariant under the all-dimension flip.
inline bool quasi_symmetric(const Tensor& a) {
    const std::size_t n = a.size();
    for (std::size_t f = 0; f < n; ++f) {
        if (a[f].is_zero() != a[n - 1 - f].is_zero()) return false;
    }
    return true;
}

/// Places `a` inside a zero tensor of `shape` with its origin at `offset`.
inline Tensor embed(const Tensor& a, const Shape& shape, std::span<const std::size_t> offset) {
    if (shape.rank() != a.rank()) throw Error(ErrorKind::RankMismatch, "embed rank mismatch");
    for (std::size_t k = 0; k < a.rank(); ++k) {
        if (offset[k] + a.shape()[k] > shape[k]) {
            throw Error(ErrorKind::ShapeMismatch, a.shape().to_string() + " does not fit in " + shape.to_string());
        }
    }
    const std::vector<std::size_t> unit(a.rank(), 1);
    const auto off = detail::offset_table(a.shape(), shape, unit);
    const std::size_t base = shape.flat(offset);
    std::vector<GaussInt> out(shape.size());
    for (std::size_t p = 0; p < a.size(); ++p) out[base + off[p]] = a[p];
    return Tensor(shape, std::move(out));
}

/// Zero-pads `a` at the high end of every dimension up to `shape`.
inline Tensor pad_to(const Tensor& a, const Shape& shape) {
    const Index origin(a.rank(), 0);
    return embed(a, shape, origin);
}

} // namespace gca
