#pragma once

#include <string>
#include <vector>

#include "gca_set.hpp"

// Each construction consumes verified sets, assembles its output with exact
// ring operations, and re-verifies the output with both oracles before
// returning. Sign and term order follow the published formulas as printed.

namespace gca {

namespace detail {

inline void require_members(const GcaSet& s, std::size_t n, std::string_view op) {
    if (s.size() != n) {
        throw Error(ErrorKind::ShapeMismatch, std::string(op) + ": expected " + std::to_string(n) +
                                                  " arrays, got " + std::to_string(s.size()));
    }
}

inline void require_verified_pair(const GcaSet& s, std::string_view op) {
    require_members(s, 2, op);
    require_same_shape(s[0], s[1], op);
    verify_or_throw(s.arrays, std::string(op) + " input pair");
}

inline void require_polyphase(const std::vector<Tensor>& arrays, std::string_view op) {
    for (const auto& t : arrays) {
        if (t.has_zero() || !alphabet_within(t.alphabet(), Alphabet::Quaternary)) {
            throw Error(ErrorKind::NonPolyphase, std::string(op) + ": output has a non-unimodular entry");
        }
    }
}

inline void require_polyphase(const GcaSet& s, std::string_view op) {
    if (!s.polyphase()) throw Error(ErrorKind::NonPolyphase, std::string(op) + ": input set is not polyphase");
}

inline Tensor sum(const Tensor& a, const Tensor& b) { return checked_superpose({a, b}); }
inline Tensor diff(const Tensor& a, const Tensor& b) { return checked_superpose({a, negate(b)}); }

/// Splits a quad {A, B, C, D} whose first two and last two members share
/// shapes that differ only along `dim`.
inline void require_split_quad(const GcaSet& q, std::size_t dim, std::string_view op) {
    require_members(q, 4, op);
    require_dim(q[0], dim, op);
    require_same_shape(q[0], q[1], op);
    require_same_shape(q[2], q[3], op);
    if (!shapes_equal_except(q[0].shape(), q[2].shape(), dim)) {
        throw Error(ErrorKind::ShapeMismatch, std::string(op) + ": " + q[0].shape().to_string() + " and " +
                                                  q[2].shape().to_string() + " differ outside dimension " +
                                                  std::to_string(dim));
    }
}

inline GcaSet join_pairs(const GcaSet& ab, const GcaSet& cd) {
    GcaSet q;
    q.arrays = {ab[0], ab[1], cd[0], cd[1]};
    q.alphabet = std::max(ab.alphabet, cd.alphabet);
    q.role = SetRole::Quad;
    q.lineage = "(" + ab.lineage + ") + (" + cd.lineage + ")";
    return q;
}

} // namespace detail

/// A verified set from raw arrays (seeds, files). Throws VerificationFailed.
inline GcaSet make_set(std::vector<Tensor> arrays, std::string lineage) {
    return make_verified_set(std::move(arrays), std::move(lineage));
}

/// The trivial pair {[1], [1]} of the given rank.
inline GcaSet trivial_pair(std::size_t rank) {
    return make_set({Tensor::scalar(1, rank), Tensor::scalar(1, rank)}, "trivial");
}

/// Binary pair recursion:
///   E = 1/2 [A (x) (C+D) + B (x) (C-D)],  F = 1/2 [B* (x) (C+D) - A* (x) (C-D)].
inline GcaSet binary_turyn_pair(const GcaSet& ab, const GcaSet& cd) {
    detail::require_verified_pair(ab, "binary_turyn_pair");
    detail::require_verified_pair(cd, "binary_turyn_pair");
    // Halving is only guaranteed exact for binary pairs; some quaternary pairs
    // halve cleanly by accident, so reject them up front with the same kind.
    if (ab.alphabet != Alphabet::Binary || cd.alphabet != Alphabet::Binary) {
        throw Error(ErrorKind::HalvingError, "binary_turyn_pair: inputs must be binary pairs");
    }
    const Tensor& a = ab[0];
    const Tensor& b = ab[1];
    const Tensor c_plus_d = add(cd[0], cd[1]);
    const Tensor c_minus_d = subtract(cd[0], cd[1]);
    Tensor e = divide_exact(add(kron(a, c_plus_d), kron(b, c_minus_d)), 2, ErrorKind::HalvingError);
    Tensor f = divide_exact(subtract(kron(involute(b), c_plus_d), kron(involute(a), c_minus_d)), 2,
                            ErrorKind::HalvingError);
    GcaSet out = make_verified_set({std::move(e), std::move(f)}, "binary_turyn_pair");
    if (ab.alphabet == Alphabet::Binary && cd.alphabet == Alphabet::Binary && out.alphabet != Alphabet::Binary) {
        throw Error(ErrorKind::VerificationFailed, "binary_turyn_pair: binary inputs gave non-binary output");
    }
    return out;
}

/// Pair of 2L x M matrices from two sequence pairs {a, b} (length L) and {c, d} (length M):
///   A = [a c^T ; b d^T],  B = [-a d*^T ; b c*^T].
inline GcaSet rank1_pair(const GcaSet& ab, const GcaSet& cd) {
    detail::require_verified_pair(ab, "rank1_pair");
    detail::require_verified_pair(cd, "rank1_pair");
    if (ab.rank() != 1 || cd.rank() != 1) throw Error(ErrorKind::RankMismatch, "rank1_pair takes sequence pairs");
    const std::size_t l = ab.shape()[0];
    const std::size_t m = cd.shape()[0];
    const auto column = [l](const Tensor& v) { return reshape(v, Shape{l, 1}); };
    const auto row = [m](const Tensor& v) { return reshape(v, Shape{1, m}); };
    const Tensor& a = ab[0];
    const Tensor& b = ab[1];
    const Tensor& c = cd[0];
    const Tensor& d = cd[1];
    Tensor top_a = kron(column(a), row(c));
    Tensor bottom_a = kron(column(b), row(d));
    Tensor top_b = negate(kron(column(a), row(involute(d))));
    Tensor bottom_b = kron(column(b), row(involute(c)));
    std::vector<Tensor> out{concat(top_a, bottom_a, 0), concat(top_b, bottom_b, 0)};
    if (ab.polyphase() && cd.polyphase()) detail::require_polyphase(out, "rank1_pair");
    return make_verified_set(std::move(out), "rank1_pair");
}

/// Concatenation pair along `dim`:
///   E = (A (x) C) | (B (x) D),  F = (B* (x) C) | (-A* (x) D).
inline GcaSet concat_pair(const GcaSet& ab, const GcaSet& cd, std::size_t dim) {
    detail::require_verified_pair(ab, "concat_pair");
    detail::require_verified_pair(cd, "concat_pair");
    detail::require_same_rank(ab[0], cd[0], "concat_pair");
    detail::require_dim(ab[0], dim, "concat_pair");
    const Tensor& a = ab[0];
    const Tensor& b = ab[1];
    const Tensor& c = cd[0];
    const Tensor& d = cd[1];
    std::vector<Tensor> out{concat(kron(a, c), kron(b, d), dim),
                            concat(kron(involute(b), c), negate(kron(involute(a), d)), dim)};
    if (ab.polyphase() && cd.polyphase()) detail::require_polyphase(out, "concat_pair");
    return make_verified_set(std::move(out), "concat_pair");
}

/// Weight-deficient pair from a nontrivial binary pair:
///   P = 1/4 [A + B + (B* - A*)],  Q = 1/4 [A + B - (B* - A*)].
/// At every index exactly one of P, Q, P*, Q* is nonzero.
inline GcaSet disjoint_mask_pair(const GcaSet& ab) {
    detail::require_verified_pair(ab, "disjoint_mask_pair");
    if (ab.shape().trivial()) throw Error(ErrorKind::Trivial, "disjoint_mask_pair needs a nontrivial binary pair");
    if (ab.alphabet != Alphabet::Binary) throw Error(ErrorKind::NotBinary, "disjoint_mask_pair needs a binary pair");
    if (!binary_pair_symmetry(ab[0], ab[1])) {
        throw Error(ErrorKind::StructureFailed, "binary pair violates the end-to-end product symmetry");
    }
    const Tensor& a = ab[0];
    const Tensor& b = ab[1];
    const Tensor a_plus_b = add(a, b);
    const Tensor flipped = subtract(involute(b), involute(a));
    Tensor p = divide_exact(add(a_plus_b, flipped), 4, ErrorKind::QuarteringError);
    Tensor q = divide_exact(subtract(a_plus_b, flipped), 4, ErrorKind::QuarteringError);

    const Tensor p_star = involute(p);
    const Tensor q_star = involute(q);
    for (std::size_t f = 0; f < p.size(); ++f) {
        int nonzero = 0;
        for (const Tensor* t : std::array<const Tensor*, 4>{&p, &q, &p_star, &q_star}) {
            const GaussInt& g = (*t)[f];
            if (g.is_zero()) continue;
            if (g.im != 0 || (g.re != 1 && g.re != -1)) {
                throw Error(ErrorKind::StructureFailed, "mask entry outside {0, 1, -1}");
            }
            ++nonzero;
        }
        if (nonzero != 1) {
            auto pos = p.shape().unflat(f);
            throw Error(ErrorKind::StructureFailed, "exactly-one-of-four fails at " + index_to_string(pos),
                        std::move(pos));
        }
    }
    return make_verified_set({std::move(p), std::move(q)}, "disjoint_mask_pair",
                             {{relation_key("disjoint", 0, 1), true}});
}

/// Glues two polyphase pairs {C, D}, {E, F} with a nontrivial binary binder {A, B}:
///   X = P (x) C + Q (x) D,  Y = Q* (x) C - P* (x) D,
///   G = X (x) E + Y (x) F,  H = Y* (x) E - X* (x) F,
/// where {P, Q} = disjoint_mask_pair(A, B).
inline GcaSet glue_pair(const GcaSet& binder, const GcaSet& cd, const GcaSet& ef) {
    detail::require_verified_pair(cd, "glue_pair");
    detail::require_verified_pair(ef, "glue_pair");
    detail::require_same_rank(binder[0], cd[0], "glue_pair");
    detail::require_same_rank(binder[0], ef[0], "glue_pair");
    const GcaSet pq = disjoint_mask_pair(binder);
    const Tensor& p = pq[0];
    const Tensor& q = pq[1];
    const Tensor& c = cd[0];
    const Tensor& d = cd[1];
    const Tensor x = detail::sum(kron(p, c), kron(q, d));
    const Tensor y = detail::diff(kron(involute(q), c), kron(involute(p), d));
    std::vector<Tensor> out{detail::sum(kron(x, ef[0]), kron(y, ef[1])),
                            detail::diff(kron(involute(y), ef[0]), kron(involute(x), ef[1]))};
    if (cd.polyphase() && ef.polyphase()) detail::require_polyphase(out, "glue_pair");
    return make_verified_set(std::move(out), "glue_pair");
}

/// All Kronecker products A_i (x) B_j, i-major.
inline GcaSet cross_set(const GcaSet& set_a, const GcaSet& set_b) {
    verify_or_throw(set_a.arrays, "cross_set input");
    verify_or_throw(set_b.arrays, "cross_set input");
    detail::require_same_rank(set_a[0], set_b[0], "cross_set");
    std::vector<Tensor> out;
    out.reserve(set_a.size() * set_b.size());
    for (const auto& a : set_a.arrays) {
        for (const auto& b : set_b.arrays) out.push_back(kron(a, b));
    }
    if (set_a.polyphase() && set_b.polyphase()) detail::require_polyphase(out, "cross_set");
    return make_verified_set(std::move(out), "cross_set");
}

/// Weight-deficient quad from {A, B} (size m+1 along dim) and {C, D} (size m):
///   E = A/0,  F = 0/C,  G = B/0,  H = 0/D  (alternating slices along dim).
/// Output order {E, F, G, H}.
inline GcaSet interleave_quad(const GcaSet& quad, std::size_t dim) {
    detail::require_split_quad(quad, dim, "interleave_quad");
    if (quad[0].shape()[dim] != quad[2].shape()[dim] + 1) {
        throw Error(ErrorKind::ShapeMismatch, "interleave_quad needs sizes m+1 and m along dimension " +
                                                  std::to_string(dim));
    }
    verify_or_throw(quad.arrays, "interleave_quad input");
    const Tensor zero_long = Tensor::zeros(quad[0].shape());
    const Tensor zero_short = Tensor::zeros(quad[2].shape());
    std::vector<Tensor> out{interleave(quad[0], zero_short, dim), interleave(zero_long, quad[2], dim),
                            interleave(quad[1], zero_short, dim), interleave(zero_long, quad[3], dim)};
    auto flags = weight_deficient_quad_structure(out);
    return make_verified_set(std::move(out), "interleave_quad", std::move(flags));
}

/// The size-1 weight-deficient quad {[1], [0], [1], [0]}; what interleave_quad
/// would give for base sequences with m = 0.
inline GcaSet trivial_weight_deficient_quad(std::size_t rank) {
    std::vector<Tensor> out{Tensor::scalar(1, rank), Tensor::scalar(0, rank), Tensor::scalar(1, rank),
                            Tensor::scalar(0, rank)};
    auto flags = weight_deficient_quad_structure(out);
    return make_verified_set(std::move(out), "interleave_quad", std::move(flags));
}

/// Weight-deficient quad from {A, B} (size s along dim) and {C, D} (size s'):
///   E = A|0|0|B,  G = A|0|0|-B,  F = 0|C|D|0,  H = 0|C|-D|0.
/// The zero blocks beside A, B are size s'; those beside C, D are size s.
/// Output order {E, F, G, H}.
inline GcaSet concat_zero_quad(const GcaSet& quad, std::size_t dim) {
    detail::require_split_quad(quad, dim, "concat_zero_quad");
    verify_or_throw(quad.arrays, "concat_zero_quad input");
    const Tensor& a = quad[0];
    const Tensor& b = quad[1];
    const Tensor& c = quad[2];
    const Tensor& d = quad[3];
    const Tensor zero_ab = Tensor::zeros(a.shape());
    const Tensor zero_cd = Tensor::zeros(c.shape());
    const auto join = [dim](std::initializer_list<Tensor> parts) {
        return concat(std::span<const Tensor>(parts.begin(), parts.size()), dim);
    };
    std::vector<Tensor> out{join({a, zero_cd, zero_cd, b}), join({zero_ab, c, d, zero_ab}),
                            join({a, zero_cd, zero_cd, negate(b)}), join({zero_ab, c, negate(d), zero_ab})};
    auto flags = weight_deficient_quad_structure(out);
    return make_verified_set(std::move(out), "concat_zero_quad", std::move(flags));
}

inline GcaSet concat_zero_quad(const GcaSet& ab, const GcaSet& cd, std::size_t dim) {
    detail::require_verified_pair(ab, "concat_zero_quad");
    detail::require_verified_pair(cd, "concat_zero_quad");
    return concat_zero_quad(detail::join_pairs(ab, cd), dim);
}

/// Lagrange-identity quad from two structured weight-deficient quads
/// {A, B, C, D} and {E, F, G, H}:
///   P = A (x) F* - B* (x) E + C (x) G + D (x) H
///   Q = A* (x) E + B (x) F* - C (x) H* + D (x) G*
///   R = C* (x) E - D (x) F + A (x) H* + B (x) G
///   S = -C (x) F - D* (x) E + A (x) G* - B (x) H
inline GcaSet lagrange_quad(const GcaSet& q1, const GcaSet& q2) {
    for (const GcaSet* q : {&q1, &q2}) {
        detail::require_members(*q, 4, "lagrange_quad");
        if (!q->uniform()) throw Error(ErrorKind::ShapeMismatch, "lagrange_quad inputs must be uniform quads");
        const auto flags = weight_deficient_quad_structure(q->arrays);
        for (const auto& [key, holds] : flags) {
            if (!holds) throw Error(ErrorKind::StructureFailed, "lagrange_quad input fails " + key);
        }
        if (!structure_consistent(*q)) {
            throw Error(ErrorKind::StructureFailed, "lagrange_quad input carries stale structure tags");
        }
        verify_or_throw(q->arrays, "lagrange_quad input");
    }
    detail::require_same_rank(q1[0], q2[0], "lagrange_quad");
    const Tensor& a = q1[0];
    const Tensor& b = q1[1];
    const Tensor& c = q1[2];
    const Tensor& d = q1[3];
    const Tensor& e = q2[0];
    const Tensor& f = q2[1];
    const Tensor& g = q2[2];
    const Tensor& h = q2[3];
    const Tensor as = involute(a), bs = involute(b), cs = involute(c), ds = involute(d);
    const Tensor fs = involute(f), gs = involute(g), hs = involute(h);

    std::vector<Tensor> out{
        checked_superpose({kron(a, fs), negate(kron(bs, e)), kron(c, g), kron(d, h)}),
        checked_superpose({kron(as, e), kron(b, fs), negate(kron(c, hs)), kron(d, gs)}),
        checked_superpose({kron(cs, e), negate(kron(d, f)), kron(a, hs), kron(b, g)}),
        checked_superpose({negate(kron(c, f)), negate(kron(ds, e)), kron(a, gs), negate(kron(b, h))}),
    };
    detail::require_polyphase(out, "lagrange_quad");
    return make_verified_set(std::move(out), "lagrange_quad");
}

/// Halves a binary pair into the disjoint pair I = (C+D)/2, J = (C-D)/2.
inline GcaSet disjoint_from_pair(const GcaSet& cd) {
    detail::require_verified_pair(cd, "disjoint_from_pair");
    Tensor i = divide_exact(add(cd[0], cd[1]), 2, ErrorKind::HalvingError);
    Tensor j = divide_exact(subtract(cd[0], cd[1]), 2, ErrorKind::HalvingError);
    return make_verified_set({std::move(i), std::move(j)}, "disjoint_from_pair",
                             {{relation_key("disjoint", 0, 1), true}});
}

/// Enlarges a polyphase quad {P, Q, R, S} with a disjoint pair {I, J}:
///   P' = P (x) I + Q (x) J,  Q' = P (x) J* - Q (x) I*,
///   R' = R (x) I + S (x) J,  S' = R (x) J* - S (x) I*.
inline GcaSet expand_quad(const GcaSet& quad, const GcaSet& ij) {
    detail::require_members(quad, 4, "expand_quad");
    if (!quad.uniform()) throw Error(ErrorKind::ShapeMismatch, "expand_quad needs a uniform quad");
    detail::require_polyphase(quad, "expand_quad");
    verify_or_throw(quad.arrays, "expand_quad input quad");
    detail::require_verified_pair(ij, "expand_quad");
    if (!structure(ij[0], ij[1]).disjoint) throw Error(ErrorKind::NotDisjoint, "expand_quad pair is not disjoint");
    detail::require_same_rank(quad[0], ij[0], "expand_quad");
    const Tensor& i = ij[0];
    const Tensor& j = ij[1];
    const Tensor is = involute(i), js = involute(j);
    std::vector<Tensor> out{
        detail::sum(kron(quad[0], i), kron(quad[1], j)),
        detail::diff(kron(quad[0], js), kron(quad[1], is)),
        detail::sum(kron(quad[2], i), kron(quad[3], j)),
        detail::diff(kron(quad[2], js), kron(quad[3], is)),
    };
    detail::require_polyphase(out, "expand_quad");
    return make_verified_set(std::move(out), "expand_quad");
}

/// Quad from {A, B} (size s along dim), {C, D} (size s') and a pair {I, J}:
///   A' = A|0, B' = B|0, C' = 0|C, D' = 0|D,
///   E = A' (x) I + C' (x) J,  F = A' (x) J* - C' (x) I*,
///   G = B' (x) I + D' (x) J,  H = B' (x) J* - D' (x) I*.
inline GcaSet compromise_quad(const GcaSet& quad, std::size_t dim, const GcaSet& ij) {
    detail::require_split_quad(quad, dim, "compromise_quad");
    verify_or_throw(quad.arrays, "compromise_quad input quad");
    detail::require_verified_pair(ij, "compromise_quad");
    detail::require_same_rank(quad[0], ij[0], "compromise_quad");
    const Tensor zero_ab = Tensor::zeros(quad[0].shape());
    const Tensor zero_cd = Tensor::zeros(quad[2].shape());
    const Tensor a = concat(quad[0], zero_cd, dim);
    const Tensor b = concat(quad[1], zero_cd, dim);
    const Tensor c = concat(zero_ab, quad[2], dim);
    const Tensor d = concat(zero_ab, quad[3], dim);
    const Tensor& i = ij[0];
    const Tensor& j = ij[1];
    const Tensor is = involute(i), js = involute(j);
    std::vector<Tensor> out{
        detail::sum(kron(a, i), kron(c, j)),
        detail::diff(kron(a, js), kron(c, is)),
        detail::sum(kron(b, i), kron(d, j)),
        detail::diff(kron(b, js), kron(d, is)),
    };
    if (ij.polyphase() && set_alphabet(quad.arrays) <= Alphabet::Quaternary) {
        bool inputs_polyphase = true;
        for (const auto& t : quad.arrays) inputs_polyphase = inputs_polyphase && !t.has_zero();
        if (inputs_polyphase) detail::require_polyphase(out, "compromise_quad");
    }
    return make_verified_set(std::move(out), "compromise_quad");
}

inline GcaSet compromise_quad(const GcaSet& ab, const GcaSet& cd, std::size_t dim, const GcaSet& ij) {
    detail::require_verified_pair(ab, "compromise_quad");
    detail::require_verified_pair(cd, "compromise_quad");
    return compromise_quad(detail::join_pairs(ab, cd), dim, ij);
}

/// Reshapes every member of a rank-2 set to a sequence (column-major read-out).
inline GcaSet reshape_set(const GcaSet& set) {
    std::vector<Tensor> out;
    for (const auto& t : set.arrays) out.push_back(reshape_to_sequence(t));
    return make_verified_set(std::move(out), "reshape");
}

} // namespace gca
