#include <gtest/gtest.h>

#include "support.hpp"

using namespace gca;
using gca::test::I;

namespace {

ErrorKind kind_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorKind::ParseError;
}

} // namespace

TEST(GaussInt, RingOperations) {
    const GaussInt a{1, 2}, b{3, -1};
    EXPECT_EQ(a + b, GaussInt(4, 1));
    EXPECT_EQ(a - b, GaussInt(-2, 3));
    EXPECT_EQ(a * b, GaussInt(5, 5));
    EXPECT_EQ(-a, GaussInt(-1, -2));
    EXPECT_EQ(a.conj(), GaussInt(1, -2));
    EXPECT_EQ(a.norm(), 5);
    EXPECT_EQ(I * I, GaussInt(-1));
}

TEST(GaussInt, ExactDivision) {
    EXPECT_EQ(GaussInt(4, -2).divide_exact(2, ErrorKind::HalvingError), GaussInt(2, -1));
    EXPECT_EQ(kind_of([] { (void)GaussInt(1, 2).divide_exact(2, ErrorKind::HalvingError); }),
              ErrorKind::HalvingError);
}

TEST(Shape, RejectsZeroAndEmpty) {
    EXPECT_EQ(kind_of([] { Shape{2, 0}; }), ErrorKind::InvalidShape);
    EXPECT_EQ(kind_of([] { Shape(std::vector<std::size_t>{}); }), ErrorKind::InvalidShape);
}

TEST(Shape, FlatIndexIsRowMajor) {
    const Shape s{2, 3, 4};
    EXPECT_EQ(s.size(), 24u);
    const Index idx{1, 2, 3};
    EXPECT_EQ(s.flat(idx), 23u);
    EXPECT_EQ(s.unflat(13), (Index{1, 0, 1}));
}

TEST(Tensor, EntryCountMustMatchShape) {
    EXPECT_EQ(kind_of([] { Tensor(Shape{2, 2}, std::vector<GaussInt>(3)); }), ErrorKind::ShapeMismatch);
}

TEST(Tensor, AlphabetClassification) {
    EXPECT_EQ(Tensor::vector({1, -1}).alphabet(), Alphabet::Binary);
    EXPECT_EQ(Tensor::vector({1, I, -I}).alphabet(), Alphabet::Quaternary);
    EXPECT_EQ(Tensor::vector({1, 0, -I}).alphabet(), Alphabet::Polyphase4WithZeros);
    EXPECT_EQ(Tensor::vector({2, 1}).alphabet(), Alphabet::General);
}

TEST(Add, Examples) {
    EXPECT_EQ(add(Tensor::vector({1, -1}), Tensor::vector({0, 0})), Tensor::vector({1, -1}));
    EXPECT_EQ(add(Tensor::vector({1, 1}), Tensor::vector({1, -1})), Tensor::vector({2, 0}));
    EXPECT_EQ(kind_of([] { add(Tensor::vector({1, 1}), Tensor::vector({1})); }), ErrorKind::ShapeMismatch);
}

TEST(Add, InverseGivesZero) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
        const auto a = test::random_tensor(rng, test::random_shape(rng));
        EXPECT_EQ(add(a, negate(a)), Tensor::zeros(a.shape()));
    }
}

TEST(Negate, Examples) {
    EXPECT_EQ(negate(Tensor::vector({1, I})), Tensor::vector({-1, -I}));
    EXPECT_EQ(negate(Tensor::zeros(Shape{3})), Tensor::zeros(Shape{3}));
    std::mt19937_64 rng(12);
    for (int k = 0; k < 50; ++k) {
        const auto a = test::random_tensor(rng, test::random_shape(rng));
        EXPECT_EQ(negate(negate(a)), a);
    }
}

TEST(Involute, Examples) {
    EXPECT_EQ(involute(Tensor::vector({1, I, -1})), Tensor::vector({-1, -I, 1}));
    const auto ones = Tensor(Shape{2, 3}, std::vector<GaussInt>(6, 1));
    EXPECT_EQ(involute(ones), ones);
    EXPECT_EQ(involute(Tensor::matrix({{1, 2}, {I, 3}})), Tensor::matrix({{3, -I}, {2, 1}}));
}

TEST(Involute, IsAnInvolutionAndAnAutomorphism) {
    std::mt19937_64 rng(13);
    for (int k = 0; k < 100; ++k) {
        const auto shape = test::random_shape(rng);
        const auto a = test::random_tensor(rng, shape);
        EXPECT_EQ(involute(involute(a)), a);
        const auto b = test::random_tensor(rng, test::random_shape(rng, shape.rank(), 3));
        if (b.rank() != a.rank()) continue;
        EXPECT_EQ(involute(convolve(a, b)), convolve(involute(a), involute(b)));
    }
}

TEST(Convolve, Examples) {
    std::mt19937_64 rng(14);
    const auto a = test::random_tensor(rng, Shape{3});
    EXPECT_EQ(convolve(a, Tensor::vector({1})), a);
    EXPECT_EQ(convolve(Tensor::vector({1, 1}), Tensor::vector({1, -1})), Tensor::vector({1, 0, -1}));
    EXPECT_EQ(kind_of([] { convolve(Tensor::vector({1}), Tensor::matrix({{1}})); }), ErrorKind::RankMismatch);
}

TEST(Convolve, MatchesDoubleLoopAndCommutes) {
    std::mt19937_64 rng(15);
    for (int k = 0; k < 50; ++k) {
        const auto a = test::random_tensor(rng, test::random_shape(rng, 2, 4));
        const auto b = test::random_tensor(rng, Shape::ones(a.rank()).with(0, 1 + k % 3));
        const auto c = convolve(a, b);
        EXPECT_EQ(c, convolve(b, a));
        for (std::size_t f = 0; f < c.size(); ++f) {
            const auto o = c.shape().unflat(f);
            GaussInt acc{};
            for (std::size_t p = 0; p < a.size(); ++p) {
                const auto i = a.shape().unflat(p);
                Index j(i.size());
                bool ok = true;
                for (std::size_t d = 0; d < i.size(); ++d) {
                    ok = ok && o[d] >= i[d] && o[d] - i[d] < b.shape()[d];
                    j[d] = o[d] - i[d];
                }
                if (ok) acc += a[p] * b.at(j);
            }
            EXPECT_EQ(c[f], acc);
        }
    }
}

TEST(Kron, Examples) {
    const auto b = Tensor::matrix({{1, I}, {-1, 2}});
    EXPECT_EQ(kron(Tensor::scalar(1, 2), b), b);
    EXPECT_EQ(kron(Tensor::vector({1, -1}), Tensor::vector({1, I})), Tensor::vector({1, I, -1, -I}));
    EXPECT_EQ(kind_of([] { kron(Tensor::vector({1}), Tensor::matrix({{1}})); }), ErrorKind::RankMismatch);
}

TEST(Kron, EqualsConvolutionWithUpsampledFactor) {
    std::mt19937_64 rng(16);
    for (int k = 0; k < 100; ++k) {
        const auto a = test::random_tensor(rng, test::random_shape(rng));
        const auto b = test::random_tensor(rng, test::random_shape(rng, 3, 3));
        if (a.rank() != b.rank()) continue;
        EXPECT_EQ(convolve(upsample(a, b.shape().dims()), b), kron(a, b));
    }
}

TEST(Concat, Examples) {
    EXPECT_EQ(concat(Tensor::vector({1, 1}), Tensor::vector({-1}), 0), Tensor::vector({1, 1, -1}));
    std::mt19937_64 rng(17);
    const auto a = test::random_tensor(rng, Shape{2, 3});
    const auto b = test::random_tensor(rng, Shape{2, 3});
    const auto ab = concat(a, b, 0);
    EXPECT_EQ(ab.shape(), (Shape{4, 3}));
    EXPECT_EQ(slice(ab, 0, 0, 2), a);
    EXPECT_EQ(slice(ab, 0, 2, 2), b);
    const auto side = concat(a, b, 1);
    EXPECT_EQ(side.shape(), (Shape{2, 6}));
    EXPECT_EQ(slice(side, 1, 3, 3), b);
    EXPECT_EQ(kind_of([&] { concat(a, Tensor::zeros(Shape{3, 2}), 0); }), ErrorKind::ShapeMismatch);
}

TEST(Interleave, Examples) {
    EXPECT_EQ(interleave(Tensor::vector({1, 2, 3}), Tensor::vector({4, 5}), 0), Tensor::vector({1, 4, 2, 5, 3}));
    EXPECT_EQ(interleave(Tensor::vector({1, 1}), Tensor::vector({1}), 0), Tensor::vector({1, 1, 1}));
    EXPECT_EQ(interleave(Tensor::matrix({{1, 2}}), Tensor::matrix({{3}}), 1), Tensor::matrix({{1, 3, 2}}));
    EXPECT_EQ(kind_of([] { interleave(Tensor::vector({1, 1, 1}), Tensor::vector({1}), 0); }),
              ErrorKind::ShapeMismatch);
}

TEST(CheckedSuperpose, Examples) {
    EXPECT_EQ(checked_superpose({Tensor::vector({1, 0}), Tensor::vector({0, -1})}), Tensor::vector({1, -1}));
    try {
        checked_superpose({Tensor::vector({1, 0}), Tensor::vector({1, 0})});
        FAIL() << "expected a collision";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Collision);
        EXPECT_EQ(e.position(), (Index{0}));
    }
}

TEST(Structure, Examples) {
    const auto s = structure(Tensor::vector({1, 0}), Tensor::vector({0, -1}));
    EXPECT_TRUE(s.disjoint);
    EXPECT_FALSE(s.conjoint);
    const auto e = Tensor::vector({1, 0, 1});
    EXPECT_TRUE(structure(e, Tensor::vector({0, 1, 0})).disjoint);
    EXPECT_TRUE(structure(e, Tensor::vector({1, 0, -1})).conjoint);
    EXPECT_TRUE(quasi_symmetric(e));
    EXPECT_FALSE(quasi_symmetric(Tensor::vector({1, 0})));
    EXPECT_EQ(kind_of([] { structure(Tensor::vector({1}), Tensor::vector({1, 1})); }), ErrorKind::ShapeMismatch);
}

TEST(Reshape, SequenceRoundTrip) {
    const auto row = Tensor::matrix({{1, I, -1}});
    EXPECT_EQ(reshape_to_sequence(row), Tensor::vector({1, I, -1}));
    const auto a = test::example_a1();
    const auto seq = reshape_to_sequence(a);
    EXPECT_EQ(seq, Tensor::vector({1, -1, 1, -I, -1, -1}));
    EXPECT_EQ(reshape_from_sequence(seq, a.shape()), a);
    EXPECT_EQ(kind_of([] { reshape_to_sequence(Tensor::vector({1})); }), ErrorKind::RankMismatch);
}

TEST(Reshape, OrientEmbedsAlongOneDimension) {
    const auto t = orient(Tensor::vector({1, -1, I}), 3, 1);
    EXPECT_EQ(t.shape(), (Shape{1, 3, 1}));
    EXPECT_EQ(t.at({0, 2, 0}), I);
}

TEST(PadTo, PlacesAtOrigin) {
    EXPECT_EQ(pad_to(Tensor::vector({1, 2}), Shape{4}), Tensor::vector({1, 2, 0, 0}));
    EXPECT_EQ(kind_of([] { pad_to(Tensor::vector({1, 2}), Shape{1}); }), ErrorKind::ShapeMismatch);
}
