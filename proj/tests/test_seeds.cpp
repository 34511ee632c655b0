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

/// Counts complementary pairs of a shape by trying every assignment.
std::uint64_t brute_force_pairs(Alphabet alphabet, const Shape& shape) {
    static constexpr GaussInt units[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    const std::size_t q = alphabet == Alphabet::Binary ? 2 : 4;
    const std::size_t n = shape.size();
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < 2 * n; ++k) total *= q;
    std::uint64_t count = 0;
    std::vector<GaussInt> a(n), b(n);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t k = 0; k < n; ++k, c /= q) a[k] = units[c % q];
        for (std::size_t k = 0; k < n; ++k, c /= q) b[k] = units[c % q];
        count += is_gca_set({Tensor(shape, a), Tensor(shape, b)}).is_complementary ? 1 : 0;
    }
    return count;
}

SeedRecord record_of(std::vector<Tensor> tensors, SeedKind kind = SeedKind::GolayPair,
                     Alphabet alphabet = Alphabet::Binary) {
    SeedRecord rec;
    rec.kind = kind;
    rec.alphabet = alphabet;
    rec.tensors = std::move(tensors);
    return rec;
}

} // namespace

TEST(Registry, BundledFileHasAllBasicSeeds) {
    LoadReport report;
    const auto reg = load_registry(test::seeds_path(), &report);
    EXPECT_TRUE(report.rejected.empty());
    EXPECT_EQ(report.loaded, reg.size());
    for (std::size_t n : {2, 10, 26}) {
        EXPECT_NE(reg.find(SeedKind::GolayPair, Alphabet::Binary, Shape{n}.to_string()), nullptr) << n;
    }
    for (std::size_t n : {3, 5, 11, 13}) {
        EXPECT_NE(reg.find(SeedKind::GolayPair, Alphabet::Quaternary, Shape{n}.to_string()), nullptr) << n;
    }
    for (std::size_t m = 1; m <= 8; ++m) EXPECT_NO_THROW(get_base_sequences(reg, m)) << m;
}

TEST(Registry, GetGolayPair) {
    const auto& two = get_golay_pair(test::bundled(), Alphabet::Binary, 2);
    EXPECT_EQ(two.tensors[0], Tensor::vector({1, 1}));
    EXPECT_EQ(two.tensors[1], Tensor::vector({1, -1}));
    const auto& three = get_golay_pair(test::bundled(), Alphabet::Quaternary, 3);
    EXPECT_TRUE(is_gca_set(three.tensors).is_complementary);
    EXPECT_EQ(three.tensors[0], Tensor::vector({1, 1, -1}));
    EXPECT_EQ(three.tensors[1], Tensor::vector({1, test::I, 1}));
    EXPECT_EQ(kind_of([] { get_golay_pair(test::bundled(), Alphabet::Binary, 3); }), ErrorKind::NotFound);
}

TEST(Registry, BinaryPairsServeQuaternaryLookups) {
    const auto& ten = get_golay_pair(test::bundled(), Alphabet::Quaternary, 10);
    EXPECT_EQ(ten.alphabet, Alphabet::Binary);
}

TEST(Registry, GetBaseSequences) {
    const auto& bs1 = get_base_sequences(test::bundled(), 1);
    EXPECT_EQ(bs1.tensors[0], Tensor::vector({1, 1}));
    EXPECT_EQ(bs1.tensors[1], Tensor::vector({1, -1}));
    EXPECT_EQ(bs1.tensors[2], Tensor::vector({1}));
    EXPECT_EQ(bs1.tensors[3], Tensor::vector({1}));
    const auto& bs3 = get_base_sequences(test::bundled(), 3);
    EXPECT_EQ(is_gca_set(pad_to_common_shape(bs3.tensors)).total_weight, 14);
    EXPECT_EQ(kind_of([] { get_base_sequences(test::bundled(), 39); }), ErrorKind::NotFound);
    EXPECT_EQ(kind_of([] { get_base_sequences(test::bundled(), 0); }), ErrorKind::NotFound);
}

TEST(Registry, CorruptedRecordIsRejectedOthersLoad) {
    auto doc = io::json::parse(io::read_file(test::seeds_path()));
    ASSERT_GE(doc.size(), 2u);
    const std::size_t total = doc.size();
    // Flip one sign in the first record's first tensor.
    auto& entry = doc[0]["tensors"][0]["entries"][0];
    entry[0] = -entry[0].get<int>();
    LoadReport report;
    const auto reg = load_registry_text(doc.dump(), &report);
    EXPECT_EQ(report.loaded, total - 1);
    ASSERT_EQ(report.rejected.size(), 1u);
    EXPECT_NE(report.rejected[0].find("record 0"), std::string::npos);
    EXPECT_EQ(reg.size(), total - 1);
}

TEST(Registry, MalformedRecordIsReportedNotThrown) {
    LoadReport report;
    const auto reg = load_registry_text(R"([{"kind": "golay-pair"}, {"kind": "nonsense", "alphabet": "binary"}])",
                                        &report);
    EXPECT_TRUE(reg.empty());
    EXPECT_EQ(report.rejected.size(), 2u);
}

TEST(Registry, EmptyFileGivesEmptyRegistry) {
    LoadReport report;
    EXPECT_TRUE(load_registry_text("", &report).empty());
    EXPECT_TRUE(load_registry_text("  \n", &report).empty());
    EXPECT_TRUE(load_registry_text("[]", &report).empty());
    EXPECT_TRUE(report.rejected.empty());
}

TEST(Registry, UnparseableFileIsParseError) {
    EXPECT_EQ(kind_of([] { load_registry_text("[{"); }), ErrorKind::ParseError);
    EXPECT_EQ(kind_of([] { load_registry_text("42"); }), ErrorKind::ParseError);
}

TEST(Registry, TextRoundTrip) {
    const auto text = seeds_to_text(test::bundled());
    const auto again = load_registry_text(text);
    EXPECT_EQ(seeds_to_text(again), text);
}

TEST(VerifySeed, RejectsBadRecords) {
    EXPECT_EQ(kind_of([] { verify_seed(record_of({Tensor::vector({1, 1}), Tensor::vector({1, 1})})); }),
              ErrorKind::VerificationFailed);
    // Quaternary entries under a binary claim.
    EXPECT_EQ(kind_of([] { verify_seed(record_of({Tensor::vector({1, 1, -1}), Tensor::vector({1, I, 1})})); }),
              ErrorKind::VerificationFailed);
    // Zero entries are never seeds.
    EXPECT_THROW(verify_seed(record_of({Tensor::vector({1, 0}), Tensor::vector({0, 1})})), Error);
    // Base sequences need lengths m+1, m+1, m, m.
    EXPECT_THROW(verify_seed(record_of({Tensor::vector({1, 1}), Tensor::vector({1, -1}), Tensor::vector({1, 1}),
                                        Tensor::vector({1, -1})},
                                       SeedKind::BaseSequences)),
                 Error);
    EXPECT_NO_THROW(verify_seed(record_of(test::bs21().arrays, SeedKind::BaseSequences)));
}

TEST(Search, FindsBinaryTen) {
    const auto out = search_golay_pair(Alphabet::Binary, Shape{10}, 1'000'000);
    ASSERT_EQ(out.status, SearchStatus::Found);
    ASSERT_TRUE(out.record);
    EXPECT_TRUE(is_gca_set(out.record->tensors).is_complementary);
    EXPECT_EQ(out.record->tensors[0][0], GaussInt(1));
    EXPECT_EQ(out.record->key(), "golay-pair/binary/10");
}

TEST(Search, QuaternaryThreeIsFirstInValueOrder) {
    const auto out = search_golay_pair(Alphabet::Quaternary, Shape{3}, 1'000'000);
    ASSERT_EQ(out.status, SearchStatus::Found);
    EXPECT_EQ(out.record->tensors[0], Tensor::vector({1, 1, -1}));
    EXPECT_EQ(out.record->tensors[1], Tensor::vector({1, I, 1}));
    EXPECT_EQ(out.record->alphabet, Alphabet::Quaternary);
}

TEST(Search, BinaryTwoByFiveIsExhausted) {
    const auto out = search_golay_pair(Alphabet::Binary, Shape{2, 5}, 1'000'000);
    EXPECT_EQ(out.status, SearchStatus::Exhausted);
    EXPECT_FALSE(out.record);
    EXPECT_LE(out.nodes, 1u << 20);
}

TEST(Search, BudgetExceeded) {
    const auto out = search_base_sequences(6, 10);
    EXPECT_EQ(out.status, SearchStatus::BudgetExceeded);
    EXPECT_FALSE(out.record);
}

TEST(Search, BaseSequencesSmallM) {
    const auto bs1 = search_base_sequences(1, 1000);
    ASSERT_EQ(bs1.status, SearchStatus::Found);
    EXPECT_EQ(bs1.record->tensors, test::bs21().arrays);
    for (std::size_t m = 2; m <= 8; ++m) {
        const auto out = search_base_sequences(m, 10'000'000);
        ASSERT_EQ(out.status, SearchStatus::Found) << m;
        EXPECT_EQ(out.record->key(), "base-sequences/binary/" + std::to_string(m));
    }
    EXPECT_EQ(kind_of([] { search_base_sequences(0, 10); }), ErrorKind::InvalidShape);
}

TEST(Search, Deterministic) {
    const auto a = search_golay_pair(Alphabet::Quaternary, Shape{2, 3}, 1'000'000);
    const auto b = search_golay_pair(Alphabet::Quaternary, Shape{2, 3}, 1'000'000);
    ASSERT_EQ(a.status, SearchStatus::Found);
    EXPECT_EQ(a.record->tensors, b.record->tensors);
    EXPECT_EQ(a.nodes, b.nodes);
}

TEST(Search, RejectsOtherAlphabets) {
    EXPECT_EQ(kind_of([] { search_golay_pair(Alphabet::General, Shape{2}, 10); }), ErrorKind::InvalidShape);
}

/// Size of each symmetry orbit the search collapses: a unit per array, and a
/// modulation when the last axis has at least two entries.
std::uint64_t orbit(Alphabet alphabet, const Shape& shape) {
    const std::uint64_t q = alphabet == Alphabet::Binary ? 2 : 4;
    return q * q * (shape[shape.rank() - 1] >= 2 ? q : 1);
}

TEST(Search, NormalizationLosesNothingBinary) {
    for (const Shape& s : {Shape{1}, Shape{2}, Shape{3}, Shape{4}, Shape{5}, Shape{6}, Shape{7}, Shape{8},
                           Shape{2, 2}, Shape{2, 1}, Shape{1, 4}}) {
        const auto normalized = count_golay_pairs(Alphabet::Binary, s, 100'000'000);
        ASSERT_EQ(normalized.status, SearchStatus::Exhausted);
        EXPECT_EQ(orbit(Alphabet::Binary, s) * normalized.solutions, brute_force_pairs(Alphabet::Binary, s))
            << s.to_string();
    }
}

TEST(Search, NormalizationLosesNothingQuaternary) {
    for (const Shape& s : {Shape{1}, Shape{2}, Shape{3}, Shape{4}, Shape{1, 3}, Shape{3, 1}}) {
        const auto normalized = count_golay_pairs(Alphabet::Quaternary, s, 100'000'000);
        ASSERT_EQ(normalized.status, SearchStatus::Exhausted);
        EXPECT_EQ(orbit(Alphabet::Quaternary, s) * normalized.solutions, brute_force_pairs(Alphabet::Quaternary, s))
            << s.to_string();
    }
    // 128 quaternary pairs of length 3 in all, two up to symmetry.
    EXPECT_EQ(brute_force_pairs(Alphabet::Quaternary, Shape{3}), 128u);
    EXPECT_EQ(count_golay_pairs(Alphabet::Quaternary, Shape{3}, 100'000'000).solutions, 2u);
}

TEST(Search, BinaryFeasibleLengthsMatchGolayNumbers) {
    // Exhaustive up to 20; the remaining lengths to 40 are covered by the
    // acceptance run and spot checks.
    std::vector<std::size_t> found;
    for (std::size_t n = 1; n <= 20; ++n) {
        const auto out = search_golay_pair(Alphabet::Binary, Shape{n}, 500'000'000);
        ASSERT_NE(out.status, SearchStatus::BudgetExceeded) << n;
        if (out.status == SearchStatus::Found) found.push_back(n);
    }
    EXPECT_EQ(found, (std::vector<std::size_t>{1, 2, 4, 8, 10, 16, 20}));
}

TEST(Search, BinarySpotChecksBeyondTwenty) {
    for (std::size_t n : {26, 32}) {
        EXPECT_EQ(search_golay_pair(Alphabet::Binary, Shape{n}, 100'000'000).status, SearchStatus::Found) << n;
    }
}

TEST(SeedKind, Parsing) {
    EXPECT_EQ(parse_seed_kind("pair"), SeedKind::GolayPair);
    EXPECT_EQ(parse_seed_kind("base-sequences"), SeedKind::BaseSequences);
    EXPECT_EQ(kind_of([] { parse_seed_kind("triple"); }), ErrorKind::ParseError);
}
