#include <bulam/borsuk.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace bulam;

namespace {

IndexReport only_class(const IntMatrix& b) {
    const auto sweep = classify_all(b);
    EXPECT_EQ(sweep.reports.size(), 1U);
    return sweep.reports.at(0);
}

}  // namespace

TEST(Lift, Canonical) {
    EXPECT_EQ(lift_class(CoverClass(IntMatrix{{-4}}, GF2Vector{1})), make_int_vector({1}));
    EXPECT_EQ(lift_class(CoverClass(IntMatrix(3, 3), GF2Vector{1, 0, 1})), make_int_vector({1, 0, 1}));
}

TEST(Bockstein, Examples) {
    EXPECT_EQ(bockstein_representative(IntMatrix{{-4}}, make_int_vector({1})), make_int_vector({-2}));
    EXPECT_EQ(bockstein_representative(IntMatrix{{0}}, make_int_vector({1})), make_int_vector({0}));
    EXPECT_EQ(bockstein_representative(IntMatrix::diagonal({2, 2}), make_int_vector({1, 1})), make_int_vector({1, 1}));
    EXPECT_THROW(bockstein_representative(IntMatrix{{-3}}, make_int_vector({1})), InvalidArgument);

    EXPECT_TRUE(beta_vanishes(IntMatrix{{0}}, make_int_vector({1})));
    EXPECT_FALSE(beta_vanishes(IntMatrix{{-4}}, make_int_vector({1})));
    EXPECT_FALSE(beta_vanishes(IntMatrix::diagonal({2, 2}), make_int_vector({1, 1})));
}

TEST(TripleCup, Examples) {
    EXPECT_EQ(triple_cup(IntMatrix{{-2}}, make_int_vector({1})), 1);
    EXPECT_EQ(triple_cup(IntMatrix{{-4}}, make_int_vector({1})), 0);
    EXPECT_EQ(triple_cup(IntMatrix::diagonal({2, 2}), make_int_vector({1, 1})), 0);
    EXPECT_EQ(triple_cup(IntMatrix{{-6}}, make_int_vector({1})), 1);
    EXPECT_EQ(triple_cup(IntMatrix{{-2}}, make_int_vector({-3})), 1);
}

TEST(Classify, Examples) {
    const IntMatrix d22 = IntMatrix::diagonal({2, 2});
    EXPECT_EQ(classify_class(IntMatrix{{-2}}, CoverClass(IntMatrix{{-2}}, GF2Vector{1})).index, 3);
    EXPECT_EQ(classify_class(IntMatrix{{-4}}, CoverClass(IntMatrix{{-4}}, GF2Vector{1})).index, 2);
    EXPECT_EQ(classify_class(d22, CoverClass(d22, GF2Vector{1, 1})).index, 2);
    EXPECT_EQ(classify_class(d22, CoverClass(d22, GF2Vector{1, 0})).index, 3);
}

TEST(Classify, ReportFields) {
    const IndexReport s3 = only_class(IntMatrix{{-2}});
    EXPECT_EQ(s3.index, 3);
    EXPECT_EQ(s3.self_linking->to_string(), "1/2");
    EXPECT_EQ(s3.bu_holds_for(), (std::vector<int>{1, 2, 3}));

    const IndexReport rp3 = only_class(IntMatrix{{-4}});
    EXPECT_EQ(rp3.index, 2);
    EXPECT_EQ(rp3.bockstein_rep, make_int_vector({-2}));
    EXPECT_FALSE(rp3.beta_vanishes);
    EXPECT_EQ(rp3.triple_cup, 0);
    EXPECT_TRUE(rp3.self_linking->is_zero());

    const IndexReport s1s2 = only_class(IntMatrix{{0}});
    EXPECT_EQ(s1s2.index, 1);
    EXPECT_TRUE(s1s2.beta_vanishes);
    EXPECT_EQ(s1s2.bu_holds_for(), std::vector<int>{1});
}

TEST(ClassifyAll, Examples) {
    EXPECT_TRUE(classify_all(IntMatrix{{-3}}).reports.empty());
    const auto d = classify_all(IntMatrix::diagonal({2, 2}));
    ASSERT_EQ(d.reports.size(), 3U);
    EXPECT_EQ(d.reports[0].index, 3);
    EXPECT_EQ(d.reports[1].index, 3);
    EXPECT_EQ(d.reports[2].index, 2);
    const auto s3 = classify_all(IntMatrix(0, 0));
    EXPECT_TRUE(s3.reports.empty());
    ASSERT_FALSE(s3.notes.empty());
    EXPECT_NE(s3.notes[0].find("simply connected"), std::string::npos);
}

TEST(ClassifyAll, CrosscheckCanBeDisabled) {
    const auto sweep = classify_all(IntMatrix{{-2}}, kDefaultClassCap, ClassifyOptions{.crosscheck = false});
    ASSERT_EQ(sweep.reports.size(), 1U);
    EXPECT_FALSE(sweep.reports[0].self_linking);
    EXPECT_EQ(sweep.reports[0].index, 3);
}

TEST(Classify, RejectsForeignLift) {
    const Classifier c(IntMatrix{{-4}});
    EXPECT_THROW(c.classify(CoverClass(IntMatrix{{-4}}, GF2Vector{1}), make_int_vector({2})), InvalidArgument);
    EXPECT_EQ(c.classify(CoverClass(IntMatrix{{-4}}, GF2Vector{1}), make_int_vector({-7})).index, 2);
}

TEST(Diagonal, Examples) {
    EXPECT_EQ(diagonal_index(make_int_vector({-2}), GF2Vector{1}), 3);
    EXPECT_EQ(diagonal_index(make_int_vector({-4}), GF2Vector{1}), 2);
    EXPECT_EQ(diagonal_index(make_int_vector({0}), GF2Vector{1}), 1);
    EXPECT_THROW(diagonal_index(make_int_vector({3}), GF2Vector{1}), InvalidArgument);
}

// Index invariants on every report, and locality under block sums.
TEST(Classify, InvariantsAndConnectedSumLocality) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> entry(-6, 6);
    std::uniform_int_distribution<std::size_t> dim(1, 4);
    for (int t = 0; t < 200; ++t) {
        auto sym = [&](std::size_t n) {
            IntMatrix b(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i; j < n; ++j) b(i, j) = b(j, i) = entry(rng);
            return b;
        };
        const IntMatrix b1 = sym(dim(rng)), b2 = sym(dim(rng));
        const IntMatrix sum = block_sum(b1, b2);
        for (const auto& r : classify_all(b1).reports) {
            EXPECT_EQ(r.index == 3, r.triple_cup == 1);
            EXPECT_EQ(r.index == 1, r.beta_vanishes);
            EXPECT_FALSE(r.triple_cup == 1 && r.beta_vanishes);

            GF2Vector x(sum.rows());
            for (std::size_t i = 0; i < b1.rows(); ++i) x.set(i, r.cover_class.bits().get(i));
            EXPECT_EQ(classify_class(sum, CoverClass(sum, x)).index, r.index) << to_string(sum);
        }
    }
}
