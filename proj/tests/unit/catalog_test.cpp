#include <bulam/borsuk.hpp>
#include <bulam/catalog.hpp>

#include <gtest/gtest.h>

using namespace bulam;

namespace {

int classify_entry(const CatalogEntry& e) {
    const IntMatrix b = linking_matrix(*e.surgery_presentation);
    return classify_class(b, CoverClass(b, *e.surgery_class)).index;
}

}  // namespace

TEST(Catalog, ComputableEntriesReproduce) {
    int computable = 0;
    for (const auto& e : catalog_entries()) {
        EXPECT_FALSE(e.source.empty()) << e.cover_manifold;
        if (!e.computable_by_surgery) {
            EXPECT_FALSE(e.surgery_presentation);
            continue;
        }
        ++computable;
        EXPECT_EQ(classify_entry(e), e.index) << e.cover_manifold << " -> " << e.quotient_manifold;
    }
    EXPECT_EQ(computable, 4);
}

TEST(Catalog, Sphere) {
    const auto s3 = lookup("S3");
    ASSERT_EQ(s3.size(), 1U);
    EXPECT_EQ(s3[0].quotient_manifold, "RP3");
    EXPECT_EQ(s3[0].index, 3);
    EXPECT_EQ(linking_matrix(*s3[0].surgery_presentation), (IntMatrix{{-2}}));
}

TEST(Catalog, S1xS2Quotients) {
    std::vector<std::pair<std::string, int>> got;
    for (const auto& e : lookup("s1 x s2")) got.emplace_back(e.quotient_manifold, e.index);
    const std::vector<std::pair<std::string, int>> want{{"S1xS2", 1}, {"K3", 1}, {"S1xRP2", 2}, {"RP3#RP3", 2}};
    EXPECT_EQ(got, want);
}

TEST(Catalog, KleinBottle) {
    const auto k3 = lookup("K3");
    const auto cover = std::find_if(k3.begin(), k3.end(), [](const auto& e) { return e.cover_manifold == "K3"; });
    ASSERT_NE(cover, k3.end());
    EXPECT_EQ(cover->quotient_manifold, "S1xRP2");
    EXPECT_EQ(cover->index, 3);
    EXPECT_FALSE(cover->computable_by_surgery);
}

TEST(Catalog, LensRule) {
    EXPECT_FALSE(lens_rule_index(5));
    EXPECT_EQ(lens_rule_index(2), 3);
    EXPECT_EQ(lens_rule_index(6), 3);
    EXPECT_EQ(lens_rule_index(8), 2);
}

TEST(Catalog, LensLookups) {
    for (const auto& name : {"L(6,1)", "L(8,3)", "l(12, 5)", "L(9,2)"}) {
        const auto entries = lookup(name);
        ASSERT_FALSE(entries.empty()) << name;
        for (const auto& e : entries) {
            ASSERT_TRUE(e.computable_by_surgery);
            EXPECT_EQ(classify_entry(e), e.index) << name;
        }
    }
    EXPECT_EQ(lookup("L(9,2)").size(), 1U);  // odd p: only as a cover of L(18, .)
    EXPECT_EQ(lookup("L(2,1)").front().cover_manifold, "S3");
}

TEST(Catalog, Names) {
    EXPECT_EQ(normalize_manifold_name("S^1 x S^2"), "s1xs2");
    EXPECT_EQ(normalize_manifold_name("S2xS1"), "s1xs2");
    EXPECT_EQ(normalize_manifold_name("L(2,1)"), "rp3");
    EXPECT_TRUE(lookup("torus").empty());
}
