#include <bulam/homology.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace bulam;

namespace {

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) b(i, j) = b(j, i) = dist(rng);
    return b;
}

IntVector random_vector(std::mt19937_64& rng, std::size_t n, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    IntVector v(n);
    for (auto& e : v) e = dist(rng);
    return v;
}

IntVector add(IntVector a, const IntVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

}  // namespace

TEST(QmodZ, Reduction) {
    EXPECT_EQ(QmodZ(Rational(-1, 2)).to_string(), "1/2");
    EXPECT_EQ(QmodZ(Rational(7, 3)).to_string(), "1/3");
    EXPECT_TRUE(QmodZ(Rational(-3)).is_zero());
    EXPECT_EQ(QmodZ(Rational(1, 2)) + QmodZ(Rational(1, 2)), QmodZ());
    EXPECT_EQ(-QmodZ(Rational(1, 3)), QmodZ(Rational(2, 3)));
}

TEST(FirstHomology, Examples) {
    EXPECT_EQ(first_homology(IntMatrix{{-4}}).to_string(), "Z/4");
    EXPECT_EQ(first_homology(IntMatrix{{0}}).to_string(), "Z");
    EXPECT_TRUE(first_homology(IntMatrix(0, 0)).is_trivial());
    EXPECT_EQ(first_homology(IntMatrix{{0, 0}, {0, 6}}).to_string(), "Z + Z/6");
    EXPECT_THROW(first_homology(IntMatrix{{0, 1}, {0, 0}}), InvalidArgument);
}

TEST(CoverClasses, Examples) {
    EXPECT_TRUE(cover_classes(IntMatrix{{-3}}).classes.empty());
    const auto one = cover_classes(IntMatrix{{-4}});
    ASSERT_EQ(one.classes.size(), 1U);
    EXPECT_EQ(one.classes[0].bits(), GF2Vector{1});
    const auto three = cover_classes(IntMatrix::diagonal({2, 2}));
    ASSERT_EQ(three.classes.size(), 3U);
    EXPECT_EQ(three.classes[0].bits(), (GF2Vector{1, 0}));
    EXPECT_EQ(three.classes[1].bits(), (GF2Vector{0, 1}));
    EXPECT_EQ(three.classes[2].bits(), (GF2Vector{1, 1}));
    EXPECT_EQ(three.kernel_dimension, 2U);
    EXPECT_TRUE(cover_classes(IntMatrix(0, 0)).classes.empty());
}

TEST(CoverClasses, Truncation) {
    const IntMatrix zero(11, 11);
    const auto full = cover_classes(zero, 2047);
    EXPECT_FALSE(full.truncated);
    EXPECT_EQ(full.classes.size(), 2047U);
    EXPECT_TRUE(std::is_sorted(full.classes.begin(), full.classes.end()));
    const auto cut = cover_classes(zero, 2046);
    EXPECT_TRUE(cut.truncated);
    EXPECT_EQ(cut.classes.size(), 11U);
    EXPECT_EQ(cut.kernel_dimension, 11U);
}

TEST(CoverClass, Validation) {
    EXPECT_THROW(CoverClass(IntMatrix{{-4}}, GF2Vector{0}), InvalidArgument);
    EXPECT_THROW(CoverClass(IntMatrix{{-3}}, GF2Vector{1}), InvalidArgument);
    EXPECT_THROW(CoverClass(IntMatrix{{-4}}, (GF2Vector{1, 0})), DimensionError);
}

TEST(Order, Examples) {
    EXPECT_EQ(order_in_cokernel(IntMatrix{{-4}}, make_int_vector({2})), 2);
    EXPECT_FALSE(order_in_cokernel(IntMatrix{{0}}, make_int_vector({1})));
    EXPECT_EQ(order_in_cokernel(IntMatrix{{0}}, make_int_vector({0})), 1);
}

TEST(Order, DividesExponent) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
        const IntMatrix b = random_symmetric(rng, 1 + t % 5, 8);
        const auto g = cokernel_structure(b);
        const IntVector y = random_vector(rng, b.rows(), 10);
        const auto n = order_in_cokernel(b, y);
        if (g.free_rank > 0 && !n) continue;
        ASSERT_TRUE(n) << to_string(b);
        if (!g.invariant_factors.empty()) {
            EXPECT_EQ(g.invariant_factors.back() % *n, 0) << to_string(b);
        } else {
            EXPECT_EQ(*n, 1);
        }
        IntVector scaled = y;
        for (auto& e : scaled) e *= *n;
        EXPECT_TRUE(is_in_integral_image(b, scaled));
    }
}

TEST(Linking, Examples) {
    EXPECT_EQ(torsion_linking(IntMatrix{{-2}}, make_int_vector({1}), make_int_vector({1})).to_string(), "1/2");
    EXPECT_TRUE(torsion_linking(IntMatrix{{-4}}, make_int_vector({2}), make_int_vector({2})).is_zero());
    EXPECT_TRUE(torsion_linking(IntMatrix{{-4}}, make_int_vector({0}), make_int_vector({1})).is_zero());
    EXPECT_EQ(torsion_linking(IntMatrix{{-4, 1}, {1, -2}}, make_int_vector({1, 0}), make_int_vector({1, 0})),
              QmodZ(Rational(-2, 7)));
    EXPECT_THROW(torsion_linking(IntMatrix{{0}}, make_int_vector({1}), make_int_vector({0})), InvalidArgument);
}

// Nondegenerate b: symmetric, bilinear, and blind to im(b) in either slot.
TEST(Linking, FormProperties) {
    std::mt19937_64 rng(5);
    int checked = 0;
    while (checked < 200) {
        const std::size_t n = 1 + checked % 4;
        const IntMatrix b = random_symmetric(rng, n, 6);
        if (determinant(b) == 0) continue;
        ++checked;
        const IntegralImage image(b);
        const IntVector a = random_vector(rng, n, 9), c = random_vector(rng, n, 9), d = random_vector(rng, n, 9);
        const IntVector shift = b * std::span<const Integer>(random_vector(rng, n, 4));
        EXPECT_EQ(torsion_linking(image, a, c), torsion_linking(image, c, a));
        EXPECT_EQ(torsion_linking(image, a, add(c, d)), torsion_linking(image, a, c) + torsion_linking(image, a, d));
        EXPECT_EQ(torsion_linking(image, add(a, shift), c), torsion_linking(image, a, c));
        EXPECT_EQ(torsion_linking(image, a, add(c, shift)), torsion_linking(image, a, c));
        // Against the rational inverse: lk(a, c) = aᵀ b⁻¹ c mod 1.
        const auto z = solve_rational(b, c);
        ASSERT_TRUE(z);
        Rational v = 0;
        for (std::size_t i = 0; i < n; ++i) v += a[i] * (*z)[i];
        EXPECT_EQ(torsion_linking(image, a, c), QmodZ(v));
    }
}
