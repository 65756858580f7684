#include <bulam/surgery.hpp>

#include <gtest/gtest.h>

#include <numeric>

using namespace bulam;

namespace {

ParseErrorKind parse_failure(const std::string& text) {
    try {
        parse_presentation(text);
    } catch (const ParseError& e) {
        return e.kind();
    }
    ADD_FAILURE() << "accepted: " << text;
    return ParseErrorKind::Syntax;
}

}  // namespace

TEST(LinkingMatrix, Examples) {
    EXPECT_EQ(linking_matrix(SurgeryPresentation{}), IntMatrix(0, 0));
    EXPECT_EQ(linking_matrix(SurgeryPresentation({Integer(-4)})), (IntMatrix{{-4}}));
    EXPECT_EQ(linking_matrix(SurgeryPresentation({Integer(2), Integer(2)})), IntMatrix::diagonal({2, 2}));
}

TEST(Presentation, LinkingIsSymmetric) {
    SurgeryPresentation p({Integer(1), Integer(2), Integer(3)});
    p.set_linking(2, 0, 5);
    EXPECT_EQ(p.linking(0, 2), 5);
    EXPECT_TRUE(linking_matrix(p).is_symmetric());
    p.set_linking(0, 2, 0);
    EXPECT_EQ(p, SurgeryPresentation({Integer(1), Integer(2), Integer(3)}));
    EXPECT_THROW(p.linking(0, 3), InvalidArgument);
    EXPECT_THROW(SurgeryPresentation::from_linking_matrix(IntMatrix{{0, 1}, {0, 0}}), InvalidArgument);
}

TEST(Parse, Matrix) {
    const auto a = parse_presentation(R"({"matrix": [[-4]]})");
    EXPECT_EQ(a.component_count(), 1U);
    EXPECT_EQ(a.framing(0), -4);
    const auto b = parse_presentation(R"({"matrix": [[2,1],[1,2]], "label": "x"})");
    EXPECT_EQ(b.component_count(), 2U);
    EXPECT_EQ(b.linking(0, 1), 1);
    EXPECT_EQ(b.label(), "x");
    EXPECT_EQ(parse_presentation(R"({"matrix": []})").component_count(), 0U);
}

TEST(Parse, BigIntegersAsStrings) {
    const auto p = parse_presentation(R"({"matrix": [["-123456789012345678901234567890"]]})");
    EXPECT_EQ(p.framing(0), Integer("-123456789012345678901234567890"));
}

TEST(Parse, Presets) {
    EXPECT_EQ(parse_presentation(R"({"preset": "s3"})").component_count(), 0U);
    EXPECT_EQ(linking_matrix(parse_presentation(R"({"preset": "lens", "p": 7, "q": 2})")),
              (IntMatrix{{-4, 1}, {1, -2}}));
    const auto sum = parse_presentation(
        R"({"preset": "connected_sum", "parts": [{"preset": "lens", "p": 2, "q": 1}, {"matrix": [[-2]]}]})");
    EXPECT_EQ(linking_matrix(sum), IntMatrix::diagonal({-2, -2}));
}

TEST(Parse, ErrorKinds) {
    EXPECT_EQ(parse_failure("{"), ParseErrorKind::Syntax);
    EXPECT_EQ(parse_failure("[1]"), ParseErrorKind::Syntax);
    EXPECT_EQ(parse_failure("{}"), ParseErrorKind::Schema);
    EXPECT_EQ(parse_failure(R"({"matrix": [[1]], "preset": "s3"})"), ParseErrorKind::Schema);
    EXPECT_EQ(parse_failure(R"({"matrix": 3})"), ParseErrorKind::Schema);
    EXPECT_EQ(parse_failure(R"({"matrix": [[1]], "colour": 1})"), ParseErrorKind::UnknownKey);
    EXPECT_EQ(parse_failure(R"({"matrix": [[1.5]]})"), ParseErrorKind::NonInteger);
    EXPECT_EQ(parse_failure(R"({"matrix": [["abc"]]})"), ParseErrorKind::NonInteger);
    EXPECT_EQ(parse_failure(R"({"matrix": [[1,2],[2]]})"), ParseErrorKind::Shape);
    EXPECT_EQ(parse_failure(R"({"matrix": [[1,2]]})"), ParseErrorKind::Shape);
    EXPECT_EQ(parse_failure(R"({"matrix": [[0,1],[0,0]]})"), ParseErrorKind::Asymmetric);
    EXPECT_EQ(parse_failure(R"({"preset": "lens", "p": 4, "q": 2})"), ParseErrorKind::InvalidParameter);
    EXPECT_EQ(parse_failure(R"({"preset": "torus"})"), ParseErrorKind::Schema);
    EXPECT_EQ(parse_failure(R"({"matrix": [["12x"]]})"), ParseErrorKind::NonInteger);
    EXPECT_EQ(parse_failure(R"({"matrix": [["-"]]})"), ParseErrorKind::NonInteger);
}

TEST(Parse, LenientModeKeepsUpperTriangle) {
    const auto p = parse_presentation(R"({"matrix": [[0,1],[0,0]]})", ParseOptions{.strict = false});
    EXPECT_EQ(linking_matrix(p), (IntMatrix{{0, 1}, {1, 0}}));
}

TEST(Parse, SerializeRoundTrip) {
    SurgeryPresentation p({Integer(-4), Integer(0), Integer("99999999999999999999999")});
    p.set_linking(0, 1, 3);
    p.set_linking(1, 2, -1);
    p.set_label("round trip");
    EXPECT_EQ(parse_presentation(serialize_presentation(p)), p);
    EXPECT_EQ(parse_presentation(serialize_presentation(SurgeryPresentation{})), SurgeryPresentation{});
}

TEST(Lens, Examples) {
    EXPECT_EQ(linking_matrix(lens_presentation(4, 1)), (IntMatrix{{-4}}));
    EXPECT_EQ(linking_matrix(lens_presentation(2, 1)), (IntMatrix{{-2}}));
    EXPECT_EQ(linking_matrix(lens_presentation(7, 2)), (IntMatrix{{-4, 1}, {1, -2}}));
    EXPECT_EQ(lens_presentation(7, 2).label(), "L(7,2)");
}

TEST(Lens, InvalidArguments) {
    EXPECT_THROW(lens_presentation(1, 1), InvalidArgument);
    EXPECT_THROW(lens_presentation(4, 2), InvalidArgument);
    EXPECT_THROW(lens_presentation(5, 0), InvalidArgument);
    EXPECT_THROW(lens_presentation(5, 5), InvalidArgument);
}

TEST(Lens, ContinuedFraction) {
    EXPECT_EQ(negative_continued_fraction(7, 2), make_int_vector({4, 2}));
    EXPECT_EQ(negative_continued_fraction(5, 4), make_int_vector({2, 2, 2, 2}));
}

// H_1 = Z/p for every coprime pair; |det| = p by elimination on short chains.
TEST(Lens, HomologyUpTo500) {
    for (long p = 2; p <= 500; ++p)
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            const IntMatrix b = linking_matrix(lens_presentation(p, q));
            ASSERT_EQ(cokernel_structure(b).invariant_factors, make_int_vector({p})) << p << "," << q;
            if (b.rows() <= 12) {
                ASSERT_EQ(abs(determinant(b)), p) << p << "," << q;
            }
        }
}

TEST(ConnectedSum, Examples) {
    EXPECT_EQ(linking_matrix(connected_sum(lens_presentation(2, 1), lens_presentation(2, 1))),
              IntMatrix::diagonal({-2, -2}));
    const auto x = lens_presentation(7, 2);
    EXPECT_EQ(linking_matrix(connected_sum(x, s3_presentation())), linking_matrix(x));
    EXPECT_EQ(linking_matrix(connected_sum(SurgeryPresentation({Integer(2)}), SurgeryPresentation({Integer(2)}))),
              IntMatrix::diagonal({2, 2}));
}
