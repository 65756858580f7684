#include "commands.hpp"
#include "selftest.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

using namespace bulam;
using namespace bulam::cli;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(BULAM_TEST_DATA_DIR) + "/" + name; }

// The classic sign slip: (XᵀBX/2) % 2 == 1 misses negative odd values.
IndexReport sign_bug_classify(const Classifier& c, const CoverClass& x, IntVector lift) {
    IndexReport r = c.classify(x, std::move(lift));
    const long half = quadratic_value(c.matrix(), r.lift).get_si() / 2;
    r.triple_cup = half % 2 == 1 ? 1 : 0;
    r.index = r.triple_cup ? 3 : (r.beta_vanishes ? 1 : 2);
    return r;
}

}  // namespace

TEST(Cli, AnalyzeText) {
    const Outcome r = run({"analyze", data("rp3.json")});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("index = 2"), std::string::npos);
    EXPECT_NE(r.out.find("Borsuk-Ulam property holds for (M, tau, R^n) for n <= 2"), std::string::npos);
}

TEST(Cli, AnalyzeNoCover) {
    const Outcome r = run({"--format", "json", "analyze", data("l3.json")});
    EXPECT_EQ(r.code, kExitOk);
    const auto j = ordered_json::parse(r.out);
    EXPECT_TRUE(j["classes"].empty());
    EXPECT_NE(j["notes"][0].get<std::string>().find("no connected double cover"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"analyze", data("asymmetric.json")}).code, kExitInput);
    EXPECT_NE(run({"analyze", data("asymmetric.json")}).err.find("asymmetric"), std::string::npos);
    EXPECT_EQ(run({"analyze", data("missing.json")}).code, kExitInput);
    EXPECT_EQ(run({"analyze", data("zero11.json")}).code, kExitCap);
    EXPECT_EQ(run({"--cap", "2", "analyze", data("rp3_rp3.json")}).code, kExitCap);
    EXPECT_EQ(run({"lens", "4", "2"}).code, kExitInput);
    EXPECT_EQ(run({"lens", "four", "1"}).code, kExitInput);
    EXPECT_EQ(run({"frobnicate"}).code, kExitFailure);
    EXPECT_EQ(run({}).code, kExitFailure);
    EXPECT_EQ(run({"--format", "xml", "lens", "4", "1"}).code, kExitFailure);
}

TEST(Cli, Truncation) {
    const Outcome r = run({"--format", "json", "--allow-truncate", "analyze", data("zero11.json")});
    ASSERT_EQ(r.code, kExitOk);
    const auto j = ordered_json::parse(r.out);
    EXPECT_TRUE(j["truncated"].get<bool>());
    EXPECT_EQ(j["classes"].size(), 11U);
    EXPECT_EQ(j["kernel_basis"].size(), 11U);
}

TEST(Cli, Lens) {
    auto index_of = [](const std::string& p, const std::string& q) {
        const auto j = ordered_json::parse(run({"--format", "json", "lens", p, q}).out);
        EXPECT_TRUE(j["lens"]["agrees"].get<bool>());
        return j["classes"].empty() ? 0 : j["classes"][0]["index"].get<int>();
    };
    EXPECT_EQ(index_of("6", "1"), 3);
    EXPECT_EQ(index_of("8", "3"), 2);
    EXPECT_EQ(index_of("5", "2"), 0);
}

TEST(Cli, Catalog) {
    const auto s1s2 = ordered_json::parse(run({"--format", "json", "catalog", "S1xS2"}).out);
    EXPECT_EQ(s1s2["entries"].size(), 4U);
    const Outcome unknown = run({"--format", "json", "catalog", "unknown"});
    EXPECT_EQ(unknown.code, kExitOk);
    const auto j = ordered_json::parse(unknown.out);
    EXPECT_TRUE(j["entries"].empty());
    EXPECT_FALSE(j["notes"].empty());
}

TEST(Cli, JsonDeterministicAndRoundTrips) {
    const std::vector<std::string> args{"--format", "json", "analyze", data("rp3_rp3.json")};
    const Outcome a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    const Report report = report_from_json(ordered_json::parse(a.out));
    EXPECT_EQ(render_json(report), a.out);
    EXPECT_EQ(report.classes.size(), 3U);
    EXPECT_EQ(report.classes[0].self_linking, "1/2");
    EXPECT_EQ(report.classes[2].self_linking, "0/1");
}

TEST(Cli, BigIntegersSerializeAsStrings) {
    const Report r = analyze_document(R"({"matrix": [["-100000000000000000000"]]})", CommandOptions{});
    const auto j = to_json(r);
    EXPECT_TRUE(j["input"]["matrix"][0][0].is_string());
    EXPECT_EQ(report_from_json(j), r);
}

TEST(Cli, NoCrosscheckWarns) {
    const Outcome r = run({"--no-crosscheck", "--format", "json", "lens", "6", "1"});
    const auto j = ordered_json::parse(r.out);
    EXPECT_TRUE(j["classes"][0]["self_linking"].is_null());
    EXPECT_FALSE(j["warnings"].empty());
}

TEST(Selftest, QuickRunsFixturesOnly) {
    const Outcome r = run({"selftest", "--quick"});
    EXPECT_EQ(r.code, kExitOk) << r.out;
    EXPECT_NE(r.out.find("5/5 criteria passed"), std::string::npos) << r.out;
}

TEST(Selftest, SignBugFailsLensSweep) {
    SelfTestOptions options;
    options.classify = sign_bug_classify;
    const SelfTestSummary summary = run_selftest(options);
    EXPECT_FALSE(summary.all_passed());
    const auto lens = std::find_if(summary.results.begin(), summary.results.end(), [](const auto& c) { return c.id == 3; });
    ASSERT_NE(lens, summary.results.end());
    EXPECT_FALSE(lens->passed) << lens->detail;
}
