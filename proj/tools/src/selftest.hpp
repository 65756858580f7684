#pragma once

// Fixture and property suites run by `bulam selftest` and by the acceptance
// test binary. Each criterion reports pass/fail with a one-line detail.

#include <bulam/borsuk.hpp>

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace bulam::cli {

/// Classification entry point used by every suite. Replaceable so that a
/// deliberately broken classifier can be shown to fail the suites.
using ClassifyFn = std::function<IndexReport(const Classifier&, const CoverClass&, IntVector lift)>;

IndexReport default_classify(const Classifier& classifier, const CoverClass& x, IntVector lift);

struct SelfTestOptions {
    /// Fixtures only: criteria 1, 2, 4, 5 and the cross-check over them.
    bool quick = false;
    std::uint64_t seed = 0x5eed'b0a5'1a3fULL;
    ClassifyFn classify = default_classify;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

struct SelfTestSummary {
    std::vector<CriterionResult> results;
    bool all_passed() const;
};

// Pinned thresholds.
inline constexpr double kFixtureLatencyLimitSeconds = 1e-3;
inline constexpr double kLensSweepLimitSeconds = 10.0;
inline constexpr int kLensSweepMaxP = 200;
inline constexpr int kDiagonalTrials = 500;
inline constexpr int kLiftTrials = 1000;
inline constexpr int kInvarianceTrials = 200;
inline constexpr int kSmithTrials = 500;
inline constexpr int kBruteForceTrials = 200;

SelfTestSummary run_selftest(const SelfTestOptions& options = {});

/// One "[PASS] 3 lens sweep ... (detail)" line per criterion.
void print_summary(const SelfTestSummary& summary, std::ostream& os);

}  // namespace bulam::cli
