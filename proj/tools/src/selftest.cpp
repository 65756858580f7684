#include "selftest.hpp"

#include "commands.hpp"

#include <bulam/catalog.hpp>
#include <bulam/homology.hpp>
#include <bulam/surgery.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>

namespace bulam::cli {

IndexReport default_classify(const Classifier& classifier, const CoverClass& x, IntVector lift) {
    return classifier.classify(x, std::move(lift));
}

bool SelfTestSummary::all_passed() const {
    return !results.empty() && std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
}

namespace {

using Clock = std::chrono::steady_clock;

struct Verdict {
    bool passed;
    std::string detail;
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

class Suite {
public:
    explicit Suite(const SelfTestOptions& options) : options_(options), rng_(options.seed) {}

    IndexReport classify(const Classifier& c, const CoverClass& x) { return classify(c, x, lift_class(x)); }

    IndexReport classify(const Classifier& c, const CoverClass& x, IntVector lift) {
        IndexReport r = options_.classify(c, x, std::move(lift));
        record(c.matrix(), r);
        return r;
    }

    // Every cover class of b, classified through the configured entry point.
    std::vector<IndexReport> sweep(const IntMatrix& b) {
        const CoverClassList classes = cover_classes(b);
        std::vector<IndexReport> out;
        if (classes.classes.empty()) return out;
        const Classifier classifier(b);
        for (const auto& x : classes.classes) out.push_back(classify(classifier, x));
        return out;
    }

    // Linking-form identity on every classification seen so far.
    void record(const IntMatrix& b, const IndexReport& r) {
        ++checked_;
        std::string problem;
        const QmodZ half(Rational(1, 2));
        if (!r.self_linking) {
            problem = "self-linking missing";
        } else {
            const QmodZ expected(Rational(quadratic_value(b, r.lift), 4));
            if (*r.self_linking != expected) problem = "self-linking != XtBX/4 mod 1";
            else if (!r.self_linking->is_zero() && *r.self_linking != half) problem = "self-linking not in {0,1/2}";
            else if (r.self_linking->is_zero() == (r.triple_cup == 1)) problem = "self-linking disagrees with triple cup";
        }
        if (problem.empty()) return;
        if (mismatches_++ == 0) first_mismatch_ = problem + " for B=" + to_string(b) + " x=" + r.cover_class.bits().to_string();
    }

    Verdict crosscheck_verdict() const {
        std::ostringstream os;
        os << checked_ << " classifications, " << mismatches_ << " mismatches";
        if (mismatches_) os << " (first: " << first_mismatch_ << ")";
        return {checked_ > 0 && mismatches_ == 0, os.str()};
    }

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    IntMatrix random_symmetric(std::size_t n, long bound) {
        IntMatrix b(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) {
                b(i, j) = uniform(-bound, bound);
                b(j, i) = b(i, j);
            }
        return b;
    }

    // Product of random elementary integer matrices.
    IntMatrix random_unimodular(std::size_t n) {
        IntMatrix p = IntMatrix::identity(n);
        if (n == 0) return p;
        const std::size_t steps = 3 * n;
        for (std::size_t s = 0; s < steps; ++s) {
            const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
            const auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(n) - 1));
            switch (uniform(0, 2)) {
                case 0:
                    if (i != j) {
                        const Integer c = uniform(-2, 2);
                        for (std::size_t k = 0; k < n; ++k) p(i, k) += c * p(j, k);
                    }
                    break;
                case 1: p.swap_rows(i, j); break;
                default:
                    for (std::size_t k = 0; k < n; ++k) p(i, k) = -p(i, k);
            }
        }
        return p;
    }

    bool quick() const { return options_.quick; }

private:
    const SelfTestOptions& options_;
    std::mt19937_64 rng_;
    std::size_t checked_ = 0;
    std::size_t mismatches_ = 0;
    std::string first_mismatch_;
};

template <class Body>
CriterionResult run_criterion(int id, std::string name, Body&& body) {
    CriterionResult result{id, std::move(name), false, {}, 0.0};
    const auto start = Clock::now();
    try {
        const Verdict v = body();
        result.passed = v.passed;
        result.detail = v.detail;
    } catch (const std::exception& e) {
        result.passed = false;
        result.detail = std::string("exception: ") + e.what();
    }
    result.seconds = seconds_since(start);
    return result;
}

std::string index_list(const std::vector<IndexReport>& reports) {
    std::string out = "[";
    for (std::size_t i = 0; i < reports.size(); ++i)
        out += (i ? "," : "") + reports[i].cover_class.bits().to_string() + "->" + std::to_string(reports[i].index);
    return out + "]";
}

Verdict ordinary_borsuk_ulam(Suite& suite) {
    const IntMatrix b{{-2}};
    const auto reports = suite.sweep(b);
    const bool verdict = reports.size() == 1 && reports.front().index == 3;

    // End to end through the analyze command, best of five runs.
    double best = 1e9;
    bool analyze_ok = true;
    for (int run = 0; run < 5; ++run) {
        const auto start = Clock::now();
        const Report r = analyze_document(R"({"matrix": [[-2]]})", CommandOptions{});
        best = std::min(best, seconds_since(start));
        analyze_ok = analyze_ok && r.classes.size() == 1 && r.classes.front().index == 3;
    }
    std::ostringstream os;
    os << "classes " << index_list(reports) << ", analyze " << (analyze_ok ? "ok" : "WRONG") << " in "
       << std::fixed << std::setprecision(1) << best * 1e6 << " us (limit " << kFixtureLatencyLimitSeconds * 1e6
       << " us)";
    return {verdict && analyze_ok && best < kFixtureLatencyLimitSeconds, os.str()};
}

Verdict stolz(Suite& suite) {
    const IntMatrix b{{-4}};
    const auto reports = suite.sweep(b);
    if (reports.size() != 1) return {false, "expected one class, got " + std::to_string(reports.size())};
    const IndexReport& r = reports.front();
    const bool witness = r.bockstein_rep == make_int_vector({-2});
    // -2 is not a multiple of 4.
    const bool outside_image = witness && !mpz_divisible_ui_p(r.bockstein_rep[0].get_mpz_t(), 4);
    const bool ok = r.index == 2 && witness && outside_image && !r.beta_vanishes && r.triple_cup == 0;
    return {ok, "index " + std::to_string(r.index) + ", Y = " + to_string(r.bockstein_rep) + ", beta vanishes " +
                    (r.beta_vanishes ? "yes" : "no") + ", triple cup " + std::to_string(r.triple_cup)};
}

Verdict lens_sweep(Suite& suite) {
    const auto start = Clock::now();
    std::size_t pairs = 0, mismatches = 0;
    std::string first;
    for (long p = 2; p <= kLensSweepMaxP; ++p) {
        for (long q = 1; q < p; ++q) {
            if (std::gcd(p, q) != 1) continue;
            ++pairs;
            const IntMatrix b = linking_matrix(lens_presentation(p, q));
            const auto reports = suite.sweep(b);
            bool ok;
            if (p % 2 == 1) {
                ok = reports.empty();
            } else {
                const int expected = p % 4 == 2 ? 3 : 2;
                ok = reports.size() == 1 && reports.front().index == expected;
            }
            if (!ok && mismatches++ == 0) first = "L(" + std::to_string(p) + "," + std::to_string(q) + ") " + index_list(reports);
        }
    }
    const double elapsed = seconds_since(start);
    std::ostringstream os;
    os << pairs << " (p,q) pairs, " << mismatches << " mismatches";
    if (mismatches) os << " (first: " << first << ")";
    os << ", " << std::fixed << std::setprecision(2) << elapsed << " s (limit " << kLensSweepLimitSeconds << " s)";
    return {mismatches == 0 && elapsed < kLensSweepLimitSeconds, os.str()};
}

Verdict s1xs2_quotients(Suite& suite) {
    const auto s1s2 = suite.sweep(IntMatrix{{0}});
    const auto rp3rp3 = suite.sweep(IntMatrix::diagonal({2, 2}));
    const bool first = s1s2.size() == 1 && s1s2.front().index == 1;
    bool second = rp3rp3.size() == 3;
    if (second) {
        second = rp3rp3[0].cover_class.bits() == GF2Vector{1, 0} && rp3rp3[0].index == 3 &&
                 rp3rp3[1].cover_class.bits() == GF2Vector{0, 1} && rp3rp3[1].index == 3 &&
                 rp3rp3[2].cover_class.bits() == GF2Vector{1, 1} && rp3rp3[2].index == 2;
    }
    return {first && second, "[[0]] " + index_list(s1s2) + ", diag(2,2) " + index_list(rp3rp3)};
}

Verdict catalog_consistency(Suite& suite) {
    std::size_t computed = 0, mismatches = 0;
    std::string first;
    auto check = [&](const CatalogEntry& e) {
        if (!e.computable_by_surgery) return;
        ++computed;
        const IntMatrix b = linking_matrix(*e.surgery_presentation);
        const Classifier classifier(b);
        const IndexReport r = suite.classify(classifier, CoverClass(b, *e.surgery_class));
        if (r.index != e.index && mismatches++ == 0)
            first = e.cover_manifold + "->" + e.quotient_manifold + " computed " + std::to_string(r.index);
    };
    for (const auto& e : catalog_entries()) check(e);
    for (long p = 3; p <= 64; ++p)
        for (long q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1)
                for (const auto& e : lookup("L(" + std::to_string(p) + "," + std::to_string(q) + ")")) check(e);

    bool nonorientable_ok = true;
    auto find = [](const std::string& cover, const std::string& quotient) -> const CatalogEntry* {
        for (const auto& e : catalog_entries())
            if (e.cover_manifold == cover && e.quotient_manifold == quotient) return &e;
        return nullptr;
    };
    for (auto [cover, quotient, index] : {std::tuple{"K3", "S1xRP2", 3}, std::tuple{"S1xS2", "S1xRP2", 2},
                                          std::tuple{"S1xS2", "K3", 1}}) {
        const CatalogEntry* e = find(cover, quotient);
        nonorientable_ok = nonorientable_ok && e && e->index == index && !e->computable_by_surgery &&
                           !e->source.empty();
    }
    const auto s1s2 = lookup("S1xS2");
    std::vector<std::pair<std::string, int>> got;
    for (const auto& e : s1s2)
        if (e.cover_manifold == "S1xS2") got.emplace_back(e.quotient_manifold, e.index);
    const std::vector<std::pair<std::string, int>> want{{"S1xS2", 1}, {"K3", 1}, {"S1xRP2", 2}, {"RP3#RP3", 2}};
    const bool s1s2_ok = got == want;

    std::ostringstream os;
    os << computed << " computable entries reproduced with " << mismatches << " mismatches";
    if (mismatches) os << " (first: " << first << ")";
    os << "; non-orientable entries " << (nonorientable_ok ? "present" : "MISSING") << "; S1xS2 quotients "
       << (s1s2_ok ? "ok" : "WRONG");
    return {computed > 0 && mismatches == 0 && nonorientable_ok && s1s2_ok, os.str()};
}

Verdict diagonal_oracle(Suite& suite) {
    std::size_t classes = 0, mismatches = 0;
    std::string first;
    for (int t = 0; t < kDiagonalTrials; ++t) {
        const auto n = static_cast<std::size_t>(suite.uniform(1, 8));
        IntVector diag(n);
        for (auto& d : diag) d = suite.uniform(-10, 10);
        const IntMatrix b = IntMatrix::diagonal(diag);
        for (const auto& r : suite.sweep(b)) {
            ++classes;
            const int expected = diagonal_index(diag, r.cover_class.bits());
            if (expected != r.index && mismatches++ == 0)
                first = "diag" + to_string(diag) + " x=" + r.cover_class.bits().to_string() + " got " +
                        std::to_string(r.index) + " want " + std::to_string(expected);
        }
    }
    std::ostringstream os;
    os << kDiagonalTrials << " matrices, " << classes << " classes, " << mismatches << " mismatches";
    if (mismatches) os << " (first: " << first << ")";
    return {mismatches == 0 && classes > 0, os.str()};
}

Verdict lift_independence(Suite& suite) {
    int trials = 0;
    std::size_t mismatches = 0;
    std::string first;
    while (trials < kLiftTrials) {
        const auto n = static_cast<std::size_t>(suite.uniform(1, 6));
        const IntMatrix b = suite.random_symmetric(n, 10);
        const CoverClassList list = cover_classes(b);
        if (list.classes.empty()) continue;
        ++trials;
        const auto pick = static_cast<std::size_t>(suite.uniform(0, static_cast<long>(list.classes.size()) - 1));
        const CoverClass& x = list.classes[pick];
        const Classifier classifier(b);
        const IndexReport base = suite.classify(classifier, x);
        IntVector shifted = lift_class(x);
        for (auto& e : shifted) e += 2 * suite.uniform(-5, 5);
        const IndexReport moved = suite.classify(classifier, x, shifted);
        if ((base.index != moved.index || base.beta_vanishes != moved.beta_vanishes ||
             base.triple_cup != moved.triple_cup) &&
            mismatches++ == 0)
            first = "B=" + to_string(b) + " X'=" + to_string(shifted);
    }
    std::ostringstream os;
    os << trials << " (B, class, Z) triples, " << mismatches << " mismatches";
    if (mismatches) os << " (first: " << first << ")";
    return {mismatches == 0, os.str()};
}

std::vector<int> index_multiset(Suite& suite, const IntMatrix& b) {
    std::vector<int> out;
    for (const auto& r : suite.sweep(b)) out.push_back(r.index);
    std::sort(out.begin(), out.end());
    return out;
}

Verdict presentation_invariance(Suite& suite) {
    int trials = 0;
    std::size_t mismatches = 0, classes = 0;
    std::string first;
    while (trials < kInvarianceTrials) {
        const auto n = static_cast<std::size_t>(suite.uniform(1, 5));
        const IntMatrix b = suite.random_symmetric(n, 6);
        if (cover_classes(b).classes.empty()) continue;
        ++trials;

        IntMatrix stabilized = b;
        const long blowups = suite.uniform(0, 2);
        for (long s = 0; s < blowups; ++s)
            stabilized = block_sum(stabilized, IntMatrix{{suite.uniform(0, 1) ? 1L : -1L}});
        const IntMatrix p = suite.random_unimodular(stabilized.rows());
        const IntMatrix moved = congruence_transform(stabilized, p);

        const auto before = index_multiset(suite, b);
        const auto after = index_multiset(suite, moved);
        classes += before.size();
        if (before != after && mismatches++ == 0) first = "B=" + to_string(b) + " B'=" + to_string(moved);
    }
    std::ostringstream os;
    os << trials << " presentations, " << classes << " classes, " << mismatches << " mismatches";
    if (mismatches) os << " (first: " << first << ")";
    return {mismatches == 0, os.str()};
}

bool divides(const Integer& d, const Integer& n) { return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0; }

// Smith identities on random matrices, and integral solvability against an
// exhaustive search.
Verdict exact_linear_algebra(Suite& suite) {
    std::size_t smith_failures = 0;
    std::string first;
    for (int t = 0; t < kSmithTrials; ++t) {
        const auto rows = static_cast<std::size_t>(suite.uniform(1, 20));
        const auto cols = static_cast<std::size_t>(suite.uniform(1, 20));
        IntMatrix b(rows, cols);
        if (t % 5 == 4) {
            // Rank <= 3: product of thin factors with entries in [-5, 5].
            const auto inner = static_cast<std::size_t>(suite.uniform(1, 3));
            IntMatrix l(rows, inner), r(inner, cols);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t k = 0; k < inner; ++k) l(i, k) = suite.uniform(-5, 5);
            for (std::size_t k = 0; k < inner; ++k)
                for (std::size_t j = 0; j < cols; ++j) r(k, j) = suite.uniform(-5, 5);
            b = l * r;
        } else {
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) b(i, j) = suite.uniform(-100, 100);
        }
        const SmithDecomposition snf = smith_normal_form(b);
        bool ok = snf.u * b * snf.v == snf.s && abs(determinant(snf.u)) == 1 && abs(determinant(snf.v)) == 1;
        for (std::size_t i = 0; ok && i < rows; ++i)
            for (std::size_t j = 0; ok && j < cols; ++j)
                if (i != j && sgn(snf.s(i, j)) != 0) ok = false;
        const IntVector d = snf.diagonal();
        for (std::size_t i = 0; ok && i < d.size(); ++i) {
            if (sgn(d[i]) < 0) ok = false;
            if (i + 1 < d.size() && !divides(d[i], d[i + 1])) ok = false;
        }
        if (!ok && smith_failures++ == 0) first = "B=" + to_string(b);
    }

    // Exhaustive search is complete here: with dimensions <= 2 and entries
    // bounded by 5, Cramer's rule (nonsingular) and Bezout (rank <= 1) give a
    // solution with coordinates bounded by 50 whenever one exists.
    constexpr long kEntry = 5, kSearch = 50;
    std::size_t solve_failures = 0, positives = 0;
    for (int t = 0; t < kBruteForceTrials; ++t) {
        const auto rows = static_cast<std::size_t>(suite.uniform(1, 2));
        const auto cols = static_cast<std::size_t>(suite.uniform(1, 2));
        std::vector<std::vector<long>> a(rows, std::vector<long>(cols));
        for (auto& row : a)
            for (auto& e : row) e = suite.uniform(-kEntry, kEntry);
        std::vector<long> y(rows);
        if (t % 2 == 0) {
            for (auto& e : y) e = suite.uniform(-kEntry, kEntry);
        } else {
            std::vector<long> z0(cols);
            for (auto& e : z0) e = suite.uniform(-kEntry, kEntry);
            for (std::size_t i = 0; i < rows; ++i) {
                y[i] = 0;
                for (std::size_t j = 0; j < cols; ++j) y[i] += a[i][j] * z0[j];
            }
        }

        bool found = false;
        std::vector<long> z(cols, -kSearch);
        for (;;) {
            bool hit = true;
            for (std::size_t i = 0; hit && i < rows; ++i) {
                long acc = 0;
                for (std::size_t j = 0; j < cols; ++j) acc += a[i][j] * z[j];
                hit = acc == y[i];
            }
            if (hit) {
                found = true;
                break;
            }
            std::size_t k = 0;
            while (k < cols && z[k] == kSearch) z[k++] = -kSearch;
            if (k == cols) break;
            ++z[k];
        }

        IntMatrix b(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) b(i, j) = a[i][j];
        IntVector yv(rows);
        for (std::size_t i = 0; i < rows; ++i) yv[i] = y[i];
        const bool member = is_in_integral_image(b, yv);
        const auto witness = solve_integral(b, yv);
        const bool witness_ok = witness ? (b * *witness == yv) : true;
        positives += found ? 1 : 0;
        if ((member != found || witness.has_value() != found || !witness_ok) && solve_failures++ == 0 && first.empty())
            first = "solve B=" + to_string(b) + " y=" + to_string(yv);
    }

    std::ostringstream os;
    os << kSmithTrials << " Smith decompositions (" << smith_failures << " failures); " << kBruteForceTrials
       << " solvability checks, " << positives << " solvable (" << solve_failures << " disagreements)";
    if (!first.empty()) os << " (first: " << first << ")";
    return {smith_failures == 0 && solve_failures == 0, os.str()};
}

}  // namespace

SelfTestSummary run_selftest(const SelfTestOptions& options) {
    Suite suite(options);
    SelfTestSummary summary;
    auto add = [&](int id, const char* name, auto body) {
        summary.results.push_back(run_criterion(id, name, [&] { return body(suite); }));
    };

    add(1, "ordinary Borsuk-Ulam: [[-2]] has one class of index 3", ordinary_borsuk_ulam);
    add(2, "Stolz: [[-4]] has index 2 with Y=(-2) outside 4Z", stolz);
    if (!options.quick) add(3, "lens sweep: index 3 iff p = 2 mod 4, no classes for odd p", lens_sweep);
    add(4, "S1xS2 quotients: [[0]] -> 1, diag(2,2) class (1,1) -> 2", s1xs2_quotients);
    add(5, "catalog self-consistency", catalog_consistency);
    if (!options.quick) {
        add(6, "diagonal closed form agrees with the classifier", diagonal_oracle);
        add(7, "lift independence under X -> X + 2Z", lift_independence);
    }
    add(8, "linking-form cross-check on every classification above",
        [](Suite& s) { return s.crosscheck_verdict(); });
    if (!options.quick) {
        add(9, "index multiset invariant under congruence and stabilization", presentation_invariance);
        add(10, "exact linear algebra: Smith identities and brute-force solvability", exact_linear_algebra);
    }
    return summary;
}

void print_summary(const SelfTestSummary& summary, std::ostream& os) {
    std::size_t passed = 0;
    for (const auto& r : summary.results) {
        passed += r.passed ? 1 : 0;
        os << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name << " -- " << r.detail
           << " (" << std::fixed << std::setprecision(3) << r.seconds << " s)\n";
    }
    os << passed << "/" << summary.results.size() << " criteria passed\n";
}

}  // namespace bulam::cli
