#pragma once

// Machine- and human-readable classification reports.

#include <bulam/borsuk.hpp>
#include <bulam/catalog.hpp>
#include <bulam/exactlinalg.hpp>
#include <bulam/surgery.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bulam::cli {

using ordered_json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
std::string tool_version();

struct ClassEntry {
    std::vector<int> bits;
    IntVector lift;
    IntVector bockstein_rep;
    bool beta_vanishes = false;
    int triple_cup = 0;
    std::optional<std::string> self_linking;  // "num/den"
    int index = 0;
    std::vector<int> bu_holds_for;

    static ClassEntry from(const IndexReport& r);
    friend bool operator==(const ClassEntry&, const ClassEntry&) = default;
};

struct LensCheck {
    Integer p;
    Integer q;
    std::optional<int> expected_index;  // empty for odd p
    bool agrees = false;
    friend bool operator==(const LensCheck&, const LensCheck&) = default;
};

struct Report {
    int schema = kSchemaVersion;
    std::string version;
    std::string command;
    std::optional<std::string> label;
    IntMatrix matrix;
    std::optional<std::string> convention;
    std::vector<Integer> invariant_factors;
    std::size_t free_rank = 0;
    std::size_t kernel_dimension = 0;
    bool truncated = false;
    std::vector<ClassEntry> classes;
    std::vector<std::vector<int>> kernel_basis;  // listed only when truncated
    std::optional<LensCheck> lens;
    std::vector<std::string> notes;
    std::vector<std::string> warnings;

    friend bool operator==(const Report&, const Report&) = default;
};

ordered_json to_json(const Report& r);
Report report_from_json(const ordered_json& j);

std::string render_json(const Report& r);
std::string render_text(const Report& r);

struct CatalogResult {
    std::string query;
    std::vector<CatalogEntry> entries;
    std::vector<std::string> notes;
};

ordered_json to_json(const CatalogResult& r);
std::string render_json(const CatalogResult& r);
std::string render_text(const CatalogResult& r);

}  // namespace bulam::cli
