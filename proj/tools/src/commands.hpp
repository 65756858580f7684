#pragma once

#include "report.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bulam::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,  // selftest failures, usage errors
    kExitInput = 2,
    kExitCap = 3,
    kExitInternal = 4,
};

/// Input file unreadable or otherwise unusable.
class InputError : public Error {
public:
    using Error::Error;
};

/// More than `cap` cover classes and truncation was not allowed.
class CapExceeded : public Error {
public:
    using Error::Error;
};

struct CommandOptions {
    std::size_t cap = kDefaultClassCap;
    bool allow_truncate = false;
    bool crosscheck = true;
};

Report analyze_presentation(const SurgeryPresentation& pres, const CommandOptions& options,
                            std::string command = "analyze");
Report analyze_document(std::string_view text, const CommandOptions& options);
Report analyze_file(const std::filesystem::path& path, const CommandOptions& options);

/// Throws InvalidArgument for an invalid (p, q).
Report lens_report(const Integer& p, const Integer& q, const CommandOptions& options);

CatalogResult catalog_query(std::string_view name);

/// Full command line (without the program name). Writes the rendered
/// result to `out`, diagnostics to `err`, and returns the exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bulam::cli
