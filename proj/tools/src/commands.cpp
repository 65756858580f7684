#include "commands.hpp"

#include "selftest.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace bulam::cli {

Report analyze_presentation(const SurgeryPresentation& pres, const CommandOptions& options, std::string command) {
    const IntMatrix b = linking_matrix(pres);

    Report r;
    r.version = tool_version();
    r.command = std::move(command);
    r.label = pres.label();
    r.matrix = b;
    r.convention = pres.convention();

    const AbelianGroup h1 = first_homology(b);
    r.invariant_factors = h1.invariant_factors;
    r.free_rank = h1.free_rank;

    const ClassificationSweep sweep = classify_all(b, options.cap, ClassifyOptions{.crosscheck = options.crosscheck});
    if (sweep.truncated && !options.allow_truncate)
        throw CapExceeded(std::to_string(sweep.kernel_dimension) + "-dimensional H^1(N; Z_2) has more than " +
                          std::to_string(options.cap) + " classes; raise --cap or pass --allow-truncate");

    r.kernel_dimension = sweep.kernel_dimension;
    r.truncated = sweep.truncated;
    for (const auto& rep : sweep.reports) r.classes.push_back(ClassEntry::from(rep));
    if (sweep.truncated) {
        for (const auto& v : sweep.kernel_basis) {
            std::vector<int> bits(v.size());
            for (std::size_t i = 0; i < v.size(); ++i) bits[i] = v.get(i) ? 1 : 0;
            r.kernel_basis.push_back(std::move(bits));
        }
    }
    r.notes = sweep.notes;
    if (!options.crosscheck) r.warnings.emplace_back("linking-form cross-check disabled (--no-crosscheck)");
    return r;
}

Report analyze_document(std::string_view text, const CommandOptions& options) {
    return analyze_presentation(parse_presentation(text), options);
}

Report analyze_file(const std::filesystem::path& path, const CommandOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read input file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return analyze_document(buf.str(), options);
}

Report lens_report(const Integer& p, const Integer& q, const CommandOptions& options) {
    Report r = analyze_presentation(lens_presentation(p, q), options, "lens");
    LensCheck check{p, q, lens_rule_index(p), false};
    if (check.expected_index) {
        check.agrees = r.classes.size() == 1 && r.classes.front().index == *check.expected_index;
    } else {
        check.agrees = r.classes.empty();
    }
    r.lens = std::move(check);
    return r;
}

CatalogResult catalog_query(std::string_view name) {
    CatalogResult r;
    r.query = std::string(name);
    r.entries = lookup(name);
    if (r.entries.empty()) {
        r.notes.push_back("no catalog entry for \"" + r.query +
                          "\"; known names: S3, RP3, S1xS2, K3, S1xRP2, RP3#RP3, L(p,q)");
    }
    return r;
}

namespace {

Integer parse_integer_arg(const std::string& text, const char* what) {
    Integer v;
    if (text.empty() || v.set_str(text, 10) != 0)
        throw InvalidArgument(std::string(what) + " must be an integer, got \"" + text + "\"");
    return v;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Z_2-index of free involutions on 3-manifolds from surgery presentations", "bulam"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    std::string format = "text";
    CommandOptions options;
    bool no_crosscheck = false;
    bool quick = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--cap", options.cap, "Largest number of cover classes to enumerate")->check(CLI::NonNegativeNumber);
    app.add_flag("--allow-truncate", options.allow_truncate, "Report kernel basis classes when over the cap");
    app.add_flag("--no-crosscheck", no_crosscheck, "Skip the linking-form verification");

    std::string input_path;
    auto* analyze = app.add_subcommand("analyze", "Classify every connected double cover of a presented manifold");
    analyze->add_option("file", input_path, "JSON presentation document")->required();

    std::string p_text, q_text;
    auto* lens = app.add_subcommand("lens", "Classify the double cover of the lens space L(p,q)");
    lens->add_option("p", p_text, "p >= 2")->required();
    lens->add_option("q", q_text, "0 < q < p, coprime to p")->required();

    std::string name;
    auto* catalog = app.add_subcommand("catalog", "Look up known classifications");
    catalog->add_option("name", name, "Manifold name, e.g. S1xS2 or L(6,1)")->required();

    auto* selftest = app.add_subcommand("selftest", "Run the fixture and property suites");
    selftest->add_flag("--quick", quick, "Fixtures only");

    for (auto* sub : {analyze, lens, catalog, selftest}) sub->fallthrough();

    // CLI11 wants argv order reversed when given a vector.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << tool_version() << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    options.crosscheck = !no_crosscheck;
    const bool json = format == "json";

    try {
        if (analyze->parsed() || lens->parsed()) {
            const Report r = analyze->parsed()
                                 ? analyze_file(input_path, options)
                                 : lens_report(parse_integer_arg(p_text, "p"), parse_integer_arg(q_text, "q"), options);
            out << (json ? render_json(r) : render_text(r));
            return kExitOk;
        }
        if (catalog->parsed()) {
            const CatalogResult r = catalog_query(name);
            out << (json ? render_json(r) : render_text(r));
            return kExitOk;
        }
        if (selftest->parsed()) {
            SelfTestOptions st;
            st.quick = quick;
            const SelfTestSummary summary = run_selftest(st);
            print_summary(summary, out);
            return summary.all_passed() ? kExitOk : kExitFailure;
        }
    } catch (const ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const InvalidArgument& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << "\n";
        return kExitCap;
    } catch (const InvariantViolation& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitFailure;
}

}  // namespace bulam::cli
