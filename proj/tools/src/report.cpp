#include "report.hpp"

#include <sstream>

#ifndef BULAM_VERSION
#define BULAM_VERSION "0.0.0"
#endif

namespace bulam::cli {

std::string tool_version() { return BULAM_VERSION; }

namespace {

// Integers that fit in 64 bits are JSON numbers, larger ones decimal strings.
ordered_json int_json(const Integer& v) {
    if (v.fits_slong_p()) return ordered_json(v.get_si());
    return ordered_json(v.get_str());
}

Integer int_from(const ordered_json& j) {
    if (j.is_string()) return Integer(j.get<std::string>());
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return Integer(std::to_string(j.get<std::int64_t>()));
    throw Error("report: expected an integer, got " + j.dump());
}

ordered_json vector_json(const IntVector& v) {
    ordered_json out = ordered_json::array();
    for (const auto& e : v) out.push_back(int_json(e));
    return out;
}

IntVector vector_from(const ordered_json& j) {
    IntVector out;
    for (const auto& e : j) out.push_back(int_from(e));
    return out;
}

ordered_json matrix_json(const IntMatrix& m) {
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
    return out;
}

IntMatrix matrix_from(const ordered_json& j) {
    std::vector<IntVector> rows;
    for (const auto& r : j) rows.push_back(vector_from(r));
    return IntMatrix::from_rows(rows);
}

std::vector<int> bits_of(const GF2Vector& v) {
    std::vector<int> out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v.get(i) ? 1 : 0;
    return out;
}

template <class T>
ordered_json optional_json(const std::optional<T>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string bits_text(const std::vector<int>& bits) {
    std::string out = "(";
    for (std::size_t i = 0; i < bits.size(); ++i) out += (i ? "," : "") + std::to_string(bits[i]);
    return out + ")";
}

std::string homology_text(const Report& r) {
    AbelianGroup g;
    g.invariant_factors = r.invariant_factors;
    g.free_rank = r.free_rank;
    return g.to_string();
}

}  // namespace

ClassEntry ClassEntry::from(const IndexReport& r) {
    ClassEntry e;
    e.bits = bits_of(r.cover_class.bits());
    e.lift = r.lift;
    e.bockstein_rep = r.bockstein_rep;
    e.beta_vanishes = r.beta_vanishes;
    e.triple_cup = r.triple_cup;
    if (r.self_linking) e.self_linking = r.self_linking->to_string();
    e.index = r.index;
    e.bu_holds_for = r.bu_holds_for();
    return e;
}

ordered_json to_json(const Report& r) {
    ordered_json j;
    j["schema"] = r.schema;
    j["version"] = r.version;
    j["command"] = r.command;

    ordered_json input;
    input["label"] = optional_json(r.label);
    input["matrix"] = matrix_json(r.matrix);
    input["convention"] = optional_json(r.convention);
    j["input"] = std::move(input);

    ordered_json homology;
    homology["invariant_factors"] = vector_json(r.invariant_factors);
    homology["free_rank"] = r.free_rank;
    homology["group"] = homology_text(r);
    j["homology"] = std::move(homology);

    j["k"] = r.kernel_dimension;
    j["truncated"] = r.truncated;

    ordered_json classes = ordered_json::array();
    for (const auto& c : r.classes) {
        ordered_json e;
        e["class"] = c.bits;
        e["lift"] = vector_json(c.lift);
        e["bockstein_rep"] = vector_json(c.bockstein_rep);
        e["beta_vanishes"] = c.beta_vanishes;
        e["triple_cup"] = c.triple_cup;
        e["self_linking"] = optional_json(c.self_linking);
        e["index"] = c.index;
        e["bu_holds_for"] = c.bu_holds_for;
        classes.push_back(std::move(e));
    }
    j["classes"] = std::move(classes);
    j["kernel_basis"] = r.kernel_basis;

    if (r.lens) {
        ordered_json lens;
        lens["p"] = int_json(r.lens->p);
        lens["q"] = int_json(r.lens->q);
        lens["expected_index"] = optional_json(r.lens->expected_index);
        lens["agrees"] = r.lens->agrees;
        j["lens"] = std::move(lens);
    } else {
        j["lens"] = nullptr;
    }
    j["notes"] = r.notes;
    j["warnings"] = r.warnings;
    return j;
}

Report report_from_json(const ordered_json& j) {
    Report r;
    r.schema = j.at("schema").get<int>();
    r.version = j.at("version").get<std::string>();
    r.command = j.at("command").get<std::string>();
    const auto& input = j.at("input");
    if (!input.at("label").is_null()) r.label = input["label"].get<std::string>();
    r.matrix = matrix_from(input.at("matrix"));
    if (!input.at("convention").is_null()) r.convention = input["convention"].get<std::string>();
    r.invariant_factors = vector_from(j.at("homology").at("invariant_factors"));
    r.free_rank = j["homology"].at("free_rank").get<std::size_t>();
    r.kernel_dimension = j.at("k").get<std::size_t>();
    r.truncated = j.at("truncated").get<bool>();
    for (const auto& e : j.at("classes")) {
        ClassEntry c;
        c.bits = e.at("class").get<std::vector<int>>();
        c.lift = vector_from(e.at("lift"));
        c.bockstein_rep = vector_from(e.at("bockstein_rep"));
        c.beta_vanishes = e.at("beta_vanishes").get<bool>();
        c.triple_cup = e.at("triple_cup").get<int>();
        if (!e.at("self_linking").is_null()) c.self_linking = e["self_linking"].get<std::string>();
        c.index = e.at("index").get<int>();
        c.bu_holds_for = e.at("bu_holds_for").get<std::vector<int>>();
        r.classes.push_back(std::move(c));
    }
    r.kernel_basis = j.at("kernel_basis").get<std::vector<std::vector<int>>>();
    if (!j.at("lens").is_null()) {
        const auto& l = j["lens"];
        LensCheck lens{int_from(l.at("p")), int_from(l.at("q")), std::nullopt, l.at("agrees").get<bool>()};
        if (!l.at("expected_index").is_null()) lens.expected_index = l["expected_index"].get<int>();
        r.lens = std::move(lens);
    }
    r.notes = j.at("notes").get<std::vector<std::string>>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
}

std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

std::string render_text(const Report& r) {
    std::ostringstream os;
    os << "input: " << r.label.value_or("(unlabelled)") << "  B = " << to_string(r.matrix) << "\n";
    if (r.convention) os << "convention: " << *r.convention << "\n";
    os << "H_1(N; Z) = " << homology_text(r) << "\n";
    os << "dim H^1(N; Z_2) = " << r.kernel_dimension << ", connected double covers: ";
    if (r.truncated) os << "2^" << r.kernel_dimension << " - 1 (truncated to kernel basis)\n";
    else os << r.classes.size() << "\n";

    for (std::size_t i = 0; i < r.classes.size(); ++i) {
        const ClassEntry& c = r.classes[i];
        os << "\nclass " << (i + 1) << ": x = " << bits_text(c.bits) << "\n";
        os << "  X = " << to_string(c.lift) << "\n";
        os << "  Y = B.X/2 = " << to_string(c.bockstein_rep) << "\n";
        os << "  Bockstein vanishes: " << (c.beta_vanishes ? "yes" : "no") << "\n";
        os << "  XtBX/2 mod 2 = " << c.triple_cup << "\n";
        os << "  self-linking lk(Y,Y) = " << c.self_linking.value_or("(not computed)") << "\n";
        os << "  index = " << c.index << "\n";
        os << "  Borsuk-Ulam property holds for (M, tau, R^n) for n <= " << c.index << "\n";
    }
    if (r.lens) {
        os << "\nlens rule: ";
        if (r.lens->expected_index) os << "expected index " << *r.lens->expected_index;
        else os << "p odd, no connected double cover";
        os << "; computation " << (r.lens->agrees ? "agrees" : "DISAGREES") << "\n";
    }
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    for (const auto& w : r.warnings) os << "warning: " << w << "\n";
    return os.str();
}

ordered_json to_json(const CatalogResult& r) {
    ordered_json j;
    j["schema"] = kSchemaVersion;
    j["version"] = tool_version();
    j["query"] = r.query;
    ordered_json entries = ordered_json::array();
    for (const auto& e : r.entries) {
        ordered_json o;
        o["cover"] = e.cover_manifold;
        o["quotient"] = e.quotient_manifold;
        o["involution"] = e.involution_note;
        o["index"] = e.index;
        o["source"] = e.source;
        o["computable_by_surgery"] = e.computable_by_surgery;
        if (e.surgery_presentation) {
            o["presentation"] = ordered_json::parse(serialize_presentation(*e.surgery_presentation));
        } else {
            o["presentation"] = nullptr;
        }
        o["class"] = e.surgery_class ? ordered_json(bits_of(*e.surgery_class)) : ordered_json(nullptr);
        entries.push_back(std::move(o));
    }
    j["entries"] = std::move(entries);
    j["notes"] = r.notes;
    return j;
}

std::string render_json(const CatalogResult& r) { return to_json(r).dump(2) + "\n"; }

std::string render_text(const CatalogResult& r) {
    std::ostringstream os;
    os << "catalog: " << r.query << " (" << r.entries.size() << " entr" << (r.entries.size() == 1 ? "y" : "ies")
       << ")\n";
    for (const auto& e : r.entries) {
        os << "\n" << e.cover_manifold << " -> " << e.quotient_manifold << "\n";
        os << "  involution: " << e.involution_note << "\n";
        os << "  index: " << e.index << "\n";
        os << "  computable by surgery: " << (e.computable_by_surgery ? "yes" : "no") << "\n";
        if (e.surgery_presentation)
            os << "  presentation: B = " << to_string(linking_matrix(*e.surgery_presentation)) << "\n";
        if (e.surgery_class) os << "  class: " << bits_text(bits_of(*e.surgery_class)) << "\n";
        os << "  source: " << e.source << "\n";
    }
    for (const auto& n : r.notes) os << "note: " << n << "\n";
    return os.str();
}

}  // namespace bulam::cli
