#include <bulam/surgery.hpp>

#include <json.hpp>

#include <algorithm>
#include <numeric>

namespace bulam {

using json = nlohmann::json;

SurgeryPresentation::SurgeryPresentation(std::vector<Integer> framings) : framings_(std::move(framings)) {}

SurgeryPresentation SurgeryPresentation::from_linking_matrix(const IntMatrix& b) {
    if (!b.is_square()) throw InvalidArgument("linking matrix must be square");
    if (!b.is_symmetric()) throw InvalidArgument("linking matrix must be symmetric");
    SurgeryPresentation pres(std::vector<Integer>(b.rows()));
    for (std::size_t i = 0; i < b.rows(); ++i) {
        pres.framings_[i] = b(i, i);
        for (std::size_t j = i + 1; j < b.cols(); ++j) pres.set_linking(i, j, b(i, j));
    }
    return pres;
}

void SurgeryPresentation::check_index(std::size_t i) const {
    if (i >= framings_.size()) throw InvalidArgument("component index " + std::to_string(i) + " out of range");
}

const Integer& SurgeryPresentation::framing(std::size_t i) const {
    check_index(i);
    return framings_[i];
}

void SurgeryPresentation::set_framing(std::size_t i, Integer value) {
    check_index(i);
    framings_[i] = std::move(value);
}

Integer SurgeryPresentation::linking(std::size_t i, std::size_t j) const {
    check_index(i);
    check_index(j);
    if (i == j) return framings_[i];
    const auto it = linkings_.find(std::minmax(i, j));
    return it == linkings_.end() ? Integer(0) : it->second;
}

void SurgeryPresentation::set_linking(std::size_t i, std::size_t j, Integer value) {
    check_index(i);
    check_index(j);
    if (i == j) {
        framings_[i] = std::move(value);
        return;
    }
    const auto key = std::minmax(i, j);
    if (sgn(value) == 0) linkings_.erase(key);
    else linkings_[key] = std::move(value);
}

IntMatrix linking_matrix(const SurgeryPresentation& pres) {
    const std::size_t m = pres.component_count();
    IntMatrix b(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        b(i, i) = pres.framing(i);
        for (std::size_t j = i + 1; j < m; ++j) {
            b(i, j) = pres.linking(i, j);
            b(j, i) = b(i, j);
        }
    }
    return b;
}

std::string_view to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::Syntax: return "syntax";
        case ParseErrorKind::Schema: return "schema";
        case ParseErrorKind::UnknownKey: return "unknown-key";
        case ParseErrorKind::NonInteger: return "non-integer";
        case ParseErrorKind::Shape: return "shape";
        case ParseErrorKind::Asymmetric: return "asymmetric";
        case ParseErrorKind::InvalidParameter: return "invalid-parameter";
    }
    return "unknown";
}

ParseError::ParseError(ParseErrorKind kind, const std::string& what)
    : Error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

namespace {

Integer integer_from(const json& v, const std::string& where) {
    if (v.is_number_integer()) {
        if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
        return Integer(std::to_string(v.get<std::int64_t>()));
    }
    if (v.is_number_float()) {
        // Out-of-range integers also land here; the message says so.
        throw ParseError(ParseErrorKind::NonInteger,
                         where + " is not an integer (write integers beyond 64 bits as decimal strings)");
    }
    if (v.is_string()) {
        const auto& text = v.get_ref<const std::string&>();
        const std::size_t digits = !text.empty() && text[0] == '-' ? 1 : 0;
        const bool decimal = text.size() > digits &&
                             std::all_of(text.begin() + static_cast<std::ptrdiff_t>(digits), text.end(),
                                         [](char c) { return c >= '0' && c <= '9'; });
        if (decimal) return Integer(text, 10);
    }
    throw ParseError(ParseErrorKind::NonInteger, where + " is not an integer");
}

IntMatrix matrix_from(const json& v, const ParseOptions& options) {
    if (!v.is_array()) throw ParseError(ParseErrorKind::Schema, "\"matrix\" must be an array of rows");
    const std::size_t m = v.size();
    IntMatrix b(m, m);
    for (std::size_t i = 0; i < m; ++i) {
        const json& row = v[i];
        if (!row.is_array()) throw ParseError(ParseErrorKind::Schema, "matrix row " + std::to_string(i) + " is not an array");
        if (row.size() != m)
            throw ParseError(ParseErrorKind::Shape, "matrix row " + std::to_string(i) + " has " +
                                                        std::to_string(row.size()) + " entries, expected " +
                                                        std::to_string(m) + " (matrix must be square)");
        for (std::size_t j = 0; j < m; ++j)
            b(i, j) = integer_from(row[j], "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (b(i, j) == b(j, i)) continue;
            if (options.strict)
                throw ParseError(ParseErrorKind::Asymmetric, "matrix[" + std::to_string(i) + "][" + std::to_string(j) +
                                                                 "] != matrix[" + std::to_string(j) + "][" +
                                                                 std::to_string(i) + "]");
            b(j, i) = b(i, j);
        }
    }
    return b;
}

SurgeryPresentation from_document(const json& doc, const ParseOptions& options);

void reject_unknown_keys(const json& doc, std::initializer_list<std::string_view> allowed) {
    for (const auto& item : doc.items()) {
        bool ok = false;
        for (auto a : allowed) ok = ok || item.key() == a;
        if (!ok) throw ParseError(ParseErrorKind::UnknownKey, "unexpected key \"" + item.key() + "\"");
    }
}

SurgeryPresentation preset_from(const json& doc, const ParseOptions& options) {
    const json& preset = doc.at("preset");
    if (!preset.is_string()) throw ParseError(ParseErrorKind::Schema, "\"preset\" must be a string");
    const auto name = preset.get<std::string>();
    if (name == "s3") {
        reject_unknown_keys(doc, {"preset", "label"});
        return s3_presentation();
    }
    if (name == "lens") {
        reject_unknown_keys(doc, {"preset", "label", "p", "q"});
        if (!doc.contains("p") || !doc.contains("q"))
            throw ParseError(ParseErrorKind::Schema, "lens preset requires \"p\" and \"q\"");
        const Integer p = integer_from(doc["p"], "\"p\"");
        const Integer q = integer_from(doc["q"], "\"q\"");
        try {
            return lens_presentation(p, q);
        } catch (const InvalidArgument& e) {
            throw ParseError(ParseErrorKind::InvalidParameter, e.what());
        }
    }
    if (name == "connected_sum") {
        reject_unknown_keys(doc, {"preset", "label", "parts"});
        if (!doc.contains("parts") || !doc["parts"].is_array())
            throw ParseError(ParseErrorKind::Schema, "connected_sum preset requires a \"parts\" array");
        SurgeryPresentation sum;
        std::string label;
        for (const json& part : doc["parts"]) {
            SurgeryPresentation p = from_document(part, options);
            if (!label.empty()) label += " # ";
            label += p.label().value_or("?");
            sum = connected_sum(sum, p);
        }
        if (!label.empty()) sum.set_label(label);
        return sum;
    }
    throw ParseError(ParseErrorKind::Schema, "unknown preset \"" + name + "\" (expected s3, lens or connected_sum)");
}

SurgeryPresentation from_document(const json& doc, const ParseOptions& options) {
    if (!doc.is_object()) throw ParseError(ParseErrorKind::Syntax, "document must be a JSON object");
    const bool has_matrix = doc.contains("matrix");
    const bool has_preset = doc.contains("preset");
    if (has_matrix == has_preset)
        throw ParseError(ParseErrorKind::Schema, "document needs exactly one of \"matrix\" or \"preset\"");

    SurgeryPresentation pres;
    if (has_matrix) {
        reject_unknown_keys(doc, {"matrix", "label"});
        pres = SurgeryPresentation::from_linking_matrix(matrix_from(doc["matrix"], options));
    } else {
        pres = preset_from(doc, options);
    }
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) throw ParseError(ParseErrorKind::Schema, "\"label\" must be a string");
        pres.set_label(doc["label"].get<std::string>());
    }
    return pres;
}

json integer_json(const Integer& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

}  // namespace

SurgeryPresentation parse_presentation(std::string_view text, const ParseOptions& options) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(ParseErrorKind::Syntax, e.what());
    }
    return from_document(doc, options);
}

std::string serialize_presentation(const SurgeryPresentation& pres) {
    const IntMatrix b = linking_matrix(pres);
    json matrix = json::array();
    for (std::size_t i = 0; i < b.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < b.cols(); ++j) row.push_back(integer_json(b(i, j)));
        matrix.push_back(std::move(row));
    }
    nlohmann::ordered_json doc;
    doc["matrix"] = std::move(matrix);
    if (pres.label()) doc["label"] = *pres.label();
    return doc.dump();
}

std::vector<Integer> negative_continued_fraction(const Integer& p, const Integer& q) {
    std::vector<Integer> terms;
    Integer num = p, den = q;
    while (sgn(den) != 0) {
        Integer a;
        mpz_cdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        Integer next = a * den - num;
        terms.push_back(std::move(a));
        num = std::move(den);
        den = std::move(next);
    }
    return terms;
}

SurgeryPresentation lens_presentation(const Integer& p, const Integer& q) {
    if (p < 2) throw InvalidArgument("lens space L(p,q) needs p >= 2");
    if (q <= 0 || q >= p) throw InvalidArgument("lens space L(p,q) needs 0 < q < p");
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
    if (g != 1) throw InvalidArgument("lens space L(p,q) needs gcd(p,q) = 1");

    const std::vector<Integer> terms = negative_continued_fraction(p, q);
    std::vector<Integer> framings;
    framings.reserve(terms.size());
    for (const auto& a : terms) framings.push_back(-a);
    SurgeryPresentation pres(std::move(framings));
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) pres.set_linking(i, i + 1, 1);

    // Tridiagonal determinant by the continuant recurrence D_k = f_k D_{k-1} - D_{k-2}.
    Integer prev = 1, cur = 1;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        Integer next = pres.framing(i) * cur - (i == 0 ? Integer(0) : prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    if (abs(cur) != p) throw InvariantViolation("lens chain determinant " + cur.get_str() + " != ±" + p.get_str());

    pres.set_label("L(" + p.get_str() + "," + q.get_str() + ")");
    std::string cf;
    for (const auto& a : terms) cf += (cf.empty() ? "" : ",") + a.get_str();
    pres.set_convention("chain of unknots framed -a_i from the negative continued fraction " + p.get_str() + "/" +
                        q.get_str() + " = [" + cf +
                        "]; the surgered manifold is L(p,q') for some q' = ±q^(±1) mod p");
    return pres;
}

SurgeryPresentation lens_presentation(long p, long q) { return lens_presentation(Integer(p), Integer(q)); }

SurgeryPresentation s3_presentation() {
    SurgeryPresentation pres;
    pres.set_label("S3");
    return pres;
}

SurgeryPresentation connected_sum(const SurgeryPresentation& a, const SurgeryPresentation& b) {
    const std::size_t na = a.component_count();
    const std::size_t nb = b.component_count();
    std::vector<Integer> framings;
    framings.reserve(na + nb);
    for (std::size_t i = 0; i < na; ++i) framings.push_back(a.framing(i));
    for (std::size_t i = 0; i < nb; ++i) framings.push_back(b.framing(i));
    SurgeryPresentation sum(std::move(framings));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = i + 1; j < na; ++j) sum.set_linking(i, j, a.linking(i, j));
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = i + 1; j < nb; ++j) sum.set_linking(na + i, na + j, b.linking(i, j));
    if (na == 0) return b;
    if (nb == 0) return a;
    if (a.label() && b.label()) sum.set_label(*a.label() + " # " + *b.label());
    return sum;
}

}  // namespace bulam
