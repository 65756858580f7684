#pragma once

// Framed-link surgery presentations, described by their linking data.

#include <bulam/error.hpp>
#include <bulam/exactlinalg.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace bulam {

/// Framings and pairwise linking numbers of an m-component framed link in S³.
/// Linking data is stored once per unordered pair, so it is symmetric by
/// construction.
class SurgeryPresentation {
public:
    SurgeryPresentation() = default;
    explicit SurgeryPresentation(std::vector<Integer> framings);

    /// Throws InvalidArgument if the matrix is not square and symmetric.
    static SurgeryPresentation from_linking_matrix(const IntMatrix& b);

    std::size_t component_count() const noexcept { return framings_.size(); }

    const Integer& framing(std::size_t i) const;
    void set_framing(std::size_t i, Integer value);

    /// lk(L_i, L_j) for i != j; the framing when i == j.
    Integer linking(std::size_t i, std::size_t j) const;
    void set_linking(std::size_t i, std::size_t j, Integer value);

    const std::optional<std::string>& label() const noexcept { return label_; }
    void set_label(std::string label) { label_ = std::move(label); }

    /// Free-text note on how a generated presentation was built.
    const std::optional<std::string>& convention() const noexcept { return convention_; }
    void set_convention(std::string note) { convention_ = std::move(note); }

    friend bool operator==(const SurgeryPresentation&, const SurgeryPresentation&) = default;

private:
    void check_index(std::size_t i) const;

    std::vector<Integer> framings_;
    std::map<std::pair<std::size_t, std::size_t>, Integer> linkings_;  // key (i, j), i < j, nonzero values only
    std::optional<std::string> label_;
    std::optional<std::string> convention_;
};

/// Symmetric m×m matrix: framings on the diagonal, linking numbers elsewhere.
IntMatrix linking_matrix(const SurgeryPresentation& pres);

/// Reasons a presentation document can be rejected.
enum class ParseErrorKind {
    Syntax,          // not well-formed JSON, or not an object
    Schema,          // missing/duplicate/ill-typed fields
    UnknownKey,
    NonInteger,      // matrix or parameter entry is not an integer
    Shape,           // ragged or non-square matrix, component-count mismatch
    Asymmetric,
    InvalidParameter // e.g. lens (p, q) not coprime
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public Error {
public:
    ParseError(ParseErrorKind kind, const std::string& what);
    ParseErrorKind kind() const noexcept { return kind_; }

private:
    ParseErrorKind kind_;
};

struct ParseOptions {
    /// Reject asymmetric matrices. When false, the upper triangle wins.
    bool strict = true;
};

/// Parses a JSON presentation document:
///   {"matrix": [[...], ...]}                       symmetric square integer matrix
///   {"preset": "s3"}
///   {"preset": "lens", "p": P, "q": Q}
///   {"preset": "connected_sum", "parts": [doc, ...]}
/// with an optional "label" string. Any other key is rejected.
SurgeryPresentation parse_presentation(std::string_view text, const ParseOptions& options = {});

/// Canonical {"matrix": ..., "label": ...} document; parse_presentation
/// reads it back to an equal presentation (the convention note is dropped).
std::string serialize_presentation(const SurgeryPresentation& pres);

/// Negative continued fraction p/q = a_1 - 1/(a_2 - 1/(... - 1/a_n)), all a_i >= 2.
std::vector<Integer> negative_continued_fraction(const Integer& p, const Integer& q);

/// Linear chain of unknots framed -a_1, ..., -a_n, consecutive ones linked
/// once. Requires p >= 2, 0 < q < p, gcd(p, q) = 1; throws InvalidArgument
/// otherwise. The determinant of the result is checked to be ±p.
SurgeryPresentation lens_presentation(const Integer& p, const Integer& q);
SurgeryPresentation lens_presentation(long p, long q);

/// Empty link: S³.
SurgeryPresentation s3_presentation();

/// Split union of the two links (block-diagonal linking matrix).
SurgeryPresentation connected_sum(const SurgeryPresentation& a, const SurgeryPresentation& b);

}  // namespace bulam
