#include <bulam/catalog.hpp>

#include <cctype>
#include <regex>

namespace bulam {
namespace {

SurgeryPresentation labelled(SurgeryPresentation pres, std::string label) {
    pres.set_label(std::move(label));
    return pres;
}

std::vector<CatalogEntry> build_entries() {
    std::vector<CatalogEntry> e;

    e.push_back({
        .cover_manifold = "S3",
        .quotient_manifold = "RP3",
        .involution_note = "antipodal map; quotient RP3 = L(2,1)",
        .index = 3,
        .source = "classical Borsuk-Ulam theorem; H*(RP3; Z_2) = Z_2[x]/(x^4) so x^3 != 0",
        .computable_by_surgery = true,
        .surgery_presentation = labelled(SurgeryPresentation::from_linking_matrix(IntMatrix{{-2}}), "RP3"),
        .surgery_class = GF2Vector{1},
    });
    e.push_back({
        .cover_manifold = "RP3",
        .quotient_manifold = "L(4,1)",
        .involution_note = "induced by multiplication by i on S3",
        .index = 2,
        .source = "S. Stolz, The level of real projective spaces, Comment. Math. Helv. 64 (1989) (level = index + 1)",
        .computable_by_surgery = true,
        .surgery_presentation = labelled(SurgeryPresentation::from_linking_matrix(IntMatrix{{-4}}), "L(4,1)"),
        .surgery_class = GF2Vector{1},
    });

    // Free involutions of S1xS2: the quotient is one of four manifolds
    // (Y. Tao, 1962).
    e.push_back({
        .cover_manifold = "S1xS2",
        .quotient_manifold = "S1xS2",
        .involution_note = "double cover along the S1 factor",
        .index = 1,
        .source = "Y. Tao, On fixed point free involutions of S1xS2, Osaka Math. J. 14 (1962); "
                  "Bockstein H^1(Z_2) -> H^2(Z) = Z vanishes",
        .computable_by_surgery = true,
        .surgery_presentation = labelled(SurgeryPresentation::from_linking_matrix(IntMatrix{{0}}), "S1xS2"),
        .surgery_class = GF2Vector{1},
    });
    e.push_back({
        .cover_manifold = "S1xS2",
        .quotient_manifold = "K3",
        .involution_note = "quotient is the 3-dimensional Klein bottle [0,1]xS2/(1,x)~(0,-x)",
        .index = 1,
        .source = "Y. Tao (1962) classification; Mayer-Vietoris gives H^2(K3; Z) = 0, so the Bockstein vanishes",
        .computable_by_surgery = false,
        .surgery_presentation = std::nullopt,
        .surgery_class = std::nullopt,
    });
    e.push_back({
        .cover_manifold = "S1xS2",
        .quotient_manifold = "S1xRP2",
        .involution_note = "id x antipodal; classifying class 1 x v_1",
        .index = 2,
        .source = "Y. Tao (1962) classification; Kunneth cup products: x^2 = 1 x v_1^2 != 0, x^3 = 1 x v_1^3 = 0",
        .computable_by_surgery = false,
        .surgery_presentation = std::nullopt,
        .surgery_class = std::nullopt,
    });
    e.push_back({
        .cover_manifold = "S1xS2",
        .quotient_manifold = "RP3#RP3",
        .involution_note = "classifying class (1,1) of RP3#RP3",
        .index = 2,
        .source = "Y. Tao (1962) classification; linking matrix diag(2,2): XtBX/2 = 2 even, (1,1) not in im B",
        .computable_by_surgery = true,
        .surgery_presentation = labelled(SurgeryPresentation::from_linking_matrix(IntMatrix::diagonal({2, 2})),
                                         "RP3#RP3"),
        .surgery_class = GF2Vector{1, 1},
    });
    e.push_back({
        .cover_manifold = "K3",
        .quotient_manifold = "S1xRP2",
        .involution_note = "[t,x] -> [t,-x]; classifying class u_1 x 1 + 1 x v_1",
        .index = 3,
        .source = "Kunneth cup products on S1xRP2: x^3 = u_1 x v_1^2 != 0",
        .computable_by_surgery = false,
        .surgery_presentation = std::nullopt,
        .surgery_class = std::nullopt,
    });
    return e;
}

std::string lens_name(const Integer& p, const Integer& q) { return "L(" + p.get_str() + "," + q.get_str() + ")"; }

// Entry for the double cover L(p/2, q) -> L(p, q), p even and >= 4.
CatalogEntry lens_entry(const Integer& p, const Integer& q) {
    const Integer half = p / 2;
    Integer cover_q;
    mpz_mod(cover_q.get_mpz_t(), q.get_mpz_t(), half.get_mpz_t());
    CatalogEntry entry{
        .cover_manifold = half == 2 ? std::string("RP3") : lens_name(half, cover_q),
        .quotient_manifold = lens_name(p, q),
        .involution_note = "deck transformation of the unique connected double cover",
        .index = *lens_rule_index(p),
        .source = "lens family rule: index 3 iff p = 2 mod 4 (linking value pq/4 mod 1), otherwise 2",
        .computable_by_surgery = true,
        .surgery_presentation = lens_presentation(p, q),
        .surgery_class = std::nullopt,
    };
    GF2Vector x = gf2_kernel_basis(GF2Matrix::reduce(linking_matrix(*entry.surgery_presentation))).front();
    entry.surgery_class = std::move(x);
    return entry;
}

struct LensName {
    Integer p;
    Integer q;
};

std::optional<LensName> parse_lens_name(const std::string& normalized) {
    static const std::regex pattern(R"(l\((\d+),(-?\d+)\))");
    std::smatch m;
    if (!std::regex_match(normalized, m, pattern)) return std::nullopt;
    LensName out{Integer(m[1].str()), Integer(m[2].str())};
    if (out.p < 2) return std::nullopt;
    mpz_mod(out.q.get_mpz_t(), out.q.get_mpz_t(), out.p.get_mpz_t());
    Integer g;
    mpz_gcd(g.get_mpz_t(), out.p.get_mpz_t(), out.q.get_mpz_t());
    if (g != 1) return std::nullopt;
    return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
    static const std::vector<CatalogEntry> entries = build_entries();
    return entries;
}

std::optional<int> lens_rule_index(const Integer& p) {
    if (mpz_odd_p(p.get_mpz_t())) return std::nullopt;
    return mpz_fdiv_ui(p.get_mpz_t(), 4) == 2 ? 3 : 2;
}

std::string normalize_manifold_name(std::string_view name) {
    std::string out;
    for (char c : name) {
        const auto uc = static_cast<unsigned char>(c);
        if (std::isspace(uc) || c == '^' || c == '_') continue;
        out += static_cast<char>(std::tolower(uc));
    }
    // U+00D7 multiplication sign.
    for (std::size_t pos; (pos = out.find("\xc3\x97")) != std::string::npos;) out.replace(pos, 2, "x");
    if (out == "l(2,1)") out = "rp3";
    if (out == "s1xs2" || out == "s2xs1") out = "s1xs2";
    if (out == "rp2xs1") out = "s1xrp2";
    return out;
}

std::vector<CatalogEntry> lookup(std::string_view name) {
    std::string key = normalize_manifold_name(name);
    auto lens = parse_lens_name(key);
    if (lens && lens->p == 2) {
        key = "rp3";
        lens.reset();
    }

    std::vector<CatalogEntry> out;
    bool static_quotient = false;
    for (const auto& entry : catalog_entries()) {
        const bool as_cover = normalize_manifold_name(entry.cover_manifold) == key;
        const bool as_quotient = normalize_manifold_name(entry.quotient_manifold) == key;
        if (as_cover || as_quotient) out.push_back(entry);
        static_quotient = static_quotient || as_quotient;
    }
    if (!lens) return out;

    // As the quotient of its unique connected double cover.
    if (mpz_even_p(lens->p.get_mpz_t()) && !static_quotient) out.push_back(lens_entry(lens->p, lens->q));
    // As the cover of L(2p, q'), q' = q mod p and odd.
    Integer q2 = lens->q;
    if (mpz_even_p(q2.get_mpz_t())) q2 += lens->p;
    out.push_back(lens_entry(2 * lens->p, q2));
    return out;
}

}  // namespace bulam
