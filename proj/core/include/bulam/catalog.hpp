#pragma once

// Known Z_2-indices of free involutions, including non-orientable quotients
// that a surgery presentation cannot reach. Lens spaces are covered by a rule
// rather than a table.

#include <bulam/exactlinalg.hpp>
#include <bulam/surgery.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bulam {

struct CatalogEntry {
    std::string cover_manifold;
    std::string quotient_manifold;
    std::string involution_note;
    int index = 0;
    std::string source;
    bool computable_by_surgery = false;
    std::optional<SurgeryPresentation> surgery_presentation;
    /// Class of the cover within the presentation's ker(B mod 2).
    std::optional<GF2Vector> surgery_class;
};

/// The fixed entries (sphere, projective space, the four quotients of S1xS2,
/// the 3-dimensional Klein bottle).
const std::vector<CatalogEntry>& catalog_entries();

/// Index of the double cover L(p/2, q) -> L(p, q) for even p: 3 when
/// p = 2 mod 4, else 2. nullopt for odd p (no connected double cover).
std::optional<int> lens_rule_index(const Integer& p);

/// Entries whose cover or quotient matches `name`. Accepts the fixed names
/// (S3, RP3, S1xS2, K3, S1xRP2, RP3#RP3; case and spacing are ignored) and
/// lens spaces written L(p,q). Unknown names give an empty list.
std::vector<CatalogEntry> lookup(std::string_view name);

/// Canonical spelling used for matching.
std::string normalize_manifold_name(std::string_view name);

}  // namespace bulam
