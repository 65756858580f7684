#pragma once

// Z_2-index of a free involution from the linking matrix B of the quotient.
//
// For a cover class x with integral lift X (B·X is even):
//   Y = B·X / 2 represents the Bockstein of x in coker B,
//   index 1  <=>  Y ∈ im B,
//   index 3  <=>  XᵀBX / 2 is odd,
//   index 2  otherwise.
// The torsion linking value λ(Y, Y) = XᵀBX / 4 mod 1 is computed on the side
// as an independent check of the index-3 test.

#include <bulam/exactlinalg.hpp>
#include <bulam/homology.hpp>

#include <optional>
#include <string>
#include <vector>

namespace bulam {

struct IndexReport {
    CoverClass cover_class;
    IntVector lift;           // X, entries need not be in {0,1} for non-canonical lifts
    IntVector bockstein_rep;  // Y = B·X / 2
    bool beta_vanishes = false;
    int triple_cup = 0;       // (XᵀBX / 2) mod 2
    std::optional<QmodZ> self_linking;  // empty when the cross-check is disabled
    int index = 0;

    /// n for which every equivariant map to R^n has a coincidence: 1..index.
    std::vector<int> bu_holds_for() const;
};

/// {0,1} integral lift of a class.
IntVector lift_class(const CoverClass& x);

/// Y with 2Y = B·X. Throws InvalidArgument when B·X has an odd entry.
IntVector bockstein_representative(const IntMatrix& b, std::span<const Integer> lift);

bool beta_vanishes(const IntMatrix& b, std::span<const Integer> lift);

/// XᵀBX.
Integer quadratic_value(const IntMatrix& b, std::span<const Integer> lift);

/// (XᵀBX / 2) mod 2, in {0, 1}.
int triple_cup(const IntMatrix& b, std::span<const Integer> lift);

struct ClassifyOptions {
    /// Compute the self-linking value and check it against the triple cup.
    bool crosscheck = true;
};

/// Classifier bound to one linking matrix; the Smith decomposition of B is
/// computed once and shared by every class. Immutable after construction.
class Classifier {
public:
    /// Throws InvalidArgument unless b is symmetric.
    explicit Classifier(IntMatrix b, ClassifyOptions options = {});

    const IntMatrix& matrix() const noexcept { return image_.matrix(); }
    const IntegralImage& image() const noexcept { return image_; }

    IndexReport classify(const CoverClass& x) const;

    /// Classification through an arbitrary integral lift of x.
    /// Throws InvalidArgument when lift mod 2 differs from x.
    IndexReport classify(const CoverClass& x, IntVector lift) const;

private:
    IntegralImage image_;
    ClassifyOptions options_;
};

IndexReport classify_class(const IntMatrix& b, const CoverClass& x, ClassifyOptions options = {});

struct ClassificationSweep {
    std::vector<IndexReport> reports;  // little-endian bit order of the classes
    std::size_t kernel_dimension = 0;
    std::vector<GF2Vector> kernel_basis;
    bool truncated = false;            // reports cover the kernel basis only
    std::vector<std::string> notes;
};

ClassificationSweep classify_all(const IntMatrix& b, std::size_t cap = kDefaultClassCap, ClassifyOptions options = {});

/// Closed form for diagonal linking matrices diag(a_1, ..., a_n):
/// 3 if Σ a_i x_i over even nonzero a_i is not divisible by 4; else 2 if x is
/// nonzero on some even nonzero a_i; else 1. Throws InvalidArgument if x is
/// zero or nonzero where a_i is odd.
int diagonal_index(std::span<const Integer> diagonal, const GF2Vector& x);

}  // namespace bulam
