#pragma once

// Exact integer, rational and GF(2) linear algebra.
//
// Integers are GMP arbitrary-precision values throughout; nothing here ever
// narrows to a machine word.

#include <bulam/error.hpp>

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace bulam {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

IntVector make_int_vector(std::initializer_list<long> values);
std::string to_string(const IntVector& v);
std::string to_string(const Rational& q);  // always "num/den"

/// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(std::span<const Integer> entries);
    static IntMatrix diagonal(std::initializer_list<long> entries);
    /// Rows must all have the same length.
    static IntMatrix from_rows(const std::vector<IntVector>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool is_symmetric() const;

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntVector row(std::size_t i) const;
    IntVector column(std::size_t j) const;

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVector operator*(std::span<const Integer> v) const;

    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::string to_string(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant. The 0x0 determinant is 1.
Integer determinant(const IntMatrix& m);

/// U·B·V = S with U, V unimodular and S diagonal, d_i >= 0, d_i | d_{i+1}.
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix s;
    IntMatrix v;

    std::size_t rank() const;
    /// Diagonal of S, length min(rows, cols).
    IntVector diagonal() const;
};

SmithDecomposition smith_normal_form(const IntMatrix& b);

/// Diagonal of the Smith form only; skips accumulating U and V.
IntVector smith_invariants(const IntMatrix& b);

/// Finitely generated abelian group Z^free_rank ⊕ Z/d_1 ⊕ ... with d_i | d_{i+1}.
struct AbelianGroup {
    std::vector<Integer> invariant_factors;
    std::size_t free_rank = 0;

    bool is_trivial() const noexcept { return invariant_factors.empty() && free_rank == 0; }
    /// Order of the torsion subgroup.
    Integer torsion_order() const;
    std::string to_string() const;

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Cokernel of a square presentation matrix. Throws DimensionError otherwise.
AbelianGroup cokernel_structure(const IntMatrix& b);

/// Answers membership, solvability and order questions about the lattice
/// im(b) ⊂ Z^rows by way of one Smith decomposition, computed up front.
class IntegralImage {
public:
    explicit IntegralImage(IntMatrix b);

    const IntMatrix& matrix() const noexcept { return b_; }
    const SmithDecomposition& smith() const noexcept { return snf_; }

    bool contains(std::span<const Integer> y) const;
    std::optional<IntVector> solve(std::span<const Integer> y) const;
    /// Least n >= 1 with n·y in im(b); nullopt when y has infinite order in coker(b).
    std::optional<Integer> order(std::span<const Integer> y) const;

private:
    IntVector transformed(std::span<const Integer> y) const;

    IntMatrix b_;
    SmithDecomposition snf_;
    std::size_t rank_ = 0;
};

bool is_in_integral_image(const IntMatrix& b, std::span<const Integer> y);
std::optional<IntVector> solve_integral(const IntMatrix& b, std::span<const Integer> y);

/// Exact solve over Q by Gaussian elimination; nullopt when y is outside the
/// rational column span. Free variables are set to zero.
std::optional<RationalVector> solve_rational(const IntMatrix& b, std::span<const Integer> y);

/// pᵀ·b·p. Throws InvalidArgument unless |det p| = 1.
IntMatrix congruence_transform(const IntMatrix& b, const IntMatrix& p);

/// Block-diagonal sum a ⊕ b.
IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b);

// ---------------------------------------------------------------------------
// GF(2)

class GF2Vector {
public:
    GF2Vector() = default;
    explicit GF2Vector(std::size_t size);
    GF2Vector(std::initializer_list<int> bits);

    /// Reduction mod 2 of an integer vector.
    static GF2Vector reduce(std::span<const Integer> v);
    /// Bit i of the vector is bit i of `mask`; size <= 64.
    static GF2Vector from_mask(std::uint64_t mask, std::size_t size);

    std::size_t size() const noexcept { return size_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
    void set(std::size_t i, bool value);
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    bool is_zero() const noexcept;
    std::size_t popcount() const noexcept;
    /// Index of the lowest set bit, or size() when zero.
    std::size_t first_set() const noexcept;

    GF2Vector& operator^=(const GF2Vector& rhs);
    friend GF2Vector operator^(GF2Vector a, const GF2Vector& b) { return a ^= b; }
    bool dot(const GF2Vector& rhs) const;

    /// {0,1} integer vector.
    IntVector to_integers() const;
    std::string to_string() const;  // e.g. "101", coordinate 0 first

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    friend bool operator==(const GF2Vector&, const GF2Vector&) = default;
    /// Orders vectors as little-endian binary numbers: coordinate 0 is the
    /// least significant bit. (1,0) < (0,1) < (1,1).
    friend bool operator<(const GF2Vector& a, const GF2Vector& b);

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols);

    static GF2Matrix reduce(const IntMatrix& m);

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
    void set(std::size_t i, std::size_t j, bool value) { rows_[i].set(j, value); }
    const GF2Vector& row(std::size_t i) const { return rows_[i]; }

    GF2Vector operator*(const GF2Vector& v) const;
    std::size_t rank() const;

private:
    std::size_t cols_ = 0;
    std::vector<GF2Vector> rows_;
};

/// Basis of the kernel, one vector per free column, in increasing order of
/// the free column's index.
std::vector<GF2Vector> gf2_kernel_basis(const GF2Matrix& bbar);

}  // namespace bulam
