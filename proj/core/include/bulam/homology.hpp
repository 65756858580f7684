#pragma once

// Homological data of the surgered manifold N read off its linking matrix B:
//   H_1(N; Z) = coker B,  H^1(N; Z_2) = ker (B mod 2).

#include <bulam/exactlinalg.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bulam {

/// Exact rational in [0, 1), arithmetic mod 1.
class QmodZ {
public:
    QmodZ() = default;
    explicit QmodZ(Rational value);

    const Rational& value() const noexcept { return value_; }
    bool is_zero() const { return sgn(value_) == 0; }

    QmodZ& operator+=(const QmodZ& rhs);
    friend QmodZ operator+(QmodZ a, const QmodZ& b) { return a += b; }
    QmodZ operator-() const;

    /// "num/den", e.g. "0/1", "1/2".
    std::string to_string() const { return bulam::to_string(value_); }

    friend bool operator==(const QmodZ&, const QmodZ&) = default;

private:
    Rational value_{0};
};

/// Nonzero element of ker(B mod 2): the class of a connected double cover.
class CoverClass {
public:
    /// Throws InvalidArgument when x is zero or B·x is odd somewhere,
    /// DimensionError on a length mismatch.
    CoverClass(const IntMatrix& b, GF2Vector x);

    /// Checks against an already reduced matrix.
    CoverClass(const GF2Matrix& bbar, GF2Vector x);

    const GF2Vector& bits() const noexcept { return x_; }
    std::size_t size() const noexcept { return x_.size(); }

    friend bool operator==(const CoverClass&, const CoverClass&) = default;
    friend bool operator<(const CoverClass& a, const CoverClass& b) { return a.x_ < b.x_; }

private:
    GF2Vector x_;
};

/// H_1(N; Z). Throws InvalidArgument unless b is symmetric.
AbelianGroup first_homology(const IntMatrix& b);

struct CoverClassList {
    /// Every nonzero kernel element in little-endian bit order, or the
    /// kernel basis alone when truncated.
    std::vector<CoverClass> classes;
    std::vector<GF2Vector> kernel_basis;
    std::size_t kernel_dimension = 0;
    bool truncated = false;
};

inline constexpr std::size_t kDefaultClassCap = 1024;

/// All 2^k - 1 connected double cover classes when that count is <= cap.
CoverClassList cover_classes(const IntMatrix& b, std::size_t cap = kDefaultClassCap);

/// Least n >= 1 with n·y in im(b); nullopt for infinite order.
std::optional<Integer> order_in_cokernel(const IntMatrix& b, std::span<const Integer> y);

/// Linking pairing of the torsion classes represented by a and c:
/// with n the order of a and b·z = n·a, returns (zᵀc)/n mod 1.
/// Throws InvalidArgument when a or c has infinite order.
QmodZ torsion_linking(const IntMatrix& b, std::span<const Integer> a, std::span<const Integer> c);

/// Same, reusing a Smith decomposition of b.
QmodZ torsion_linking(const IntegralImage& image, std::span<const Integer> a, std::span<const Integer> c);

}  // namespace bulam
