#include <bulam/homology.hpp>

#include <algorithm>
#include <bit>
#include <limits>

namespace bulam {

QmodZ::QmodZ(Rational value) : value_(std::move(value)) {
    value_.canonicalize();
    Integer floor_part;
    mpz_fdiv_q(floor_part.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    value_ -= floor_part;
}

QmodZ& QmodZ::operator+=(const QmodZ& rhs) {
    *this = QmodZ(value_ + rhs.value_);
    return *this;
}

QmodZ QmodZ::operator-() const { return QmodZ(-value_); }

CoverClass::CoverClass(const IntMatrix& b, GF2Vector x) : CoverClass(GF2Matrix::reduce(b), std::move(x)) {}

CoverClass::CoverClass(const GF2Matrix& bbar, GF2Vector x) : x_(std::move(x)) {
    if (x_.size() != bbar.cols()) throw DimensionError("CoverClass: class length must equal matrix size");
    if (x_.is_zero()) throw InvalidArgument("CoverClass: the zero class gives a disconnected cover");
    if (!(bbar * x_).is_zero()) throw InvalidArgument("CoverClass: class " + x_.to_string() + " is not in ker(B mod 2)");
}

AbelianGroup first_homology(const IntMatrix& b) {
    if (!b.is_symmetric()) throw InvalidArgument("first_homology: linking matrix must be symmetric");
    return cokernel_structure(b);
}

CoverClassList cover_classes(const IntMatrix& b, std::size_t cap) {
    if (!b.is_symmetric()) throw InvalidArgument("cover_classes: linking matrix must be symmetric");
    const GF2Matrix bbar = GF2Matrix::reduce(b);
    CoverClassList out;
    out.kernel_basis = gf2_kernel_basis(bbar);
    std::sort(out.kernel_basis.begin(), out.kernel_basis.end());
    const std::size_t k = out.kernel_basis.size();
    out.kernel_dimension = k;

    // 2^k - 1 <= cap, without overflowing for large k.
    const bool fits = k < std::numeric_limits<std::size_t>::digits - 1 && ((std::size_t{1} << k) - 1) <= cap;
    if (!fits) {
        out.truncated = true;
        for (const auto& v : out.kernel_basis) out.classes.emplace_back(bbar, v);
        return out;
    }

    const std::size_t count = (std::size_t{1} << k) - 1;
    std::vector<GF2Vector> elements;
    elements.reserve(count);
    // Gray-code walk: each step flips one basis vector in.
    GF2Vector acc(b.cols());
    for (std::size_t i = 1; i <= count; ++i) {
        const auto flip = static_cast<std::size_t>(std::countr_zero(i));
        acc ^= out.kernel_basis[flip];
        elements.push_back(acc);
    }
    std::sort(elements.begin(), elements.end());
    out.classes.reserve(count);
    for (auto& v : elements) out.classes.emplace_back(bbar, std::move(v));
    return out;
}

std::optional<Integer> order_in_cokernel(const IntMatrix& b, std::span<const Integer> y) {
    if (y.size() != b.rows()) throw DimensionError("order_in_cokernel: vector length must equal rows of b");
    return IntegralImage(b).order(y);
}

QmodZ torsion_linking(const IntegralImage& image, std::span<const Integer> a, std::span<const Integer> c) {
    const IntMatrix& b = image.matrix();
    if (!b.is_square()) throw DimensionError("torsion_linking: presentation matrix must be square");
    if (a.size() != b.rows() || c.size() != b.rows())
        throw DimensionError("torsion_linking: vector length must equal rows of b");
    const auto n = image.order(a);
    if (!n) throw InvalidArgument("torsion_linking: first argument has infinite order");
    if (!image.order(c)) throw InvalidArgument("torsion_linking: second argument has infinite order");

    IntVector na(a.begin(), a.end());
    for (auto& e : na) e *= *n;
    const auto z = image.solve(na);
    if (!z) throw InvariantViolation("torsion_linking: n·a is not in im(b) for n = order(a)");
    Integer dot = 0;
    for (std::size_t i = 0; i < c.size(); ++i) dot += (*z)[i] * c[i];
    return QmodZ(Rational(dot, *n));
}

QmodZ torsion_linking(const IntMatrix& b, std::span<const Integer> a, std::span<const Integer> c) {
    if (a.size() != b.rows() || c.size() != b.rows())
        throw DimensionError("torsion_linking: vector length must equal rows of b");
    return torsion_linking(IntegralImage(b), a, c);
}

}  // namespace bulam
