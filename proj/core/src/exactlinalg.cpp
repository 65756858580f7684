#include <bulam/exactlinalg.hpp>

#include <algorithm>
#include <sstream>
#include <utility>

namespace bulam {

IntVector make_int_vector(std::initializer_list<long> values) {
    IntVector out;
    out.reserve(values.size());
    for (long v : values) out.emplace_back(v);
    return out;
}

std::string to_string(const IntVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].get_str();
    }
    return out + ")";
}

std::string to_string(const Rational& q) {
    Rational c = q;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DimensionError("IntMatrix: ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(std::span<const Integer> entries) {
    IntMatrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
}

IntMatrix IntMatrix::diagonal(std::initializer_list<long> entries) {
    const IntVector v = make_int_vector(entries);
    return diagonal(std::span<const Integer>(v));
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw DimensionError("IntMatrix: ragged rows");
        std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
    }
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

IntVector IntMatrix::row(std::size_t i) const {
    return IntVector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t j) const {
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw DimensionError("IntMatrix product: inner dimensions differ");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Integer& a = (*this)(i, k);
            if (sgn(a) == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Integer& b = rhs(k, j);
                if (sgn(b) != 0) out(i, j) += a * b;
            }
        }
    }
    return out;
}

IntVector IntMatrix::operator*(std::span<const Integer> v) const {
    if (v.size() != cols_) throw DimensionError("IntMatrix·vector: length mismatch");
    IntVector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Integer& a = (*this)(i, j);
            if (sgn(a) != 0 && sgn(v[j]) != 0) out[i] += a * v[j];
        }
    return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) swap((*this)(i, a), (*this)(i, b));
}

std::string to_string(const IntMatrix& m) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ",";
        os << "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ",";
            os << m(i, j).get_str();
        }
        os << "]";
    }
    os << "]";
    return os.str();
}

Integer determinant(const IntMatrix& m) {
    if (!m.is_square()) throw DimensionError("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a(k, k)) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && sgn(a(swap_with, k)) == 0) ++swap_with;
            if (swap_with == n) return 0;
            a.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(t);
            }
        }
        prev = a(k, k);
    }
    Integer det = a(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

std::size_t SmithDecomposition::rank() const {
    std::size_t r = 0;
    const std::size_t d = std::min(s.rows(), s.cols());
    while (r < d && sgn(s(r, r)) != 0) ++r;
    return r;
}

IntVector SmithDecomposition::diagonal() const {
    const std::size_t d = std::min(s.rows(), s.cols());
    IntVector out(d);
    for (std::size_t i = 0; i < d; ++i) out[i] = s(i, i);
    return out;
}

Integer AbelianGroup::torsion_order() const {
    Integer n = 1;
    for (const auto& d : invariant_factors) n *= d;
    return n;
}

std::string AbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::string out;
    auto append = [&out](const std::string& term) {
        if (!out.empty()) out += " + ";
        out += term;
    };
    if (free_rank == 1) append("Z");
    else if (free_rank > 1) append("Z^" + std::to_string(free_rank));
    for (const auto& d : invariant_factors) append("Z/" + d.get_str());
    return out;
}

AbelianGroup cokernel_structure(const IntMatrix& b) {
    if (!b.is_square()) throw DimensionError("cokernel_structure: presentation matrix must be square");
    AbelianGroup g;
    const IntVector diag = smith_invariants(b);
    for (const auto& d : diag) {
        if (sgn(d) == 0) ++g.free_rank;
        else if (d != 1) g.invariant_factors.push_back(d);
    }
    return g;
}

IntegralImage::IntegralImage(IntMatrix b) : b_(std::move(b)), snf_(smith_normal_form(b_)) {
    rank_ = snf_.rank();
}

IntVector IntegralImage::transformed(std::span<const Integer> y) const {
    if (y.size() != b_.rows()) throw DimensionError("IntegralImage: vector length must equal rows of b");
    return snf_.u * y;
}

bool IntegralImage::contains(std::span<const Integer> y) const {
    const IntVector w = transformed(y);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i < rank_) {
            if (!mpz_divisible_p(w[i].get_mpz_t(), snf_.s(i, i).get_mpz_t())) return false;
        } else if (sgn(w[i]) != 0) {
            return false;
        }
    }
    return true;
}

std::optional<IntVector> IntegralImage::solve(std::span<const Integer> y) const {
    if (!contains(y)) return std::nullopt;
    const IntVector w = transformed(y);
    IntVector t(b_.cols());
    for (std::size_t i = 0; i < rank_; ++i) mpz_divexact(t[i].get_mpz_t(), w[i].get_mpz_t(), snf_.s(i, i).get_mpz_t());
    IntVector z = snf_.v * t;
    if (b_ * z != IntVector(y.begin(), y.end()))
        throw InvariantViolation("IntegralImage::solve: witness failed verification");
    return z;
}

std::optional<Integer> IntegralImage::order(std::span<const Integer> y) const {
    const IntVector w = transformed(y);
    Integer n = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i >= rank_) {
            if (sgn(w[i]) != 0) return std::nullopt;
            continue;
        }
        const Integer& d = snf_.s(i, i);
        Integer g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), w[i].get_mpz_t());
        Integer need = d / g;
        mpz_lcm(n.get_mpz_t(), n.get_mpz_t(), need.get_mpz_t());
    }
    return n;
}

bool is_in_integral_image(const IntMatrix& b, std::span<const Integer> y) {
    if (y.size() != b.rows()) throw DimensionError("is_in_integral_image: vector length must equal rows of b");
    return IntegralImage(b).contains(y);
}

std::optional<IntVector> solve_integral(const IntMatrix& b, std::span<const Integer> y) {
    if (y.size() != b.rows()) throw DimensionError("solve_integral: vector length must equal rows of b");
    return IntegralImage(b).solve(y);
}

std::optional<RationalVector> solve_rational(const IntMatrix& b, std::span<const Integer> y) {
    if (y.size() != b.rows()) throw DimensionError("solve_rational: vector length must equal rows of b");
    const std::size_t m = b.rows();
    const std::size_t n = b.cols();

    // Augmented [b | y] reduced to row echelon form over Q.
    std::vector<RationalVector> a(m, RationalVector(n + 1));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = b(i, j);
        a[i][n] = y[i];
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t p = r;
        while (p < m && sgn(a[p][c]) == 0) ++p;
        if (p == m) continue;
        std::swap(a[p], a[r]);
        const Rational inv = 1 / a[r][c];
        for (std::size_t j = c; j <= n; ++j) a[r][j] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || sgn(a[i][c]) == 0) continue;
            const Rational f = a[i][c];
            for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[r][j];
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (sgn(a[i][n]) != 0) return std::nullopt;

    RationalVector z(n);
    for (std::size_t i = 0; i < r; ++i) z[pivot_cols[i]] = a[i][n];
    return z;
}

IntMatrix congruence_transform(const IntMatrix& b, const IntMatrix& p) {
    if (!p.is_square() || p.rows() != b.cols() || !b.is_square())
        throw DimensionError("congruence_transform: p must be square with the size of b");
    if (abs(determinant(p)) != 1) throw InvalidArgument("congruence_transform: p is not unimodular");
    return p.transpose() * b * p;
}

IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out(a.rows() + i, a.cols() + j) = b(i, j);
    return out;
}

}  // namespace bulam
