#include <bulam/exactlinalg.hpp>

#include <bit>

namespace bulam {
namespace {

std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

GF2Vector::GF2Vector(std::size_t size) : size_(size), words_(word_count(size), 0) {}

GF2Vector::GF2Vector(std::initializer_list<int> bits) : GF2Vector(bits.size()) {
    std::size_t i = 0;
    for (int b : bits) set(i++, (b & 1) != 0);
}

GF2Vector GF2Vector::reduce(std::span<const Integer> v) {
    GF2Vector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        if (mpz_odd_p(v[i].get_mpz_t())) out.set(i, true);
    return out;
}

GF2Vector GF2Vector::from_mask(std::uint64_t mask, std::size_t size) {
    if (size > 64) throw DimensionError("GF2Vector::from_mask: size exceeds 64");
    GF2Vector out(size);
    if (size) out.words_[0] = size == 64 ? mask : (mask & ((std::uint64_t{1} << size) - 1));
    return out;
}

void GF2Vector::set(std::size_t i, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (i % 64);
    if (value) words_[i / 64] |= bit;
    else words_[i / 64] &= ~bit;
}

bool GF2Vector::is_zero() const noexcept {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::size_t GF2Vector::popcount() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

std::size_t GF2Vector::first_set() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return size_;
}

GF2Vector& GF2Vector::operator^=(const GF2Vector& rhs) {
    if (rhs.size_ != size_) throw DimensionError("GF2Vector: size mismatch");
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= rhs.words_[w];
    return *this;
}

bool GF2Vector::dot(const GF2Vector& rhs) const {
    if (rhs.size_ != size_) throw DimensionError("GF2Vector: size mismatch");
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & rhs.words_[w];
    return (std::popcount(acc) & 1) != 0;
}

IntVector GF2Vector::to_integers() const {
    IntVector out(size_);
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) out[i] = 1;
    return out;
}

std::string GF2Vector::to_string() const {
    std::string out(size_, '0');
    for (std::size_t i = 0; i < size_; ++i)
        if (get(i)) out[i] = '1';
    return out;
}

bool operator<(const GF2Vector& a, const GF2Vector& b) {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    for (std::size_t w = a.words_.size(); w-- > 0;)
        if (a.words_[w] != b.words_[w]) return a.words_[w] < b.words_[w];
    return false;
}

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, GF2Vector(cols)) {}

GF2Matrix GF2Matrix::reduce(const IntMatrix& m) {
    GF2Matrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (mpz_odd_p(m(i, j).get_mpz_t())) out.set(i, j, true);
    return out;
}

GF2Vector GF2Matrix::operator*(const GF2Vector& v) const {
    if (v.size() != cols_) throw DimensionError("GF2Matrix·vector: length mismatch");
    GF2Vector out(rows());
    for (std::size_t i = 0; i < rows(); ++i)
        if (rows_[i].dot(v)) out.set(i, true);
    return out;
}

namespace {

// Reduced row echelon form in place; returns pivot column of each pivot row.
std::vector<std::size_t> rref(std::vector<GF2Vector>& rows, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

std::size_t GF2Matrix::rank() const {
    auto copy = rows_;
    return rref(copy, cols_).size();
}

std::vector<GF2Vector> gf2_kernel_basis(const GF2Matrix& bbar) {
    const std::size_t n = bbar.cols();
    std::vector<GF2Vector> rows;
    rows.reserve(bbar.rows());
    for (std::size_t i = 0; i < bbar.rows(); ++i) rows.push_back(bbar.row(i));
    const std::vector<std::size_t> pivots = rref(rows, n);

    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<GF2Vector> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        GF2Vector v(n);
        v.set(free, true);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            if (rows[r].get(free)) v.set(pivots[r], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace bulam
