// Smith normal form by unimodular row and column elimination.
//
// Pivot: entry of least absolute value in the active submatrix (search stops
// at the first unit). Rows and columns sharing the pivot are reduced with
// nearest-integer quotients until only the pivot survives. The resulting
// diagonal is then brought into divisibility order with 2x2 gcd/lcm moves.

#include <bulam/exactlinalg.hpp>

#include <algorithm>

namespace bulam {
namespace {

class SmithReducer {
public:
    SmithReducer(IntMatrix a, IntMatrix* u, IntMatrix* v) : a_(std::move(a)), u_(u), v_(v) {}

    // Returns the diagonal, length min(rows, cols).
    IntVector run() {
        const std::size_t m = a_.rows();
        const std::size_t n = a_.cols();
        const std::size_t d = std::min(m, n);
        std::size_t rank = 0;
        for (std::size_t k = 0; k < d; ++k) {
            if (!select_pivot(k)) break;
            eliminate(k);
            ++rank;
        }

        IntVector diag(d);
        for (std::size_t i = 0; i < rank; ++i) diag[i] = a_(i, i);
        fix_divisibility(diag, rank);
        for (std::size_t i = 0; i < rank; ++i) {
            if (sgn(diag[i]) < 0) {
                diag[i] = -diag[i];
                if (u_) negate_u_row(i);
            }
        }
        return diag;
    }

private:
    // Moves the smallest nonzero entry of the active block to (k, k).
    bool select_pivot(std::size_t k) {
        const std::size_t m = a_.rows();
        const std::size_t n = a_.cols();
        std::size_t pi = m, pj = n;
        auto search = [&] {
            for (std::size_t i = k; i < m; ++i) {
                for (std::size_t j = k; j < n; ++j) {
                    const Integer& e = a_(i, j);
                    if (sgn(e) == 0) continue;
                    if (pi == m || mpz_cmpabs(e.get_mpz_t(), a_(pi, pj).get_mpz_t()) < 0) {
                        pi = i;
                        pj = j;
                        if (mpz_cmpabs_ui(e.get_mpz_t(), 1) == 0) return;
                    }
                }
            }
        };
        search();
        if (pi == m) return false;
        swap_rows(k, pi);
        swap_cols(k, pj);
        return true;
    }

    void eliminate(std::size_t k) {
        const std::size_t m = a_.rows();
        const std::size_t n = a_.cols();
        Integer q;
        for (;;) {
            bool clean = true;
            for (std::size_t i = k + 1; i < m; ++i) {
                if (sgn(a_(i, k)) == 0) continue;
                nearest_quotient(q, a_(i, k), a_(k, k));
                if (sgn(q) != 0) row_submul(i, k, q, k);
                if (sgn(a_(i, k)) != 0) clean = false;
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                if (sgn(a_(k, j)) == 0) continue;
                nearest_quotient(q, a_(k, j), a_(k, k));
                if (sgn(q) != 0) col_submul(j, k, q, k);
                if (sgn(a_(k, j)) != 0) clean = false;
            }
            if (clean) return;

            // Remainders are strictly smaller than the pivot; promote the least.
            std::size_t best_i = k, best_j = k;
            const Integer* best = nullptr;
            for (std::size_t i = k + 1; i < m; ++i) {
                const Integer& e = a_(i, k);
                if (sgn(e) != 0 && (!best || mpz_cmpabs(e.get_mpz_t(), best->get_mpz_t()) < 0)) {
                    best = &e;
                    best_i = i;
                    best_j = k;
                }
            }
            for (std::size_t j = k + 1; j < n; ++j) {
                const Integer& e = a_(k, j);
                if (sgn(e) != 0 && (!best || mpz_cmpabs(e.get_mpz_t(), best->get_mpz_t()) < 0)) {
                    best = &e;
                    best_i = k;
                    best_j = j;
                }
            }
            swap_rows(k, best_i);
            swap_cols(k, best_j);
        }
    }

    static void nearest_quotient(Integer& q, const Integer& a, const Integer& p) {
        Integer r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
        if (sgn(r) == 0) return;
        Integer twice = 2 * abs(r);
        if (mpz_cmpabs(twice.get_mpz_t(), p.get_mpz_t()) > 0) {
            if (sgn(r) == sgn(p)) ++q;
            else --q;
        }
    }

    // row_target -= q * row_src, on columns >= from of the working matrix.
    void row_submul(std::size_t target, std::size_t src, const Integer& q, std::size_t from) {
        const std::size_t n = a_.cols();
        for (std::size_t j = from; j < n; ++j) {
            const Integer& s = a_(src, j);
            if (sgn(s) != 0) mpz_submul(a_(target, j).get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
        }
        if (u_) {
            IntMatrix& u = *u_;
            for (std::size_t j = 0; j < u.cols(); ++j) {
                const Integer& s = u(src, j);
                if (sgn(s) != 0) mpz_submul(u(target, j).get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
            }
        }
    }

    // col_target -= q * col_src, on rows >= from of the working matrix.
    void col_submul(std::size_t target, std::size_t src, const Integer& q, std::size_t from) {
        const std::size_t m = a_.rows();
        for (std::size_t i = from; i < m; ++i) {
            const Integer& s = a_(i, src);
            if (sgn(s) != 0) mpz_submul(a_(i, target).get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
        }
        if (v_) {
            IntMatrix& v = *v_;
            for (std::size_t i = 0; i < v.rows(); ++i) {
                const Integer& s = v(i, src);
                if (sgn(s) != 0) mpz_submul(v(i, target).get_mpz_t(), q.get_mpz_t(), s.get_mpz_t());
            }
        }
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        a_.swap_rows(a, b);
        if (u_) u_->swap_rows(a, b);
    }

    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        a_.swap_cols(a, b);
        if (v_) v_->swap_cols(a, b);
    }

    void negate_u_row(std::size_t i) {
        IntMatrix& u = *u_;
        for (std::size_t j = 0; j < u.cols(); ++j) u(i, j) = -u(i, j);
    }

    // diag(a, b) -> diag(g, ab/g) via
    //   [[s, t], [-b/g, a/g]] · diag(a, b) · [[1, -tb/g], [1, sa/g]]
    // where g = sa + tb = gcd(a, b). Both factors have determinant 1.
    void fix_divisibility(IntVector& diag, std::size_t rank) {
        Integer g, s, t;
        for (std::size_t i = 0; i < rank; ++i) {
            for (std::size_t j = i + 1; j < rank; ++j) {
                if (mpz_divisible_p(diag[j].get_mpz_t(), diag[i].get_mpz_t())) continue;
                const Integer a = diag[i];
                const Integer b = diag[j];
                mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                const Integer a_g = a / g;
                const Integer b_g = b / g;
                if (u_) {
                    IntMatrix& u = *u_;
                    for (std::size_t c = 0; c < u.cols(); ++c) {
                        Integer ri = s * u(i, c) + t * u(j, c);
                        Integer rj = a_g * u(j, c) - b_g * u(i, c);
                        u(i, c) = std::move(ri);
                        u(j, c) = std::move(rj);
                    }
                }
                if (v_) {
                    IntMatrix& v = *v_;
                    const Integer tb_g = t * b_g;
                    const Integer sa_g = s * a_g;
                    for (std::size_t r = 0; r < v.rows(); ++r) {
                        Integer ci = v(r, i) + v(r, j);
                        Integer cj = sa_g * v(r, j) - tb_g * v(r, i);
                        v(r, i) = std::move(ci);
                        v(r, j) = std::move(cj);
                    }
                }
                diag[i] = g;
                diag[j] = a_g * b;
            }
        }
    }

    IntMatrix a_;
    IntMatrix* u_;
    IntMatrix* v_;
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& b) {
    SmithDecomposition out;
    out.u = IntMatrix::identity(b.rows());
    out.v = IntMatrix::identity(b.cols());
    const IntVector diag = SmithReducer(b, &out.u, &out.v).run();
    out.s = IntMatrix(b.rows(), b.cols());
    for (std::size_t i = 0; i < diag.size(); ++i) out.s(i, i) = diag[i];
    return out;
}

IntVector smith_invariants(const IntMatrix& b) {
    return SmithReducer(b, nullptr, nullptr).run();
}

}  // namespace bulam
