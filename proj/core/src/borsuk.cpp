#include <bulam/borsuk.hpp>

namespace bulam {

std::vector<int> IndexReport::bu_holds_for() const {
    std::vector<int> out;
    for (int n = 1; n <= index; ++n) out.push_back(n);
    return out;
}

IntVector lift_class(const CoverClass& x) { return x.bits().to_integers(); }

IntVector bockstein_representative(const IntMatrix& b, std::span<const Integer> lift) {
    IntVector y = b * lift;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (mpz_odd_p(y[i].get_mpz_t()))
            throw InvalidArgument("bockstein_representative: (B·X)[" + std::to_string(i) + "] is odd; X is not a kernel lift");
        mpz_divexact_ui(y[i].get_mpz_t(), y[i].get_mpz_t(), 2);
    }
    return y;
}

bool beta_vanishes(const IntMatrix& b, std::span<const Integer> lift) {
    const IntVector y = bockstein_representative(b, lift);
    return is_in_integral_image(b, y);
}

Integer quadratic_value(const IntMatrix& b, std::span<const Integer> lift) {
    const IntVector bx = b * lift;
    Integer q = 0;
    for (std::size_t i = 0; i < lift.size(); ++i) q += lift[i] * bx[i];
    return q;
}

int triple_cup(const IntMatrix& b, std::span<const Integer> lift) {
    const IntVector y = bockstein_representative(b, lift);
    // XᵀBX / 2 = Xᵀ Y.
    Integer half = 0;
    for (std::size_t i = 0; i < lift.size(); ++i) half += lift[i] * y[i];
    return mpz_odd_p(half.get_mpz_t()) ? 1 : 0;
}

Classifier::Classifier(IntMatrix b, ClassifyOptions options) : image_(std::move(b)), options_(options) {
    if (!image_.matrix().is_symmetric()) throw InvalidArgument("Classifier: linking matrix must be symmetric");
}

IndexReport Classifier::classify(const CoverClass& x) const { return classify(x, lift_class(x)); }

IndexReport Classifier::classify(const CoverClass& x, IntVector lift) const {
    const IntMatrix& b = matrix();
    if (x.size() != b.cols()) throw DimensionError("classify: class length must equal matrix size");
    if (lift.size() != x.size() || GF2Vector::reduce(lift) != x.bits())
        throw InvalidArgument("classify: lift does not reduce to the class mod 2");

    IndexReport r{.cover_class = x, .lift = std::move(lift), .bockstein_rep = {}, .self_linking = std::nullopt};
    r.bockstein_rep = bockstein_representative(b, r.lift);
    {
        IntVector twice = r.bockstein_rep;
        for (auto& e : twice) e *= 2;
        if (twice != b * r.lift) throw InvariantViolation("classify: 2Y != B·X");
    }
    r.beta_vanishes = image_.contains(r.bockstein_rep);
    r.triple_cup = triple_cup(b, r.lift);
    r.index = r.triple_cup == 1 ? 3 : (r.beta_vanishes ? 1 : 2);

    if (r.triple_cup == 1 && r.beta_vanishes)
        throw InvariantViolation("classify: class " + x.bits().to_string() +
                                 " has odd triple cup and vanishing Bockstein");

    if (options_.crosscheck) {
        // Y is 2-torsion in coker B since 2Y = B·X.
        r.self_linking = torsion_linking(image_, r.bockstein_rep, r.bockstein_rep);
        const QmodZ expected(Rational(quadratic_value(b, r.lift), 4));
        const QmodZ half(Rational(1, 2));
        if (*r.self_linking != expected)
            throw InvariantViolation("classify: self-linking " + r.self_linking->to_string() + " != XᵀBX/4 mod 1 = " +
                                     expected.to_string());
        if (!r.self_linking->is_zero() && *r.self_linking != half)
            throw InvariantViolation("classify: self-linking " + r.self_linking->to_string() + " not in {0, 1/2}");
        if (r.self_linking->is_zero() == (r.triple_cup == 1))
            throw InvariantViolation("classify: self-linking " + r.self_linking->to_string() +
                                     " disagrees with triple cup " + std::to_string(r.triple_cup));
    }
    return r;
}

IndexReport classify_class(const IntMatrix& b, const CoverClass& x, ClassifyOptions options) {
    return Classifier(b, options).classify(x);
}

ClassificationSweep classify_all(const IntMatrix& b, std::size_t cap, ClassifyOptions options) {
    ClassificationSweep sweep;
    CoverClassList classes = cover_classes(b, cap);
    sweep.kernel_dimension = classes.kernel_dimension;
    sweep.kernel_basis = std::move(classes.kernel_basis);
    sweep.truncated = classes.truncated;

    if (b.rows() == 0) {
        sweep.notes.emplace_back("simply connected: no free involutions with connected quotient data in this framework");
        return sweep;
    }
    if (classes.classes.empty()) {
        sweep.notes.emplace_back("H^1(N; Z_2) = 0: no connected double cover");
        return sweep;
    }
    if (sweep.truncated) {
        sweep.notes.emplace_back("2^" + std::to_string(sweep.kernel_dimension) +
                                 " - 1 classes exceed the cap; reporting kernel basis vectors only");
    }

    const Classifier classifier(b, options);
    sweep.reports.reserve(classes.classes.size());
    for (const auto& x : classes.classes) sweep.reports.push_back(classifier.classify(x));
    return sweep;
}

int diagonal_index(std::span<const Integer> diagonal, const GF2Vector& x) {
    if (x.size() != diagonal.size()) throw DimensionError("diagonal_index: class length must equal diagonal length");
    if (x.is_zero()) throw InvalidArgument("diagonal_index: zero class");
    Integer sum = 0;
    bool even_part_nonzero = false;
    for (std::size_t i = 0; i < diagonal.size(); ++i) {
        if (!x.get(i)) continue;
        const Integer& a = diagonal[i];
        if (mpz_odd_p(a.get_mpz_t()))
            throw InvalidArgument("diagonal_index: class is nonzero at odd entry " + std::to_string(i));
        if (sgn(a) == 0) continue;
        sum += a;
        even_part_nonzero = true;
    }
    if (!mpz_divisible_ui_p(sum.get_mpz_t(), 4)) return 3;
    return even_part_nonzero ? 2 : 1;
}

}  // namespace bulam
