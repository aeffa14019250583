#include "assoform/resultant.hpp"

namespace assoform {

bool resultant_nonvanishing(const FormTuple& t) { return is_finite_colength(t); }

Rational sylvester_resultant(const Form& f, const Form& g) {
    if (f.nvars() != 2 || g.nvars() != 2) throw std::invalid_argument("sylvester_resultant: binary forms only");
    if (f.side() != Side::X || g.side() != Side::X)
        throw std::invalid_argument("sylvester_resultant: forms must be x-side");
    const int d = f.degree();
    if (g.degree() != d || d < 1) throw std::invalid_argument("sylvester_resultant: need equal degree >= 1");
    const std::vector<Monomial> basis = monomial_basis(2, d);  // x1^d, x1^(d-1) x2, ..., x2^d
    const std::vector<Rational> a = coefficient_vector(f, basis);
    const std::vector<Rational> b = coefficient_vector(g, basis);
    QMatrix s(2 * d, 2 * d);
    for (int i = 0; i < d; ++i)
        for (int k = 0; k <= d; ++k) {
            s(i, i + k) = a[static_cast<size_t>(k)];
            s(d + i, i + k) = b[static_cast<size_t>(k)];
        }
    return det(s);
}

namespace {

// Count of variables i with gamma_i >= d; the Macaulay row of gamma is
// built from the smallest such i.
int power_class(const Monomial& gamma, int d, int* owner) {
    int count = 0;
    *owner = -1;
    for (int i = 0; i < gamma.nvars(); ++i)
        if (gamma[i] >= d) {
            if (*owner < 0) *owner = i;
            ++count;
        }
    return count;
}

QMatrix random_shear_product(int n, SplitMix64& rng) {
    QMatrix u = QMatrix::identity(n);
    for (int s = 0; s < 4; ++s) {
        const int i = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
        int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - 1));
        if (j >= i) ++j;
        long long lambda = rng.bounded(3);
        if (lambda == 0) lambda = 1;
        QMatrix shear = QMatrix::identity(n);
        shear(i, j) = make_rational(lambda);
        u = matmul(u, shear);
    }
    return u;
}

Rational macaulay_quotient_once(const FormTuple& t, bool* denominator_ok) {
    const int n = t.nvars;
    const int d = t.degree;
    const int tdeg = n * (d - 1) + 1;
    const std::vector<Monomial> basis = monomial_basis(n, tdeg);
    const int dim = static_cast<int>(basis.size());
    QMatrix mac(dim, dim);
    std::vector<int> reduced_twice;  // indices of monomials in >= 2 power classes
    for (int r = 0; r < dim; ++r) {
        int owner = -1;
        const int classes = power_class(basis[static_cast<size_t>(r)], d, &owner);
        if (classes >= 2) reduced_twice.push_back(r);
        std::vector<int> shift = basis[static_cast<size_t>(r)].exponents();
        shift[static_cast<size_t>(owner)] -= d;
        const Form row =
            Form::monomial_form(Side::X, Monomial(std::move(shift)), 1) * t.forms[static_cast<size_t>(owner)];
        for (const auto& [m, c] : row.terms()) mac(r, monomial_position(basis, m)) = c;
    }
    QMatrix sub(static_cast<int>(reduced_twice.size()), static_cast<int>(reduced_twice.size()));
    for (int r = 0; r < sub.rows(); ++r)
        for (int c = 0; c < sub.cols(); ++c)
            sub(r, c) = mac(reduced_twice[static_cast<size_t>(r)], reduced_twice[static_cast<size_t>(c)]);
    const Rational dprime = det(sub);
    if (dprime.is_zero()) {
        *denominator_ok = false;
        return Rational(0);
    }
    *denominator_ok = true;
    return det(mac) / dprime;
}

}  // namespace

Rational macaulay_resultant(const FormTuple& t, SplitMix64& rng) {
    if (t.nvars < 2 || t.degree < 1) throw std::invalid_argument("macaulay_resultant: need n >= 2, d >= 1");
    constexpr int kMaxRetries = 20;
    FormTuple current = t;
    for (int attempt = 0; attempt <= kMaxRetries; ++attempt) {
        bool ok = false;
        const Rational res = macaulay_quotient_once(current, &ok);
        if (ok) return res;
        // unimodular shear change of x-coordinates: resultant unchanged
        const QMatrix u = random_shear_product(t.nvars, rng);
        std::vector<Form> moved;
        moved.reserve(t.forms.size());
        for (const Form& f : t.forms) moved.push_back(substitute(f, u));
        current = make_form_tuple(std::move(moved));
    }
    throw GenericityFailure();
}

ResultantReport analyze_resultant(const FormTuple& t, std::uint64_t seed) {
    ResultantReport report;
    if (t.nvars == 2) {
        report.method = ResultantMethod::Sylvester;
        report.value = sylvester_resultant(t.forms[0], t.forms[1]);
        report.nonvanishing = !report.value->is_zero();
        return report;
    }
    SplitMix64 rng(seed);
    try {
        report.method = ResultantMethod::MacaulayQuotient;
        report.value = macaulay_resultant(t, rng);
        report.nonvanishing = !report.value->is_zero();
    } catch (const GenericityFailure&) {
        report.method = ResultantMethod::FiniteColength;
        report.value.reset();
        report.retries = 20;
        report.nonvanishing = resultant_nonvanishing(t);
    }
    return report;
}

}  // namespace assoform
