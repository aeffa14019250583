#include "assoform/sampling.hpp"

#include "assoform/resultant.hpp"

namespace assoform {

Form random_form(SplitMix64& rng, Side side, int n, int degree, int height) {
    Form f(side, n, degree);
    for (const Monomial& m : monomial_basis(n, degree)) f.add_term(m, make_rational(rng.bounded(height)));
    return f;
}

FormTuple random_good_tuple(SplitMix64& rng, int n, int d, int height) {
    for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
        std::vector<Form> forms;
        forms.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) forms.push_back(random_form(rng, Side::X, n, d, height));
        FormTuple t = make_form_tuple(std::move(forms));
        if (resultant_nonvanishing(t)) return t;
    }
    throw SamplingExhausted("random_good_tuple: rejection cap reached without a nonvanishing resultant");
}

QMatrix random_invertible_matrix(SplitMix64& rng, int n, int height) {
    for (int attempt = 0; attempt < kRejectionCap; ++attempt) {
        QMatrix m(n, n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m(r, c) = make_rational(rng.bounded(height));
        if (!det(m).is_zero()) return m;
    }
    throw SamplingExhausted("random_invertible_matrix: rejection cap reached");
}

QMatrix random_sl_matrix(SplitMix64& rng, int n, int height) {
    QMatrix u = QMatrix::identity(n);
    for (int s = 0; s < 8; ++s) {
        const int i = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n));
        int j = static_cast<int>(rng.next() % static_cast<std::uint64_t>(n - 1));
        if (j >= i) ++j;
        long long lambda = rng.bounded(height);
        if (lambda == 0) lambda = 1;
        QMatrix shear = QMatrix::identity(n);
        shear(i, j) = make_rational(lambda);
        u = matmul(u, shear);
    }
    return u;
}

}  // namespace assoform
