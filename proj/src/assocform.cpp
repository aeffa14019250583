#include "assoform/assocform.hpp"

namespace assoform {

AssociatedForm associated_form_tuple(const FormTuple& t) {
    if (!resultant_nonvanishing(t)) throw NotFiniteColength();
    return AssociatedForm{associated_form_core(t), t};
}

AssociatedForm associated_form(const Form& f) { return associated_form_tuple(grad(f)); }

int expected_differential_rank(int n, int d) { return graded_dimension(n, d) * n - n * n + 1; }

int differential_rank(const FormTuple& t) {
    if (!resultant_nonvanishing(t)) throw NotFiniteColength();
    const int n = t.nvars;
    const int N = socle_degree(t);
    const std::vector<Monomial> directions = monomial_basis(n, t.degree);
    const std::vector<Monomial> target = monomial_basis(n, N);
    Matrix<Jet> diff(static_cast<int>(target.size()), n * static_cast<int>(directions.size()));
    int col = 0;
    for (int slot = 0; slot < n; ++slot) {
        for (const Monomial& dir : directions) {
            std::vector<JetForm> forms;
            forms.reserve(static_cast<size_t>(n));
            for (int i = 0; i < n; ++i) forms.push_back(jet_lift(t.forms[static_cast<size_t>(i)]));
            forms[static_cast<size_t>(slot)].add_term(dir, Jet(0, 1));
            const JetForm image = associated_form_core(make_form_tuple(std::move(forms)));
            for (int r = 0; r < static_cast<int>(target.size()); ++r)
                diff(r, col) = image.coefficient(target[static_cast<size_t>(r)]);
            ++col;
        }
    }
    return jet_rank_matrix(diff);
}

FormTuple apply_matrix(const FormTuple& t, const QMatrix& m) {
    if (m.rows() != t.nvars || m.cols() != t.nvars)
        throw std::invalid_argument("apply_matrix: matrix must be n x n");
    std::vector<Form> out;
    out.reserve(static_cast<size_t>(t.nvars));
    for (int i = 0; i < t.nvars; ++i) {
        Form g(Side::X, t.nvars, t.degree);
        for (int j = 0; j < t.nvars; ++j) g += m(i, j) * t.forms[static_cast<size_t>(j)];
        out.push_back(std::move(g));
    }
    return make_form_tuple(std::move(out));
}

bool tuple_basis_covariance_check(const FormTuple& t, const QMatrix& m) {
    const Rational dm = det(m);
    if (dm.is_zero()) throw std::invalid_argument("tuple_basis_covariance_check: matrix must be invertible");
    const Form lhs = associated_form_tuple(apply_matrix(t, m)).form;
    const Form rhs = (Rational(1) / dm) * associated_form_tuple(t).form;
    return lhs == rhs;
}

}  // namespace assoform
