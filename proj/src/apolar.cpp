#include "assoform/apolar.hpp"

#include <stdexcept>

namespace assoform {

namespace {

// x^alpha <> y^beta = (falling factorial) y^(beta-alpha), or 0 when some
// alpha_i > beta_i.
bool monomial_polar(const Monomial& alpha, const Monomial& beta, Monomial* out, Rational* scale) {
    std::vector<int> e(beta.exponents());
    Int s(1);
    for (int i = 0; i < alpha.nvars(); ++i) {
        if (alpha[i] > beta[i]) return false;
        for (int k = 0; k < alpha[i]; ++k) s *= Int(beta[i] - k);
        e[static_cast<size_t>(i)] -= alpha[i];
    }
    *out = Monomial(std::move(e));
    *scale = Rational(s);
    return true;
}

}  // namespace

Form polar_pair(const Form& h, const Form& F) {
    if (h.side() != Side::X || F.side() != Side::Y)
        throw std::invalid_argument("polar_pair: operator must be x-side, operand y-side");
    if (h.nvars() != F.nvars()) throw std::invalid_argument("polar_pair: variable count mismatch");
    if (h.degree() > F.degree()) throw std::invalid_argument("polar_pair: operator degree exceeds operand degree");
    Form out(Side::Y, F.nvars(), F.degree() - h.degree());
    Monomial m(F.nvars());
    Rational s;
    for (const auto& [alpha, c] : h.terms())
        for (const auto& [beta, d] : F.terms())
            if (monomial_polar(alpha, beta, &m, &s)) out.add_term(m, c * d * s);
    return out;
}

CatalecticantMatrix catalecticant(const Form& F, int i) {
    if (F.side() != Side::Y) throw std::invalid_argument("catalecticant: F must be y-side");
    if (i < 0 || i > F.degree()) throw std::invalid_argument("catalecticant: need 0 <= i <= deg F");
    const int n = F.nvars();
    CatalecticantMatrix cat{F, i, monomial_basis(n, F.degree() - i), monomial_basis(n, i), QMatrix()};
    cat.matrix = QMatrix(static_cast<int>(cat.row_basis.size()), static_cast<int>(cat.col_basis.size()));
    for (int c = 0; c < static_cast<int>(cat.col_basis.size()); ++c) {
        const Form image = polar_pair(Form::monomial_form(Side::X, cat.col_basis[static_cast<size_t>(c)], 1), F);
        for (const auto& [m, coef] : image.terms())
            cat.matrix(monomial_position(cat.row_basis, m), c) = coef;
    }
    return cat;
}

std::vector<Form> annihilator_piece(const Form& F, int j) {
    const CatalecticantMatrix cat = catalecticant(F, j);
    std::vector<Form> basis;
    for (const std::vector<Rational>& v : kernel_basis(cat.matrix))
        basis.push_back(form_from_coefficients(Side::X, F.nvars(), j, cat.col_basis, v));
    return basis;
}

std::vector<int> gorenstein_sequence(const Form& F) {
    if (F.is_zero_form()) throw std::invalid_argument("gorenstein_sequence: zero form");
    std::vector<int> t;
    t.reserve(static_cast<size_t>(F.degree()) + 1);
    for (int i = 0; i <= F.degree(); ++i) t.push_back(rank(catalecticant(F, i).matrix));
    return t;
}

namespace {

QMatrix stacked_coefficients(const std::vector<Form>& forms, const std::vector<Monomial>& basis) {
    QMatrix m(static_cast<int>(forms.size()), static_cast<int>(basis.size()));
    for (int r = 0; r < static_cast<int>(forms.size()); ++r) {
        const std::vector<Rational> v = coefficient_vector(forms[static_cast<size_t>(r)], basis);
        for (int c = 0; c < static_cast<int>(basis.size()); ++c) m(r, c) = v[static_cast<size_t>(c)];
    }
    return m;
}

}  // namespace

bool same_span(const std::vector<Form>& a, const std::vector<Form>& b) {
    if (a.empty() && b.empty()) return true;
    const Form& probe = a.empty() ? b.front() : a.front();
    const std::vector<Monomial> basis = monomial_basis(probe.nvars(), probe.degree());
    for (const auto& fs : {a, b})
        for (const Form& f : fs)
            if (f.nvars() != probe.nvars() || f.degree() != probe.degree() || f.side() != probe.side())
                throw std::invalid_argument("same_span: forms live in different spaces");
    const QMatrix ma = stacked_coefficients(a, basis);
    const QMatrix mb = stacked_coefficients(b, basis);
    QMatrix stacked(ma.rows() + mb.rows(), static_cast<int>(basis.size()));
    for (int r = 0; r < ma.rows(); ++r)
        for (int c = 0; c < ma.cols(); ++c) stacked(r, c) = ma(r, c);
    for (int r = 0; r < mb.rows(); ++r)
        for (int c = 0; c < mb.cols(); ++c) stacked(ma.rows() + r, c) = mb(r, c);
    const int ra = rank(ma), rb = rank(mb);
    return ra == rb && rank(stacked) == ra;
}

}  // namespace assoform
