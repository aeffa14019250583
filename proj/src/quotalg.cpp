#include "assoform/quotalg.hpp"

namespace assoform {

namespace {

QMatrix generator_matrix(const FormTuple& t, int m, const std::vector<Monomial>& basis) {
    const std::vector<Form> gens = ideal_generators(t, m);
    QMatrix mat(static_cast<int>(gens.size()), static_cast<int>(basis.size()));
    for (int r = 0; r < mat.rows(); ++r) {
        const std::vector<Rational> v = coefficient_vector(gens[static_cast<size_t>(r)], basis);
        for (int c = 0; c < mat.cols(); ++c) mat(r, c) = v[static_cast<size_t>(c)];
    }
    return mat;
}

}  // namespace

IdealPiece ideal_piece(const FormTuple& t, int m) {
    const std::vector<Monomial> basis = monomial_basis(t.nvars, m);
    QMatrix mat = generator_matrix(t, m, basis);
    const std::vector<int> pivots = rref_in_place(mat);
    IdealPiece piece{m, {}};
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r) {
        std::vector<Rational> row;
        row.reserve(basis.size());
        for (int c = 0; c < mat.cols(); ++c) row.push_back(mat(r, c));
        piece.basis.push_back(form_from_coefficients(Side::X, t.nvars, m, basis, row));
    }
    return piece;
}

std::vector<int> hilbert_function(const FormTuple& t) {
    const int top = socle_degree(t) + 1;
    std::vector<int> h;
    h.reserve(static_cast<size_t>(top) + 1);
    for (int m = 0; m <= top; ++m) {
        const std::vector<Monomial> basis = monomial_basis(t.nvars, m);
        const int ideal_dim = m < t.degree ? 0 : rank(generator_matrix(t, m, basis));
        h.push_back(static_cast<int>(basis.size()) - ideal_dim);
    }
    return h;
}

std::vector<int> hilbert_target(int n, int d) {
    std::vector<int> p{1};  // coefficients of (1 + x + ... + x^(d-1))^n
    for (int k = 0; k < n; ++k) {
        std::vector<int> q(p.size() + static_cast<size_t>(d) - 1, 0);
        for (size_t i = 0; i < p.size(); ++i)
            for (int j = 0; j < d; ++j) q[i + static_cast<size_t>(j)] += p[i];
        p = std::move(q);
    }
    return p;
}

bool is_finite_colength(const FormTuple& t) {
    const int m = socle_degree(t) + 1;
    const std::vector<Monomial> basis = monomial_basis(t.nvars, m);
    return rank(generator_matrix(t, m, basis)) == static_cast<int>(basis.size());
}

Rational normal_coordinate_top(const FormTuple& t, const Form& g) {
    const int N = socle_degree(t);
    if (g.degree() != N || g.nvars() != t.nvars || g.side() != Side::X)
        throw std::invalid_argument("normal_coordinate_top: g must be x-side of the socle degree");
    const std::vector<Monomial> basis = monomial_basis(t.nvars, N);
    QMatrix rhs(static_cast<int>(basis.size()), 1);
    const std::vector<Rational> v = coefficient_vector(g, basis);
    for (int r = 0; r < rhs.rows(); ++r) rhs(r, 0) = v[static_cast<size_t>(r)];
    return detail::jac_coordinates(t, rhs).front();
}

}  // namespace assoform
