#pragma once

#include <stdexcept>
#include <vector>

#include "assoform/form.hpp"
#include "assoform/matrix.hpp"

namespace assoform {

// n-tuple f = (f_1, ..., f_n) of x-side forms of one degree d; the domain
// element of the associated-form morphism. Degree is tracked even for zero
// entries.
template <class R>
struct BasicFormTuple {
    int nvars = 0;
    int degree = 0;
    std::vector<BasicForm<R>> forms;
};

using FormTuple = BasicFormTuple<Rational>;
using JetFormTuple = BasicFormTuple<Jet>;

template <class R>
BasicFormTuple<R> make_form_tuple(std::vector<BasicForm<R>> forms) {
    if (forms.empty()) throw std::invalid_argument("form tuple: empty");
    const int n = forms.front().nvars();
    const int d = forms.front().degree();
    if (static_cast<int>(forms.size()) != n)
        throw std::invalid_argument("form tuple: length must equal number of variables");
    for (const auto& f : forms)
        if (f.nvars() != n || f.degree() != d || f.side() != Side::X)
            throw std::invalid_argument("form tuple: entries must be x-side of one degree");
    return BasicFormTuple<R>{n, d, std::move(forms)};
}

// Socle degree n(d-1) of the complete intersection cut out by the tuple.
template <class R>
int socle_degree(const BasicFormTuple<R>& t) {
    return t.nvars * (t.degree - 1);
}

// (df/dx_1, ..., df/dx_n) of an x-side form of degree d+1 >= 2.
template <class R>
BasicFormTuple<R> grad(const BasicForm<R>& f) {
    if (f.side() != Side::X) throw std::invalid_argument("grad: form must be x-side");
    if (f.degree() < 2) throw std::invalid_argument("grad: degree must be at least 2");
    std::vector<BasicForm<R>> partials;
    partials.reserve(static_cast<size_t>(f.nvars()));
    for (int i = 0; i < f.nvars(); ++i) partials.push_back(derivative(f, i));
    return BasicFormTuple<R>{f.nvars(), f.degree() - 1, std::move(partials)};
}

// det(df_i/dx_j): a form of degree n(d-1), or the zero form. Laplace
// expansion along the first row; n stays small here.
template <class R>
BasicForm<R> jacobian_det(const BasicFormTuple<R>& t) {
    const int n = t.nvars;
    std::vector<std::vector<BasicForm<R>>> jac;
    jac.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<BasicForm<R>> row;
        for (int j = 0; j < n; ++j) row.push_back(derivative(t.forms[static_cast<size_t>(i)], j));
        jac.push_back(std::move(row));
    }
    std::vector<int> cols(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) cols[static_cast<size_t>(j)] = j;
    struct Expand {
        const std::vector<std::vector<BasicForm<R>>>& m;
        BasicForm<R> operator()(int row, std::vector<int> cols) const {
            if (cols.size() == 1) return m[static_cast<size_t>(row)][static_cast<size_t>(cols[0])];
            BasicForm<R> acc(Side::X, m.front().front().nvars(),
                             m.front().front().degree() * static_cast<int>(cols.size()));
            for (size_t k = 0; k < cols.size(); ++k) {
                std::vector<int> rest = cols;
                rest.erase(rest.begin() + static_cast<long>(k));
                BasicForm<R> minor = (*this)(row + 1, std::move(rest));
                BasicForm<R> prod = m[static_cast<size_t>(row)][static_cast<size_t>(cols[k])] * minor;
                if (k % 2 == 0)
                    acc += prod;
                else
                    acc -= prod;
            }
            return acc;
        }
    };
    return Expand{jac}(0, std::move(cols));
}

// Spanning generators of the degree-m piece of the ideal (f_1, ..., f_n):
// the products x^beta * f_i with |beta| = m - d, slot-major (all multiples
// of f_1 first), betas in grlex order. Empty when m < d.
template <class R>
std::vector<BasicForm<R>> ideal_generators(const BasicFormTuple<R>& t, int m) {
    std::vector<BasicForm<R>> gens;
    if (m < t.degree) return gens;
    const std::vector<Monomial> shifts = monomial_basis(t.nvars, m - t.degree);
    for (const auto& f : t.forms)
        for (const Monomial& beta : shifts)
            gens.push_back(BasicForm<R>::monomial_form(Side::X, beta, R(1)) * f);
    return gens;
}

// Echelon basis of the degree-m ideal piece (rows of the reduced row
// echelon form of the generator matrix).
struct IdealPiece {
    int m = 0;
    std::vector<Form> basis;
};

IdealPiece ideal_piece(const FormTuple& t, int m);

// t_m = dim C[x]_m - dim I_m for m = 0 .. n(d-1)+1. When Res(f) != 0 this
// equals the coefficient vector of (1 + x + ... + x^(d-1))^n padded with a
// trailing zero.
std::vector<int> hilbert_function(const FormTuple& t);

// Coefficients of (1 + x + ... + x^(d-1))^n, the target Hilbert function of
// a good tuple (and the Gorenstein sequence T of its associated form).
std::vector<int> hilbert_target(int n, int d);

// True iff the ideal piece in degree n(d-1)+1 is everything. By the socle
// bound this is equivalent to finite colength, which in turn is equivalent
// to Res(f) != 0; this rank test is the library's primary resultant
// predicate.
bool is_finite_colength(const FormTuple& t);

// Raised only when jac(f) lies in the ideal piece of the socle degree,
// which cannot happen under the finite-colength precondition; seeing it
// means a caller skipped the precondition or there is a bug.
struct SocleDegenerate : std::runtime_error {
    SocleDegenerate() : std::runtime_error("socle degenerate: jacobian lies in the ideal (resultant vanishes)") {}
};

namespace detail {

// One elimination shared by the socle-coordinate routines: columns are the
// degree-N ideal generators followed by jac(f), right-hand sides are
// appended after them. Returns, for each rhs, the coefficient of jac in a
// free-variables-zero solution. That coefficient is intrinsic (jac is
// unique modulo the ideal piece) even though the generator multipliers are
// not. Throws SocleDegenerate if jac's column fails to be a pivot.
template <class R>
std::vector<R> jac_coordinates(const BasicFormTuple<R>& t, const Matrix<R>& rhs_columns) {
    const int N = socle_degree(t);
    const std::vector<Monomial> basis = monomial_basis(t.nvars, N);
    const int dim = static_cast<int>(basis.size());
    const std::vector<BasicForm<R>> gens = ideal_generators(t, N);
    const BasicForm<R> jac = jacobian_det(t);
    const int gcount = static_cast<int>(gens.size());
    Matrix<R> m(dim, gcount + 1 + rhs_columns.cols());
    for (int c = 0; c < gcount; ++c) {
        const std::vector<R> v = coefficient_vector(gens[static_cast<size_t>(c)], basis);
        for (int r = 0; r < dim; ++r) m(r, c) = v[static_cast<size_t>(r)];
    }
    {
        const std::vector<R> v = coefficient_vector(jac, basis);
        for (int r = 0; r < dim; ++r) m(r, gcount) = v[static_cast<size_t>(r)];
    }
    for (int c = 0; c < rhs_columns.cols(); ++c)
        for (int r = 0; r < dim; ++r) m(r, gcount + 1 + c) = rhs_columns(r, c);

    const std::vector<int> pivots = rref_in_place(m, gcount + 1);
    int jac_row = -1;
    for (size_t k = 0; k < pivots.size(); ++k)
        if (pivots[k] == gcount) jac_row = static_cast<int>(k);
    if (jac_row < 0) throw SocleDegenerate();
    // consistency of every rhs: rows beyond the pivots must have vanished
    for (int r = static_cast<int>(pivots.size()); r < dim; ++r)
        for (int c = 0; c < rhs_columns.cols(); ++c)
            if (!is_zero(m(r, gcount + 1 + c)))
                throw std::logic_error("socle solve: inconsistent system under finite colength");
    std::vector<R> lambdas;
    lambdas.reserve(static_cast<size_t>(rhs_columns.cols()));
    for (int c = 0; c < rhs_columns.cols(); ++c) lambdas.push_back(m(jac_row, gcount + 1 + c));
    return lambdas;
}

}  // namespace detail

// The lambda of g = lambda * jac(f) mod I_N, for g of the socle degree N.
// Precondition: is_finite_colength(t).
Rational normal_coordinate_top(const FormTuple& t, const Form& g);

// lambda_alpha for every monomial x^alpha of degree N, in grlex basis
// order: one elimination answers all of them at once.
template <class R>
std::vector<R> socle_coordinates(const BasicFormTuple<R>& t) {
    const int dim = graded_dimension(t.nvars, socle_degree(t));
    return detail::jac_coordinates(t, Matrix<R>::identity(dim));
}

}  // namespace assoform
