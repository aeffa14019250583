#pragma once

#include <stdexcept>
#include <vector>

#include "assoform/quotalg.hpp"
#include "assoform/resultant.hpp"

namespace assoform {

// Signals a tuple outside the domain of the morphism: the resultant
// vanishes, equivalently the quotient algebra fails to have finite
// dimension.
struct NotFiniteColength : std::runtime_error {
    NotFiniteColength()
        : std::runtime_error("resultant vanishes: the quotient algebra does not have finite dimension") {}
};

// A value of the morphism together with the tuple it came from. The
// defining identity makes the annihilator of `form` in degree d equal to
// the span of the source tuple (Macaulay inverse system property).
struct AssociatedForm {
    Form form;  // y-side, degree n(d-1)
    FormTuple source;
};

// Core computation over any exact ring: the associated form is
//   sum over |alpha| = N of  multinomial(N, alpha) * lambda_alpha * y^alpha
// where x^alpha = lambda_alpha * jac(f) modulo the degree-N ideal piece and
// N = n(d-1). Assumes the caller has verified the domain condition at the
// base point (for jets: on the value parts).
template <class R>
BasicForm<R> associated_form_core(const BasicFormTuple<R>& t) {
    const int N = socle_degree(t);
    const std::vector<Monomial> basis = monomial_basis(t.nvars, N);
    const std::vector<R> lambdas = socle_coordinates(t);
    BasicForm<R> F(Side::Y, t.nvars, N);
    for (size_t k = 0; k < basis.size(); ++k)
        F.add_term(basis[k], R(Rational(multinomial(N, basis[k]))) * lambdas[k]);
    return F;
}

// A(f) for a tuple with nonvanishing resultant; NotFiniteColength otherwise.
AssociatedForm associated_form_tuple(const FormTuple& t);

// A(f) = A(grad f) for a single x-side form of degree d+1. The domain
// condition Res(grad f) != 0 stands in for nonvanishing of the
// discriminant.
AssociatedForm associated_form(const Form& f);

// Rank of the differential of the morphism at t: the Kn columns are the
// eps-parts of A(t + eps e), where e runs over the monomial directions in
// grlex order, tuple slot major. Computed with jet arithmetic end to end.
int differential_rank(const FormTuple& t);

// The expected rank K*n - n^2 + 1 (dimension of the image).
int expected_differential_rank(int n, int d);

// Exact check of the equivariance A(M f) = det(M)^(-1) A(f) for an
// invertible constant matrix M acting on the tuple entries.
bool tuple_basis_covariance_check(const FormTuple& t, const QMatrix& m);

// (M f)_i = sum_j M(i,j) f_j.
FormTuple apply_matrix(const FormTuple& t, const QMatrix& m);

}  // namespace assoform
