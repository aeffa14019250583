#pragma once

#include <vector>

#include "assoform/form.hpp"
#include "assoform/matrix.hpp"

namespace assoform {

// h acts on F by differentiation: (h <> F)(y) = h(d/dy1, ..., d/dyn) F(y).
// h is an x-side form of degree j <= deg F; the result is y-side of degree
// deg F - j. No factorial rescaling: the pairing Gram matrix in monomial
// bases is diag(alpha!), which is what the catalecticant entries below
// assume.
Form polar_pair(const Form& h, const Form& F);

// Matrix of the pairing C[x]_i x {F} -> C[y]_{N-i} in monomial bases:
// entry (r, c) is the coefficient of row monomial r in (column monomial c
// <> F). For i = d this is the L x K matrix D(F).
struct CatalecticantMatrix {
    Form F;
    int i;
    std::vector<Monomial> row_basis;  // monomials of C[y]_{N-i}, grlex descending
    std::vector<Monomial> col_basis;  // monomials of C[x]_i
    QMatrix matrix;
};

CatalecticantMatrix catalecticant(const Form& F, int i);

// Deterministic basis of F-perp intersected with C[x]_j: the echelon kernel
// of catalecticant(F, j), returned as x-side degree-j forms. Callers test
// spans, not representatives.
std::vector<Form> annihilator_piece(const Form& F, int j);

// Hilbert function of C[x]/F-perp: t_i = rank catalecticant(F, i) for
// i = 0..deg F. Symmetry t_i = t_{N-i} is a theorem, asserted in tests
// rather than assumed here. Rejects the zero form.
std::vector<int> gorenstein_sequence(const Form& F);

// Span equality of two sets of forms of equal degree, decided by double
// inclusion via ranks of stacked coefficient matrices (basis independent).
bool same_span(const std::vector<Form>& a, const std::vector<Form>& b);

}  // namespace assoform
