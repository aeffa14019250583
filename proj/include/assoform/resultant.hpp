#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "assoform/prng.hpp"
#include "assoform/quotalg.hpp"

namespace assoform {

enum class ResultantMethod { FiniteColength, Sylvester, MacaulayQuotient };

// Outcome of a resultant query. A value is only present when one of the
// determinant routes ran; the predicate alone is enough for every decision
// in the membership machinery.
struct ResultantReport {
    bool nonvanishing = false;
    std::optional<Rational> value;
    ResultantMethod method = ResultantMethod::FiniteColength;
    int retries = 0;
};

// The primary Res != 0 test: finite colength of the quotient algebra,
// which for tuples of equal degree is equivalent to the resultant being
// nonzero. Works for every n and never needs genericity.
bool resultant_nonvanishing(const FormTuple& t);

// Resultant of two binary forms of one degree d as the determinant of the
// 2d x 2d Sylvester matrix: rows 0..d-1 carry the coefficient sequence of f
// (grlex order, i.e. x1^d down to x2^d) shifted right by the row index,
// rows d..2d-1 the same for g.
Rational sylvester_resultant(const Form& f, const Form& g);

struct GenericityFailure : std::runtime_error {
    GenericityFailure()
        : std::runtime_error("macaulay resultant: denominator minor vanished for every tried coordinate change") {}
};

// Classical Macaulay quotient det(M)/det(M') in degree t = n(d-1)+1.
// Monomials x^gamma of degree t are assigned to the smallest i with
// gamma_i >= d; the row of gamma is (x^gamma / x_i^d) f_i. M' is the
// submatrix on the monomials divisible by x_i^d for at least two i. When
// det(M') = 0 the tuple is retried after a seeded unimodular change of
// x-coordinates (shears only, so the resultant is unchanged), up to 20
// times; GenericityFailure after that. The normalization fixed by this
// construction is documented behavior, but no caller relies on the
// absolute scale, only on (non)vanishing.
Rational macaulay_resultant(const FormTuple& t, SplitMix64& rng);

// Predicate plus an exact value when one of the determinant routes
// succeeds; falls back to the finite-colength predicate on
// GenericityFailure.
ResultantReport analyze_resultant(const FormTuple& t, std::uint64_t seed = 0x9e3779b9ULL);

}  // namespace assoform
