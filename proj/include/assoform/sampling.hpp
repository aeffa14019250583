#pragma once

#include <stdexcept>

#include "assoform/form.hpp"
#include "assoform/prng.hpp"
#include "assoform/quotalg.hpp"

namespace assoform {

// Every sampling loop below fails loudly instead of silently shrinking the
// sample.
struct SamplingExhausted : std::runtime_error {
    explicit SamplingExhausted(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr int kRejectionCap = 10000;

// Dense random form: every monomial coefficient drawn uniformly from the
// integers in [-height, height] (zeros make it sparse in practice).
Form random_form(SplitMix64& rng, Side side, int n, int degree, int height);

// Random tuple accepted only when the resultant predicate holds; throws
// SamplingExhausted after the rejection cap.
FormTuple random_good_tuple(SplitMix64& rng, int n, int d, int height);

// Random integer matrix with nonzero determinant (entries in
// [-height, height]); rejection capped as above.
QMatrix random_invertible_matrix(SplitMix64& rng, int n, int height);

// Product of eight random integer shears: determinant exactly one.
QMatrix random_sl_matrix(SplitMix64& rng, int n, int height);

}  // namespace assoform
