#pragma once

#include <cstdint>
#include <vector>

#include "assoform/rational.hpp"

namespace assoform {

// Exponent vector of a monomial in a fixed set of variables. Immutable value.
class Monomial {
  public:
    explicit Monomial(int nvars) : exp_(static_cast<size_t>(nvars), 0) {}
    explicit Monomial(std::vector<int> exps) : exp_(std::move(exps)) {}

    int nvars() const { return static_cast<int>(exp_.size()); }
    int degree() const;
    int operator[](int i) const { return exp_[static_cast<size_t>(i)]; }
    const std::vector<int>& exponents() const { return exp_; }

    // Exponent-wise sum (monomial product).
    Monomial times(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    // Exponent-wise difference; requires divides(other).
    Monomial quotient_into(const Monomial& other) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exp_ == b.exp_; }

  private:
    std::vector<int> exp_;
};

// The one term order used everywhere: graded lexicographic with
// x1 > x2 > ... > xn. Matrix indexing, kernel normalization and the chart
// scan in the catalecticant machinery all assume this order is fixed.
bool grlex_greater(const Monomial& a, const Monomial& b);

struct GrlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

// All monomials of the given degree in nvars variables, leading first
// (descending grlex). Length is binom(degree + nvars - 1, nvars - 1).
std::vector<Monomial> monomial_basis(int nvars, int degree);

int graded_dimension(int nvars, int degree);

// Position of m in monomial_basis(m.nvars(), m.degree()).
int monomial_position(const std::vector<Monomial>& basis, const Monomial& m);

Int binomial(long long n, long long k);

// total! / (alpha_1! ... alpha_n!), with |alpha| = total.
Int multinomial(int total, const Monomial& alpha);

}  // namespace assoform
