#include "assoform/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace assoform {

int Monomial::degree() const {
    int d = 0;
    for (int e : exp_) d += e;
    return d;
}

Monomial Monomial::times(const Monomial& other) const {
    if (nvars() != other.nvars()) throw std::invalid_argument("monomial product: variable count mismatch");
    std::vector<int> e(exp_);
    for (size_t i = 0; i < e.size(); ++i) e[i] += other.exp_[i];
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& other) const {
    if (nvars() != other.nvars()) return false;
    for (size_t i = 0; i < exp_.size(); ++i)
        if (exp_[i] > other.exp_[i]) return false;
    return true;
}

Monomial Monomial::quotient_into(const Monomial& other) const {
    if (!divides(other)) throw std::invalid_argument("monomial quotient: not divisible");
    std::vector<int> e(other.exp_);
    for (size_t i = 0; i < e.size(); ++i) e[i] -= exp_[i];
    return Monomial(std::move(e));
}

bool grlex_greater(const Monomial& a, const Monomial& b) {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    // same degree: lexicographic on exponents, x1 heaviest
    return a.exponents() > b.exponents();
}

namespace {

void build_basis(int nvars, int degree, std::vector<int>& prefix, std::vector<Monomial>& out) {
    if (static_cast<int>(prefix.size()) == nvars - 1) {
        prefix.push_back(degree);
        out.emplace_back(prefix);
        prefix.pop_back();
        return;
    }
    for (int e = degree; e >= 0; --e) {
        prefix.push_back(e);
        build_basis(nvars, degree - e, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Monomial> monomial_basis(int nvars, int degree) {
    if (nvars < 1 || degree < 0) throw std::invalid_argument("monomial_basis: need nvars >= 1, degree >= 0");
    std::vector<Monomial> out;
    out.reserve(static_cast<size_t>(graded_dimension(nvars, degree)));
    std::vector<int> prefix;
    build_basis(nvars, degree, prefix, out);
    return out;
}

int graded_dimension(int nvars, int degree) {
    return static_cast<int>(binomial(degree + nvars - 1, nvars - 1));
}

int monomial_position(const std::vector<Monomial>& basis, const Monomial& m) {
    const auto it = std::lower_bound(basis.begin(), basis.end(), m, GrlexGreater{});
    if (it == basis.end() || !(*it == m)) throw std::invalid_argument("monomial_position: monomial not in basis");
    return static_cast<int>(it - basis.begin());
}

Int binomial(long long n, long long k) {
    if (k < 0 || k > n) return Int(0);
    if (k > n - k) k = n - k;
    Int r(1);
    for (long long i = 1; i <= k; ++i) {
        r *= Int(n - k + i);
        r /= Int(i);
    }
    return r;
}

Int multinomial(int total, const Monomial& alpha) {
    if (alpha.degree() != total) throw std::invalid_argument("multinomial: exponents must sum to total");
    Int r(1);
    int used = 0;
    for (int i = 0; i < alpha.nvars(); ++i) {
        used += alpha[i];
        r *= binomial(used, alpha[i]);
    }
    return r;
}

}  // namespace assoform
