#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "assoform/jet.hpp"
#include "assoform/matrix.hpp"
#include "assoform/monomial.hpp"
#include "assoform/rational.hpp"

namespace assoform {

// Which variable alphabet a form lives in. Forms in x are differential
// operators acting on forms in y under the polar pairing.
enum class Side : std::uint8_t { X, Y };

inline char side_letter(Side s) { return s == Side::X ? 'x' : 'y'; }

// Homogeneous polynomial of a fixed degree in a fixed variable set, over an
// exact coefficient ring R. Sparse: terms are kept in descending grlex order
// and zero coefficients are never stored, so equality is structural.
template <class R>
class BasicForm {
  public:
    using TermMap = std::map<Monomial, R, GrlexGreater>;

    BasicForm(Side side, int nvars, int degree) : side_(side), nvars_(nvars), degree_(degree) {
        if (nvars < 1 || degree < 0) throw std::invalid_argument("form: need nvars >= 1, degree >= 0");
    }

    static BasicForm monomial_form(Side side, const Monomial& m, R coef) {
        BasicForm f(side, m.nvars(), m.degree());
        f.add_term(m, std::move(coef));
        return f;
    }

    Side side() const { return side_; }
    int nvars() const { return nvars_; }
    int degree() const { return degree_; }
    bool is_zero_form() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    R coefficient(const Monomial& m) const {
        const auto it = terms_.find(m);
        return it == terms_.end() ? R(0) : it->second;
    }

    // Accumulating insert; drops the entry if the sum cancels.
    void add_term(const Monomial& m, R coef) {
        if (m.nvars() != nvars_) throw std::invalid_argument("form term: variable count mismatch");
        if (m.degree() != degree_) throw std::invalid_argument("form term: degree mismatch");
        if (is_zero(coef)) return;
        auto [it, inserted] = terms_.try_emplace(m, std::move(coef));
        if (!inserted) {
            it->second += coef;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    BasicForm operator-() const {
        BasicForm f(side_, nvars_, degree_);
        for (const auto& [m, c] : terms_) f.terms_.emplace(m, -c);
        return f;
    }

    BasicForm& operator+=(const BasicForm& o) {
        require_same_space(o, "add");
        for (const auto& [m, c] : o.terms_) {
            auto [it, inserted] = terms_.emplace(m, c);
            if (!inserted) {
                it->second += c;
                if (is_zero(it->second)) terms_.erase(it);
            }
        }
        return *this;
    }

    BasicForm& operator-=(const BasicForm& o) { return *this += -o; }

    friend BasicForm operator+(BasicForm a, const BasicForm& b) { return a += b; }
    friend BasicForm operator-(BasicForm a, const BasicForm& b) { return a -= b; }

    friend BasicForm operator*(const R& c, const BasicForm& f) {
        BasicForm g(f.side_, f.nvars_, f.degree_);
        if (is_zero(c)) return g;
        for (const auto& [m, fc] : f.terms_) g.add_term(m, c * fc);
        return g;
    }
    friend BasicForm operator*(const BasicForm& f, const R& c) { return c * f; }

    friend BasicForm operator*(const BasicForm& a, const BasicForm& b) {
        if (a.side_ != b.side_ || a.nvars_ != b.nvars_)
            throw std::invalid_argument("form product: side/variable mismatch");
        BasicForm p(a.side_, a.nvars_, a.degree_ + b.degree_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) p.add_term(ma.times(mb), ca * cb);
        return p;
    }

    friend bool operator==(const BasicForm& a, const BasicForm& b) {
        return a.side_ == b.side_ && a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

  private:
    void require_same_space(const BasicForm& o, const char* what) const {
        if (side_ != o.side_ || nvars_ != o.nvars_ || degree_ != o.degree_) {
            throw std::invalid_argument(std::string("form ") + what + ": side/degree/variable mismatch");
        }
    }

    Side side_;
    int nvars_;
    int degree_;
    TermMap terms_;
};

using Form = BasicForm<Rational>;
using JetForm = BasicForm<Jet>;

template <class R>
BasicForm<R> zero_form(Side side, int nvars, int degree) {
    return BasicForm<R>(side, nvars, degree);
}

// d/d(var) of a homogeneous form; degree drops by one (zero form if the
// input has degree 0).
template <class R>
BasicForm<R> derivative(const BasicForm<R>& f, int var) {
    BasicForm<R> g(f.side(), f.nvars(), f.degree() > 0 ? f.degree() - 1 : 0);
    for (const auto& [m, c] : f.terms()) {
        const int e = m[var];
        if (e == 0) continue;
        std::vector<int> exps = m.exponents();
        exps[static_cast<size_t>(var)] = e - 1;
        g.add_term(Monomial(std::move(exps)), c * R(e));
    }
    return g;
}

// Linear change of variables: substitute(f, C) is the form v -> f(C v),
// i.e. variable i is replaced by sum_j C(i,j) * variable j. Right action:
// substitute(substitute(f, C), D) == substitute(f, C*D).
template <class R>
BasicForm<R> substitute(const BasicForm<R>& f, const Matrix<R>& C) {
    const int n = f.nvars();
    if (C.rows() != n || C.cols() != n) throw std::invalid_argument("substitute: matrix must be n x n");
    std::vector<BasicForm<R>> images;
    images.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        BasicForm<R> li(f.side(), n, 1);
        for (int j = 0; j < n; ++j) {
            std::vector<int> e(static_cast<size_t>(n), 0);
            e[static_cast<size_t>(j)] = 1;
            li.add_term(Monomial(std::move(e)), C(i, j));
        }
        images.push_back(std::move(li));
    }
    BasicForm<R> result(f.side(), n, f.degree());
    for (const auto& [m, c] : f.terms()) {
        BasicForm<R> term(f.side(), n, 0);
        term.add_term(Monomial(n), R(1));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < m[i]; ++k) term = term * images[static_cast<size_t>(i)];
        result += c * term;
    }
    return result;
}

// Same coefficients, re-tagged to the other variable alphabet.
template <class R>
BasicForm<R> with_side(const BasicForm<R>& f, Side side) {
    BasicForm<R> g(side, f.nvars(), f.degree());
    for (const auto& [m, c] : f.terms()) g.add_term(m, c);
    return g;
}

// Dense coefficient vector over basis (which must list monomials of the
// form's degree).
template <class R>
std::vector<R> coefficient_vector(const BasicForm<R>& f, const std::vector<Monomial>& basis) {
    std::vector<R> v;
    v.reserve(basis.size());
    for (const Monomial& m : basis) v.push_back(f.coefficient(m));
    return v;
}

template <class R>
BasicForm<R> form_from_coefficients(Side side, int nvars, int degree, const std::vector<Monomial>& basis,
                                    const std::vector<R>& coeffs) {
    if (basis.size() != coeffs.size()) throw std::invalid_argument("form_from_coefficients: length mismatch");
    BasicForm<R> f(side, nvars, degree);
    for (size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coeffs[i]);
    return f;
}

template <class R>
R evaluate(const BasicForm<R>& f, const std::vector<R>& point) {
    if (static_cast<int>(point.size()) != f.nvars()) throw std::invalid_argument("evaluate: wrong point size");
    R total(0);
    for (const auto& [m, c] : f.terms()) {
        R term = c;
        for (int i = 0; i < f.nvars(); ++i)
            for (int k = 0; k < m[i]; ++k) term *= point[static_cast<size_t>(i)];
        total += term;
    }
    return total;
}

// Lift a rational form to jets (all derivative parts zero).
inline JetForm jet_lift(const Form& f) {
    JetForm g(f.side(), f.nvars(), f.degree());
    for (const auto& [m, c] : f.terms()) g.add_term(m, Jet(c));
    return g;
}

}  // namespace assoform
