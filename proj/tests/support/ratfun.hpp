#pragma once

// Test-only coefficient ring: univariate rational functions P(h)/Q(h) over
// the exact rationals. Running the associated-form pipeline over this ring
// gives a fully symbolic function of the deformation parameter h, an
// independent check of the jet (dual-number) route: the jet derivative must
// equal d/dh at h = 0, and specializing h to a concrete rational must equal
// the plain computation on the specialized tuple.

#include <stdexcept>
#include <vector>

#include "assoform/rational.hpp"

namespace assoform::testsupport {

class Poly {
  public:
    Poly() = default;
    Poly(const Rational& c) {
        if (!c.is_zero()) coeffs_.push_back(c);
    }
    explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Poly variable() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for the zero polynomial
    const Rational& leading() const { return coeffs_.back(); }
    Rational coefficient(int i) const {
        return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[static_cast<size_t>(i)] : Rational(0);
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return Poly(std::move(c));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
        for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
        return Poly(std::move(c));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(c));
    }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    Poly scaled(const Rational& s) const {
        if (s.is_zero()) return Poly();
        std::vector<Rational> c = coeffs_;
        for (Rational& x : c) x *= s;
        return Poly(std::move(c));
    }

    // quotient and remainder of exact division by a nonzero polynomial
    std::pair<Poly, Poly> divrem(const Poly& div) const {
        if (div.is_zero()) throw std::domain_error("poly division by zero");
        std::vector<Rational> rem = coeffs_;
        std::vector<Rational> quot(rem.size() > div.coeffs_.size() ? rem.size() - div.coeffs_.size() + 1 : 1,
                                   Rational(0));
        while (rem.size() >= div.coeffs_.size() && !rem.empty()) {
            const Rational factor = rem.back() / div.coeffs_.back();
            const size_t shift = rem.size() - div.coeffs_.size();
            quot[shift] = factor;
            for (size_t i = 0; i < div.coeffs_.size(); ++i) rem[shift + i] -= factor * div.coeffs_[i];
            while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
        }
        return {Poly(std::move(quot)), Poly(std::move(rem))};
    }

    Rational evaluate(const Rational& at) const {
        Rational acc(0);
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * at + coeffs_[i];
        return acc;
    }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<Rational> c(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = Rational(static_cast<long long>(i)) * coeffs_[i];
        return Poly(std::move(c));
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

inline Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divrem(b).second;
        a = std::move(b);
        b = r.is_zero() ? Poly() : r.scaled(Rational(1) / r.leading());  // keep remainders monic
    }
    if (a.is_zero()) return Poly();
    return a.scaled(Rational(1) / a.leading());
}

class RatFun {
  public:
    RatFun() : num_(), den_(Rational(1)) {}
    RatFun(long long c) : num_(Rational(c)), den_(Rational(1)) {}
    RatFun(const Rational& c) : num_(c), den_(Rational(1)) {}
    RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    static RatFun variable() { return RatFun(Poly::variable(), Poly(Rational(1))); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFun operator-() const { return RatFun(num_.scaled(Rational(-1)), den_, already_normal{}); }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
    friend RatFun operator*(const RatFun& a, const RatFun& b) { return RatFun(a.num_ * b.num_, a.den_ * b.den_); }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw std::domain_error("rational function division by zero");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }

    friend bool operator==(const RatFun& a, const RatFun& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    Rational evaluate(const Rational& at) const {
        const Rational d = den_.evaluate(at);
        if (d.is_zero()) throw std::domain_error("rational function has a pole at the evaluation point");
        return num_.evaluate(at) / d;
    }

    Rational value_at_zero() const { return evaluate(Rational(0)); }

    Rational derivative_at_zero() const {
        const Rational q = den_.evaluate(Rational(0));
        if (q.is_zero()) throw std::domain_error("rational function has a pole at zero");
        const Rational p = num_.evaluate(Rational(0));
        return (num_.derivative().evaluate(Rational(0)) * q - p * den_.derivative().evaluate(Rational(0))) / (q * q);
    }

  private:
    struct already_normal {};
    RatFun(Poly num, Poly den, already_normal) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
        if (num_.is_zero()) {
            den_ = Poly(Rational(1));
            return;
        }
        const Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divrem(g).first;
            den_ = den_.divrem(g).first;
        }
        const Rational lead = den_.leading();
        num_ = num_.scaled(Rational(1) / lead);
        den_ = den_.scaled(Rational(1) / lead);
    }

    Poly num_;
    Poly den_;
};

inline bool is_zero(const RatFun& f) { return f.is_zero(); }
inline bool is_unit(const RatFun& f) { return !f.is_zero(); }

}  // namespace assoform::testsupport
