#pragma once

#include <stdexcept>
#include <utility>

#include "assoform/rational.hpp"

namespace assoform {

// First-order jet a + b*eps with eps^2 = 0. Running a rational computation
// on jets carries an exact directional derivative through every step; the
// value part evolves exactly as the plain computation would.
class Jet {
  public:
    Jet() = default;
    Jet(long long v) : val_(v) {}  // implicit: ring constants promote
    Jet(Rational v) : val_(std::move(v)) {}
    Jet(Rational v, Rational d) : val_(std::move(v)), der_(std::move(d)) {}

    const Rational& value() const { return val_; }
    const Rational& deriv() const { return der_; }

    Jet operator-() const { return Jet(-val_, -der_); }

    Jet& operator+=(const Jet& o) {
        val_ += o.val_;
        der_ += o.der_;
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        val_ -= o.val_;
        der_ -= o.der_;
        return *this;
    }
    Jet& operator*=(const Jet& o) {
        der_ = val_ * o.der_ + der_ * o.val_;
        val_ *= o.val_;
        return *this;
    }
    Jet& operator/=(const Jet& o) {
        if (o.val_.is_zero())
            throw std::domain_error("jet division by element with zero value part");
        // (a + b eps)/(c + d eps) = a/c + (b c - a d)/c^2 eps
        der_ = (der_ * o.val_ - val_ * o.der_) / (o.val_ * o.val_);
        val_ /= o.val_;
        return *this;
    }

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator*(Jet a, const Jet& b) { return a *= b; }
    friend Jet operator/(Jet a, const Jet& b) { return a /= b; }

    friend bool operator==(const Jet& a, const Jet& b) {
        return a.val_ == b.val_ && a.der_ == b.der_;
    }

  private:
    Rational val_{0};
    Rational der_{0};
};

inline bool is_zero(const Jet& j) { return j.value().is_zero() && j.deriv().is_zero(); }

// Invertible iff the value part is nonzero; pure-eps elements are zero divisors.
inline bool is_unit(const Jet& j) { return !j.value().is_zero(); }

}  // namespace assoform
