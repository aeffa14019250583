#include "assoform/ternary.hpp"

#include <stdexcept>

namespace assoform {

namespace {

Monomial mono3(int e1, int e2, int e3) { return Monomial(std::vector<int>{e1, e2, e3}); }

void require_ternary_cubic(const Form& c) {
    if (c.side() != Side::Y || c.nvars() != 3 || c.degree() != 3)
        throw std::invalid_argument("expected a y-side ternary cubic");
}

}  // namespace

TernaryCubic ternary_from_form(const Form& cubic) {
    require_ternary_cubic(cubic);
    const Rational third = make_rational(1, 3);
    const Rational sixth = make_rational(1, 6);
    return TernaryCubic{
        cubic.coefficient(mono3(3, 0, 0)),
        cubic.coefficient(mono3(0, 3, 0)),
        cubic.coefficient(mono3(0, 0, 3)),
        third * cubic.coefficient(mono3(2, 1, 0)),
        third * cubic.coefficient(mono3(2, 0, 1)),
        third * cubic.coefficient(mono3(1, 2, 0)),
        third * cubic.coefficient(mono3(0, 2, 1)),
        third * cubic.coefficient(mono3(1, 0, 2)),
        third * cubic.coefficient(mono3(0, 1, 2)),
        sixth * cubic.coefficient(mono3(1, 1, 1)),
    };
}

Form ternary_to_form(const TernaryCubic& t) {
    Form c(Side::Y, 3, 3);
    c.add_term(mono3(3, 0, 0), t.a);
    c.add_term(mono3(0, 3, 0), t.b);
    c.add_term(mono3(0, 0, 3), t.c);
    c.add_term(mono3(2, 1, 0), 3 * t.d);
    c.add_term(mono3(2, 0, 1), 3 * t.e);
    c.add_term(mono3(1, 2, 0), 3 * t.f);
    c.add_term(mono3(0, 2, 1), 3 * t.g);
    c.add_term(mono3(1, 0, 2), 3 * t.h);
    c.add_term(mono3(0, 1, 2), 3 * t.i);
    c.add_term(mono3(1, 1, 1), 6 * t.j);
    return c;
}

Rational aronhold_S(const TernaryCubic& t) {
    const auto& [a, b, c, d, e, f, g, h, i, j] = t;
    return a * b * c * j - b * c * d * e - c * a * f * g - a * b * h * i
         - j * (a * g * i + b * h * e + c * d * f)
         + a * f * i * i + a * h * g * g + b * d * h * h + b * i * e * e + c * g * d * d + c * e * f * f
         - j * j * j * j
         + 2 * j * j * (f * h + i * d + e * g)
         - 3 * j * (d * g * h + e * f * i)
         - f * f * h * h - i * i * d * d - e * e * g * g
         + i * d * e * g + e * g * f * h + f * h * i * d;
}

Rational aronhold_S(const Form& cubic) { return aronhold_S(ternary_from_form(cubic)); }

Form canonical_cubic(int index) {
    Form c(Side::Y, 3, 3);
    switch (index) {
        case 2:  // cuspidal
            c.add_term(mono3(3, 0, 0), 1);
            c.add_term(mono3(0, 2, 1), 1);
            break;
        case 3:  // nodal
            c.add_term(mono3(3, 0, 0), 1);
            c.add_term(mono3(2, 0, 1), 1);
            c.add_term(mono3(0, 2, 1), 1);
            break;
        case 4:
            c.add_term(mono3(2, 0, 1), 1);
            c.add_term(mono3(0, 1, 2), 1);
            break;
        case 5:
            c.add_term(mono3(3, 0, 0), 1);
            c.add_term(mono3(1, 1, 1), 1);
            break;
        case 6:
            c.add_term(mono3(1, 1, 1), 1);
            break;
        case 7:
            c.add_term(mono3(2, 1, 0), 1);
            c.add_term(mono3(1, 2, 0), 1);
            break;
        case 8:
            c.add_term(mono3(2, 1, 0), 1);
            break;
        case 9:
            c.add_term(mono3(3, 0, 0), 1);
            break;
        default:
            throw std::invalid_argument("canonical_cubic: index must be 2..9 (the pencil member is hesse_cubic)");
    }
    return c;
}

Form hesse_cubic(const Rational& t) {
    if (t == -3) throw std::invalid_argument("hesse_cubic: t^3 = -27 is excluded (degenerate pencil member)");
    Form c(Side::Y, 3, 3);
    c.add_term(mono3(3, 0, 0), 1);
    c.add_term(mono3(0, 3, 0), 1);
    c.add_term(mono3(0, 0, 3), 1);
    c.add_term(mono3(1, 1, 1), t);
    return c;
}

bool in_image_ternary(const Form& cubic) { return !aronhold_S(cubic).is_zero(); }

}  // namespace assoform
