#pragma once

#include "assoform/catvar.hpp"
#include "assoform/form.hpp"

namespace assoform {

// Classical coefficient normalization of a ternary cubic:
//   c = a y1^3 + b y2^3 + c y3^3 + 3d y1^2 y2 + 3e y1^2 y3 + 3f y1 y2^2
//     + 3g y2^2 y3 + 3h y1 y3^2 + 3i y2 y3^2 + 6j y1 y2 y3.
// The conversion to and from a y-side degree-3 form in three variables is
// lossless; the 3s and 6s live only here.
struct TernaryCubic {
    Rational a, b, c, d, e, f, g, h, i, j;
};

TernaryCubic ternary_from_form(const Form& cubic);
Form ternary_to_form(const TernaryCubic& t);

// The degree-4 Aronhold invariant S, evaluated term for term in the
// normalization above. Vanishes exactly on the complement of the image of
// the associated-form morphism for n = 3, d = 2.
Rational aronhold_S(const TernaryCubic& t);
Rational aronhold_S(const Form& cubic);

// The canonical representatives of the nonzero GL_3-orbits of ternary
// cubics, indexed 2..9:
//   2: y1^3 + y2^2 y3        (cuspidal)     6: y1 y2 y3
//   3: y1^3 + y1^2 y3 + y2^2 y3  (nodal)    7: y1^2 y2 + y1 y2^2
//   4: y1^2 y3 + y2 y3^2                    8: y1^2 y2
//   5: y1^3 + y1 y2 y3                      9: y1^3
Form canonical_cubic(int index);

// The pencil member c_t = y1^3 + y2^3 + y3^3 + t y1 y2 y3; requires
// t^3 != -27 (over the rationals: t != -3).
Form hesse_cubic(const Rational& t);

// Membership of a ternary cubic in the image of the morphism, decided by
// S != 0. The chart route in_U_Res must agree on every input; the
// verification suites assert that equivalence.
bool in_image_ternary(const Form& cubic);

}  // namespace assoform
