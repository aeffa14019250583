#include <doctest.h>

#include "assoform/prng.hpp"
#include "assoform/sampling.hpp"
#include "assoform/ternary.hpp"
#include "assoform/textio.hpp"

using namespace assoform;

namespace {

// Independent oracle for the invariant: build the defining degree-4
// polynomial in ten indeterminates (a..j) once with generic form
// arithmetic, then evaluate it at concrete coefficients. Shares nothing
// with the hand-coded evaluation path.
const Form& symbolic_invariant() {
    static const Form s = [] {
        const auto var = [](int i) {
            std::vector<int> e(10, 0);
            e[static_cast<size_t>(i)] = 1;
            return Form::monomial_form(Side::X, Monomial(std::move(e)), 1);
        };
        const Form a = var(0), b = var(1), c = var(2), d = var(3), e = var(4);
        const Form f = var(5), g = var(6), h = var(7), i = var(8), j = var(9);
        return a * b * c * j - b * c * d * e - c * a * f * g - a * b * h * i -
               j * (a * g * i + b * h * e + c * d * f) + a * f * i * i + a * h * g * g + b * d * h * h +
               b * i * e * e + c * g * d * d + c * e * f * f - j * j * j * j +
               Rational(2) * (j * j * (f * h + i * d + e * g)) - Rational(3) * (j * (d * g * h + e * f * i)) -
               f * f * h * h - i * i * d * d - e * e * g * g + i * d * e * g + e * g * f * h + f * h * i * d;
    }();
    return s;
}

Rational oracle_S(const Form& cubic) {
    const TernaryCubic t = ternary_from_form(cubic);
    return evaluate(symbolic_invariant(), {t.a, t.b, t.c, t.d, t.e, t.f, t.g, t.h, t.i, t.j});
}

}  // namespace

TEST_CASE("coefficient normalization is lossless") {
    SplitMix64 rng(91);
    for (int k = 0; k < 30; ++k) {
        const Form c = random_form(rng, Side::Y, 3, 3, 9);
        CHECK(ternary_to_form(ternary_from_form(c)) == c);
    }
    // the 3s and 6s sit exactly where the parametrization says
    TernaryCubic t{0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
    t.d = 1;
    CHECK(ternary_to_form(t) == parse_form("3*y1^2*y2", Side::Y, 3));
    t.d = 0;
    t.j = 1;
    CHECK(ternary_to_form(t) == parse_form("6*y1*y2*y3", Side::Y, 3));
}

TEST_CASE("canonical cubics are the listed forms") {
    CHECK(canonical_cubic(4) == parse_form("y1^2*y3 + y2*y3^2", Side::Y, 3));
    CHECK(canonical_cubic(8) == parse_form("y1^2*y2", Side::Y, 3));
    CHECK(hesse_cubic(0) == parse_form("y1^3 + y2^3 + y3^3", Side::Y, 3));
    CHECK(hesse_cubic(make_rational(5, 7)) ==
          parse_form("y1^3 + y2^3 + y3^3 + 5/7*y1*y2*y3", Side::Y, 3));
    CHECK_THROWS_AS(canonical_cubic(1), std::invalid_argument);
    CHECK_THROWS_AS(canonical_cubic(10), std::invalid_argument);
    CHECK_THROWS_AS(hesse_cubic(-3), std::invalid_argument);  // t^3 = -27
}

TEST_CASE("invariant values on the canonical families") {
    CHECK(aronhold_S(hesse_cubic(1)) == make_rational(215, 1296));
    CHECK(aronhold_S(hesse_cubic(2)) == make_rational(26, 81));
    CHECK(aronhold_S(canonical_cubic(6)) == make_rational(-1, 1296));
    CHECK(aronhold_S(canonical_cubic(3)) == make_rational(-1, 81));
    CHECK(aronhold_S(canonical_cubic(5)) == make_rational(-1, 1296));
    for (int k : {2, 4, 7, 8, 9}) CHECK(aronhold_S(canonical_cubic(k)).is_zero());
    CHECK(aronhold_S(hesse_cubic(0)).is_zero());
    CHECK(aronhold_S(hesse_cubic(6)).is_zero());  // tau^3 = 216
}

TEST_CASE("hand-coded invariant matches the symbolic expansion") {
    for (int k = 2; k <= 9; ++k) CHECK(aronhold_S(canonical_cubic(k)) == oracle_S(canonical_cubic(k)));
    SplitMix64 rng(92);
    for (int k = 0; k < 50; ++k) {
        const Form c = random_form(rng, Side::Y, 3, 3, 9);
        CHECK(aronhold_S(c) == oracle_S(c));
    }
}

TEST_CASE("invariant scaling and SL3 invariance") {
    SplitMix64 rng(93);
    for (int k = 0; k < 20; ++k) {
        const Form c = random_form(rng, Side::Y, 3, 3, 9);
        Rational lambda = make_rational(rng.bounded(9), 1 + static_cast<long long>(rng.next() % 5));
        const Rational expected = pow_rational(lambda, 4) * aronhold_S(c);
        CHECK(aronhold_S(lambda * c) == expected);

        const QMatrix u = random_sl_matrix(rng, 3, 3);
        CHECK(det(u) == 1);
        CHECK(aronhold_S(substitute(c, u)) == aronhold_S(c));
    }
}

TEST_CASE("membership by the invariant") {
    CHECK(in_image_ternary(canonical_cubic(3)));
    CHECK(in_image_ternary(canonical_cubic(5)));
    CHECK(!in_image_ternary(canonical_cubic(9)));
    CHECK(!in_image_ternary(Form(Side::Y, 3, 3)));
}
