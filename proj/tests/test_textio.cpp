#include <doctest.h>

#include <algorithm>
#include <set>

#include "assoform/prng.hpp"
#include "assoform/sampling.hpp"
#include "assoform/ternary.hpp"
#include "assoform/textio.hpp"

using namespace assoform;

TEST_CASE("parsing the fixture grammar") {
    CHECK(parse_form("y1^3 + y2^3 + y3^3", Side::Y, 3) == hesse_cubic(0));

    Form gen(Side::X, 3, 2);
    gen.add_term(Monomial(std::vector<int>{2, 0, 0}), 1);
    gen.add_term(Monomial(std::vector<int>{0, 1, 1}), -6);
    CHECK(parse_form("x1^2 - 6*x2*x3", Side::X, 3) == gen);

    CHECK(parse_form("0", Side::X, 2).is_zero_form());
    CHECK(parse_form("0", Side::X, 2, 4).degree() == 4);
    CHECK(parse_form("x1 - x1", Side::X, 2).is_zero_form());

    // implicit * after the coefficient, explicit elsewhere
    CHECK(parse_form("3y1*y2^2", Side::Y, 2) ==
          Form::monomial_form(Side::Y, Monomial(std::vector<int>{1, 2}), 3));
    CHECK(parse_form("1/2*x1^2", Side::X, 1) ==
          Form::monomial_form(Side::X, Monomial(std::vector<int>{2}), make_rational(1, 2)));
    CHECK(parse_form("-x1 + 2*x2", Side::X, 2).coefficient(Monomial(std::vector<int>{1, 0})) == -1);
    CHECK(parse_form("x1^2 + 0", Side::X, 2).degree() == 2);  // zero terms dropped before the degree check
}

TEST_CASE("parse errors carry positions, degree errors are separate") {
    CHECK_THROWS_AS(parse_form("", Side::X, 2), ParseError);
    CHECK_THROWS_AS(parse_form("x1 + ", Side::X, 2), ParseError);
    CHECK_THROWS_AS(parse_form("3*", Side::X, 2), ParseError);
    CHECK_THROWS_AS(parse_form("x1 x2", Side::X, 2), ParseError);
    CHECK_THROWS_AS(parse_form("y1", Side::X, 2), ParseError);   // wrong alphabet
    CHECK_THROWS_AS(parse_form("x3", Side::X, 2), ParseError);   // index out of range
    CHECK_THROWS_AS(parse_form("x1/2", Side::X, 2), ParseError); // division only inside rationals

    try {
        parse_form("x1^2 + @", Side::X, 2);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.pos == 7);
        CHECK(std::string(e.what()).find("position 7") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_form("x1 + x1^2", Side::X, 2), DegreeError);
    CHECK_THROWS_AS(parse_form("x1^2", Side::X, 2, 3), DegreeError);
}

TEST_CASE("rendering is canonical") {
    CHECK(render_form(Form(Side::X, 2, 3)) == "0");
    CHECK(render_form(canonical_cubic(4)) == "y1^2*y3 + y2*y3^2");
    CHECK(render_form(make_rational(1, 36) * canonical_cubic(6)) == "1/36*y1*y2*y3");
    CHECK(render_form(make_rational(-1) * canonical_cubic(9)) == "-y1^3");
    Form mixed(Side::X, 3, 2);
    mixed.add_term(Monomial(std::vector<int>{2, 0, 0}), 1);
    mixed.add_term(Monomial(std::vector<int>{0, 1, 1}), -6);
    CHECK(render_form(mixed) == "x1^2 - 6*x2*x3");
    // degree-zero forms print as bare rationals
    CHECK(render_form(Form::monomial_form(Side::Y, Monomial(3), make_rational(2))) == "2");
}

TEST_CASE("parse of render is the identity") {
    const std::vector<std::pair<int, int>> spaces = {{2, 2}, {2, 4}, {3, 2}, {3, 3}, {3, 6}};
    SplitMix64 rng(21);
    for (const auto& [n, degree] : spaces) {
        for (int k = 0; k < 1000; ++k) {
            const Form f = random_form(rng, Side::Y, n, degree, 9);
            CHECK(parse_form(render_form(f), Side::Y, n, degree) == f);
        }
    }
}

TEST_CASE("rendering is injective on sampled canonical forms") {
    SplitMix64 rng(22);
    std::set<std::string> seen;
    std::vector<Form> forms;
    for (int k = 0; k < 300; ++k) {
        const Form f = random_form(rng, Side::Y, 2, 3, 2);  // small space forces collisions of forms, not strings
        const std::string text = render_form(f);
        const bool duplicate_form =
            std::any_of(forms.begin(), forms.end(), [&](const Form& g) { return g == f; });
        if (!duplicate_form) {
            CHECK(seen.find(text) == seen.end());
            forms.push_back(f);
        }
        seen.insert(text);
    }
}

TEST_CASE("json schema round trip") {
    SplitMix64 rng(23);
    for (int k = 0; k < 50; ++k) {
        const Form f = random_form(rng, Side::Y, 3, 3, 9);
        const nlohmann::json j = form_to_json(f);
        CHECK(j.at("side") == "y");
        CHECK(j.at("n") == 3);
        CHECK(j.at("degree") == 3);
        for (const auto& term : j.at("terms")) {
            CHECK(term.at("num").is_string());
            CHECK(term.at("den").is_string());
        }
        CHECK(form_from_json(j) == f);
    }
    // big numerators survive as decimal strings
    Form big = Form::monomial_form(Side::X, Monomial(std::vector<int>{1, 1}),
                                   rational_from_strings("123456789012345678901234567890", "7"));
    CHECK(form_from_json(form_to_json(big)) == big);
}

TEST_CASE("fixture files: one form per line with comments") {
    const std::string text = "# canonical cubics\ny1*y2*y3\n\n  # blank above\ny1^3\n";
    const std::vector<Form> forms = parse_form_lines(text, Side::Y, 3, 3);
    REQUIRE(forms.size() == 2);
    CHECK(forms[0] == canonical_cubic(6));
    CHECK(forms[1] == canonical_cubic(9));
}
