#include <doctest.h>

#include "assoform/prng.hpp"
#include "assoform/resultant.hpp"
#include "assoform/sampling.hpp"
#include "assoform/ternary.hpp"
#include "assoform/textio.hpp"

using namespace assoform;

namespace {

Form binary_from_roots(const std::vector<std::pair<long long, long long>>& lines) {
    // product of the linear forms a x1 + b x2
    Form f = Form::monomial_form(Side::X, Monomial(2), 1);
    for (const auto& [a, b] : lines) {
        Form line(Side::X, 2, 1);
        line.add_term(Monomial(std::vector<int>{1, 0}), make_rational(a));
        line.add_term(Monomial(std::vector<int>{0, 1}), make_rational(b));
        f = f * line;
    }
    return f;
}

// resultant of split binary forms: product of 2x2 determinants of the
// factor coefficients, by multiplicativity in each slot
Rational product_of_pairs(const std::vector<std::pair<long long, long long>>& fs,
                          const std::vector<std::pair<long long, long long>>& gs) {
    Rational res(1);
    for (const auto& [a, b] : fs)
        for (const auto& [c, d] : gs) res *= make_rational(a) * make_rational(d) - make_rational(b) * make_rational(c);
    return res;
}

}  // namespace

TEST_CASE("sylvester resultants on pinned pairs") {
    CHECK(sylvester_resultant(parse_form("x1^2", Side::X, 2), parse_form("x2^2", Side::X, 2)) == 1);
    CHECK(sylvester_resultant(parse_form("x1^2", Side::X, 2), parse_form("x1*x2", Side::X, 2)) == 0);
    CHECK(sylvester_resultant(parse_form("x1^2 + 2*x1*x2 + x2^2", Side::X, 2),
                              parse_form("x1^2 - 2*x1*x2 + x2^2", Side::X, 2)) == 16);
}

TEST_CASE("sylvester matches the product formula on split forms") {
    SplitMix64 rng(61);
    int done = 0;
    while (done < 20) {
        const int d = 2 + static_cast<int>(rng.next() % 3);
        std::vector<std::pair<long long, long long>> fs, gs;
        for (int i = 0; i < d; ++i) {
            fs.emplace_back(rng.bounded(4), rng.bounded(4));
            gs.emplace_back(rng.bounded(4), rng.bounded(4));
        }
        const auto degenerate = [](const std::vector<std::pair<long long, long long>>& ls) {
            for (const auto& [a, b] : ls)
                if (a == 0 && b == 0) return true;
            return false;
        };
        if (degenerate(fs) || degenerate(gs)) continue;
        CHECK(sylvester_resultant(binary_from_roots(fs), binary_from_roots(gs)) == product_of_pairs(fs, gs));
        ++done;
    }
}

TEST_CASE("sylvester nonvanishing matches the colength predicate") {
    SplitMix64 rng(62);
    for (int d = 2; d <= 4; ++d) {
        for (int k = 0; k < 40; ++k) {
            const Form f = random_form(rng, Side::X, 2, d, 9);
            const Form g = random_form(rng, Side::X, 2, d, 9);
            const FormTuple t = make_form_tuple(std::vector<Form>{f, g});
            CHECK(!sylvester_resultant(f, g).is_zero() == resultant_nonvanishing(t));
        }
    }
}

TEST_CASE("macaulay quotient: pinned values and the sylvester cross-check") {
    SplitMix64 rng(63);
    CHECK(macaulay_resultant(make_form_tuple(std::vector<Form>{parse_form("x1^2", Side::X, 2),
                                                               parse_form("x2^2", Side::X, 2)}),
                             rng) == 1);
    // for binary pairs the Macaulay matrix is the Sylvester matrix
    for (int d = 2; d <= 3; ++d) {
        for (int k = 0; k < 25; ++k) {
            const Form f = random_form(rng, Side::X, 2, d, 9);
            const Form g = random_form(rng, Side::X, 2, d, 9);
            SplitMix64 retry(1);
            CHECK(macaulay_resultant(make_form_tuple(std::vector<Form>{f, g}), retry) ==
                  sylvester_resultant(f, g));
        }
    }
}

TEST_CASE("macaulay nonvanishing matches the colength predicate on ternary quadrics") {
    SplitMix64 rng(64);
    SplitMix64 retry(2);
    for (int k = 0; k < 30; ++k) {
        std::vector<Form> forms;
        for (int i = 0; i < 3; ++i) forms.push_back(random_form(rng, Side::X, 3, 2, 9));
        const FormTuple t = make_form_tuple(std::move(forms));
        CHECK(!macaulay_resultant(t, retry).is_zero() == resultant_nonvanishing(t));
    }
    // tuples with a designed common zero must give exactly zero
    const FormTuple cusp_kernel = make_form_tuple(std::vector<Form>{
        parse_form("x1*x2", Side::X, 3), parse_form("x1*x3", Side::X, 3), parse_form("x3^2", Side::X, 3)});
    CHECK(macaulay_resultant(cusp_kernel, retry) == 0);
    CHECK(!resultant_nonvanishing(cusp_kernel));
}

TEST_CASE("macaulay agrees with the predicate on ternary cubic tuples") {
    // degree 3 exercises a nonempty denominator minor
    SplitMix64 rng(65);
    SplitMix64 retry(3);
    for (int k = 0; k < 4; ++k) {
        const FormTuple t = random_good_tuple(rng, 3, 3, 4);
        CHECK(!macaulay_resultant(t, retry).is_zero());
    }
    const FormTuple degenerate = make_form_tuple(std::vector<Form>{
        parse_form("x1^3", Side::X, 3), parse_form("x1*x2^2", Side::X, 3), parse_form("x2^3", Side::X, 3)});
    CHECK(macaulay_resultant(degenerate, retry) == 0);
}

TEST_CASE("genericity failure falls back to the predicate") {
    // the zero cubic tuple kills every minor, including after shears
    const FormTuple zero3 =
        make_form_tuple(std::vector<Form>{Form(Side::X, 3, 3), Form(Side::X, 3, 3), Form(Side::X, 3, 3)});
    SplitMix64 rng(68);
    CHECK_THROWS_AS(macaulay_resultant(zero3, rng), GenericityFailure);
    const ResultantReport r = analyze_resultant(zero3);
    CHECK(r.method == ResultantMethod::FiniteColength);
    CHECK(!r.value.has_value());
    CHECK(r.retries == 20);
    CHECK(!r.nonvanishing);
}

TEST_CASE("resultant reports keep value and verdict consistent") {
    SplitMix64 rng(66);
    for (int k = 0; k < 10; ++k) {
        const Form f = random_form(rng, Side::X, 2, 3, 9);
        const Form g = random_form(rng, Side::X, 2, 3, 9);
        const ResultantReport r = analyze_resultant(make_form_tuple(std::vector<Form>{f, g}));
        CHECK(r.method == ResultantMethod::Sylvester);
        REQUIRE(r.value.has_value());
        CHECK(!r.value->is_zero() == r.nonvanishing);
    }
    for (int k = 0; k < 5; ++k) {
        std::vector<Form> forms;
        for (int i = 0; i < 3; ++i) forms.push_back(random_form(rng, Side::X, 3, 2, 9));
        const ResultantReport r = analyze_resultant(make_form_tuple(std::move(forms)));
        CHECK(r.method == ResultantMethod::MacaulayQuotient);
        REQUIRE(r.value.has_value());
        CHECK(!r.value->is_zero() == r.nonvanishing);
    }
}

TEST_CASE("kernel-basis resultant verdict does not depend on the echelon convention") {
    // second convention: echelonize with the column order reversed
    const auto reversed_kernel = [](const QMatrix& m) {
        QMatrix rev(m.rows(), m.cols());
        for (int r = 0; r < m.rows(); ++r)
            for (int c = 0; c < m.cols(); ++c) rev(r, c) = m(r, m.cols() - 1 - c);
        std::vector<std::vector<Rational>> basis = kernel_basis(rev);
        for (auto& v : basis) {
            std::vector<Rational> w(v.rbegin(), v.rend());
            v = std::move(w);
        }
        return basis;
    };
    SplitMix64 rng(67);
    const std::vector<Form> probes = {associated_form_tuple(random_good_tuple(rng, 3, 2, 9)).form,
                                      canonical_cubic(2), canonical_cubic(4), canonical_cubic(6),
                                      hesse_cubic(0)};
    for (const Form& F : probes) {
        const CatalecticantMatrix cat = catalecticant(F, 2);
        const auto to_tuple = [&](const std::vector<std::vector<Rational>>& vecs) {
            std::vector<Form> forms;
            for (const auto& v : vecs)
                forms.push_back(form_from_coefficients(Side::X, 3, 2, cat.col_basis, v));
            return make_form_tuple(std::move(forms));
        };
        const auto first = kernel_basis(cat.matrix);
        const auto second = reversed_kernel(cat.matrix);
        REQUIRE(first.size() == 3);
        REQUIRE(second.size() == 3);
        CHECK(resultant_nonvanishing(to_tuple(first)) == resultant_nonvanishing(to_tuple(second)));
    }
}
