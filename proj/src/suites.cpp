#include "assoform/suites.hpp"

#include <algorithm>
#include <stdexcept>

#include "assoform/apolar.hpp"
#include "assoform/assocform.hpp"
#include "assoform/catvar.hpp"
#include "assoform/resultant.hpp"
#include "assoform/sampling.hpp"
#include "assoform/ternary.hpp"
#include "assoform/textio.hpp"

namespace assoform {

bool SuiteReport::passed() const {
    return std::all_of(cases.begin(), cases.end(), [](const SuiteCase& c) { return c.pass; });
}

int SuiteReport::pass_count() const {
    return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const SuiteCase& c) { return c.pass; }));
}

const SuiteCase* SuiteReport::first_failure() const {
    for (const SuiteCase& c : cases)
        if (!c.pass) return &c;
    return nullptr;
}

namespace {

void check(SuiteReport& report, std::string name, bool pass, std::string detail = "") {
    report.cases.push_back(SuiteCase{std::move(name), pass, std::move(detail)});
}

// sections draw from independent streams keyed by their parameters
std::uint64_t section_seed(std::uint64_t seed, int n, int d) {
    return seed + 1000003ULL * static_cast<std::uint64_t>(n) + 101ULL * static_cast<std::uint64_t>(d);
}

Rational pencil_s_value(const Rational& t) {
    const Rational u = t / 6;
    return u - u * u * u * u;
}

}  // namespace

SuiteReport aronhold_partition_report() {
    SuiteReport report{"aronhold_partition", {}};
    const std::vector<std::pair<std::string, Form>> zero_locus = {
        {"c1_t0", hesse_cubic(0)},      {"c1_t6", hesse_cubic(6)},      {"c2", canonical_cubic(2)},
        {"c4", canonical_cubic(4)},     {"c7", canonical_cubic(7)},     {"c8", canonical_cubic(8)},
        {"c9", canonical_cubic(9)},
    };
    for (const auto& [name, cubic] : zero_locus) {
        const Rational s = aronhold_S(cubic);
        check(report, "S(" + name + ") = 0", s.is_zero(), "S = " + s.str());
    }
    const std::vector<std::tuple<std::string, Form, Rational>> nonzero_locus = {
        {"c1_t1", hesse_cubic(1), pencil_s_value(1)},
        {"c1_t2", hesse_cubic(2), pencil_s_value(2)},
        {"c3", canonical_cubic(3), make_rational(-1, 81)},
        {"c5", canonical_cubic(5), make_rational(-1, 1296)},
        {"c6", canonical_cubic(6), make_rational(-1, 1296)},
    };
    for (const auto& [name, cubic, expected] : nonzero_locus) {
        const Rational s = aronhold_S(cubic);
        check(report, "S(" + name + ") = " + expected.str(), !s.is_zero() && s == expected, "S = " + s.str());
    }
    // pencil values against the closed formula t/6 - (t/6)^4
    for (const long long t : {0LL, 1LL, 2LL, 6LL}) {
        const Rational s = aronhold_S(hesse_cubic(make_rational(t)));
        const Rational expected = pencil_s_value(make_rational(t));
        check(report, "S(c1_t" + std::to_string(t) + ") matches t/6 - (t/6)^4", s == expected, "S = " + s.str());
    }
    return report;
}

SuiteReport annihilator_tables_report() {
    SuiteReport report{"annihilator_tables", {}};
    struct Table {
        std::string name;
        Form cubic;
        std::vector<std::string> generators;
    };
    const std::vector<Table> tables = {
        {"c1_t0", hesse_cubic(0), {"x1*x2", "x1*x3", "x2*x3"}},
        {"c2", canonical_cubic(2), {"x1*x2", "x1*x3", "x3^2"}},
        {"c4", canonical_cubic(4), {"x1^2 - x2*x3", "x1*x2", "x2^2"}},
        {"c7", canonical_cubic(7), {"x1^2 + x2^2 - x1*x2", "x1*x3", "x2*x3", "x3^2"}},
        {"c8", canonical_cubic(8), {"x1*x3", "x2^2", "x2*x3", "x3^2"}},
        {"c9", canonical_cubic(9), {"x1*x2", "x1*x3", "x2^2", "x2*x3", "x3^2"}},
        {"c3", canonical_cubic(3), {"x1^2 - x2^2 - 3*x1*x3", "x1*x2", "x3^2"}},
        {"c5", canonical_cubic(5), {"x1^2 - 6*x2*x3", "x2^2", "x3^2"}},
    };
    for (const Table& table : tables) {
        std::vector<Form> expected;
        for (const std::string& g : table.generators) expected.push_back(parse_form(g, Side::X, 3, 2));
        const std::vector<Form> computed = annihilator_piece(table.cubic, 2);
        std::string got;
        for (const Form& f : computed) got += (got.empty() ? "" : "; ") + render_form(f);
        check(report, "annihilator span of " + table.name, same_span(computed, expected), got);
    }
    return report;
}

SuiteReport hesse_pencil_report() {
    SuiteReport report{"hesse_pencil", {}};
    for (const long long t : {1LL, 2LL, 3LL}) {
        const Form source = with_side(hesse_cubic(make_rational(-18, t)), Side::X);
        const Form image = associated_form(source).form;
        const auto mu = proportional(hesse_cubic(make_rational(t)), image);
        check(report, "A(c1_t-18/" + std::to_string(t) + ") proportional to c1_t" + std::to_string(t),
              mu.has_value() && !mu->is_zero(), mu ? "mu = " + mu->str() : "not proportional: " + render_form(image));
    }
    const Form image = associated_form(with_side(hesse_cubic(0), Side::X)).form;
    const auto mu = proportional(canonical_cubic(6), image);
    check(report, "A(c1_t0) proportional to c6", mu.has_value() && !mu->is_zero(),
          mu ? "mu = " + mu->str() : "not proportional: " + render_form(image));
    return report;
}

SuiteReport roundtrip_report(int n, int d, int cases, std::uint64_t seed, int height) {
    SuiteReport report{"roundtrip_n" + std::to_string(n) + "_d" + std::to_string(d), {}};
    SplitMix64 rng(section_seed(seed, n, d));
    const std::vector<int> target = hilbert_target(n, d);
    for (int k = 0; k < cases; ++k) {
        const FormTuple tuple = random_good_tuple(rng, n, d, height);
        const Form F = associated_form_tuple(tuple).form;
        std::string detail;
        bool ok = true;
        if (gorenstein_sequence(F) != target) {
            ok = false;
            detail = "gorenstein sequence mismatch for F = " + render_form(F);
        }
        if (ok && !same_span(annihilator_piece(F, d), tuple.forms)) {
            ok = false;
            detail = "inverse system span mismatch for " + render_tuple(tuple);
        }
        if (ok) {
            const FormTuple recovered = recover_tuple(F);
            if (!same_span(recovered.forms, tuple.forms)) {
                ok = false;
                detail = "recovered tuple spans a different subspace: " + render_tuple(recovered);
            } else {
                const Form F2 = associated_form_tuple(recovered).form;
                const auto mu = proportional(F, F2);
                if (!mu || mu->is_zero()) {
                    ok = false;
                    detail = "A(recover(A(f))) not proportional to A(f): " + render_form(F2);
                }
            }
        }
        check(report, "case " + std::to_string(k), ok, detail);
    }
    return report;
}

SuiteReport dimension_report(int n, int d, std::uint64_t seed, int height) {
    SuiteReport report{"dimension_n" + std::to_string(n) + "_d" + std::to_string(d), {}};
    SplitMix64 rng(section_seed(seed, n, d));
    const FormTuple tuple = random_good_tuple(rng, n, d, height);
    const int got = differential_rank(tuple);
    const int expected = expected_differential_rank(n, d);
    check(report, "differential rank = Kn - n^2 + 1", got == expected,
          "rank = " + std::to_string(got) + " (expected " + std::to_string(expected) + ")");
    return report;
}

SuiteReport resultant_consistency_report(std::uint64_t seed, int height) {
    SuiteReport report{"resultant_consistency", {}};
    // binary pairs, degrees 2..4: random plus constructed shared-factor cases
    for (int d = 2; d <= 4; ++d) {
        SplitMix64 rng(section_seed(seed, 2, d));
        for (int k = 0; k < 60; ++k) {
            const Form f = random_form(rng, Side::X, 2, d, height);
            const Form g = random_form(rng, Side::X, 2, d, height);
            const Rational res = sylvester_resultant(f, g);
            const bool pred = resultant_nonvanishing(make_form_tuple(std::vector<Form>{f, g}));
            check(report, "sylvester agreement d=" + std::to_string(d) + " case " + std::to_string(k),
                  pred == !res.is_zero(),
                  "Res = " + res.str() + " for (" + render_form(f) + ", " + render_form(g) + ")");
        }
        for (int k = 0; k < 7; ++k) {  // common linear factor: resultant must vanish
            Form line(Side::X, 2, 1);
            while (line.is_zero_form()) line = random_form(rng, Side::X, 2, 1, height);
            const Form f = line * random_form(rng, Side::X, 2, d - 1, height);
            const Form g = line * random_form(rng, Side::X, 2, d - 1, height);
            const Rational res = sylvester_resultant(f, g);
            const bool pred = resultant_nonvanishing(make_form_tuple(std::vector<Form>{f, g}));
            check(report, "degenerate binary d=" + std::to_string(d) + " case " + std::to_string(k),
                  res.is_zero() && !pred, "Res = " + res.str());
        }
    }
    // ternary quadric triples against the Macaulay quotient
    {
        SplitMix64 rng(section_seed(seed, 3, 2));
        SplitMix64 retry_rng(section_seed(seed, 3, 2) ^ 0xabcdefULL);
        for (int k = 0; k < 80; ++k) {
            std::vector<Form> forms;
            for (int i = 0; i < 3; ++i) forms.push_back(random_form(rng, Side::X, 3, 2, height));
            const FormTuple t = make_form_tuple(std::move(forms));
            const Rational res = macaulay_resultant(t, retry_rng);
            check(report, "macaulay agreement case " + std::to_string(k),
                  resultant_nonvanishing(t) == !res.is_zero(), "Res = " + res.str());
        }
        for (int k = 0; k < 20; ++k) {  // constructed common zero at (1, p2, p3)
            const std::vector<Rational> p = {Rational(1), make_rational(rng.bounded(2)), make_rational(rng.bounded(2))};
            std::vector<Form> forms;
            for (int i = 0; i < 3; ++i) {
                Form g = random_form(rng, Side::X, 3, 2, height);
                Form corr(Side::X, 3, 2);
                corr.add_term(Monomial(std::vector<int>{2, 0, 0}), evaluate(g, p));
                forms.push_back(g - corr);
            }
            const FormTuple t = make_form_tuple(std::move(forms));
            const Rational res = macaulay_resultant(t, retry_rng);
            check(report, "degenerate ternary case " + std::to_string(k),
                  res.is_zero() && !resultant_nonvanishing(t), "Res = " + res.str());
        }
    }
    return report;
}

namespace {

bool next_subset(std::vector<int>& s, int limit) {
    const int k = static_cast<int>(s.size());
    int i = k - 1;
    while (i >= 0 && s[static_cast<size_t>(i)] == limit - k + i) --i;
    if (i < 0) return false;
    ++s[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j) s[static_cast<size_t>(j)] = s[static_cast<size_t>(j - 1)] + 1;
    return true;
}

// Lexicographic scan over (row subset, column subset) pairs; returns the
// charts with nonvanishing minor, up to the requested count.
std::vector<ChartId> scan_charts(const Form& F, int wanted) {
    const int d = derived_degree_param(F);
    const CatalecticantMatrix cat = catalecticant(F, d);
    const int r = graded_dimension(F.nvars(), d) - F.nvars();
    std::vector<ChartId> found;
    std::vector<int> rows(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) rows[static_cast<size_t>(i)] = i;
    if (cat.matrix.rows() < r || cat.matrix.cols() < r) return found;
    do {
        std::vector<int> cols(static_cast<size_t>(r));
        for (int i = 0; i < r; ++i) cols[static_cast<size_t>(i)] = i;
        do {
            QMatrix minor(r, r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j)
                    minor(i, j) = cat.matrix(rows[static_cast<size_t>(i)], cols[static_cast<size_t>(j)]);
            if (!det(minor).is_zero()) {
                found.push_back(ChartId{rows, cols});
                if (static_cast<int>(found.size()) >= wanted) return found;
            }
        } while (next_subset(cols, cat.matrix.cols()));
    } while (next_subset(rows, cat.matrix.rows()));
    return found;
}

Form zlocus_representative(int k) {
    switch (k % 4) {
        case 0: return canonical_cubic(2);
        case 1: return canonical_cubic(4);
        case 2: return hesse_cubic(0);
        default: return hesse_cubic(6);
    }
}

}  // namespace

SuiteReport chart_coherence_report(std::uint64_t seed, int height) {
    SuiteReport report{"chart_coherence", {}};
    // chart independence of the Z verdict on forms lying in at least two charts
    {
        SplitMix64 rng(section_seed(seed, 3, 2));
        int found = 0, attempts = 0;
        while (found < 50 && attempts < 500) {
            const int k = attempts++;
            const Form F = (k % 2 == 0) ? associated_form_tuple(random_good_tuple(rng, 3, 2, height)).form
                                        : substitute(zlocus_representative(k / 2), random_invertible_matrix(rng, 3, height));
            const std::vector<ChartId> charts = scan_charts(F, 2);
            if (charts.size() < 2) continue;
            const auto [canonical, basis0] = chart_kernel_basis(F);
            bool ok = canonical == charts.front();
            std::string detail = ok ? "" : "canonical chart is not the first minor in scan order";
            if (ok) {
                const std::vector<Form> basis1 = kernel_basis_for_chart(F, charts[1]);
                const bool z0 = !resultant_nonvanishing(make_form_tuple(basis0));
                const bool z1 = !resultant_nonvanishing(make_form_tuple(basis1));
                ok = z0 == z1;
                if (!ok) detail = "charts disagree on Z for F = " + render_form(F);
            }
            check(report, "multi-chart case " + std::to_string(found), ok, detail);
            ++found;
        }
        check(report, "found 50 multi-chart forms", found == 50, "found " + std::to_string(found));
    }
    // GL invariance of Z
    {
        SplitMix64 rng(section_seed(seed, 3, 2) ^ 0x5a5a5aULL);
        for (int k = 0; k < 50; ++k) {
            const Form F = (k % 2 == 0) ? associated_form_tuple(random_good_tuple(rng, 3, 2, height)).form
                                        : zlocus_representative(k / 2);
            const QMatrix C = random_invertible_matrix(rng, 3, height);
            const bool ok = in_Z(F) == in_Z(substitute(F, C));
            check(report, "Z invariance case " + std::to_string(k), ok,
                  ok ? "" : "Z verdict changed under substitution for F = " + render_form(F));
        }
    }
    // annihilator transform: (CF)-perp in degree j is C^(-t) (F-perp in degree j)
    {
        SplitMix64 rng(section_seed(seed, 3, 2) ^ 0xc3c3c3ULL);
        for (int k = 0; k < 50; ++k) {
            const Form F = random_form(rng, Side::Y, 3, 3, height);
            const QMatrix C = random_invertible_matrix(rng, 3, height);
            const QMatrix Cinv_t = transpose(*inverse(C));
            std::vector<Form> transformed;
            for (const Form& h : annihilator_piece(F, 2)) transformed.push_back(substitute(h, Cinv_t));
            const bool ok = same_span(annihilator_piece(substitute(F, C), 2), transformed);
            check(report, "annihilator transform case " + std::to_string(k), ok,
                  ok ? "" : "transform identity failed for F = " + render_form(F));
        }
    }
    return report;
}

SuiteReport ternary_equivalence_report(std::uint64_t seed, int cases, int height) {
    SuiteReport report{"ternary_equivalence", {}};
    std::vector<std::pair<std::string, Form>> inputs = {
        {"c1_t0", hesse_cubic(0)}, {"c1_t1", hesse_cubic(1)}, {"c1_t2", hesse_cubic(2)},
        {"c1_t6", hesse_cubic(6)}, {"c2", canonical_cubic(2)}, {"c3", canonical_cubic(3)},
        {"c4", canonical_cubic(4)}, {"c5", canonical_cubic(5)}, {"c6", canonical_cubic(6)},
        {"c7", canonical_cubic(7)}, {"c8", canonical_cubic(8)}, {"c9", canonical_cubic(9)},
    };
    SplitMix64 rng(section_seed(seed, 3, 2) ^ 0x7e7e7eULL);
    for (int k = 0; k < cases; ++k)
        inputs.emplace_back("random " + std::to_string(k), random_form(rng, Side::Y, 3, 3, height));
    for (const auto& [name, cubic] : inputs) {
        const bool via_invariant = in_image_ternary(cubic);
        const bool via_charts = in_U_Res(cubic);
        check(report, "route agreement for " + name, via_invariant == via_charts,
              "S route: " + std::string(via_invariant ? "in image" : "not in image") +
                  ", chart route: " + std::string(via_charts ? "in image" : "not in image") + " for " +
                  render_form(cubic));
    }
    return report;
}

SuiteReport sl3_invariance_report(std::uint64_t seed, int pairs, int height) {
    SuiteReport report{"sl3_invariance", {}};
    SplitMix64 rng(section_seed(seed, 3, 3) ^ 0x515151ULL);
    for (int k = 0; k < pairs; ++k) {
        const Form c = random_form(rng, Side::Y, 3, 3, height);
        const QMatrix C = random_sl_matrix(rng, 3, 3);
        const bool ok = aronhold_S(substitute(c, C)) == aronhold_S(c);
        check(report, "SL3 case " + std::to_string(k), ok, ok ? "" : "S changed for c = " + render_form(c));
    }
    return report;
}

std::vector<SuiteReport> verify_ternary_characterization(const RunConfig& config) {
    return {
        aronhold_partition_report(),
        annihilator_tables_report(),
        hesse_pencil_report(),
        ternary_equivalence_report(config.seed, config.cases > 0 ? config.cases : 200, config.height),
        sl3_invariance_report(config.seed, 50, config.height),
    };
}

std::vector<SuiteReport> run_suite(const std::string& suite, const RunConfig& config) {
    std::vector<SuiteReport> reports;
    const auto run_roundtrips = [&] {
        const int cases = config.cases > 0 ? config.cases : 100;
        if (config.n > 0 && config.d > 0) {
            reports.push_back(roundtrip_report(config.n, config.d, cases, config.seed, config.height));
            return;
        }
        for (const auto& [n, d] :
             std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}})
            reports.push_back(roundtrip_report(n, d, cases, config.seed, config.height));
    };
    const auto run_dimensions = [&] {
        if (config.n > 0 && config.d > 0) {
            reports.push_back(dimension_report(config.n, config.d, config.seed, config.height));
            return;
        }
        for (const auto& [n, d] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}})
            reports.push_back(dimension_report(n, d, config.seed, config.height));
    };
    if (suite == "ternary") {
        reports = verify_ternary_characterization(config);
    } else if (suite == "roundtrip") {
        run_roundtrips();
    } else if (suite == "dimension") {
        run_dimensions();
    } else if (suite == "charts") {
        reports.push_back(chart_coherence_report(config.seed, config.height));
    } else if (suite == "all") {
        reports = verify_ternary_characterization(config);
        run_roundtrips();
        run_dimensions();
        reports.push_back(resultant_consistency_report(config.seed, config.height));
        reports.push_back(chart_coherence_report(config.seed, config.height));
    } else {
        throw std::invalid_argument("unknown suite: " + suite + " (expected all/ternary/roundtrip/dimension/charts)");
    }
    return reports;
}

nlohmann::json suites_to_json(const std::string& suite, const RunConfig& config,
                              const std::vector<SuiteReport>& reports) {
    nlohmann::json sections = nlohmann::json::array();
    bool all_pass = true;
    int total = 0;
    for (const SuiteReport& r : reports) {
        nlohmann::json cases = nlohmann::json::array();
        for (const SuiteCase& c : r.cases) {
            nlohmann::json jc{{"name", c.name}, {"pass", c.pass}};
            if (!c.detail.empty()) jc["detail"] = c.detail;
            cases.push_back(std::move(jc));
        }
        total += static_cast<int>(r.cases.size());
        all_pass = all_pass && r.passed();
        sections.push_back({{"name", r.name},
                            {"passed", r.passed()},
                            {"case_count", r.cases.size()},
                            {"pass_count", r.pass_count()},
                            {"cases", std::move(cases)}});
    }
    return {{"schema", "assoform/1"},
            {"suite", suite},
            {"seed", config.seed},
            {"n", config.n},
            {"d", config.d},
            {"height", config.height},
            {"case_total", total},
            {"pass", all_pass},
            {"sections", std::move(sections)}};
}

}  // namespace assoform
