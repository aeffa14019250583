#include "assoform/catvar.hpp"

namespace assoform {

int derived_degree_param(const Form& F) {
    const int n = F.nvars();
    const int N = F.degree();
    if (F.side() != Side::Y) throw std::invalid_argument("membership: form must be y-side");
    if (N < n || N % n != 0)
        throw std::invalid_argument("membership: degree must be n(d-1) for some d >= 2");
    return N / n + 1;
}

namespace {

int codim_target(const Form& F) {  // K - n
    const int d = derived_degree_param(F);
    return graded_dimension(F.nvars(), d) - F.nvars();
}

// Greedy scan for the lexicographically first independent row subset of the
// wanted size: a row enters iff it is independent of the rows already kept.
// This is exactly the first subset a lexicographic enumeration of all
// subsets would accept, because any minor using a dependent prefix
// vanishes. Reduction state is kept in rational RREF form.
std::vector<int> greedy_independent_rows(const QMatrix& m, int wanted) {
    std::vector<int> chosen;
    QMatrix red(wanted, m.cols());  // reduced kept rows
    std::vector<int> pivot_col;
    for (int r = 0; r < m.rows() && static_cast<int>(chosen.size()) < wanted; ++r) {
        std::vector<Rational> row(static_cast<size_t>(m.cols()));
        for (int c = 0; c < m.cols(); ++c) row[static_cast<size_t>(c)] = m(r, c);
        for (size_t k = 0; k < pivot_col.size(); ++k) {
            const Rational factor = row[static_cast<size_t>(pivot_col[k])];
            if (factor.is_zero()) continue;
            for (int c = 0; c < m.cols(); ++c) row[static_cast<size_t>(c)] -= factor * red(static_cast<int>(k), c);
        }
        int pc = -1;
        for (int c = 0; c < m.cols(); ++c)
            if (!row[static_cast<size_t>(c)].is_zero()) {
                pc = c;
                break;
            }
        if (pc < 0) continue;
        const Rational piv = row[static_cast<size_t>(pc)];
        for (int c = 0; c < m.cols(); ++c) red(static_cast<int>(chosen.size()), c) = row[static_cast<size_t>(c)] / piv;
        pivot_col.push_back(pc);
        chosen.push_back(r);
    }
    return chosen;
}

}  // namespace

bool in_V(const Form& F) {
    const int d = derived_degree_param(F);
    return rank(catalecticant(F, d).matrix) <= codim_target(F);
}

bool in_U(const Form& F) {
    const int d = derived_degree_param(F);
    return rank(catalecticant(F, d).matrix) == codim_target(F);
}

bool in_GorT(const Form& F) {
    const int d = derived_degree_param(F);
    if (F.is_zero_form()) return false;
    return gorenstein_sequence(F) == hilbert_target(F.nvars(), d);
}

namespace {

std::vector<Form> build_chart_basis(const CatalecticantMatrix& cat, const ChartId& chart, int n, int d) {
    const int r = static_cast<int>(chart.col_subset.size());
    std::vector<bool> in_chart(static_cast<size_t>(cat.matrix.cols()), false);
    for (int c : chart.col_subset) in_chart[static_cast<size_t>(c)] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < cat.matrix.cols(); ++c)
        if (!in_chart[static_cast<size_t>(c)]) free_cols.push_back(c);
    if (static_cast<int>(free_cols.size()) != n) throw std::invalid_argument("chart basis: wrong subset size");

    // block solve gamma' = -A^(-1) B on the chart columns
    QMatrix a(r, r);
    QMatrix b(r, n);
    for (int i = 0; i < r; ++i) {
        const int row = chart.row_subset[static_cast<size_t>(i)];
        for (int j = 0; j < r; ++j) a(i, j) = cat.matrix(row, chart.col_subset[static_cast<size_t>(j)]);
        for (int j = 0; j < n; ++j) b(i, j) = -cat.matrix(row, free_cols[static_cast<size_t>(j)]);
    }
    if (det(a).is_zero()) throw std::logic_error("chart basis: selected minor is singular");
    QMatrix aug(r, r + n);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) aug(i, j) = a(i, j);
        for (int j = 0; j < n; ++j) aug(i, r + j) = b(i, j);
    }
    rref_in_place(aug, r);

    std::vector<Form> basis;
    for (int j = 0; j < n; ++j) {
        Form rj(Side::X, n, d);
        rj.add_term(cat.col_basis[static_cast<size_t>(free_cols[static_cast<size_t>(j)])], 1);
        for (int i = 0; i < r; ++i)
            rj.add_term(cat.col_basis[static_cast<size_t>(chart.col_subset[static_cast<size_t>(i)])],
                        aug(i, r + j));
        basis.push_back(std::move(rj));
    }
    return basis;
}

}  // namespace

std::pair<ChartId, std::vector<Form>> chart_kernel_basis(const Form& F) {
    const int d = derived_degree_param(F);
    const int n = F.nvars();
    const CatalecticantMatrix cat = catalecticant(F, d);
    const int r = codim_target(F);  // K - n
    // Greedy scans pick exactly the lexicographically first nonsingular
    // subsets: any subset preceding the greedy one has a dependent prefix,
    // hence every minor through it vanishes.
    const std::vector<int> rows = greedy_independent_rows(cat.matrix, r);
    if (static_cast<int>(rows.size()) != r) throw ChartNotFound();
    QMatrix sub(r, cat.matrix.cols());
    for (int i = 0; i < r; ++i)
        for (int c = 0; c < cat.matrix.cols(); ++c) sub(i, c) = cat.matrix(rows[static_cast<size_t>(i)], c);
    const std::vector<int> cols = greedy_independent_rows(transpose(sub), r);
    if (static_cast<int>(cols.size()) != r) throw ChartNotFound();
    ChartId chart{rows, cols};
    std::vector<Form> basis = build_chart_basis(cat, chart, n, d);
    return {std::move(chart), std::move(basis)};
}

std::vector<Form> kernel_basis_for_chart(const Form& F, const ChartId& chart) {
    const int d = derived_degree_param(F);
    return build_chart_basis(catalecticant(F, d), chart, F.nvars(), d);
}

bool in_Z(const Form& F) {
    auto [chart, basis] = chart_kernel_basis(F);
    return !resultant_nonvanishing(make_form_tuple(std::move(basis)));
}

bool in_U_Res(const Form& F) {
    const int d = derived_degree_param(F);
    const int n = F.nvars();
    if (!in_U(F)) return false;
    const bool via_chart = !in_Z(F);
    // independent route: annihilator piece of dimension n with a
    // nonvanishing-resultant basis
    const std::vector<Form> ann = annihilator_piece(F, d);
    const bool via_annihilator =
        static_cast<int>(ann.size()) == n && resultant_nonvanishing(make_form_tuple(ann));
    if (via_chart != via_annihilator)
        throw std::logic_error("in_U_Res: chart route and annihilator route disagree");
    return via_chart;
}

MembershipCertificate certify(const Form& F) {
    MembershipCertificate cert(F);
    const int d = derived_degree_param(F);
    const CatalecticantMatrix cat = catalecticant(F, d);
    cert.rank_D = rank(cat.matrix);
    cert.kernel_dim = cat.matrix.cols() - cert.rank_D;
    cert.in_V = cert.rank_D <= codim_target(F);
    cert.in_U = cert.rank_D == codim_target(F);
    if (!F.is_zero_form()) cert.gorenstein_seq = gorenstein_sequence(F);
    cert.in_GorT = cert.gorenstein_seq && *cert.gorenstein_seq == hilbert_target(F.nvars(), d);
    if (cert.in_U) {
        auto [chart, basis] = chart_kernel_basis(F);
        cert.chart = std::move(chart);
        cert.chart_resultant_nonzero = resultant_nonvanishing(make_form_tuple(std::move(basis)));
        cert.in_Z = !*cert.chart_resultant_nonzero;
        cert.in_U_Res = in_U_Res(F);
    }
    // internal consistency of the verdicts on the computable sets
    if (cert.in_U_Res != (cert.in_U && !cert.in_Z))
        throw std::logic_error("certify: U_Res verdict inconsistent with U minus Z");
    if (cert.in_U_Res && !cert.in_GorT)
        throw std::logic_error("certify: U_Res member with wrong Gorenstein sequence");
    if (cert.in_U && !cert.in_V) throw std::logic_error("certify: U member outside V");
    return cert;
}

FormTuple recover_tuple(const Form& F) {
    if (!in_U_Res(F)) throw std::invalid_argument("recover_tuple: form is not in the image (U_Res fails)");
    auto [chart, basis] = chart_kernel_basis(F);
    FormTuple t = make_form_tuple(std::move(basis));
    if (!resultant_nonvanishing(t)) throw std::logic_error("recover_tuple: chart basis has vanishing resultant");
    return t;
}

std::optional<Rational> proportional(const Form& F, const Form& G) {
    if (F.side() != G.side() || F.nvars() != G.nvars() || F.degree() != G.degree())
        throw std::invalid_argument("proportional: forms live in different spaces");
    if (F.is_zero_form() && G.is_zero_form()) return Rational(1);
    if (F.is_zero_form() || G.is_zero_form()) return std::nullopt;
    const auto& [m0, c0] = *F.terms().begin();
    const Rational g0 = G.coefficient(m0);
    if (g0.is_zero()) return std::nullopt;
    const Rational mu = g0 / c0;
    return G == mu * F ? std::optional<Rational>(mu) : std::nullopt;
}

}  // namespace assoform
