#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "assoform/apolar.hpp"
#include "assoform/assocform.hpp"

namespace assoform {

// One (K-n)-minor of the L x K catalecticant matrix D(F), named by its row
// and column index sets (sorted). The chart scan fixes the canonical one:
// the lexicographically first pair of subsets with nonvanishing minor,
// rows-major. The principal chart is {0..K-n-1} twice.
struct ChartId {
    std::vector<int> row_subset;
    std::vector<int> col_subset;

    friend bool operator==(const ChartId& a, const ChartId& b) {
        return a.row_subset == b.row_subset && a.col_subset == b.col_subset;
    }
};

struct ChartNotFound : std::runtime_error {
    ChartNotFound() : std::runtime_error("chart scan: rank D(F) is not K - n (F lies outside U)") {}
};

// Verifiable record of a membership decision. The verdicts always satisfy
// the inclusion chain: U_Res implies Gor(T) implies U implies V, and
// U_Res = U minus Z.
struct MembershipCertificate {
    explicit MembershipCertificate(Form form) : F(std::move(form)) {}

    Form F;
    int rank_D = 0;
    int kernel_dim = 0;
    std::optional<std::vector<int>> gorenstein_seq;
    std::optional<ChartId> chart;
    std::optional<bool> chart_resultant_nonzero;
    bool in_V = false;
    bool in_U = false;
    bool in_GorT = false;
    bool in_Z = false;
    bool in_U_Res = false;
};

// The column-degree parameter d recovered from deg F = n(d-1); membership
// in the catalecticant varieties only makes sense in such a graded piece.
int derived_degree_param(const Form& F);

// rank D(F) <= K-n resp. = K-n, with D(F) = catalecticant(F, d).
bool in_V(const Form& F);
bool in_U(const Form& F);

// Gorenstein sequence of F equals the coefficient vector of
// (1 + x + ... + x^(d-1))^n.
bool in_GorT(const Form& F);

// The canonical chart of F in U and the kernel basis r_1, ..., r_n of
// D(F) gamma = 0 built from it: identity block on the columns outside the
// chart, -A^(-1) B on the chart columns. Throws ChartNotFound off U.
std::pair<ChartId, std::vector<Form>> chart_kernel_basis(const Form& F);

// Same construction on an explicitly given chart (any index pair whose
// minor is nonzero works when F is in U); lets callers compare charts.
std::vector<Form> kernel_basis_for_chart(const Form& F, const ChartId& chart);

// Vanishing of the chart resultant Res(r_1, ..., r_n); requires in_U(F).
bool in_Z(const Form& F);

// F in U with nonvanishing chart resultant; equivalently the degree-d
// annihilator piece is n-dimensional with a nonvanishing-resultant basis.
// Both routes are computed and must agree.
bool in_U_Res(const Form& F);

MembershipCertificate certify(const Form& F);

// Constructive inverse of the associated-form morphism on its image: the
// chart kernel basis as a tuple, whose associated form is proportional to
// F. Requires in_U_Res(F).
FormTuple recover_tuple(const Form& F);

// The scalar mu != 0 with G = mu * F when the two forms are proportional
// (taken from the leading nonzero coefficient pair, then verified on every
// coefficient); nullopt otherwise. Two zero forms count as proportional
// with mu = 1.
std::optional<Rational> proportional(const Form& F, const Form& G);

}  // namespace assoform
